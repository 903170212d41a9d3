#pragma once

#include "dec/polynomial.hpp"

#include <array>
#include <vector>

namespace dec {

/// Differential k-form on ℝ² with polynomial coefficients.
///
///   k = 0: f
///   k = 1: P dx + Q dy      (components {P, Q})
///   k = 2: R dx∧dy          (components {R})
class PolyForm {
public:
    PolyForm() = default;
    PolyForm(int degree, std::vector<Poly2> components);

    static PolyForm zero(int degree);
    static PolyForm scalar(Poly2 f) { return PolyForm(0, {std::move(f)}); }
    static PolyForm one_form(Poly2 p, Poly2 q) { return PolyForm(1, {std::move(p), std::move(q)}); }
    static PolyForm two_form(Poly2 r) { return PolyForm(2, {std::move(r)}); }

    int degree() const noexcept { return degree_; }
    const std::vector<Poly2>& components() const noexcept { return components_; }
    const Poly2& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }

    /// Highest polynomial degree over the components (-1 for the zero form).
    int polynomial_degree() const;
    bool is_zero() const;

    /// Component values at a point.
    std::vector<double> operator()(double x, double y) const;

    PolyForm& operator+=(const PolyForm& o);
    PolyForm& operator-=(const PolyForm& o);
    PolyForm& operator*=(double s);
    friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
    friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
    friend PolyForm operator*(double s, PolyForm a) { return a *= s; }
    friend bool operator==(const PolyForm& a, const PolyForm& b) = default;

private:
    int degree_ = 0;
    std::vector<Poly2> components_{Poly2{}};
};

/// Pointwise inner product ⟪ω(z), ρ(z)⟫ of two forms of equal degree.
double pointwise_inner(const PolyForm& a, const PolyForm& b, double x, double y);

PolyForm exterior_derivative(const PolyForm& w);
/// ⋆1 = dx∧dy, ⋆dx = dy, ⋆dy = -dx, ⋆(dx∧dy) = 1.
PolyForm hodge_star(const PolyForm& w);
PolyForm inverse_hodge_star(const PolyForm& w);
/// δ_k ω = (-1)^k ⋆⁻¹ d ⋆ω.
PolyForm codifferential(const PolyForm& w);
/// δd + dδ, omitting the term that leaves the complex.
PolyForm hodge_laplacian_smooth(const PolyForm& w);

/// Vertices of the experiment domain: (0,0), (1,0), (1/2, √3/2).
std::array<std::array<double, 2>, 3> domain_triangle();

/// The affine barycentric coordinate functions of a triangle.
std::array<Poly2, 3> barycentric_polynomials(const std::array<std::array<double, 2>, 3>& tri);

/// u = 10⁸ (λ₁λ₂λ₃)⁵ on the domain triangle, as a k-form:
/// u, u dx + u dy, or u dx∧dy.
PolyForm manufactured_solution(int k);

}  // namespace dec
