#pragma once

#include <vector>

namespace dec {

/// Bivariate polynomial Σ c_ij xⁱ yʲ with dense triangular coefficient storage.
///
/// The degree is kept tight: after every operation trailing total-degree
/// blocks that are exactly zero are dropped. The zero polynomial has degree -1.
///
/// Coefficients and evaluation use long double. High-degree forms with large
/// monomial coefficients (|c| up to ~1e11 for values ~1e3) cancel heavily
/// inside the domain; in double that leaves ~1e-9 relative noise in values.
class Poly2 {
public:
    Poly2() = default;

    static Poly2 constant(double c);
    static Poly2 monomial(int i, int j, double c = 1.0);
    /// c + cx·x + cy·y
    static Poly2 affine(double c, double cx, double cy);

    int degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return degree_ < 0; }
    /// Coefficient of xⁱ yʲ (zero outside the stored range).
    double coeff(int i, int j) const;
    void set_coeff(int i, int j, double c);

    double operator()(double x, double y) const;

    Poly2 dx() const;
    Poly2 dy() const;
    Poly2 pow(int e) const;

    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    Poly2& operator*=(double s);

    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator-(Poly2 a) { return a *= -1.0; }
    friend Poly2 operator*(Poly2 a, double s) { return a *= s; }
    friend Poly2 operator*(double s, Poly2 a) { return a *= s; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend bool operator==(const Poly2& a, const Poly2& b);

private:
    static std::size_t slot(int i, int j)
    {
        const auto t = static_cast<std::size_t>(i + j);
        return t * (t + 1) / 2 + static_cast<std::size_t>(j);
    }
    void reserve_degree(int d);
    void trim();

    int degree_ = -1;
    std::vector<long double> c_;
};

}  // namespace dec
