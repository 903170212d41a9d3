#include "dec/forms.hpp"

#include "dec/error.hpp"

#include <algorithm>
#include <cmath>

namespace dec {

namespace {

std::size_t component_count(int degree)
{
    if (degree < 0 || degree > 2)
        throw InvalidArgument("PolyForm: degree must be 0, 1 or 2");
    return degree == 1 ? 2 : 1;
}

}  // namespace

PolyForm::PolyForm(int degree, std::vector<Poly2> components)
    : degree_(degree), components_(std::move(components))
{
    if (components_.size() != component_count(degree))
        throw InvalidArgument("PolyForm: wrong number of components for degree");
}

PolyForm PolyForm::zero(int degree)
{
    return PolyForm(degree, std::vector<Poly2>(component_count(degree)));
}

int PolyForm::polynomial_degree() const
{
    int d = -1;
    for (const auto& c : components_)
        d = std::max(d, c.degree());
    return d;
}

bool PolyForm::is_zero() const
{
    return std::all_of(components_.begin(), components_.end(),
                       [](const Poly2& p) { return p.is_zero(); });
}

std::vector<double> PolyForm::operator()(double x, double y) const
{
    std::vector<double> v;
    v.reserve(components_.size());
    for (const auto& c : components_)
        v.push_back(c(x, y));
    return v;
}

PolyForm& PolyForm::operator+=(const PolyForm& o)
{
    if (o.degree_ != degree_)
        throw InvalidArgument("PolyForm: degree mismatch");
    for (std::size_t i = 0; i < components_.size(); ++i)
        components_[i] += o.components_[i];
    return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o)
{
    if (o.degree_ != degree_)
        throw InvalidArgument("PolyForm: degree mismatch");
    for (std::size_t i = 0; i < components_.size(); ++i)
        components_[i] -= o.components_[i];
    return *this;
}

PolyForm& PolyForm::operator*=(double s)
{
    for (auto& c : components_)
        c *= s;
    return *this;
}

double pointwise_inner(const PolyForm& a, const PolyForm& b, double x, double y)
{
    if (a.degree() != b.degree())
        throw InvalidArgument("pointwise_inner: degree mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.components().size(); ++i)
        s += a.components()[i](x, y) * b.components()[i](x, y);
    return s;
}

PolyForm exterior_derivative(const PolyForm& w)
{
    switch (w.degree()) {
    case 0:
        return PolyForm::one_form(w.component(0).dx(), w.component(0).dy());
    case 1:
        return PolyForm::two_form(w.component(1).dx() - w.component(0).dy());
    default:
        throw InvalidArgument("exterior_derivative: 2-forms have no derivative in the plane");
    }
}

PolyForm hodge_star(const PolyForm& w)
{
    switch (w.degree()) {
    case 0:
        return PolyForm::two_form(w.component(0));
    case 1:
        // ⋆(P dx + Q dy) = P dy - Q dx
        return PolyForm::one_form(-w.component(1), w.component(0));
    default:
        return PolyForm::scalar(w.component(0));
    }
}

PolyForm inverse_hodge_star(const PolyForm& w)
{
    // ⋆⋆ = (-1)^{k(2-k)} on k-forms.
    PolyForm s = hodge_star(w);
    if (w.degree() == 1)
        s *= -1.0;
    return s;
}

PolyForm codifferential(const PolyForm& w)
{
    if (w.degree() == 0)
        throw InvalidArgument("codifferential: 0-forms have no codifferential");
    PolyForm r = inverse_hodge_star(exterior_derivative(hodge_star(w)));
    if (w.degree() % 2 == 1)
        r *= -1.0;
    return r;
}

PolyForm hodge_laplacian_smooth(const PolyForm& w)
{
    PolyForm out = PolyForm::zero(w.degree());
    if (w.degree() < 2)
        out += codifferential(exterior_derivative(w));
    if (w.degree() > 0)
        out += exterior_derivative(codifferential(w));
    return out;
}

std::array<std::array<double, 2>, 3> domain_triangle()
{
    return {{{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}}};
}

std::array<Poly2, 3> barycentric_polynomials(const std::array<std::array<double, 2>, 3>& tri)
{
    // λ_i(x, y) = area(p, p_{i+1}, p_{i+2}) / area(p_0, p_1, p_2)
    const double det = (tri[1][0] - tri[0][0]) * (tri[2][1] - tri[0][1]) -
                       (tri[2][0] - tri[0][0]) * (tri[1][1] - tri[0][1]);
    if (det == 0.0)
        throw InvalidArgument("barycentric_polynomials: degenerate triangle");
    std::array<Poly2, 3> lambda;
    for (int i = 0; i < 3; ++i) {
        const auto& a = tri[static_cast<std::size_t>((i + 1) % 3)];
        const auto& b = tri[static_cast<std::size_t>((i + 2) % 3)];
        // Twice the signed area of (p, a, b) is affine in p.
        const double c = a[0] * b[1] - b[0] * a[1];
        const double cx = a[1] - b[1];
        const double cy = b[0] - a[0];
        lambda[static_cast<std::size_t>(i)] = Poly2::affine(c / det, cx / det, cy / det);
    }
    return lambda;
}

PolyForm manufactured_solution(int k)
{
    if (k < 0 || k > 2)
        throw InvalidArgument("manufactured_solution: degree must be 0, 1 or 2");
    const auto lambda = barycentric_polynomials(domain_triangle());
    const Poly2 u = 1e8 * (lambda[0] * lambda[1] * lambda[2]).pow(5);
    switch (k) {
    case 0:
        return PolyForm::scalar(u);
    case 1:
        return PolyForm::one_form(u, u);
    default:
        return PolyForm::two_form(u);
    }
}

}  // namespace dec
