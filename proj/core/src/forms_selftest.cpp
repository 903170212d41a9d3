#include "dec/de_rham.hpp"
#include "dec/experiment.hpp"
#include "dec/forms.hpp"
#include "dec/mesh_generation.hpp"
#include "dec/quadrature.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace dec {

namespace {

// Integer coefficients keep derivative chains exact in floating point.
Poly2 random_integer_poly(std::mt19937_64& rng, int degree)
{
    std::uniform_int_distribution<int> coef(-9, 9);
    Poly2 p;
    for (int t = 0; t <= degree; ++t)
        for (int j = 0; j <= t; ++j)
            p.set_coeff(t - j, j, static_cast<double>(coef(rng)));
    return p;
}

PolyForm random_form(std::mt19937_64& rng, int k, int degree)
{
    switch (k) {
    case 0:
        return PolyForm::scalar(random_integer_poly(rng, degree));
    case 1:
        return PolyForm::one_form(random_integer_poly(rng, degree), random_integer_poly(rng, degree));
    default:
        return PolyForm::two_form(random_integer_poly(rng, degree));
    }
}

double factorial(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

}  // namespace

std::vector<DiagnosticItem> forms_selftest(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<DiagnosticItem> items;

    {
        bool ok = true;
        for (int trial = 0; trial < 20; ++trial)
            ok = ok && exterior_derivative(exterior_derivative(random_form(rng, 0, 7))).is_zero();
        items.push_back({"d_d_zero", ok, false, ok ? 0.0 : 1.0, 0.0, "d(d f) on random 0-forms"});
    }
    {
        bool ok = true;
        for (int trial = 0; trial < 20; ++trial)
            ok = ok && codifferential(codifferential(random_form(rng, 2, 7))).is_zero();
        items.push_back({"delta_delta_zero", ok, false, ok ? 0.0 : 1.0, 0.0,
                         "delta(delta w) on random 2-forms"});
    }
    {
        bool ok = true;
        for (int k = 0; k <= 2; ++k) {
            const PolyForm w = random_form(rng, k, 5);
            const double sign = (k * (2 - k)) % 2 == 0 ? 1.0 : -1.0;
            ok = ok && hodge_star(hodge_star(w)) == sign * w;
            ok = ok && inverse_hodge_star(hodge_star(w)) == w;
        }
        items.push_back({"double_star", ok, false, ok ? 0.0 : 1.0, 0.0,
                         "star star = (-1)^{k(2-k)} on random forms"});
    }
    {
        std::uniform_real_distribution<double> pt(-1.0, 1.0);
        double worst = 0.0;
        for (int k = 0; k <= 2; ++k)
            for (int trial = 0; trial < 10; ++trial) {
                const PolyForm w = random_form(rng, k, 4);
                const double x = pt(rng);
                const double y = pt(rng);
                const double a = pointwise_inner(w, w, x, y);
                const double b = pointwise_inner(hodge_star(w), hodge_star(w), x, y);
                worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
            }
        items.push_back({"star_isometry", worst <= 1e-14, false, worst, 1e-14,
                         "pointwise norm of w and star w"});
    }
    {
        double worst = 0.0;
        for (int a = 0; a <= 20; ++a)
            for (int b = 0; a + b <= 20; ++b) {
                const auto& rule = triangle_rule(a + b);
                double s = 0.0;
                for (int q = 0; q < rule.size(); ++q) {
                    const auto n = rule.node(q);
                    s += rule.weights[static_cast<std::size_t>(q)] * std::pow(n[0], a) * std::pow(n[1], b);
                }
                const double exact = factorial(a) * factorial(b) / factorial(a + b + 2);
                worst = std::max(worst, std::abs(s - exact) / exact);
            }
        items.push_back({"triangle_quadrature", worst <= 1e-13, false, worst, 1e-13,
                         "monomials of degree <= 20 against a!b!/(a+b+2)!"});
    }
    {
        const SimplicialComplex mesh = symmetric_mesh(2);
        double worst = 0.0;
        for (int k = 0; k <= 1; ++k) {
            const PolyForm w = random_form(rng, k, 4);
            const auto lhs = spmv(mesh.coboundary(k), de_rham(mesh, w).values);
            const auto rhs = de_rham(mesh, exterior_derivative(w)).values;
            double scale = 0.0;
            double diff = 0.0;
            for (std::size_t i = 0; i < lhs.size(); ++i) {
                scale = std::max(scale, std::abs(rhs[i]));
                diff = std::max(diff, std::abs(lhs[i] - rhs[i]));
            }
            worst = std::max(worst, diff / std::max(scale, 1e-300));
        }
        items.push_back({"stokes_de_rham", worst <= 1e-11, false, worst, 1e-11,
                         "coboundary of R w against R(d w) on a level-2 mesh"});
    }
    return items;
}

}  // namespace dec
