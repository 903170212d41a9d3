#include "dec/quadrature.hpp"

#include "dec/error.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>
#include <utility>

namespace dec {

namespace {

void check_degree(int degree)
{
    if (degree < 0)
        throw InvalidArgument("quadrature: negative degree");
    if (degree > kMaxQuadratureDegree)
        throw InvalidArgument(fmt::format(
            "quadrature degree insufficient: degree {} requested, at most {} supported", degree,
            kMaxQuadratureDegree));
}

// (P_n(x), P_n'(x)) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x)
{
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

// Points per direction of the collapsed rule. The Duffy Jacobian (1 - u)
// raises the u-degree by one, so a + b + 1 ≤ 2n - 1 must hold.
int collapsed_points(int degree)
{
    return (degree + 3) / 2;
}

QuadratureRule make_triangle_rule(int degree)
{
    const int n = collapsed_points(degree);
    const QuadratureRule g = gauss_legendre(n);
    QuadratureRule r;
    r.dim = 2;
    r.exactness = 2 * n - 2;
    r.nodes.reserve(static_cast<std::size_t>(2 * n * n));
    r.weights.reserve(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) {
        const double u = g.nodes[static_cast<std::size_t>(i)];
        const double wu = g.weights[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            const double v = g.nodes[static_cast<std::size_t>(j)];
            r.nodes.push_back(u);
            r.nodes.push_back(v * (1.0 - u));
            r.weights.push_back(wu * g.weights[static_cast<std::size_t>(j)] * (1.0 - u));
        }
    }
    return r;
}

}  // namespace

QuadratureRule gauss_legendre(int n)
{
    if (n < 1)
        throw InvalidArgument("gauss_legendre: need at least one point");
    QuadratureRule r;
    r.dim = 1;
    r.exactness = 2 * n - 1;
    r.nodes.resize(static_cast<std::size_t>(n));
    r.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton on P_n from a Chebyshev-like guess; roots are symmetric about 0.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            const auto [pn, dp] = legendre(n, x);
            const double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        const double dp = legendre(n, x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        // Map [-1, 1] → [0, 1].
        r.nodes[lo] = 0.5 * (1.0 - x);
        r.nodes[hi] = 0.5 * (1.0 + x);
        r.weights[lo] = 0.5 * w;
        r.weights[hi] = 0.5 * w;
    }
    return r;
}

const QuadratureRule& line_rule(int degree)
{
    check_degree(degree);
    static const std::vector<QuadratureRule> rules = [] {
        std::vector<QuadratureRule> v;
        for (int d = 0; d <= kMaxQuadratureDegree; ++d)
            v.push_back(gauss_legendre(d / 2 + 1));
        return v;
    }();
    return rules[static_cast<std::size_t>(degree)];
}

const QuadratureRule& triangle_rule(int degree)
{
    check_degree(degree);
    static const std::vector<QuadratureRule> rules = [] {
        std::vector<QuadratureRule> v;
        for (int d = 0; d <= kMaxQuadratureDegree; ++d)
            v.push_back(make_triangle_rule(d));
        return v;
    }();
    return rules[static_cast<std::size_t>(degree)];
}

}  // namespace dec
