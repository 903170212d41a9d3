#include "dec/geometry.hpp"

#include "dec/error.hpp"

#include <algorithm>
#include <cmath>

namespace dec {

namespace {

using Matrix = std::vector<std::vector<double>>;

Matrix edge_gram(std::span<const Point> points)
{
    const std::size_t k = points.size() - 1;
    const std::size_t n = points[0].size();
    Matrix g(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            double s = 0.0;
            for (std::size_t d = 0; d < n; ++d)
                s += (points[i + 1][d] - points[0][d]) * (points[j + 1][d] - points[0][d]);
            g[i][j] = s;
            g[j][i] = s;
        }
    }
    return g;
}

// Gaussian elimination with partial pivoting; returns the determinant and
// overwrites rhs with the solution when the system is nonsingular.
double solve_in_place(Matrix a, std::vector<double>& rhs)
{
    const std::size_t k = a.size();
    double det = 1.0;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col]))
                piv = r;
        if (a[piv][col] == 0.0)
            return 0.0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            std::swap(rhs[piv], rhs[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < k; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < k; ++c)
                a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    for (std::size_t i = k; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t c = i + 1; c < k; ++c)
            s -= a[i][c] * rhs[c];
        rhs[i] = s / a[i][i];
    }
    return det;
}

void check_points(std::span<const Point> points)
{
    if (points.empty())
        throw InvalidArgument("geometry: empty point set");
    for (const auto& p : points)
        if (p.size() != points[0].size())
            throw InvalidArgument("geometry: points of mixed dimension");
}

// Edge-vector coefficients α with c = p0 + Σ αⱼ (pⱼ - p0).
std::vector<double> circumcenter_coefficients(std::span<const Point> points)
{
    check_points(points);
    const std::size_t k = points.size() - 1;
    if (k == 0)
        return {};
    const Matrix g = edge_gram(points);
    std::vector<double> rhs(k);
    double scale = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        rhs[i] = 0.5 * g[i][i];
        scale *= g[i][i];
    }
    const double det = solve_in_place(g, rhs);
    if (!(scale > 0.0) || !(std::abs(det) > 1e-12 * scale))
        throw InvalidArgument("circumcenter: points are not affinely independent");
    return rhs;
}

}  // namespace

double primal_volume(std::span<const Point> points)
{
    check_points(points);
    const std::size_t k = points.size() - 1;
    if (k == 0)
        return 1.0;
    std::vector<double> dummy(k, 0.0);
    const double det = solve_in_place(edge_gram(points), dummy);
    if (det <= 0.0)
        return 0.0;
    double fact = 1.0;
    for (std::size_t i = 2; i <= k; ++i)
        fact *= static_cast<double>(i);
    return std::sqrt(det) / fact;
}

Point circumcenter(std::span<const Point> points)
{
    const auto alpha = circumcenter_coefficients(points);
    Point c = points[0];
    for (std::size_t j = 0; j < alpha.size(); ++j)
        for (std::size_t d = 0; d < c.size(); ++d)
            c[d] += alpha[j] * (points[j + 1][d] - points[0][d]);
    return c;
}

std::vector<double> circumcenter_barycentric(std::span<const Point> points)
{
    const auto alpha = circumcenter_coefficients(points);
    std::vector<double> bary(points.size());
    double rest = 1.0;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        bary[j + 1] = alpha[j];
        rest -= alpha[j];
    }
    bary[0] = rest;
    return bary;
}

Point vertex_centroid(std::span<const Point> points)
{
    check_points(points);
    Point c(points[0].size(), 0.0);
    for (const auto& p : points)
        for (std::size_t d = 0; d < c.size(); ++d)
            c[d] += p[d];
    for (double& x : c)
        x /= static_cast<double>(points.size());
    return c;
}

double distance(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d)
        s += (a[d] - b[d]) * (a[d] - b[d]);
    return std::sqrt(s);
}

double diameter(std::span<const Point> points)
{
    double h = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            h = std::max(h, distance(points[i], points[j]));
    return h;
}

double signed_area(std::span<const double> a, std::span<const double> b,
                   std::span<const double> c)
{
    return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]));
}

}  // namespace dec
