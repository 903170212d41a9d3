#include "dec/de_rham.hpp"

#include "dec/error.hpp"
#include "dec/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace dec {

namespace {

void require_planar(std::span<const Point> points)
{
    for (const auto& p : points)
        if (p.size() != 2)
            throw InvalidArgument("de Rham maps are implemented for planar meshes only");
}

double segment_integral(const PolyForm& w, const Point& a, const Point& b)
{
    const double tx = b[0] - a[0];
    const double ty = b[1] - a[1];
    const auto& rule = line_rule(std::max(w.polynomial_degree(), 0));
    const auto& p = w.component(0);
    const auto& q = w.component(1);
    double s = 0.0;
    for (int i = 0; i < rule.size(); ++i) {
        const double t = rule.nodes[static_cast<std::size_t>(i)];
        const double x = a[0] + t * tx;
        const double y = a[1] + t * ty;
        s += rule.weights[static_cast<std::size_t>(i)] * (p(x, y) * tx + q(x, y) * ty);
    }
    return s;
}

double signed_det(const Point& a, const Point& b, const Point& c)
{
    return (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
}

// ∫ f over the triangle (a, b, c) with the sign of its orientation.
double triangle_integral(const Poly2& f, const Point& a, const Point& b, const Point& c)
{
    const double det = signed_det(a, b, c);
    const auto& rule = triangle_rule(std::max(f.degree(), 0));
    double s = 0.0;
    for (int i = 0; i < rule.size(); ++i) {
        const double u = rule.nodes[static_cast<std::size_t>(2 * i)];
        const double v = rule.nodes[static_cast<std::size_t>(2 * i + 1)];
        const double x = a[0] + u * (b[0] - a[0]) + v * (c[0] - a[0]);
        const double y = a[1] + u * (b[1] - a[1]) + v * (c[1] - a[1]);
        s += rule.weights[static_cast<std::size_t>(i)] * f(x, y);
    }
    return det * s;
}

}  // namespace

double integrate_over_simplex(const PolyForm& w, std::span<const Point> points)
{
    require_planar(points);
    if (static_cast<int>(points.size()) != w.degree() + 1)
        throw InvalidArgument("integrate_over_simplex: form degree does not match simplex");
    switch (w.degree()) {
    case 0:
        return w.component(0)(points[0][0], points[0][1]);
    case 1:
        return segment_integral(w, points[0], points[1]);
    default:
        return triangle_integral(w.component(0), points[0], points[1], points[2]);
    }
}

double integrate_unsigned(const Poly2& f, std::span<const Point> triangle)
{
    require_planar(triangle);
    if (triangle.size() != 3)
        throw InvalidArgument("integrate_unsigned: expected a triangle");
    const double t = triangle_integral(f, triangle[0], triangle[1], triangle[2]);
    return signed_det(triangle[0], triangle[1], triangle[2]) < 0.0 ? -t : t;
}

Cochain de_rham(const SimplicialComplex& complex, const PolyForm& w)
{
    if (complex.ambient_dim() != 2)
        throw InvalidArgument("de_rham: planar meshes only");
    const int k = w.degree();
    Cochain c{k, std::vector<double>(static_cast<std::size_t>(complex.count(k)))};
    for (int i = 0; i < complex.count(k); ++i) {
        const auto pts = complex.points(complex.simplex(k, i));
        c.values[static_cast<std::size_t>(i)] = integrate_over_simplex(w, pts);
    }
    return c;
}

std::vector<double> de_rham_dual(const SimplicialComplex& complex, const DualComplex& dual,
                                 const PolyForm& w)
{
    if (complex.ambient_dim() != 2)
        throw InvalidArgument("de_rham_dual: planar meshes only");
    const int k = 2 - w.degree();
    std::vector<double> out(static_cast<std::size_t>(complex.count(k)), 0.0);

    for (int i = 0; i < complex.count(k); ++i) {
        double s = 0.0;
        switch (k) {
        case 0:
            for (int p = 0; p < dual.piece_count(0, i); ++p) {
                const auto pts = dual.piece_points(0, i, p);
                const double t = triangle_integral(w.component(0), pts[0], pts[1], pts[2]);
                s += signed_det(pts[0], pts[1], pts[2]) < 0.0 ? -t : t;
            }
            break;
        case 1: {
            const auto& e = complex.simplex(1, i);
            const Point& x0 = complex.point(e[0]);
            const Point& x1 = complex.point(e[1]);
            // +90° rotation of the edge tangent.
            const double nx = -(x1[1] - x0[1]);
            const double ny = x1[0] - x0[0];
            for (int p = 0; p < dual.piece_count(1, i); ++p) {
                const auto pts = dual.piece_points(1, i, p);
                const double dir = (pts[1][0] - pts[0][0]) * nx + (pts[1][1] - pts[0][1]) * ny;
                const double t = segment_integral(w, pts[0], pts[1]);
                s += dir < 0.0 ? -t : t;
            }
            break;
        }
        default: {
            const auto tri = complex.points(complex.simplex(2, i));
            const double o = signed_det(tri[0], tri[1], tri[2]) < 0.0 ? -1.0 : 1.0;
            const Point& c = dual.circumcenter(2, i);
            s = o * w.component(0)(c[0], c[1]);
            break;
        }
        }
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

}  // namespace dec
