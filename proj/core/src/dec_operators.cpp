#include "dec/dec_operators.hpp"

#include "dec/de_rham.hpp"
#include "dec/error.hpp"
#include "dec/quadrature.hpp"

#include <cmath>

namespace dec {

namespace {

void check_length(const DualComplex& dual, int k, std::size_t n, const char* what)
{
    if (k < 0 || k > dual.dim() || dual.ratio_a(k).size() != n)
        throw InvalidArgument(std::string(what) + ": cochain length does not match degree");
}

struct Barycentric {
    double l[3];
    double grad[3][2];
    double signed_area;
};

Barycentric barycentric(const SimplicialComplex& complex, int triangle,
                        std::span<const double> point)
{
    const auto& t = complex.simplex(2, triangle);
    const Point& a = complex.point(t[0]);
    const Point& b = complex.point(t[1]);
    const Point& c = complex.point(t[2]);
    const double det = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
    const Point* v[3] = {&a, &b, &c};
    Barycentric out{};
    out.signed_area = 0.5 * det;
    for (int i = 0; i < 3; ++i) {
        const Point& p = *v[(i + 1) % 3];
        const Point& q = *v[(i + 2) % 3];
        out.l[i] = ((p[0] - point[0]) * (q[1] - point[1]) - (q[0] - point[0]) * (p[1] - point[1])) / det;
        out.grad[i][0] = (p[1] - q[1]) / det;
        out.grad[i][1] = (q[0] - p[0]) / det;
    }
    return out;
}

}  // namespace

std::vector<double> hodge_star_apply(const DualComplex& dual, const Cochain& w)
{
    check_length(dual, w.degree, w.values.size(), "hodge_star_apply");
    const auto a = dual.ratio_a(w.degree);
    std::vector<double> out(w.values.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a[i] * w.values[i];
    return out;
}

Cochain inverse_hodge_star_apply(const DualComplex& dual, int k, std::span<const double> v)
{
    check_length(dual, k, v.size(), "inverse_hodge_star_apply");
    const auto b = dual.ratio_b(k);
    Cochain out{k, std::vector<double>(v.size())};
    for (std::size_t i = 0; i < v.size(); ++i)
        out.values[i] = b[i] * v[i];
    return out;
}

SparseMatrix codifferential_matrix(const SimplicialComplex& complex, const DualComplex& dual, int k)
{
    if (k < 1 || k > complex.dim())
        throw InvalidArgument("codifferential_matrix: degree must satisfy 1 ≤ k ≤ n");
    return scale(transpose(complex.coboundary(k - 1)), dual.ratio_b(k - 1), dual.ratio_a(k));
}

SparseMatrix codifferential_stencil(const SimplicialComplex& complex, const DualComplex& dual,
                                    int k)
{
    if (k < 1 || k > complex.dim())
        throw InvalidArgument("codifferential_stencil: degree must satisfy 1 ≤ k ≤ n");
    const auto a = dual.ratio_a(k);
    const auto b = dual.ratio_b(k - 1);
    std::vector<Triplet> t;
    for (int s = 0; s < complex.count(k - 1); ++s) {
        for (const auto& inc : complex.cofaces(complex.simplex(k - 1, s)))
            t.push_back({s, inc.index,
                         b[static_cast<std::size_t>(s)] * static_cast<double>(inc.sign) *
                             a[static_cast<std::size_t>(inc.index)]});
    }
    return SparseMatrix::from_triplets(complex.count(k - 1), complex.count(k), std::move(t));
}

SparseMatrix hodge_laplacian_matrix(const SimplicialComplex& complex, const DualComplex& dual,
                                    int k)
{
    const int n = complex.dim();
    if (k < 0 || k > n)
        throw InvalidArgument("hodge_laplacian_matrix: degree out of range");
    SparseMatrix l(complex.count(k), complex.count(k));
    if (k >= 1)
        l = add(l, spgemm(complex.coboundary(k - 1), codifferential_matrix(complex, dual, k)));
    if (k < n)
        l = add(l, spgemm(codifferential_matrix(complex, dual, k + 1), complex.coboundary(k)));
    return l;
}

SparseMatrix symmetrized_laplacian(const SimplicialComplex& complex, const DualComplex& dual,
                                   int k)
{
    const int n = complex.dim();
    if (k < 0 || k > n)
        throw InvalidArgument("symmetrized_laplacian: degree out of range");
    SparseMatrix m(complex.count(k), complex.count(k));
    if (k >= 1) {
        // S_k D_{k-1} S_{k-1}⁻¹ D_{k-1}ᵀ S_k = Bᵀ diag(b_{k-1}) B with B = D_{k-1}ᵀ S_k.
        const SparseMatrix bmat = scale(transpose(complex.coboundary(k - 1)), {}, dual.ratio_a(k));
        m = add(m, weighted_gram(bmat, dual.ratio_b(k - 1)));
    }
    if (k < n)
        m = add(m, weighted_gram(complex.coboundary(k), dual.ratio_a(k + 1)));
    return m;
}

double discrete_inner(const DualComplex& dual, const Cochain& u, const Cochain& v)
{
    if (u.degree != v.degree || u.values.size() != v.values.size())
        throw InvalidArgument("discrete_inner: cochains differ in degree or length");
    check_length(dual, u.degree, u.values.size(), "discrete_inner");
    const auto a = dual.ratio_a(u.degree);
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * u.values[i] * v.values[i];
    return s;
}

double discrete_norm(const DualComplex& dual, const Cochain& u)
{
    return std::sqrt(discrete_inner(dual, u, u));
}

double dual_discrete_norm(const DualComplex& dual, int k, std::span<const double> v)
{
    check_length(dual, k, v.size(), "dual_discrete_norm");
    const auto b = dual.ratio_b(k);
    double s = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i)
        s += b[i] * v[i] * v[i];
    return std::sqrt(s);
}

std::vector<double> whitney_evaluate(const SimplicialComplex& complex, const Cochain& w,
                                     int triangle, std::span<const double> point)
{
    if (complex.dim() != 2 || point.size() != 2)
        throw InvalidArgument("whitney_evaluate: planar triangle meshes only");
    if (w.degree < 0 || w.degree > 2 || w.size() != complex.count(w.degree))
        throw InvalidArgument("whitney_evaluate: cochain length does not match degree");
    if (triangle < 0 || triangle >= complex.count(2))
        throw InvalidArgument("whitney_evaluate: triangle index out of range");
    const auto bc = barycentric(complex, triangle, point);
    for (double l : bc.l)
        if (l < -1e-12)
            throw InvalidArgument("whitney_evaluate: point outside triangle");

    const auto& t = complex.simplex(2, triangle);
    switch (w.degree) {
    case 0: {
        double f = 0.0;
        for (int i = 0; i < 3; ++i)
            f += w.values[static_cast<std::size_t>(t[i])] * bc.l[i];
        return {f};
    }
    case 1: {
        double p = 0.0;
        double q = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                const double c = w.values[static_cast<std::size_t>(
                    complex.index_of(Simplex{t[i], t[j]}))];
                // λ_i dλ_j - λ_j dλ_i
                p += c * (bc.l[i] * bc.grad[j][0] - bc.l[j] * bc.grad[i][0]);
                q += c * (bc.l[i] * bc.grad[j][1] - bc.l[j] * bc.grad[i][1]);
            }
        return {p, q};
    }
    default:
        // ∫ over the oriented triangle of R dx∧dy equals w_T.
        return {w.values[static_cast<std::size_t>(triangle)] / bc.signed_area};
    }
}

double l2_norm_whitney(const SimplicialComplex& complex, const Cochain& w)
{
    const auto& rule = triangle_rule(4);
    double total = 0.0;
    for (int t = 0; t < complex.count(2); ++t) {
        const auto pts = complex.points(complex.simplex(2, t));
        const double area = std::abs(signed_area(pts[0], pts[1], pts[2]));
        double s = 0.0;
        for (int q = 0; q < rule.size(); ++q) {
            const auto uv = rule.node(q);
            const double x[2] = {pts[0][0] + uv[0] * (pts[1][0] - pts[0][0]) + uv[1] * (pts[2][0] - pts[0][0]),
                                 pts[0][1] + uv[0] * (pts[1][1] - pts[0][1]) + uv[1] * (pts[2][1] - pts[0][1])};
            double v2 = 0.0;
            for (double c : whitney_evaluate(complex, w, t, x))
                v2 += c * c;
            s += rule.weights[static_cast<std::size_t>(q)] * v2;
        }
        total += 2.0 * area * s;
    }
    return std::sqrt(total);
}

Cochain j_interpolant(const SimplicialComplex& complex, const DualComplex& dual, const PolyForm& w)
{
    const int k = w.degree();
    const auto dual_values = de_rham_dual(complex, dual, hodge_star(w));
    return inverse_hodge_star_apply(dual, k, dual_values);
}

Cochain pi_minus_j(const SimplicialComplex& complex, const DualComplex& dual, const PolyForm& w)
{
    Cochain pi = de_rham(complex, w);
    const Cochain j = j_interpolant(complex, dual, w);
    for (std::size_t i = 0; i < pi.values.size(); ++i)
        pi.values[i] -= j.values[i];
    return pi;
}

CommutingCheck commuting_j_check(const SimplicialComplex& complex, const DualComplex& dual,
                                 const PolyForm& w)
{
    const int k = w.degree();
    if (k < 1)
        throw InvalidArgument("commuting_j_check: form degree must be at least 1");
    const Cochain jw = j_interpolant(complex, dual, w);
    const auto lhs = spmv(codifferential_matrix(complex, dual, k), jw.values);
    const Cochain rhs = j_interpolant(complex, dual, codifferential(w));

    CommutingCheck out;
    const auto a = dual.ratio_a(k - 1);
    double s = 0.0;
    for (int i = 0; i < complex.count(k - 1); ++i) {
        if (complex.is_boundary(k - 1, i))
            continue;
        const auto ii = static_cast<std::size_t>(i);
        const double d = lhs[ii] - rhs.values[ii];
        s += a[ii] * d * d;
        ++out.checked;
    }
    out.residual = std::sqrt(s);
    out.reference = discrete_norm(dual, jw);
    return out;
}

}  // namespace dec
