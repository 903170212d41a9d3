// Acceptance suite. Each criterion prints its individual checks followed by a
// single [PASS] or [FAIL] line; the exit status is nonzero if any criterion fails.

#include "dec/circumcentric_dual.hpp"
#include "dec/de_rham.hpp"
#include "dec/dec_operators.hpp"
#include "dec/experiment.hpp"
#include "dec/mesh_generation.hpp"
#include "dec/quadrature.hpp"

#include <Eigen/Dense>
#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace dec;

namespace {

class Criterion {
public:
    explicit Criterion(int id, std::string title)
        : id_(id), title_(std::move(title)), start_(std::chrono::steady_clock::now())
    {
    }

    void check(const std::string& what, bool ok, const std::string& detail)
    {
        fmt::print("    {} {}: {}\n", ok ? "ok  " : "FAIL", what, detail);
        ok_ = ok_ && ok;
    }

    /// |value - reference| / |reference| ≤ tol.
    void relative(const std::string& what, double value, double reference, double tol)
    {
        const double rel = std::abs(value - reference) / std::abs(reference);
        check(what, rel <= tol,
              fmt::format("{:.4e} vs {:.3e}, relative deviation {:.2e} (tolerance {:.0e})", value,
                          reference, rel, tol));
    }

    /// |value - target| ≤ tol.
    void rate(const std::string& what, double value, double target, double tol)
    {
        check(what, std::abs(value - target) <= tol,
              fmt::format("{:.4f}, expected {:.2f} +/- {:.2f}", value, target, tol));
    }

    /// value ≤ bound.
    void bound(const std::string& what, double value, double limit)
    {
        check(what, value <= limit, fmt::format("{:.3e} <= {:.0e}", value, limit));
    }

    bool finish() const
    {
        const std::chrono::duration<double> seconds = std::chrono::steady_clock::now() - start_;
        fmt::print("[{}] criterion {}: {} ({:.1f} s)\n", ok_ ? "PASS" : "FAIL", id_, title_, seconds.count());
        return ok_;
    }

private:
    int id_;
    std::string title_;
    std::chrono::steady_clock::time_point start_;
    bool ok_ = true;
};

ConvergenceReport convergence(int k, MeshFamily family, std::uint64_t seed = 1)
{
    ConvergenceOptions opts;
    opts.k = k;
    opts.family = family;
    opts.seed = seed;
    opts.levels = parse_level_range("2..8");
    return run_convergence(opts);
}

double norm_at(const ConvergenceReport& rep, int level, const std::string& norm)
{
    const auto* r = rep.record_for_level(level);
    return r ? r->norms.at(norm) : std::nan("");
}

/// Rate between two levels of a report.
double rate_between(const ConvergenceReport& rep, int l0, int l1, const std::string& norm)
{
    return std::log(norm_at(rep, l0, norm) / norm_at(rep, l1, norm)) /
           std::log(std::ldexp(1.0, l1 - l0));
}

double max_abs(const std::vector<double>& v)
{
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

double max_row_sum(const SparseMatrix& a)
{
    double m = 0.0;
    for (int r = 0; r < a.rows(); ++r) {
        double s = 0.0;
        for (int p = a.row_offsets()[static_cast<std::size_t>(r)];
             p < a.row_offsets()[static_cast<std::size_t>(r) + 1]; ++p)
            s += std::abs(a.values()[static_cast<std::size_t>(p)]);
        m = std::max(m, s);
    }
    return m;
}

Eigen::MatrixXd dense(const SparseMatrix& m)
{
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m.rows(), m.cols());
    for (const auto& t : m.to_triplets())
        d(t.row, t.col) = t.value;
    return d;
}

std::vector<double> random_vector(std::mt19937_64& rng, int n)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v)
        x = u(rng);
    return v;
}

struct Mesh {
    std::string name;
    SimplicialComplex complex;
    DualComplex dual;
};

Mesh make_mesh(MeshFamily family, int level, std::uint64_t seed = 1)
{
    auto k = generate_mesh(MeshFamilySpec{family, level, seed, kDefaultPerturbation});
    auto d = build_dual(k);
    const auto name = family == MeshFamily::symmetric
                          ? fmt::format("symmetric m={}", level)
                          : fmt::format("perturbed m={} seed={}", level, seed);
    return {name, std::move(k), std::move(d)};
}

Poly2 x() { return Poly2::monomial(1, 0); }
Poly2 y() { return Poly2::monomial(0, 1); }

PolyForm cubic_form(int k)
{
    const Poly2 p = x() * x() * y() - 2.0 * y() * y() * y() + x();
    const Poly2 q = x() * x() * x() + 0.5 * x() * y() * y() - y();
    if (k == 1)
        return PolyForm::one_form(p, q);
    return PolyForm(k, {p});
}

PolyForm constant_form(int k)
{
    if (k == 1)
        return PolyForm::one_form(Poly2::constant(0.6), Poly2::constant(-1.3));
    return PolyForm(k, {Poly2::constant(1.7)});
}

bool criterion_1()
{
    Criterion c(1, "symmetric mesh, k = 0");
    const auto rep = convergence(0, MeshFamily::symmetric);
    c.relative("de_u at h = 2^-5", norm_at(rep, 5, "de_u"), 2.22e-1, 0.02);
    c.relative("e_u at h = 2^-5", norm_at(rep, 5, "e_u"), 1.24e-2, 0.03);
    c.rate("de_u rate over levels 6 to 8", rate_between(rep, 6, 8, "de_u"), 2.0, 0.05);
    double seconds = 0.0;
    for (const auto& r : rep.records)
        seconds += r.seconds;
    c.bound("solve time for levels 2..8 [s]", seconds, 300.0);
    return c.finish();
}

bool criterion_2()
{
    Criterion c(2, "symmetric mesh, k = 1");
    const auto rep = convergence(1, MeshFamily::symmetric);
    c.relative("de_u at h = 2^-6", norm_at(rep, 6, "de_u"), 1.85e-2, 0.03);
    c.relative("e_rho at h = 2^-6", norm_at(rep, 6, "e_rho"), 3.14e-4, 0.05);
    c.relative("de_rho at h = 2^-6", norm_at(rep, 6, "de_rho"), 1.73e-3, 0.05);
    c.rate("e_u final rate", rep.final_rate("e_u"), 2.0, 0.1);
    c.rate("e_rho final rate", rep.final_rate("e_rho"), 4.0, 0.15);
    c.rate("de_rho final rate", rep.final_rate("de_rho"), 4.0, 0.15);
    return c.finish();
}

bool criterion_3()
{
    Criterion c(3, "symmetric mesh, k = 2");
    const auto rep = convergence(2, MeshFamily::symmetric);
    c.relative("e_u at h = 2^-5", norm_at(rep, 5, "e_u"), 4.00e-3, 0.03);
    c.relative("e_rho at h = 2^-5", norm_at(rep, 5, "e_rho"), 2.83e-4, 0.05);
    c.rate("e_u final rate", rep.final_rate("e_u"), 2.0, 0.1);
    c.rate("e_rho final rate", rep.final_rate("e_rho"), 4.0, 0.2);
    return c.finish();
}

bool criterion_4()
{
    Criterion c(4, "perturbed meshes, seeds 1 to 3, first-order rates");
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto r0 = convergence(0, MeshFamily::perturbed, seed);
        c.rate(fmt::format("seed {} k=0 de_u final rate", seed), r0.final_rate("de_u"), 1.0, 0.2);
        const auto r1 = convergence(1, MeshFamily::perturbed, seed);
        c.rate(fmt::format("seed {} k=1 de_u final rate", seed), r1.final_rate("de_u"), 1.0, 0.2);
        c.rate(fmt::format("seed {} k=1 de_rho final rate", seed), r1.final_rate("de_rho"), 1.0, 0.2);
        c.rate(fmt::format("seed {} k=1 e_rho final rate", seed), r1.final_rate("e_rho"), 2.0, 0.3);
        const auto r2 = convergence(2, MeshFamily::perturbed, seed);
        c.rate(fmt::format("seed {} k=2 e_u final rate", seed), r2.final_rate("e_u"), 1.0, 0.2);
        c.rate(fmt::format("seed {} k=2 e_rho final rate", seed), r2.final_rate("e_rho"), 1.0, 0.2);
    }
    return c.finish();
}

bool criterion_5()
{
    Criterion c(5, "structural properties");
    std::mt19937_64 rng(2024);

    std::vector<Mesh> meshes;
    for (int m = 1; m <= 5; ++m) {
        meshes.push_back(make_mesh(MeshFamily::symmetric, m));
        for (std::uint64_t seed = 1; seed <= 3; ++seed)
            meshes.push_back(make_mesh(MeshFamily::perturbed, m, seed));
    }

    std::size_t dd_nnz = 0;
    double deltadelta = 0.0;
    for (const auto& m : meshes) {
        dd_nnz += spgemm(m.complex.coboundary(1), m.complex.coboundary(0)).nnz();
        const auto v = random_vector(rng, m.complex.count(2));
        const auto d1 = codifferential_matrix(m.complex, m.dual, 1);
        const auto inner = spmv(codifferential_matrix(m.complex, m.dual, 2), v);
        const double rel = max_abs(spmv(d1, inner)) / (max_row_sum(d1) * max_abs(inner));
        deltadelta = std::max(deltadelta, rel);
    }
    c.check("d d = 0", dd_nnz == 0, fmt::format("{} structural nonzeros over {} meshes", dd_nnz, meshes.size()));
    c.bound("delta delta = 0 (relative)", deltadelta, 1e-13);

    double adj = 0.0;
    for (int level : {2, 4, 6}) {
        const auto m = make_mesh(MeshFamily::perturbed, level, 1);
        for (int k = 0; k <= 2; ++k) {
            const Cochain u{k, random_vector(rng, m.complex.count(k))};
            const Cochain v{k, random_vector(rng, m.complex.count(k))};
            if (k < 2) {
                const Cochain w{k + 1, random_vector(rng, m.complex.count(k + 1))};
                const Cochain du{k + 1, spmv(m.complex.coboundary(k), u.values)};
                const Cochain dw{k, spmv(codifferential_matrix(m.complex, m.dual, k + 1), w.values)};
                const double lhs = discrete_inner(m.dual, du, w);
                const double rhs = discrete_inner(m.dual, u, dw);
                adj = std::max(adj, std::abs(lhs - rhs) /
                                        (discrete_norm(m.dual, du) * discrete_norm(m.dual, w)));
            }
            const auto l = hodge_laplacian_matrix(m.complex, m.dual, k);
            const Cochain lu{k, spmv(l, u.values)};
            const Cochain lv{k, spmv(l, v.values)};
            const double a = discrete_inner(m.dual, lu, v);
            const double b = discrete_inner(m.dual, u, lv);
            adj = std::max(adj, std::abs(a - b) / (discrete_norm(m.dual, lu) * discrete_norm(m.dual, v)));
        }
    }
    c.bound("adjointness of D and delta_h, self-adjointness of L (relative, 3 levels x 3 degrees)",
            adj, 1e-12);

    double stencil = 0.0;
    for (const auto& m : meshes)
        for (int k = 1; k <= 2; ++k) {
            const auto a = dense(codifferential_matrix(m.complex, m.dual, k));
            const auto b = dense(codifferential_stencil(m.complex, m.dual, k));
            stencil = std::max(stencil, (a - b).cwiseAbs().maxCoeff() / a.cwiseAbs().maxCoeff());
        }
    c.bound("stencil vs transpose assembly (relative)", stencil, 1e-14);

    double commuting = 0.0;
    for (const auto& m : meshes)
        for (int k = 1; k <= 2; ++k)
            for (const auto& w : {cubic_form(k), manufactured_solution(k)}) {
                const auto r = commuting_j_check(m.complex, m.dual, w);
                if (r.checked > 0)
                    commuting = std::max(commuting, r.residual / r.reference);
            }
    c.bound("delta_h J = J delta on polynomial forms (relative)", commuting, 1e-10);

    double kernel = 0.0;
    for (const auto& m : meshes)
        for (int k = 0; k <= 2; ++k) {
            const auto w = constant_form(k);
            kernel = std::max(kernel, discrete_norm(m.dual, pi_minus_j(m.complex, m.dual, w)) /
                                          discrete_norm(m.dual, de_rham(m.complex, w)));
        }
    c.bound("(Pi - J) on constant forms, all meshes (relative)", kernel, 1e-11);

    double sym_dev = 0.0;
    bool sym_ok = true;
    for (int level = 2; level <= 5; ++level) {
        const auto m = make_mesh(MeshFamily::symmetric, level);
        for (int k = 0; k <= 2; ++k) {
            const auto r = check_centroid_condition(m.complex, m.dual, k, 1e-12);
            sym_ok = sym_ok && r.ok && r.checked > 0;
            sym_dev = std::max(sym_dev, r.max_deviation);
        }
    }
    c.check("centroid condition on symmetric meshes, k = 0, 1, 2", sym_ok,
            fmt::format("max deviation {:.2e} <= 1e-12", sym_dev));

    double per_min = INFINITY;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto m = make_mesh(MeshFamily::perturbed, 3, seed);
        for (int k = 0; k <= 1; ++k)
            per_min = std::min(per_min, check_centroid_condition(m.complex, m.dual, k, 1e-12).max_deviation);
    }
    c.check("centroid condition fails on perturbed seeds 1..5, level 3", per_min > 1e-6,
            fmt::format("smallest max deviation {:.2e} > 1e-6", per_min));
    return c.finish();
}

bool criterion_6()
{
    Criterion c(6, "oracle equivalence at tiny scale");

    double worst = 0.0;
    for (const auto family : {MeshFamily::symmetric, MeshFamily::perturbed}) {
        const auto m = make_mesh(family, 2, 2);
        for (int k = 0; k <= 2; ++k) {
            if (m.complex.count(k) > 50)
                continue;
            const auto sol = solve_problem(m.complex, m.dual, k);
            const auto a = m.dual.ratio_a(k);
            const Eigen::MatrixXd mat = dense(symmetrized_laplacian(m.complex, m.dual, k));
            auto rf = de_rham(m.complex, hodge_laplacian_smooth(manufactured_solution(k))).values;
            Eigen::VectorXd b(static_cast<Eigen::Index>(rf.size()));
            double wsum = 0.0, asum = 0.0;
            for (std::size_t i = 0; i < rf.size(); ++i) {
                wsum += a[i] * rf[i];
                asum += a[i];
            }
            for (std::size_t i = 0; i < rf.size(); ++i)
                b[static_cast<Eigen::Index>(i)] = a[i] * (k == 0 ? rf[i] - wsum / asum : rf[i]);
            Eigen::VectorXd u;
            if (k == 0) {
                // Append the gauge ⟦u, 1⟧ = ⟦Ru, 1⟧ as a bordering row.
                const auto n = mat.rows();
                Eigen::MatrixXd bordered = Eigen::MatrixXd::Zero(n + 1, n + 1);
                bordered.topLeftCorner(n, n) = mat;
                const auto ru = de_rham(m.complex, manufactured_solution(0)).values;
                double gauge = 0.0;
                for (Eigen::Index i = 0; i < n; ++i) {
                    bordered(n, i) = bordered(i, n) = a[static_cast<std::size_t>(i)];
                    gauge += a[static_cast<std::size_t>(i)] * ru[static_cast<std::size_t>(i)];
                }
                Eigen::VectorXd rhs(n + 1);
                rhs << b, gauge;
                u = bordered.partialPivLu().solve(rhs).head(n);
            } else {
                u = mat.llt().solve(b);
            }
            double diff = 0.0;
            for (Eigen::Index i = 0; i < u.size(); ++i)
                diff = std::max(diff, std::abs(u[i] - sol.u.values[static_cast<std::size_t>(i)]));
            worst = std::max(worst, diff / u.cwiseAbs().maxCoeff());
        }
    }
    c.bound("dense factorization vs CG, all k, <= 50 unknowns (relative)", worst, 1e-10);

    double quad = 0.0;
    for (int degree = 0; degree <= 20; ++degree) {
        const auto& rule = triangle_rule(degree);
        for (int a = 0; a <= degree; ++a) {
            const int b = degree - a;
            double s = 0.0;
            for (int q = 0; q < rule.size(); ++q)
                s += rule.weights[static_cast<std::size_t>(q)] * std::pow(rule.node(q)[0], a) *
                     std::pow(rule.node(q)[1], b);
            const double exact =
                std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 3.0));
            quad = std::max(quad, std::abs(s - exact) / exact);
        }
    }
    c.bound("triangle quadrature vs a!b!/(a+b+2)!, degree <= 20 (relative)", quad, 1e-13);

    double inject = 0.0;
    for (const auto family : {MeshFamily::symmetric, MeshFamily::perturbed}) {
        const auto m = make_mesh(family, 4, 3);
        for (int k = 0; k <= 2; ++k) {
            const auto u = manufactured_solution(k);
            const auto ru = de_rham(m.complex, u);
            std::optional<Cochain> rho;
            if (k >= 1)
                rho = de_rham(m.complex, codifferential(u));
            const auto rec = compute_errors(m.complex, m.dual, k, ru, rho);
            const double scale = discrete_norm(m.dual, ru);
            for (const auto& [name, v] : rec.norms)
                inject = std::max(inject, v / scale);
        }
    }
    c.bound("exact-solution injection, all reported norms (scaled)", inject, 1e-10);
    return c.finish();
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<std::function<bool()>> criteria{criterion_1, criterion_2, criterion_3,
                                                      criterion_4, criterion_5, criterion_6};
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            selected.push_back(std::atoi(argv[++i]));
        } else {
            fmt::print(stderr, "usage: acceptance [--criterion N]...\n");
            return 64;
        }
    }
    if (selected.empty())
        for (int i = 1; i <= static_cast<int>(criteria.size()); ++i)
            selected.push_back(i);

    bool all = true;
    for (int id : selected) {
        if (id < 1 || id > static_cast<int>(criteria.size())) {
            fmt::print(stderr, "unknown criterion {}\n", id);
            return 64;
        }
        try {
            all = criteria[static_cast<std::size_t>(id - 1)]() && all;
        } catch (const std::exception& e) {
            fmt::print("[FAIL] criterion {}: {}\n", id, e.what());
            all = false;
        }
    }
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
