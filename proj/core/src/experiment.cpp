#include "dec/experiment.hpp"

#include "dec/de_rham.hpp"
#include "dec/dec_operators.hpp"
#include "dec/error.hpp"
#include "dec/forms.hpp"

#include <fmt/format.h>

#include <chrono>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

namespace dec {

std::vector<std::string> norm_names(int k)
{
    switch (k) {
    case 0:
        return {std::string(kNormEu), std::string(kNormDeu)};
    case 1:
        return {std::string(kNormEu), std::string(kNormDeu), std::string(kNormErho),
                std::string(kNormDerho)};
    case 2:
        return {std::string(kNormEu), std::string(kNormErho)};
    default:
        throw InvalidArgument(fmt::format("form degree must be 0, 1 or 2, got {}", k));
    }
}

namespace {

void check_degree(const SimplicialComplex& complex, int k)
{
    if (complex.dim() != 2)
        throw InvalidArgument("experiments run on planar triangle meshes only");
    if (k < 0 || k > 2)
        throw InvalidArgument(fmt::format("form degree must be 0, 1 or 2, got {}", k));
}

Cochain difference(const Cochain& a, const Cochain& b)
{
    if (a.degree != b.degree || a.values.size() != b.values.size())
        throw InvalidArgument("cochain difference: degree or length mismatch");
    Cochain out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] -= b.values[i];
    return out;
}

Cochain apply_coboundary(const SimplicialComplex& complex, const Cochain& c)
{
    return {c.degree + 1, spmv(complex.coboundary(c.degree), c.values)};
}

}  // namespace

ProblemSolution solve_hodge_laplacian(const SimplicialComplex& complex, const DualComplex& dual,
                                      const PolyForm& f, const SolverConfig& cfg)
{
    const int k = f.degree();
    check_degree(complex, k);
    const auto a = dual.ratio_a(k);
    std::vector<double> rhs = de_rham(complex, f).values;
    if (k == 0) {
        // Compatibility: shift Rf by a constant so that ⟦Rf, 1⟧ = 0.
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            num += a[i] * rhs[i];
            den += a[i];
        }
        for (double& x : rhs)
            x -= num / den;
    }
    for (std::size_t i = 0; i < rhs.size(); ++i)
        rhs[i] *= a[i];

    SolverConfig config = cfg;
    if (k == 0) {
        config.deflate_constants = true;
        config.deflation_weights.assign(a.begin(), a.end());
    }
    const SolveResult res = cg_solve(symmetrized_laplacian(complex, dual, k), rhs, config);

    ProblemSolution out;
    out.u = {k, res.x};
    out.iterations = res.iterations;
    out.residual = res.residual;
    if (k >= 1)
        out.rho = Cochain{k - 1, spmv(codifferential_matrix(complex, dual, k), out.u.values)};
    return out;
}

ProblemSolution solve_problem(const SimplicialComplex& complex, const DualComplex& dual, int k,
                              const SolverConfig& cfg)
{
    check_degree(complex, k);
    const PolyForm u = manufactured_solution(k);
    ProblemSolution out = solve_hodge_laplacian(complex, dual, hodge_laplacian_smooth(u), cfg);
    if (k == 0) {
        const Cochain ru = de_rham(complex, u);
        const Cochain one{0, std::vector<double>(ru.values.size(), 1.0)};
        const double shift = (discrete_inner(dual, ru, one) - discrete_inner(dual, out.u, one)) /
                             discrete_inner(dual, one, one);
        for (double& x : out.u.values)
            x += shift;
    }
    return out;
}

ErrorRecord compute_errors(const SimplicialComplex& complex, const DualComplex& dual, int k,
                           const Cochain& u_h, const std::optional<Cochain>& rho_h)
{
    check_degree(complex, k);
    const PolyForm u = manufactured_solution(k);
    ErrorRecord rec;

    const Cochain e_u = difference(de_rham(complex, u), u_h);
    rec.norms[std::string(kNormEu)] = discrete_norm(dual, e_u);
    if (k < 2)
        rec.norms[std::string(kNormDeu)] = discrete_norm(dual, apply_coboundary(complex, e_u));

    if (k >= 1) {
        if (!rho_h)
            throw InvalidArgument("compute_errors: ρ_h is required for k ≥ 1");
        const Cochain e_rho = difference(de_rham(complex, codifferential(u)), *rho_h);
        rec.norms[std::string(kNormErho)] = discrete_norm(dual, e_rho);
        if (k == 1)
            rec.norms[std::string(kNormDerho)] = discrete_norm(dual, apply_coboundary(complex, e_rho));
    }
    return rec;
}

std::vector<double> ConvergenceReport::rates(const std::string& norm) const
{
    std::vector<double> out;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const double e0 = records[i - 1].norms.at(norm);
        const double e1 = records[i].norms.at(norm);
        out.push_back(std::log(e0 / e1) / std::log(records[i - 1].h / records[i].h));
    }
    return out;
}

double ConvergenceReport::final_rate(const std::string& norm) const
{
    const auto r = rates(norm);
    return r.empty() ? std::numeric_limits<double>::quiet_NaN() : r.back();
}

const ErrorRecord* ConvergenceReport::record_for_level(int level) const
{
    for (const auto& r : records)
        if (r.level == level)
            return &r;
    return nullptr;
}

ConvergenceReport run_convergence(const ConvergenceOptions& opts)
{
    for (std::size_t i = 1; i < opts.levels.size(); ++i)
        if (opts.levels[i] <= opts.levels[i - 1])
            throw InvalidArgument("run_convergence: levels must be strictly ascending");
    (void)norm_names(opts.k);

    ConvergenceReport report;
    report.k = opts.k;
    report.family = opts.family;
    report.seed = opts.seed;
    report.alpha = opts.alpha;
    for (int level : opts.levels) {
        const auto start = std::chrono::steady_clock::now();
        const SimplicialComplex complex =
            generate_mesh({opts.family, level, opts.seed, opts.alpha});
        const DualComplex dual = build_dual(complex);
        const ProblemSolution sol = solve_problem(complex, dual, opts.k, opts.solver);
        ErrorRecord rec = compute_errors(complex, dual, opts.k, sol.u, sol.rho);
        rec.level = level;
        rec.h = std::ldexp(1.0, -level);
        rec.iterations = sol.iterations;
        rec.residual = sol.residual;
        rec.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.records.push_back(std::move(rec));
    }
    return report;
}

std::vector<int> parse_level_range(std::string_view text)
{
    auto parse_int = [&](std::string_view s) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw InvalidArgument(fmt::format("invalid level range '{}'", text));
        return v;
    };
    int lo = 0;
    int hi = 0;
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        lo = parse_int(text.substr(0, dots));
        hi = parse_int(text.substr(dots + 2));
    } else {
        lo = hi = parse_int(text);
    }
    if (lo < 1 || hi < lo)
        throw InvalidArgument(fmt::format("invalid level range '{}'", text));
    std::vector<int> levels(static_cast<std::size_t>(hi - lo + 1));
    std::iota(levels.begin(), levels.end(), lo);
    return levels;
}

bool DiagnosticsReport::all_passed() const
{
    for (const auto& i : items)
        if (!i.passed)
            return false;
    return true;
}

namespace {

PolyForm constant_form(int k)
{
    switch (k) {
    case 0:
        return PolyForm::scalar(Poly2::constant(1.7));
    case 1:
        return PolyForm::one_form(Poly2::constant(0.8), Poly2::constant(-0.3));
    default:
        return PolyForm::two_form(Poly2::constant(1.3));
    }
}

PolyForm linear_form(int k)
{
    switch (k) {
    case 0:
        return PolyForm::scalar(Poly2::affine(0.3, 0.7, -0.4));
    case 1:
        return PolyForm::one_form(Poly2::affine(0.2, 1.0, -0.5), Poly2::affine(-0.3, 0.4, 0.9));
    default:
        return PolyForm::two_form(Poly2::affine(0.5, 0.6, -0.8));
    }
}

PolyForm cubic_form(int k)
{
    Poly2 p = Poly2::affine(0.1, -0.6, 0.3) + Poly2::monomial(2, 1, 0.9) +
              Poly2::monomial(0, 3, -0.4) + Poly2::monomial(1, 1, 0.25);
    Poly2 q = Poly2::affine(-0.2, 0.5, 0.7) + Poly2::monomial(3, 0, 0.35) +
              Poly2::monomial(1, 2, -0.8) + Poly2::monomial(0, 2, 0.15);
    return k == 1 ? PolyForm::one_form(p, q) : PolyForm::two_form(p);
}

double interior_norm(const SimplicialComplex& complex, const DualComplex& dual, const Cochain& c,
                     int& count)
{
    const auto a = dual.ratio_a(c.degree);
    double s = 0.0;
    count = 0;
    for (int i = 0; i < c.size(); ++i) {
        if (complex.is_boundary(c.degree, i))
            continue;
        const auto ii = static_cast<std::size_t>(i);
        s += a[ii] * c.values[ii] * c.values[ii];
        ++count;
    }
    return std::sqrt(s);
}

}  // namespace

DiagnosticsReport diagnostics(const SimplicialComplex& complex, const DualComplex& dual, int k)
{
    check_degree(complex, k);
    DiagnosticsReport rep;
    rep.k = k;

    {
        const auto c = check_centroid_condition(complex, dual, k, 1e-12);
        DiagnosticItem item{"centroid_condition", c.ok, c.checked == 0, c.max_deviation, 1e-12,
                            fmt::format("{} interior {}-simplices compared", c.checked, k)};
        rep.items.push_back(std::move(item));
    }
    {
        const PolyForm w = constant_form(k);
        const double num = discrete_norm(dual, pi_minus_j(complex, dual, w));
        const double den = discrete_norm(dual, de_rham(complex, w));
        const double rel = num / den;
        rep.items.push_back({"kernel_constant_form", rel <= 1e-11, false, rel, 1e-11,
                             "relative norm of (Pi - J) on a constant form"});
    }
    {
        const PolyForm w = linear_form(k);
        int count = 0;
        const double num = interior_norm(complex, dual, pi_minus_j(complex, dual, w), count);
        const double den = discrete_norm(dual, de_rham(complex, w));
        const double rel = num / den;
        rep.items.push_back({"kernel_linear_form", rel <= 1e-11, count == 0, rel, 1e-11,
                             fmt::format("relative norm of (Pi - J) on a linear form over {} "
                                         "interior simplices",
                                         count)});
    }
    if (k >= 1) {
        const auto c = commuting_j_check(complex, dual, cubic_form(k));
        const double rel = c.reference > 0.0 ? c.residual / c.reference : c.residual;
        rep.items.push_back({"commuting_codifferential", rel <= 1e-10, c.checked == 0, rel, 1e-10,
                             fmt::format("delta_h J = J delta on a cubic form over {} interior "
                                         "{}-simplices",
                                         c.checked, k - 1)});
    }
    return rep;
}

std::string render_diagnostics(const DiagnosticsReport& report)
{
    std::string out = fmt::format("diagnostics for k={}\n", report.k);
    for (const auto& i : report.items) {
        const char* status = i.vacuous ? "VACUOUS" : (i.passed ? "PASS" : "FAIL");
        out += fmt::format("[{}] {}: value={:.3e} threshold={:.1e} ({})\n", status, i.name, i.value,
                           i.threshold, i.detail);
    }
    out += fmt::format("overall: {}\n", report.all_passed() ? "PASS" : "FAIL");
    return out;
}

}  // namespace dec
