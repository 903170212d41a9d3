#pragma once

#include "dec/circumcentric_dual.hpp"
#include "dec/cochain.hpp"
#include "dec/conjugate_gradient.hpp"
#include "dec/forms.hpp"
#include "dec/mesh_generation.hpp"
#include "dec/simplicial_complex.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dec {

/// Error norm names in table order.
inline constexpr std::string_view kNormEu = "e_u";
inline constexpr std::string_view kNormDeu = "de_u";
inline constexpr std::string_view kNormErho = "e_rho";
inline constexpr std::string_view kNormDerho = "de_rho";

/// Norms reported for degree k: {e_u, de_u}, all four, or {e_u, e_rho}.
std::vector<std::string> norm_names(int k);

struct ProblemSolution {
    Cochain u;
    /// ρ_h = δ_h u_h, present for k ≥ 1.
    std::optional<Cochain> rho;
    int iterations = 0;
    double residual = 0.0;
};

/// Solves S_k L u = S_k R(f) for a polynomial source k-form f.
///
/// For k = 0, Rf is shifted by a constant to satisfy ⟦Rf, 1⟧ = 0 and the
/// constants are deflated; the returned u_h has ⟦u_h, 1⟧ = 0.
ProblemSolution solve_hodge_laplacian(const SimplicialComplex& complex, const DualComplex& dual,
                                      const PolyForm& f, const SolverConfig& cfg = {});

/// Solves S_k L u = S_k R(f) for the manufactured k-form u with f = Δu.
///
/// For k = 0, Rf is shifted by a constant to satisfy ⟦Rf, 1⟧ = 0, the constants
/// are deflated from the solve, and the additive
/// constant is fixed by ⟦u_h, 1⟧ = ⟦Ru, 1⟧. Throws SolverError on failure.
ProblemSolution solve_problem(const SimplicialComplex& complex, const DualComplex& dual, int k,
                              const SolverConfig& cfg = {});

struct ErrorRecord {
    int level = 0;
    double h = 0.0;
    std::map<std::string, double> norms;
    int iterations = 0;
    double residual = 0.0;
    double seconds = 0.0;
};

/// e_u = Ru - u_h, de_u = D e_u, e_ρ = R(δu) - ρ_h, de_ρ = D e_ρ,
/// each measured in the discrete norm of its degree.
ErrorRecord compute_errors(const SimplicialComplex& complex, const DualComplex& dual, int k,
                           const Cochain& u_h, const std::optional<Cochain>& rho_h);

struct ConvergenceOptions {
    int k = 0;
    MeshFamily family = MeshFamily::symmetric;
    std::vector<int> levels;
    std::uint64_t seed = 1;
    double alpha = kDefaultPerturbation;
    SolverConfig solver;
};

struct ConvergenceReport {
    int k = 0;
    MeshFamily family = MeshFamily::symmetric;
    std::uint64_t seed = 1;
    double alpha = kDefaultPerturbation;
    std::vector<ErrorRecord> records;

    std::vector<std::string> norms() const { return norm_names(k); }
    /// log(e_i / e_{i+1}) / log(h_i / h_{i+1}) for consecutive records.
    std::vector<double> rates(const std::string& norm) const;
    /// The rate between the last two records; NaN with fewer than two.
    double final_rate(const std::string& norm) const;
    const ErrorRecord* record_for_level(int level) const;
};

/// One solve per level, levels in ascending order.
ConvergenceReport run_convergence(const ConvergenceOptions& opts);

/// Parses "a..b" or a single level "a".
std::vector<int> parse_level_range(std::string_view text);

enum class ReportFormat { markdown, csv };
ReportFormat parse_report_format(std::string_view name);

/// Markdown: h as 2^-m, norms with 3 significant digits, rates with 2 decimals
/// and "--" on the first row. CSV: full precision.
std::string render_report(const ConvergenceReport& report, ReportFormat format);
/// Inverse of the CSV rendering (norm values and levels).
ConvergenceReport parse_csv_report(std::string_view text);

struct DiagnosticItem {
    std::string name;
    bool passed = true;
    /// True when the check had nothing to compare.
    bool vacuous = false;
    double value = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct DiagnosticsReport {
    int k = 0;
    std::vector<DiagnosticItem> items;
    bool all_passed() const;
};

/// Centroid condition, (Π - J) on constant and linear forms, and δ_h J = J δ.
DiagnosticsReport diagnostics(const SimplicialComplex& complex, const DualComplex& dual, int k);
std::string render_diagnostics(const DiagnosticsReport& report);

}  // namespace dec

namespace dec {

/// Invariants of the smooth-form layer: d∘d = 0, δ∘δ = 0, ⋆⋆ = ±1, pointwise
/// isometry of ⋆, triangle quadrature against a!b!/(a+b+2)!, and D R = R d on
/// a small mesh. Random inputs are drawn from the given seed.
std::vector<DiagnosticItem> forms_selftest(std::uint64_t seed = 1);

}  // namespace dec
