// declab: convergence lab for the DEC Hodge-Laplacian.
//
// Exit codes: 0 success, 1 usage or other error, 2 solver failure,
// 3 mesh generation failure.

#include "dec/circumcentric_dual.hpp"
#include "dec/dec_operators.hpp"
#include "dec/error.hpp"
#include "dec/experiment.hpp"
#include "dec/mesh_generation.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitError = 1;
constexpr int kExitSolver = 2;
constexpr int kExitMesh = 3;

struct MeshOptions {
    std::string family = "symmetric";
    int level = 3;
    std::uint64_t seed = 1;
    double alpha = dec::kDefaultPerturbation;
    std::string mesh_file;

    void add_to(CLI::App* cmd, bool allow_file)
    {
        cmd->add_option("--family", family, "Mesh family")
            ->check(CLI::IsMember({"symmetric", "perturbed"}))
            ->capture_default_str();
        cmd->add_option("--level", level, "Refinement level m (h = 2^-m)")
            ->check(CLI::Range(1, 14))
            ->capture_default_str();
        cmd->add_option("--seed", seed, "Perturbation seed")->capture_default_str();
        cmd->add_option("--alpha", alpha, "Perturbation radius as a fraction of h")
            ->check(CLI::Range(0.0, 0.4999))
            ->capture_default_str();
        if (allow_file)
            cmd->add_option("--mesh", mesh_file, "Read the mesh from a file instead")
                ->check(CLI::ExistingFile);
    }

    dec::SimplicialComplex build() const
    {
        if (!mesh_file.empty())
            return dec::read_mesh(mesh_file);
        return dec::generate_mesh({dec::parse_mesh_family(family), level, seed, alpha});
    }
};

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw dec::FormatError(fmt::format("cannot open '{}' for writing", path));
    f << text;
}

std::string coordinate_dump(const std::string& name, const dec::SparseMatrix& m)
{
    std::string out = fmt::format("# {} {} {} {}\n", name, m.rows(), m.cols(), m.nnz());
    for (const auto& t : m.to_triplets())
        out += fmt::format("{} {} {:.17g}\n", t.row, t.col, t.value);
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"DEC Hodge-Laplacian convergence lab"};
    app.require_subcommand(1);

    // convergence
    auto* conv = app.add_subcommand("convergence", "Run a convergence study and print the error table");
    int conv_k = 0;
    std::string conv_family = "symmetric";
    std::string conv_levels = "2..6";
    std::uint64_t conv_seed = 1;
    double conv_alpha = dec::kDefaultPerturbation;
    std::string conv_format = "markdown";
    std::string conv_out;
    std::optional<double> solver_tol;
    std::optional<int> solver_maxit;
    conv->add_option("--k", conv_k, "Form degree")->check(CLI::Range(0, 2))->capture_default_str();
    conv->add_option("--family", conv_family, "Mesh family")
        ->check(CLI::IsMember({"symmetric", "perturbed"}))
        ->capture_default_str();
    conv->add_option("--levels", conv_levels, "Level range a..b")->capture_default_str();
    conv->add_option("--seed", conv_seed, "Perturbation seed")->capture_default_str();
    conv->add_option("--alpha", conv_alpha, "Perturbation radius as a fraction of h")
        ->check(CLI::Range(0.0, 0.4999))
        ->capture_default_str();
    conv->add_option("--format", conv_format, "Output format")
        ->check(CLI::IsMember({"markdown", "csv"}))
        ->capture_default_str();
    conv->add_option("--out", conv_out, "Output file (stdout if omitted)");
    conv->add_option("--solver-tol", solver_tol, "Relative residual tolerance of CG");
    conv->add_option("--solver-maxit", solver_maxit, "Iteration limit of CG");

    // diagnostics
    auto* diag = app.add_subcommand("diagnostics", "Centroid, kernel and commuting-property checks");
    MeshOptions diag_mesh;
    int diag_k = 1;
    diag_mesh.add_to(diag, true);
    diag->add_option("--k", diag_k, "Form degree")->check(CLI::Range(0, 2))->capture_default_str();

    // gen-mesh
    auto* gen = app.add_subcommand("gen-mesh", "Write a generated mesh in the text mesh format");
    MeshOptions gen_mesh;
    std::string gen_out;
    gen_mesh.add_to(gen, false);
    gen->add_option("--out", gen_out, "Output file (stdout if omitted)");

    // dual-report
    auto* dual_cmd = app.add_subcommand("dual-report", "CSV of primal and dual volumes per simplex");
    MeshOptions dual_mesh;
    std::string dual_out;
    dual_mesh.add_to(dual_cmd, true);
    dual_cmd->add_option("--out", dual_out, "Output file (stdout if omitted)");

    // dump-operators
    auto* dump = app.add_subcommand("dump-operators", "Coordinate-format dump of the assembled operators");
    MeshOptions dump_mesh;
    int dump_k = 0;
    std::string dump_out;
    dump_mesh.add_to(dump, true);
    dump->add_option("--k", dump_k, "Form degree")->check(CLI::Range(0, 2))->capture_default_str();
    dump->add_option("--out", dump_out, "Output file (stdout if omitted)");

    // selftest-forms
    auto* selftest = app.add_subcommand("selftest-forms", "Check the smooth-form invariants");
    std::uint64_t selftest_seed = 1;
    selftest->add_option("--seed", selftest_seed, "Seed of the random forms")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (conv->parsed()) {
            dec::ConvergenceOptions opts;
            opts.k = conv_k;
            opts.family = dec::parse_mesh_family(conv_family);
            opts.levels = dec::parse_level_range(conv_levels);
            opts.seed = conv_seed;
            opts.alpha = conv_alpha;
            if (solver_tol)
                opts.solver.tolerance = *solver_tol;
            opts.solver.max_iterations = solver_maxit;
            const auto report = dec::run_convergence(opts);
            emit(dec::render_report(report, dec::parse_report_format(conv_format)), conv_out);
        } else if (diag->parsed()) {
            const auto complex = diag_mesh.build();
            const auto dual = dec::build_dual(complex);
            const auto rep = dec::diagnostics(complex, dual, diag_k);
            emit(dec::render_diagnostics(rep), "");
        } else if (gen->parsed()) {
            emit(dec::format_mesh(dec::generate_mesh_data(
                     {dec::parse_mesh_family(gen_mesh.family), gen_mesh.level, gen_mesh.seed, gen_mesh.alpha})),
                 gen_out);
        } else if (dual_cmd->parsed()) {
            const auto complex = dual_mesh.build();
            const auto dual = dec::build_dual(complex);
            std::string out = "dim,simplex_id,primal_volume,dual_volume,ratio_a,is_boundary\n";
            for (int k = 0; k <= complex.dim(); ++k)
                for (int i = 0; i < complex.count(k); ++i)
                    out += fmt::format("{},{},{:.17g},{:.17g},{:.17g},{}\n", k, i,
                                       dual.primal_volume(k, i), dual.dual_volume(k, i),
                                       dual.ratio_a(k)[static_cast<std::size_t>(i)],
                                       complex.is_boundary(k, i) ? 1 : 0);
            emit(out, dual_out);
        } else if (dump->parsed()) {
            const auto complex = dump_mesh.build();
            const auto dual = dec::build_dual(complex);
            const int n = complex.dim();
            std::string out;
            if (dump_k < n)
                out += coordinate_dump(fmt::format("coboundary_{}", dump_k), complex.coboundary(dump_k));
            if (dump_k >= 1)
                out += coordinate_dump(fmt::format("codifferential_{}", dump_k),
                                       dec::codifferential_matrix(complex, dual, dump_k));
            out += coordinate_dump(fmt::format("hodge_laplacian_{}", dump_k),
                                   dec::hodge_laplacian_matrix(complex, dual, dump_k));
            out += coordinate_dump(fmt::format("symmetrized_laplacian_{}", dump_k),
                                   dec::symmetrized_laplacian(complex, dual, dump_k));
            emit(out, dump_out);
        } else if (selftest->parsed()) {
            bool ok = true;
            for (const auto& item : dec::forms_selftest(selftest_seed)) {
                fmt::print("[{}] {}: value={:.3e} threshold={:.1e} ({})\n", item.passed ? "PASS" : "FAIL",
                           item.name, item.value, item.threshold, item.detail);
                ok = ok && item.passed;
            }
            return ok ? 0 : kExitError;
        }
    } catch (const dec::SolverError& e) {
        fmt::print(stderr, "solver failure: {}\n", e.what());
        return kExitSolver;
    } catch (const dec::MeshError& e) {
        fmt::print(stderr, "mesh failure: {}\n", e.what());
        return kExitMesh;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitError;
    }
    return 0;
}
