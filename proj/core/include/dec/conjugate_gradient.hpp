#pragma once

#include "dec/sparse_matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace dec {

enum class Preconditioner { none, jacobi };

struct SolverConfig {
    double tolerance = 1e-12;
    /// Unset means 50·√n + 1000 for an n×n system.
    std::optional<int> max_iterations;
    Preconditioner preconditioner = Preconditioner::jacobi;
    /// Remove the constant vector from right-hand side and solution.
    bool deflate_constants = false;
    /// Weights of the inner product in which the solution is made orthogonal
    /// to constants (e.g. the 0-form Hodge star). Empty means Euclidean.
    std::vector<double> deflation_weights;
    /// Record the CG energy functional ½xᵀMx − bᵀx at every iterate.
    bool track_energy = false;

    int resolved_max_iterations(int n) const;
};

struct SolveResult {
    std::vector<double> x;
    /// ‖b − Mx‖₂ / ‖b‖₂ recomputed from the returned x.
    double residual = 0.0;
    int iterations = 0;
    std::vector<double> energy_history;
};

/// Preconditioned conjugate gradients for symmetric positive (semi)definite M.
///
/// With `deflate_constants`, b is projected onto the range of a matrix whose
/// kernel is the constants and the returned x has zero weighted mean.
/// Throws InvalidArgument if M is not symmetric to 1e-12 relative and
/// SolverError if the tolerance is not reached within the iteration budget.
SolveResult cg_solve(const SparseMatrix& m, std::span<const double> b, const SolverConfig& cfg = {});

}  // namespace dec
