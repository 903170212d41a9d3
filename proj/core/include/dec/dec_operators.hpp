#pragma once

#include "dec/circumcentric_dual.hpp"
#include "dec/cochain.hpp"
#include "dec/forms.hpp"
#include "dec/simplicial_complex.hpp"
#include "dec/sparse_matrix.hpp"

#include <span>
#include <vector>

namespace dec {

/// ★w: the dual cochain with value a_σ w_σ on *σ.
std::vector<double> hodge_star_apply(const DualComplex& dual, const Cochain& w);
/// ★⁻¹: the primal k-cochain with value b_σ v_σ on σ.
Cochain inverse_hodge_star_apply(const DualComplex& dual, int k, std::span<const double> v);

/// δ_{h,k} = S_{k-1}⁻¹ D_{k-1}ᵀ S_k, shape |Δ_{k-1}| × |Δ_k|, for 1 ≤ k ≤ n.
SparseMatrix codifferential_matrix(const SimplicialComplex& complex, const DualComplex& dual, int k);

/// The same operator assembled row by row from the coface sets:
/// (δw)_σ = b_σ Σ_{τ ∈ 𝒜(σ)} ±a_τ w_τ.
SparseMatrix codifferential_stencil(const SimplicialComplex& complex, const DualComplex& dual,
                                    int k);

/// L = D_{k-1} δ_k + δ_{k+1} D_k, omitting terms that leave the complex.
SparseMatrix hodge_laplacian_matrix(const SimplicialComplex& complex, const DualComplex& dual,
                                    int k);

/// M = S_k L assembled as a sum of weighted Gram matrices; bitwise symmetric.
SparseMatrix symmetrized_laplacian(const SimplicialComplex& complex, const DualComplex& dual,
                                   int k);

/// ⟦u, v⟧ = Σ a_σ u_σ v_σ.
double discrete_inner(const DualComplex& dual, const Cochain& u, const Cochain& v);
double discrete_norm(const DualComplex& dual, const Cochain& u);
/// ⦀v⦀_* = (Σ b_σ v_σ²)^½ for dual values indexed by Δ_k.
double dual_discrete_norm(const DualComplex& dual, int k, std::span<const double> v);

/// Value of the lowest-order Whitney form W w at a point of triangle t,
/// as PolyForm-style components ({f}, {P, Q} or {R}).
/// Throws InvalidArgument when the point lies outside the triangle.
std::vector<double> whitney_evaluate(const SimplicialComplex& complex, const Cochain& w,
                                     int triangle, std::span<const double> point);

/// ‖W w‖_{L²(Ω)} by elementwise quadrature.
double l2_norm_whitney(const SimplicialComplex& complex, const Cochain& w);

/// Jω: (|σ|/|*σ|) ∫_{*σ} ⋆ω for every σ ∈ Δ_k.
Cochain j_interpolant(const SimplicialComplex& complex, const DualComplex& dual, const PolyForm& w);

/// (Π - J)ω.
Cochain pi_minus_j(const SimplicialComplex& complex, const DualComplex& dual, const PolyForm& w);

struct CommutingCheck {
    /// ⦀δ_h Jω - J δω⦀ over interior (k-1)-simplices.
    double residual = 0.0;
    /// ⦀Jω⦀ over all k-simplices.
    double reference = 0.0;
    /// Number of interior simplices compared.
    int checked = 0;
};

/// δ_h J = J δ on a k-form, k ≥ 1. The boundary dual cells are excluded:
/// there the identity holds only when the trace of ⋆ω vanishes.
CommutingCheck commuting_j_check(const SimplicialComplex& complex, const DualComplex& dual,
                                 const PolyForm& w);

}  // namespace dec
