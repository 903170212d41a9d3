#pragma once

#include "dec/circumcentric_dual.hpp"
#include "dec/cochain.hpp"
#include "dec/forms.hpp"
#include "dec/simplicial_complex.hpp"

#include <span>
#include <vector>

namespace dec {

/// ∫_σ ω for a k-form over the oriented k-simplex with the given vertex order.
///
/// k = 0 evaluates at the point; k = 1 integrates (P, Q)·(x₁ - x₀) along the
/// segment; k = 2 integrates R with the sign of the vertex order's orientation.
double integrate_over_simplex(const PolyForm& w, std::span<const Point> points);

/// ∫ f dA over the triangle, ignoring orientation.
double integrate_unsigned(const Poly2& f, std::span<const Point> triangle);

/// Primal de Rham map: (Rω)_σ = ∫_σ ω over each k-simplex in ascending orientation.
Cochain de_rham(const SimplicialComplex& complex, const PolyForm& w);

/// Dual de Rham map of a (n-k)-form: ∫_{*σ} ω for every σ ∈ Δ_k.
///
/// *σ is oriented so that σ followed by *σ is positive: vertex duals are
/// counterclockwise, the dual of an edge with tangent t runs along t rotated
/// by +90°, and the dual point of a triangle carries the triangle's
/// orientation sign.
std::vector<double> de_rham_dual(const SimplicialComplex& complex, const DualComplex& dual,
                                 const PolyForm& w);

}  // namespace dec
