#pragma once

#include "dec/geometry.hpp"
#include "dec/simplicial_complex.hpp"

#include <span>
#include <vector>

namespace dec {

/// Tolerance on the circumcenter's barycentric coordinates below which a
/// simplex is considered not well-centered.
inline constexpr double kWellCenteredTolerance = 1e-10;

/// Circumcentric dual of a well-centered simplicial complex.
///
/// The dual cell *σ of a k-simplex σ is stored as its flag pieces: for every
/// chain σ = σ_k ⊂ σ_{k+1} ⊂ … ⊂ σ_n the (n-k)-simplex spanned by the
/// circumcenters c(σ_k), …, c(σ_n). A piece is kept as the chain of simplex
/// indices, entry j being the index of σ_{k+j} in Δ_{k+j}.
class DualComplex {
public:
    int dim() const noexcept { return dim_; }

    const Point& circumcenter(int k, int i) const { return circumcenters_[at(k)][at(i)]; }
    double primal_volume(int k, int i) const { return primal_volume_[at(k)][at(i)]; }
    double dual_volume(int k, int i) const { return dual_volume_[at(k)][at(i)]; }

    /// a_σ = |*σ| / |σ|, the diagonal Hodge star weights of degree k.
    std::span<const double> ratio_a(int k) const { return ratio_a_[at(k)]; }
    /// b_σ = |σ| / |*σ|.
    std::span<const double> ratio_b(int k) const { return ratio_b_[at(k)]; }
    std::span<const double> primal_volumes(int k) const { return primal_volume_[at(k)]; }
    std::span<const double> dual_volumes(int k) const { return dual_volume_[at(k)]; }

    int piece_count(int k, int i) const;
    /// Chain of simplex indices of dimensions k, k+1, …, n.
    std::span<const int> piece(int k, int i, int p) const;
    /// The circumcenters spanning one piece.
    std::vector<Point> piece_points(int k, int i, int p) const;

    /// Total n-volume of the domain.
    double domain_volume() const noexcept { return domain_volume_; }

private:
    friend DualComplex build_dual(const SimplicialComplex& complex);

    static std::size_t at(int i) { return static_cast<std::size_t>(i); }

    int dim_ = 0;
    std::vector<std::vector<Point>> circumcenters_;
    std::vector<std::vector<double>> primal_volume_;
    std::vector<std::vector<double>> dual_volume_;
    std::vector<std::vector<double>> ratio_a_;
    std::vector<std::vector<double>> ratio_b_;
    std::vector<std::vector<int>> piece_offsets_;
    std::vector<std::vector<int>> piece_chains_;
    double domain_volume_ = 0.0;
};

struct SimplexRef {
    int dim;
    int index;
};

struct WellCenteredness {
    bool ok = true;
    std::vector<SimplexRef> offenders;
};

/// True iff every simplex of dimension ≥ 1 contains its circumcenter in its
/// relative interior (all barycentric coordinates > kWellCenteredTolerance).
WellCenteredness is_well_centered(const SimplicialComplex& complex);

/// Throws MeshError when the complex is not well-centered.
DualComplex build_dual(const SimplicialComplex& complex);

/// Union of the full-flag n-simplices [c(σ_0), …, c(σ_n)] through σ.
struct DiamondCell {
    Simplex owner;
    int index = 0;
    /// Each flag lists the simplex index for dimensions 0..n.
    std::vector<std::vector<int>> flags;
    double volume = 0.0;
};

std::vector<DiamondCell> diamond_cells(const SimplicialComplex& complex, const DualComplex& dual,
                                       int k);

/// Circumcenters spanning a full flag of a diamond cell.
std::vector<Point> flag_points(const DualComplex& dual, std::span<const int> flag);

struct CentroidCheck {
    bool ok = true;
    double max_deviation = 0.0;
    /// Number of interior simplices compared; zero means the check was vacuous.
    int checked = 0;
};

/// Compares, for every k-simplex not on the boundary, the vertex centroid of
/// σ with the volume-weighted centroid of *σ.
CentroidCheck check_centroid_condition(const SimplicialComplex& complex, const DualComplex& dual,
                                       int k, double tol);

}  // namespace dec
