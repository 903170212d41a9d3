#pragma once

#include "dec/geometry.hpp"
#include "dec/sparse_matrix.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace dec {

inline constexpr int kMaxSimplexVertices = 8;

/// An unoriented simplex identified by its strictly increasing vertex ids.
///
/// The default orientation is the ascending vertex order; every sign in the
/// library derives from it.
class Simplex {
public:
    Simplex() = default;
    Simplex(std::initializer_list<int> vertices);
    /// Sorts the ids; throws InvalidArgument on repeats or too many vertices.
    static Simplex from_vertices(std::span<const int> vertices);

    int dim() const noexcept { return count_ - 1; }
    int size() const noexcept { return count_; }
    int operator[](int i) const { return vertices_[static_cast<std::size_t>(i)]; }
    std::span<const int> vertices() const noexcept
    {
        return {vertices_.data(), static_cast<std::size_t>(count_)};
    }

    /// The face opposite the j-th vertex; it carries sign (-1)^j in ∂σ.
    Simplex face(int j) const;
    bool contains(const Simplex& other) const;

    friend bool operator==(const Simplex& a, const Simplex& b) noexcept
    {
        return std::ranges::equal(a.vertices(), b.vertices());
    }
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept
    {
        return std::lexicographical_compare_three_way(a.vertices().begin(), a.vertices().end(),
                                                      b.vertices().begin(), b.vertices().end());
    }

private:
    std::array<int, kMaxSimplexVertices> vertices_{};
    int count_ = 0;
};

/// A neighbouring simplex together with the coefficient linking it to the
/// query simplex in the boundary map.
struct SignedIncidence {
    Simplex neighbor;
    int index;
    int sign;
};

/// Conforming simplicial complex of an n-dimensional mesh.
///
/// Immutable after construction. Simplices of each dimension are stored in
/// lexicographic order and vertex simplex i is the vertex with id i.
class SimplicialComplex {
public:
    int ambient_dim() const noexcept { return ambient_dim_; }
    /// Dimension of the top cells.
    int dim() const noexcept { return ambient_dim_; }

    const std::vector<Point>& coords() const noexcept { return coords_; }
    const Point& point(int vertex) const { return coords_[static_cast<std::size_t>(vertex)]; }
    std::vector<Point> points(const Simplex& s) const;

    std::span<const Simplex> simplices(int k) const;
    int count(int k) const { return static_cast<int>(simplices(k).size()); }
    const Simplex& simplex(int k, int i) const { return simplices(k)[static_cast<std::size_t>(i)]; }

    std::optional<int> find(const Simplex& s) const;
    /// Throws InvalidArgument when s is not in the complex.
    int index_of(const Simplex& s) const;

    bool is_boundary(int k, int i) const;
    std::span<const char> boundary_flags(int k) const;

    /// 𝒜(σ): the (k+1)-simplices having σ as a face, with the sign of σ in ∂τ.
    std::vector<SignedIncidence> cofaces(const Simplex& s) const;
    /// ℬ(τ): the faces of τ with their signs in ∂τ.
    std::vector<SignedIncidence> faces(const Simplex& s) const;

    /// Matrix of the coboundary dᵏ, shape |Δ_{k+1}| × |Δ_k|.
    const SparseMatrix& coboundary(int k) const;

    /// Maximum simplex diameter.
    double mesh_size() const noexcept { return mesh_size_; }

private:
    friend SimplicialComplex build_complex(std::vector<Point> coords,
                                           std::span<const std::vector<int>> cells);

    int ambient_dim_ = 0;
    std::vector<Point> coords_;
    std::vector<std::vector<Simplex>> simplices_;
    std::vector<std::vector<char>> boundary_;
    std::vector<SparseMatrix> coboundary_;
    std::vector<SparseMatrix> coboundary_transpose_;
    double mesh_size_ = 0.0;
};

/// Builds the complex of all subsimplices of the given top cells.
///
/// Throws MeshError for out-of-range or unreferenced vertices, repeated
/// cells, cells of zero volume and (n-1)-faces shared by more than two cells.
SimplicialComplex build_complex(std::vector<Point> coords, std::span<const std::vector<int>> cells);

/// Free-function form of SimplicialComplex::coboundary, returning a copy.
SparseMatrix coboundary_matrix(const SimplicialComplex& complex, int k);
std::vector<SignedIncidence> cofaces(const SimplicialComplex& complex, const Simplex& s);
std::vector<SignedIncidence> faces(const SimplicialComplex& complex, const Simplex& s);

}  // namespace dec
