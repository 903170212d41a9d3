#include "dec/simplicial_complex.hpp"

#include "dec/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace dec {

Simplex::Simplex(std::initializer_list<int> vertices)
{
    *this = from_vertices(std::span<const int>(vertices.begin(), vertices.size()));
}

Simplex Simplex::from_vertices(std::span<const int> vertices)
{
    if (vertices.empty() || vertices.size() > kMaxSimplexVertices)
        throw InvalidArgument("Simplex: vertex count out of range");
    Simplex s;
    s.count_ = static_cast<int>(vertices.size());
    std::copy(vertices.begin(), vertices.end(), s.vertices_.begin());
    std::sort(s.vertices_.begin(), s.vertices_.begin() + s.count_);
    if (std::adjacent_find(s.vertices_.begin(), s.vertices_.begin() + s.count_) !=
        s.vertices_.begin() + s.count_)
        throw InvalidArgument("Simplex: repeated vertex");
    return s;
}

Simplex Simplex::face(int j) const
{
    if (j < 0 || j >= count_ || count_ == 1)
        throw InvalidArgument("Simplex::face: index out of range");
    Simplex f;
    f.count_ = count_ - 1;
    for (int i = 0, o = 0; i < count_; ++i)
        if (i != j)
            f.vertices_[static_cast<std::size_t>(o++)] = vertices_[static_cast<std::size_t>(i)];
    return f;
}

bool Simplex::contains(const Simplex& other) const
{
    return std::includes(vertices().begin(), vertices().end(), other.vertices().begin(),
                         other.vertices().end());
}

std::vector<Point> SimplicialComplex::points(const Simplex& s) const
{
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(s.size()));
    for (int v : s.vertices())
        pts.push_back(point(v));
    return pts;
}

std::span<const Simplex> SimplicialComplex::simplices(int k) const
{
    if (k < 0 || k > ambient_dim_)
        throw InvalidArgument(fmt::format("simplices: dimension {} out of range", k));
    return simplices_[static_cast<std::size_t>(k)];
}

std::optional<int> SimplicialComplex::find(const Simplex& s) const
{
    if (s.dim() < 0 || s.dim() > ambient_dim_)
        return std::nullopt;
    const auto& list = simplices_[static_cast<std::size_t>(s.dim())];
    const auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s)
        return std::nullopt;
    return static_cast<int>(it - list.begin());
}

int SimplicialComplex::index_of(const Simplex& s) const
{
    if (auto i = find(s))
        return *i;
    throw InvalidArgument("simplex is not in the complex");
}

bool SimplicialComplex::is_boundary(int k, int i) const
{
    return boundary_flags(k)[static_cast<std::size_t>(i)] != 0;
}

std::span<const char> SimplicialComplex::boundary_flags(int k) const
{
    if (k < 0 || k > ambient_dim_)
        throw InvalidArgument("boundary_flags: dimension out of range");
    return boundary_[static_cast<std::size_t>(k)];
}

std::vector<SignedIncidence> SimplicialComplex::cofaces(const Simplex& s) const
{
    const int i = index_of(s);
    const int k = s.dim();
    std::vector<SignedIncidence> out;
    if (k == ambient_dim_)
        return out;
    const auto& t = coboundary_transpose_[static_cast<std::size_t>(k)];
    for (int p = t.row_offsets()[i]; p < t.row_offsets()[i + 1]; ++p) {
        const int j = t.column_indices()[p];
        out.push_back({simplex(k + 1, j), j, static_cast<int>(t.values()[p])});
    }
    return out;
}

std::vector<SignedIncidence> SimplicialComplex::faces(const Simplex& s) const
{
    index_of(s);
    std::vector<SignedIncidence> out;
    if (s.dim() == 0)
        return out;
    for (int j = 0; j < s.size(); ++j) {
        const Simplex f = s.face(j);
        out.push_back({f, index_of(f), (j % 2 == 0) ? 1 : -1});
    }
    return out;
}

const SparseMatrix& SimplicialComplex::coboundary(int k) const
{
    if (k < 0 || k >= ambient_dim_)
        throw InvalidArgument(fmt::format("coboundary: degree {} out of range", k));
    return coboundary_[static_cast<std::size_t>(k)];
}

SimplicialComplex build_complex(std::vector<Point> coords, std::span<const std::vector<int>> cells)
{
    if (coords.empty() || cells.empty())
        throw MeshError("build_complex: empty mesh");
    const int n = static_cast<int>(coords[0].size());
    if (n < 1 || n + 1 > kMaxSimplexVertices)
        throw MeshError(fmt::format("build_complex: unsupported ambient dimension {}", n));
    for (const auto& p : coords)
        if (static_cast<int>(p.size()) != n)
            throw MeshError("build_complex: coordinates of mixed dimension");

    const int num_vertices = static_cast<int>(coords.size());
    std::vector<Simplex> top;
    top.reserve(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto& cell = cells[c];
        if (static_cast<int>(cell.size()) != n + 1)
            throw MeshError(fmt::format("build_complex: cell {} has {} vertices, expected {}", c,
                                        cell.size(), n + 1));
        for (int v : cell)
            if (v < 0 || v >= num_vertices)
                throw MeshError(fmt::format("build_complex: cell {} references vertex {}", c, v));
        Simplex s;
        try {
            s = Simplex::from_vertices(cell);
        } catch (const InvalidArgument&) {
            throw MeshError(fmt::format("build_complex: cell {} repeats a vertex", c));
        }
        std::vector<Point> pts;
        for (int v : s.vertices())
            pts.push_back(coords[static_cast<std::size_t>(v)]);
        const double h = diameter(pts);
        if (!(primal_volume(pts) > 1e-12 * std::pow(h, n)))
            throw MeshError(fmt::format("build_complex: cell {} is degenerate", c));
        top.push_back(s);
    }

    std::vector<Simplex> sorted_top = top;
    std::sort(sorted_top.begin(), sorted_top.end());
    if (auto it = std::adjacent_find(sorted_top.begin(), sorted_top.end());
        it != sorted_top.end())
        throw MeshError("build_complex: duplicate cell");

    SimplicialComplex k;
    k.ambient_dim_ = n;
    k.simplices_.assign(static_cast<std::size_t>(n) + 1, {});
    for (const auto& s : sorted_top) {
        const unsigned subsets = 1u << static_cast<unsigned>(n + 1);
        for (unsigned mask = 1; mask < subsets; ++mask) {
            std::array<int, kMaxSimplexVertices> buf{};
            int m = 0;
            for (int j = 0; j <= n; ++j)
                if (mask & (1u << static_cast<unsigned>(j)))
                    buf[static_cast<std::size_t>(m++)] = s[j];
            k.simplices_[static_cast<std::size_t>(m - 1)].push_back(
                Simplex::from_vertices(std::span<const int>(buf.data(), static_cast<std::size_t>(m))));
        }
    }
    for (auto& list : k.simplices_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    if (static_cast<int>(k.simplices_[0].size()) != num_vertices)
        throw MeshError("build_complex: some vertices are not used by any cell");

    k.coords_ = std::move(coords);

    for (int d = 0; d < n; ++d) {
        std::vector<Triplet> trips;
        const auto& upper = k.simplices_[static_cast<std::size_t>(d) + 1];
        for (int t = 0; t < static_cast<int>(upper.size()); ++t) {
            const Simplex& tau = upper[static_cast<std::size_t>(t)];
            for (int j = 0; j <= d + 1; ++j)
                trips.push_back({t, *k.find(tau.face(j)), (j % 2 == 0) ? 1.0 : -1.0});
        }
        k.coboundary_.push_back(SparseMatrix::from_triplets(
            static_cast<int>(upper.size()), static_cast<int>(k.simplices_[static_cast<std::size_t>(d)].size()),
            std::move(trips)));
        k.coboundary_transpose_.push_back(transpose(k.coboundary_.back()));
    }

    k.boundary_.resize(static_cast<std::size_t>(n) + 1);
    for (int d = 0; d <= n; ++d)
        k.boundary_[static_cast<std::size_t>(d)].assign(k.simplices_[static_cast<std::size_t>(d)].size(), 0);
    const auto& facet_cofaces = k.coboundary_transpose_[static_cast<std::size_t>(n) - 1];
    for (int f = 0; f < k.count(n - 1); ++f) {
        const int count = facet_cofaces.row_offsets()[f + 1] - facet_cofaces.row_offsets()[f];
        if (count > 2)
            throw MeshError(fmt::format("build_complex: non-manifold face with {} cofaces", count));
        if (count != 1)
            continue;
        const Simplex& facet = k.simplex(n - 1, f);
        const unsigned subsets = 1u << static_cast<unsigned>(n);
        for (unsigned mask = 1; mask < subsets; ++mask) {
            std::array<int, kMaxSimplexVertices> buf{};
            int m = 0;
            for (int j = 0; j < n; ++j)
                if (mask & (1u << static_cast<unsigned>(j)))
                    buf[static_cast<std::size_t>(m++)] = facet[j];
            const Simplex sub =
                Simplex::from_vertices(std::span<const int>(buf.data(), static_cast<std::size_t>(m)));
            k.boundary_[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(*k.find(sub))] = 1;
        }
    }

    for (const auto& s : k.simplices_[static_cast<std::size_t>(n)])
        k.mesh_size_ = std::max(k.mesh_size_, diameter(k.points(s)));
    return k;
}

SparseMatrix coboundary_matrix(const SimplicialComplex& complex, int k)
{
    return complex.coboundary(k);
}

std::vector<SignedIncidence> cofaces(const SimplicialComplex& complex, const Simplex& s)
{
    return complex.cofaces(s);
}

std::vector<SignedIncidence> faces(const SimplicialComplex& complex, const Simplex& s)
{
    return complex.faces(s);
}

}  // namespace dec
