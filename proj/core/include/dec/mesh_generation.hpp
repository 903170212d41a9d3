#pragma once

#include "dec/geometry.hpp"
#include "dec/simplicial_complex.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dec {

enum class MeshFamily { symmetric, perturbed };

std::string_view to_string(MeshFamily f);
/// Accepts "symmetric" or "perturbed"; throws InvalidArgument otherwise.
MeshFamily parse_mesh_family(std::string_view name);

inline constexpr double kDefaultPerturbation = 0.15;

struct MeshFamilySpec {
    MeshFamily family = MeshFamily::symmetric;
    /// h = 2^-level.
    int level = 1;
    std::uint64_t seed = 1;
    /// Displacement radius as a fraction of h.
    double alpha = kDefaultPerturbation;
};

/// Vertex coordinates and top cells before complex construction.
struct MeshData {
    std::vector<Point> coords;
    std::vector<std::vector<int>> cells;
};

/// Uniform refinement of the triangle (0,0), (1,0), (1/2, √3/2) into 4^m
/// equilateral triangles of side 2^-m.
///
/// With N = 2^m, vertex (i, j), 0 ≤ i ≤ N - j, sits at ((i + j/2)/N, j√3/(2N))
/// and vertices are numbered row by row (j), then by i.
MeshData symmetric_mesh_data(int m);
SimplicialComplex symmetric_mesh(int m);

/// Symmetric mesh with interior vertices randomly displaced.
///
/// Interior vertices are visited in increasing id. Each draws a point
/// uniformly from the disk of radius α·2^-m (r = R√u₁, θ = 2πu₂) and keeps it
/// if every incident triangle stays well-centered with its orientation;
/// otherwise the radius is halved and the draw repeated, at most 20 times.
/// Uniforms come from counter_uniform(seed, perturbation_counter(v, attempt, draw)).
/// Throws MeshError when a vertex cannot be placed.
MeshData perturbed_mesh_data(int m, std::uint64_t seed, double alpha = kDefaultPerturbation);
SimplicialComplex perturbed_mesh(int m, std::uint64_t seed, double alpha = kDefaultPerturbation);

MeshData generate_mesh_data(const MeshFamilySpec& spec);
SimplicialComplex generate_mesh(const MeshFamilySpec& spec);

/// SplitMix64 output (finalizer) function.
std::uint64_t splitmix64_mix(std::uint64_t z) noexcept;

/// Counter-based uniform in [0, 1):
///   z = seed + 0x9E3779B97F4A7C15 · (counter + 1)
///   u = (splitmix64_mix(z) >> 11) · 2^-53
double counter_uniform(std::uint64_t seed, std::uint64_t counter) noexcept;

/// counter = vertex · 2^32 + attempt · 2^8 + draw.
std::uint64_t perturbation_counter(int vertex, int attempt, int draw) noexcept;

/// Text format: `n V C`, V lines of n coordinates, C lines of n+1 vertex ids.
/// `#` starts a comment. Coordinates are written with 17 significant digits.
void write_mesh(const SimplicialComplex& complex, const std::filesystem::path& path);
void write_mesh(const MeshData& mesh, const std::filesystem::path& path);
std::string format_mesh(const MeshData& mesh);
/// Throws FormatError for malformed input and MeshError for invalid meshes.
MeshData parse_mesh(std::string_view text);
SimplicialComplex read_mesh(const std::filesystem::path& path);

/// Coordinates and top cells of an existing complex.
MeshData mesh_data(const SimplicialComplex& complex);

}  // namespace dec
