#include "dec/mesh_generation.hpp"

#include "dec/error.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

namespace dec {

std::string_view to_string(MeshFamily f)
{
    return f == MeshFamily::symmetric ? "symmetric" : "perturbed";
}

MeshFamily parse_mesh_family(std::string_view name)
{
    if (name == "symmetric")
        return MeshFamily::symmetric;
    if (name == "perturbed")
        return MeshFamily::perturbed;
    throw InvalidArgument(fmt::format("unknown mesh family '{}'", name));
}

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double counter_uniform(std::uint64_t seed, std::uint64_t counter) noexcept
{
    const std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (counter + 1);
    return static_cast<double>(splitmix64_mix(z) >> 11) * 0x1.0p-53;
}

std::uint64_t perturbation_counter(int vertex, int attempt, int draw) noexcept
{
    return (static_cast<std::uint64_t>(vertex) << 32) |
           (static_cast<std::uint64_t>(attempt) << 8) | static_cast<std::uint64_t>(draw);
}

namespace {

int vertex_id(int n, int i, int j)
{
    // Rows 0..j-1 hold (n+1) + n + … + (n-j+2) vertices.
    return j * (n + 1) - j * (j - 1) / 2 + i;
}

void check_level(int m)
{
    if (m < 1 || m > 14)
        throw InvalidArgument(fmt::format("mesh level must lie in [1, 14], got {}", m));
}

double signed_det(const Point& a, const Point& b, const Point& c)
{
    return (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
}

// Acute with a margin matching the well-centeredness tolerance, and same orientation.
bool triangle_acceptable(const Point& a, const Point& b, const Point& c, double orientation)
{
    const double det = signed_det(a, b, c);
    if (det * orientation <= 0.0)
        return false;
    const auto bary = circumcenter_barycentric(std::vector<Point>{a, b, c});
    for (double x : bary)
        if (!(x > 1e-10))
            return false;
    return true;
}

}  // namespace

MeshData symmetric_mesh_data(int m)
{
    check_level(m);
    const int n = 1 << m;
    const double s3 = std::sqrt(3.0);
    MeshData mesh;
    mesh.coords.reserve(static_cast<std::size_t>((n + 1) * (n + 2) / 2));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n - j; ++i)
            mesh.coords.push_back({(i + 0.5 * j) / n, j * s3 / (2.0 * n)});
    mesh.cells.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n - j; ++i) {
            mesh.cells.push_back({vertex_id(n, i, j), vertex_id(n, i + 1, j), vertex_id(n, i, j + 1)});
            if (i < n - j - 1)
                mesh.cells.push_back(
                    {vertex_id(n, i + 1, j), vertex_id(n, i, j + 1), vertex_id(n, i + 1, j + 1)});
        }
    }
    return mesh;
}

SimplicialComplex symmetric_mesh(int m)
{
    auto mesh = symmetric_mesh_data(m);
    return build_complex(std::move(mesh.coords), mesh.cells);
}

MeshData perturbed_mesh_data(int m, std::uint64_t seed, double alpha)
{
    if (!(alpha >= 0.0 && alpha < 0.5))
        throw InvalidArgument(fmt::format("perturbation amplitude must lie in [0, 0.5), got {}", alpha));
    MeshData mesh = symmetric_mesh_data(m);
    if (alpha == 0.0)
        return mesh;

    const int n = 1 << m;
    const double h = 1.0 / n;
    const auto nv = mesh.coords.size();
    std::vector<std::vector<int>> incident(nv);
    std::vector<double> orientation(mesh.cells.size());
    for (std::size_t c = 0; c < mesh.cells.size(); ++c) {
        const auto& cell = mesh.cells[c];
        for (int v : cell)
            incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(c));
        orientation[c] = signed_det(mesh.coords[static_cast<std::size_t>(cell[0])],
                                    mesh.coords[static_cast<std::size_t>(cell[1])],
                                    mesh.coords[static_cast<std::size_t>(cell[2])]) > 0.0
                             ? 1.0
                             : -1.0;
    }

    constexpr int kMaxRetries = 20;
    for (int j = 1; j < n; ++j) {
        for (int i = 1; i < n - j; ++i) {
            const int v = vertex_id(n, i, j);
            const auto vv = static_cast<std::size_t>(v);
            const Point original = mesh.coords[vv];
            double radius = alpha * h;
            bool placed = false;
            for (int attempt = 0; attempt <= kMaxRetries && !placed; ++attempt) {
                const double u1 = counter_uniform(seed, perturbation_counter(v, attempt, 0));
                const double u2 = counter_uniform(seed, perturbation_counter(v, attempt, 1));
                const double r = radius * std::sqrt(u1);
                const double theta = 2.0 * std::numbers::pi * u2;
                mesh.coords[vv] = {original[0] + r * std::cos(theta), original[1] + r * std::sin(theta)};
                placed = true;
                for (int c : incident[vv]) {
                    const auto& cell = mesh.cells[static_cast<std::size_t>(c)];
                    if (!triangle_acceptable(mesh.coords[static_cast<std::size_t>(cell[0])],
                                             mesh.coords[static_cast<std::size_t>(cell[1])],
                                             mesh.coords[static_cast<std::size_t>(cell[2])],
                                             orientation[static_cast<std::size_t>(c)])) {
                        placed = false;
                        break;
                    }
                }
                radius *= 0.5;
            }
            if (!placed)
                throw MeshError(fmt::format(
                    "perturbed_mesh: vertex {} could not be displaced while keeping the mesh "
                    "well-centered after {} retries",
                    v, kMaxRetries));
        }
    }
    return mesh;
}

SimplicialComplex perturbed_mesh(int m, std::uint64_t seed, double alpha)
{
    auto mesh = perturbed_mesh_data(m, seed, alpha);
    return build_complex(std::move(mesh.coords), mesh.cells);
}

MeshData generate_mesh_data(const MeshFamilySpec& spec)
{
    return spec.family == MeshFamily::symmetric ? symmetric_mesh_data(spec.level)
                                                : perturbed_mesh_data(spec.level, spec.seed, spec.alpha);
}

SimplicialComplex generate_mesh(const MeshFamilySpec& spec)
{
    auto mesh = generate_mesh_data(spec);
    return build_complex(std::move(mesh.coords), mesh.cells);
}

}  // namespace dec
