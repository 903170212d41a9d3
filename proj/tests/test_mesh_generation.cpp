#include "dec/circumcentric_dual.hpp"
#include "dec/error.hpp"
#include "dec/mesh_generation.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

using namespace dec;

TEST(SymmetricMesh, CountsAndEdgeLengths)
{
    for (int m = 1; m <= 5; ++m) {
        const int n = 1 << m;
        const auto k = symmetric_mesh(m);
        EXPECT_EQ(k.count(0), (n + 1) * (n + 2) / 2);
        EXPECT_EQ(k.count(1), 3 * n * (n + 1) / 2);
        EXPECT_EQ(k.count(2), n * n);
        for (const auto& e : k.simplices(1))
            EXPECT_NEAR(distance(k.point(e[0]), k.point(e[1])), 1.0 / n, 1e-15);
        EXPECT_TRUE(is_well_centered(k).ok);
    }
    EXPECT_EQ(symmetric_mesh(1).count(0), 6);
    EXPECT_EQ(symmetric_mesh(1).count(2), 4);
}

TEST(SymmetricMesh, LevelRange)
{
    EXPECT_THROW(symmetric_mesh(0), InvalidArgument);
    EXPECT_THROW(symmetric_mesh_data(15), InvalidArgument);
}

TEST(PerturbedMesh, ZeroAmplitudeIsSymmetric)
{
    const auto a = perturbed_mesh_data(3, 11, 0.0);
    const auto b = symmetric_mesh_data(3);
    EXPECT_EQ(a.coords, b.coords);
    EXPECT_EQ(a.cells, b.cells);
    EXPECT_THROW(perturbed_mesh_data(3, 1, 0.5), InvalidArgument);
    EXPECT_THROW(perturbed_mesh_data(3, 1, -0.1), InvalidArgument);
}

TEST(PerturbedMesh, DisplacementsAreBoundedAndInteriorOnly)
{
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const auto sym = symmetric_mesh_data(3);
        const auto per = perturbed_mesh_data(3, seed);
        const auto k = build_complex(per.coords, per.cells);
        EXPECT_TRUE(is_well_centered(k).ok);
        int moved = 0;
        for (std::size_t v = 0; v < sym.coords.size(); ++v) {
            const double d = distance(sym.coords[v], per.coords[v]);
            EXPECT_LE(d, kDefaultPerturbation / 8.0 + 1e-15);
            if (k.is_boundary(0, static_cast<int>(v)))
                EXPECT_EQ(d, 0.0);
            else if (d > 0.0)
                ++moved;
        }
        EXPECT_GT(moved, 0);
    }
}

TEST(PerturbedMesh, Deterministic)
{
    EXPECT_EQ(perturbed_mesh_data(4, 7).coords, perturbed_mesh_data(4, 7).coords);
    EXPECT_NE(perturbed_mesh_data(4, 7).coords, perturbed_mesh_data(4, 8).coords);
    const MeshFamilySpec spec{MeshFamily::perturbed, 4, 7, kDefaultPerturbation};
    EXPECT_EQ(generate_mesh_data(spec).coords, perturbed_mesh_data(4, 7).coords);
}

TEST(PerturbedMesh, WellCenteredAcrossLevels)
{
    for (int m = 1; m <= 6; ++m)
        EXPECT_TRUE(is_well_centered(perturbed_mesh(m, 1)).ok) << "level " << m;
}

TEST(CounterRng, UniformRangeAndIndependence)
{
    double lo = 1.0, hi = 0.0, mean = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double u = counter_uniform(42, static_cast<std::uint64_t>(i));
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        mean += u / n;
    }
    EXPECT_GE(lo, 0.0);
    EXPECT_LT(hi, 1.0);
    EXPECT_NEAR(mean, 0.5, 0.01);
    EXPECT_EQ(counter_uniform(1, 5), counter_uniform(1, 5));
    EXPECT_NE(counter_uniform(1, 5), counter_uniform(2, 5));
    EXPECT_EQ(perturbation_counter(3, 2, 1), (std::uint64_t{3} << 32) | (2u << 8) | 1u);
    // Reference values of the SplitMix64 finalizer.
    EXPECT_EQ(splitmix64_mix(0), 0u);
    EXPECT_EQ(splitmix64_mix(0x9E3779B97F4A7C15ULL), 0xE220A8397B1DCDAFULL);
}

TEST(MeshFamily, NamesRoundTrip)
{
    EXPECT_EQ(parse_mesh_family(to_string(MeshFamily::perturbed)), MeshFamily::perturbed);
    EXPECT_EQ(parse_mesh_family("symmetric"), MeshFamily::symmetric);
    EXPECT_THROW(parse_mesh_family("uniform"), InvalidArgument);
}

TEST(MeshIo, RoundTripIsExact)
{
    const auto data = perturbed_mesh_data(3, 5);
    const auto text = format_mesh(data);
    const auto back = parse_mesh(text);
    EXPECT_EQ(back.coords, data.coords);
    EXPECT_EQ(back.cells, data.cells);

    const auto path = std::filesystem::temp_directory_path() / "dec_mesh_roundtrip.mesh";
    write_mesh(build_complex(data.coords, data.cells), path);
    const auto k = read_mesh(path);
    std::filesystem::remove(path);
    EXPECT_EQ(mesh_data(k).coords, data.coords);
    EXPECT_EQ(k.count(2), static_cast<int>(data.cells.size()));
}

TEST(MeshIo, CommentsAndWhitespace)
{
    const auto m = parse_mesh("# header\n2 3 1  # dims\n0 0\n1 0 # second\n0.5 0.8\n\n0 1 2\n");
    EXPECT_EQ(m.coords.size(), 3u);
    EXPECT_EQ(m.coords[2][1], 0.8);
    EXPECT_EQ(m.cells[0], (std::vector<int>{0, 1, 2}));
}

TEST(MeshIo, RejectsMalformedInput)
{
    EXPECT_THROW(parse_mesh(""), FormatError);
    EXPECT_THROW(parse_mesh("2 3 1\n0 0\n1 0\n0 1\n0 1 3\n"), FormatError);
    EXPECT_THROW(parse_mesh("2 3 1\n0 0\n1 0\n0 x\n0 1 2\n"), FormatError);
    EXPECT_THROW(parse_mesh("2 3 1\n0 0\n1 0\n0 1\n0 1 2 7\n"), FormatError);
    EXPECT_THROW(parse_mesh("2 3 1\n0 0\n1 0\n0 1\n0 1\n"), FormatError);
    EXPECT_THROW(parse_mesh("0 3 1\n"), FormatError);
    EXPECT_THROW(read_mesh("/nonexistent/dir/file.mesh"), FormatError);
}
