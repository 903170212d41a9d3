#include "dec/circumcentric_dual.hpp"
#include "dec/error.hpp"
#include "dec/mesh_generation.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace dec;

namespace {

const double kArea = std::sqrt(3.0) / 4.0;

double sum(std::span<const double> v)
{
    return std::accumulate(v.begin(), v.end(), 0.0);
}

}  // namespace

TEST(WellCentered, EquilateralAndRightTriangles)
{
    EXPECT_TRUE(is_well_centered(dec::testing::single_triangle()).ok);
    const auto right = dec::testing::single_triangle(0.0, 1.0);
    const auto wc = is_well_centered(right);
    EXPECT_FALSE(wc.ok);
    ASSERT_EQ(wc.offenders.size(), 1u);
    EXPECT_EQ(wc.offenders[0].dim, 2);
    EXPECT_THROW(build_dual(right), MeshError);
    EXPECT_THROW(build_dual(dec::testing::single_triangle(1.2, 0.3)), MeshError);
}

TEST(DualComplex, SymmetricMeshRatios)
{
    const int m = 3;
    const double l = std::ldexp(1.0, -m);
    const auto k = symmetric_mesh(m);
    const auto dual = build_dual(k);
    for (int e = 0; e < k.count(1); ++e) {
        const double expected = k.is_boundary(1, e) ? 0.5 / std::sqrt(3.0) : 1.0 / std::sqrt(3.0);
        EXPECT_NEAR(dual.ratio_a(1)[static_cast<std::size_t>(e)], expected, 1e-13);
    }
    for (int v = 0; v < k.count(0); ++v)
        if (!k.is_boundary(0, v))
            EXPECT_NEAR(dual.ratio_a(0)[static_cast<std::size_t>(v)], std::sqrt(3.0) / 2.0 * l * l,
                        1e-15);
    for (double a : dual.ratio_a(2))
        EXPECT_NEAR(a * std::sqrt(3.0) / 4.0 * l * l, 1.0, 1e-12);
}

TEST(DualComplex, RatiosAreReciprocal)
{
    const auto k = perturbed_mesh(3, 4);
    const auto dual = build_dual(k);
    for (int d = 0; d <= 2; ++d)
        for (int i = 0; i < k.count(d); ++i) {
            const auto a = dual.ratio_a(d)[static_cast<std::size_t>(i)];
            const auto b = dual.ratio_b(d)[static_cast<std::size_t>(i)];
            EXPECT_GT(a, 0.0);
            EXPECT_NEAR(a * b, 1.0, 1e-14);
            EXPECT_NEAR(a, dual.dual_volume(d, i) / dual.primal_volume(d, i), 1e-14 * a);
        }
}

TEST(DualComplex, VertexCellsTileTheDomain)
{
    for (std::uint64_t seed : {1, 2, 3}) {
        const auto k = perturbed_mesh(4, seed);
        const auto dual = build_dual(k);
        EXPECT_NEAR(sum(dual.dual_volumes(0)), kArea, 1e-13);
        EXPECT_NEAR(dual.domain_volume(), kArea, 1e-13);
        EXPECT_NEAR(sum(dual.primal_volumes(2)), kArea, 1e-13);
    }
}

TEST(DualComplex, DiamondCellsTileTheDomain)
{
    const auto k = perturbed_mesh(3, 7);
    const auto dual = build_dual(k);
    for (int d = 0; d <= 2; ++d) {
        const auto cells = diamond_cells(k, dual, d);
        ASSERT_EQ(static_cast<int>(cells.size()), k.count(d));
        double total = 0.0;
        for (const auto& c : cells)
            total += c.volume;
        EXPECT_NEAR(total, kArea, 1e-13) << "degree " << d;
    }
}

TEST(DualComplex, EdgeDiamondIsAKite)
{
    const auto k = dec::testing::two_triangles();
    const auto dual = build_dual(k);
    const int e = k.index_of(Simplex{1, 2});
    const auto cells = diamond_cells(k, dual, 1);
    const auto& kite = cells[static_cast<std::size_t>(e)];
    EXPECT_EQ(kite.flags.size(), 4u);
    // Diagonals are perpendicular: area = |e| |*e| / 2.
    EXPECT_NEAR(kite.volume, 0.5 * dual.primal_volume(1, e) * dual.dual_volume(1, e), 1e-15);
    const double c0y = dual.circumcenter(2, 0)[1];
    const double c1y = dual.circumcenter(2, 1)[1];
    EXPECT_NEAR(dual.dual_volume(1, e), std::hypot(dual.circumcenter(2, 0)[0] - dual.circumcenter(2, 1)[0], c0y - c1y), 1e-15);
}

TEST(DualComplex, PiecesSpanCircumcenterChains)
{
    const auto k = dec::testing::single_triangle();
    const auto dual = build_dual(k);
    EXPECT_EQ(dual.piece_count(0, 0), 2);
    EXPECT_EQ(dual.piece_count(1, 0), 1);
    EXPECT_EQ(dual.piece_count(2, 0), 1);
    const auto pts = dual.piece_points(1, 0, 0);
    ASSERT_EQ(pts.size(), 2u);
    EXPECT_NEAR(distance(pts[0], dual.circumcenter(1, 0)), 0.0, 0.0);
    EXPECT_NEAR(distance(pts[1], dual.circumcenter(2, 0)), 0.0, 0.0);
    // The boundary edge dual runs from its midpoint to the triangle center.
    EXPECT_NEAR(dual.dual_volume(1, 0), std::sqrt(3.0) / 6.0, 1e-15);
}

TEST(CentroidCondition, HoldsOnSymmetricMeshes)
{
    for (int m = 2; m <= 4; ++m) {
        const auto k = symmetric_mesh(m);
        const auto dual = build_dual(k);
        for (int d = 0; d <= 1; ++d) {
            const auto c = check_centroid_condition(k, dual, d, 1e-12);
            EXPECT_TRUE(c.ok) << "m=" << m << " k=" << d << " dev=" << c.max_deviation;
            EXPECT_GT(c.checked, 0);
        }
    }
}

TEST(CentroidCondition, FailsOnPerturbedMeshes)
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto k = perturbed_mesh(3, seed);
        const auto dual = build_dual(k);
        const auto c = check_centroid_condition(k, dual, 0, 1e-12);
        EXPECT_FALSE(c.ok);
        EXPECT_GT(c.max_deviation, 1e-6) << "seed " << seed;
    }
}

TEST(CentroidCondition, VacuousWithoutInteriorVertices)
{
    const auto k = symmetric_mesh(1);
    const auto c = check_centroid_condition(k, build_dual(k), 0, 1e-12);
    EXPECT_TRUE(c.ok);
    EXPECT_EQ(c.checked, 0);
}

TEST(DualComplex, TetrahedronDualVolumesPartition)
{
    const std::vector<std::vector<int>> cells{{0, 1, 2, 3}};
    const double s = 1.0 / std::sqrt(2.0);
    // Regular tetrahedron.
    const auto k = build_complex({{1 * s, 0, -0.5}, {-1 * s, 0, -0.5}, {0, 1 * s, 0.5}, {0, -1 * s, 0.5}},
                                 cells);
    ASSERT_TRUE(is_well_centered(k).ok);
    const auto dual = build_dual(k);
    EXPECT_NEAR(sum(dual.dual_volumes(0)), dual.primal_volume(3, 0), 1e-14);
    for (int d = 0; d <= 3; ++d) {
        double total = 0.0;
        for (const auto& c : diamond_cells(k, dual, d))
            total += c.volume;
        EXPECT_NEAR(total, dual.primal_volume(3, 0), 1e-14) << d;
    }
}
