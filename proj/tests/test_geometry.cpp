#include "dec/error.hpp"
#include "dec/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace dec;

TEST(Geometry, EdgeCircumcenterIsMidpoint)
{
    const std::vector<Point> p{{0.0, 0.0}, {1.0, 0.0}};
    const auto c = circumcenter(p);
    EXPECT_DOUBLE_EQ(c[0], 0.5);
    EXPECT_DOUBLE_EQ(c[1], 0.0);
}

TEST(Geometry, EquilateralCircumcenter)
{
    const std::vector<Point> p{{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}};
    const auto c = circumcenter(p);
    EXPECT_NEAR(c[0], 0.5, 1e-15);
    EXPECT_NEAR(c[1], std::sqrt(3.0) / 6.0, 1e-15);
}

TEST(Geometry, RightTriangleCircumcenterOnHypotenuse)
{
    const std::vector<Point> p{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
    const auto c = circumcenter(p);
    EXPECT_NEAR(c[0], 0.5, 1e-15);
    EXPECT_NEAR(c[1], 0.5, 1e-15);
    const auto bary = circumcenter_barycentric(p);
    EXPECT_NEAR(bary[0], 0.0, 1e-15);
}

TEST(Geometry, DegenerateInputThrows)
{
    const std::vector<Point> p{{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}};
    EXPECT_THROW(circumcenter(p), InvalidArgument);
    EXPECT_EQ(primal_volume(p), 0.0);
}

TEST(Geometry, PrimalVolumes)
{
    EXPECT_EQ(primal_volume(std::vector<Point>{{0.3, 0.2}}), 1.0);
    EXPECT_DOUBLE_EQ(primal_volume(std::vector<Point>{{0.0, 0.0}, {1.0, 0.0}}), 1.0);
    EXPECT_DOUBLE_EQ(primal_volume(std::vector<Point>{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}), 0.5);
    const double l = 0.37;
    EXPECT_NEAR(primal_volume(std::vector<Point>{{0.0, 0.0}, {l, 0.0}, {l / 2, l * std::sqrt(3.0) / 2}}),
                std::sqrt(3.0) / 4.0 * l * l, 1e-16);
    // An edge embedded in 3-space.
    EXPECT_NEAR(primal_volume(std::vector<Point>{{0.0, 0.0, 0.0}, {1.0, 2.0, 2.0}}), 3.0, 1e-15);
}

TEST(Geometry, CircumcenterIsEquidistantOnRandomSimplices)
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Point> p(3, Point(2));
        for (auto& q : p)
            for (double& x : q)
                x = u(rng);
        if (primal_volume(p) < 1e-3)
            continue;
        const auto c = circumcenter(p);
        const double r0 = distance(c, p[0]);
        EXPECT_LE(std::abs(distance(c, p[1]) - r0), 1e-10 * diameter(p));
        EXPECT_LE(std::abs(distance(c, p[2]) - r0), 1e-10 * diameter(p));
    }
}

TEST(Geometry, TetrahedronCircumcenterInSpace)
{
    const std::vector<Point> p{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const auto c = circumcenter(p);
    for (double x : c)
        EXPECT_NEAR(x, 0.5, 1e-15);
}

TEST(Geometry, SignedAreaAndCentroid)
{
    const Point a{0.0, 0.0}, b{1.0, 0.0}, c{0.0, 1.0};
    EXPECT_DOUBLE_EQ(signed_area(a, b, c), 0.5);
    EXPECT_DOUBLE_EQ(signed_area(a, c, b), -0.5);
    const auto g = vertex_centroid(std::vector<Point>{a, b, c});
    EXPECT_DOUBLE_EQ(g[0], 1.0 / 3.0);
}
