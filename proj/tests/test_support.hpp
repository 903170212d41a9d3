#pragma once

#include "dec/circumcentric_dual.hpp"
#include "dec/cochain.hpp"
#include "dec/simplicial_complex.hpp"
#include "dec/sparse_matrix.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <vector>

namespace dec::testing {

inline SimplicialComplex single_triangle(double x2 = 0.5, double y2 = std::sqrt(3.0) / 2.0)
{
    const std::vector<std::vector<int>> cells{{0, 1, 2}};
    return build_complex({{0.0, 0.0}, {1.0, 0.0}, {x2, y2}}, cells);
}

/// Two acute triangles sharing the edge (1, 2).
inline SimplicialComplex two_triangles()
{
    const std::vector<std::vector<int>> cells{{0, 1, 2}, {1, 2, 3}};
    return build_complex({{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.8}, {1.5, 0.8}}, cells);
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                                         double hi = 1.0)
{
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> v(n);
    for (double& x : v)
        x = d(rng);
    return v;
}

inline Cochain random_cochain(std::mt19937_64& rng, const SimplicialComplex& k, int degree)
{
    return {degree, random_vector(rng, static_cast<std::size_t>(k.count(degree)))};
}

inline Eigen::MatrixXd to_eigen(const SparseMatrix& m)
{
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m.rows(), m.cols());
    for (const auto& t : m.to_triplets())
        d(t.row, t.col) = t.value;
    return d;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace dec::testing
