#pragma once

#include <span>
#include <vector>

namespace dec {

/// Highest polynomial degree for which rules are provided.
inline constexpr int kMaxQuadratureDegree = 60;

/// Quadrature rule on a reference simplex.
///
/// dim = 1: the interval [0, 1], weights summing to 1.
/// dim = 2: the triangle (0,0), (1,0), (0,1), weights summing to 1/2.
struct QuadratureRule {
    int dim = 0;
    int exactness = 0;
    /// dim coordinates per node, stored contiguously.
    std::vector<double> nodes;
    std::vector<double> weights;

    int size() const noexcept { return static_cast<int>(weights.size()); }
    std::span<const double> node(int i) const
    {
        return std::span<const double>(nodes).subspan(static_cast<std::size_t>(i * dim),
                                                      static_cast<std::size_t>(dim));
    }
};

/// n-point Gauss–Legendre rule mapped to [0, 1]; exact to degree 2n - 1.
QuadratureRule gauss_legendre(int n);

/// Cached interval rule exact to at least the given degree.
/// Throws InvalidArgument ("quadrature degree insufficient") beyond kMaxQuadratureDegree.
const QuadratureRule& line_rule(int degree);

/// Cached collapsed tensor-product triangle rule exact to at least the given degree.
const QuadratureRule& triangle_rule(int degree);

}  // namespace dec
