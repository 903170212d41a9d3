#pragma once

#include <span>
#include <vector>

namespace dec {

/// A point of ℝⁿ.
using Point = std::vector<double>;

/// Unsigned k-volume of the simplex spanned by k+1 points: √det(GᵀG)/k!.
/// A single point has volume 1; degenerate input gives 0.
double primal_volume(std::span<const Point> points);

/// Circumcenter of k+1 affinely independent points, as a point of ℝⁿ lying in
/// their affine span. Throws InvalidArgument when the edge Gram matrix is
/// singular to 1e-12 relative.
Point circumcenter(std::span<const Point> points);

/// Barycentric coordinates of the circumcenter with respect to the points.
std::vector<double> circumcenter_barycentric(std::span<const Point> points);

/// Arithmetic mean of the points.
Point vertex_centroid(std::span<const Point> points);

double distance(std::span<const double> a, std::span<const double> b);

/// Largest pairwise distance between the points.
double diameter(std::span<const Point> points);

/// Signed area of the triangle (a, b, c) in the plane.
double signed_area(std::span<const double> a, std::span<const double> b,
                   std::span<const double> c);

}  // namespace dec
