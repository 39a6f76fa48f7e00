#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "majent/symstate.hpp"

namespace majent {

std::vector<Eigen::Vector3d> to_vectors(const std::vector<BlochPoint>& pts);
std::vector<BlochPoint> to_points(const std::vector<Eigen::Vector3d>& vs);

/// Symmetric Hausdorff distance between two point sets, in great-circle angle.
double hausdorff_angle(const std::vector<BlochPoint>& a, const std::vector<BlochPoint>& b);

/// Hausdorff distance minimized over proper rotations of `a` (alignment by
/// matching an edge of `b` against every congruent pair of `a`).
double aligned_hausdorff(const std::vector<BlochPoint>& a, const std::vector<BlochPoint>& b);

/// Vertex directions of a Platonic solid: tetrahedron, octahedron, cube,
/// icosahedron, dodecahedron.
std::vector<BlochPoint> platonic_vertices(std::string_view name);

/// Outward unit normals of the convex hull faces of points on the sphere
/// (coplanar triangles merged); the vertices of the dual polyhedron.
std::vector<BlochPoint> dual_vertices(const std::vector<BlochPoint>& pts);

/// Coulomb energy sum_{i<j} 1/|v_i - v_j|.
double coulomb_energy(const std::vector<BlochPoint>& pts);
/// Smallest pairwise great-circle angle.
double min_pair_angle(const std::vector<BlochPoint>& pts);

}  // namespace majent
