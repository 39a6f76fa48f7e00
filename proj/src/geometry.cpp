#include "majent/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace majent {

std::vector<Eigen::Vector3d> to_vectors(const std::vector<BlochPoint>& pts) {
  std::vector<Eigen::Vector3d> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(p.vector());
  return out;
}

std::vector<BlochPoint> to_points(const std::vector<Eigen::Vector3d>& vs) {
  std::vector<BlochPoint> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(BlochPoint::from_vector(v));
  return out;
}

namespace {

double vangle(const Eigen::Vector3d& u, const Eigen::Vector3d& v) {
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

double directed(const std::vector<Eigen::Vector3d>& a, const std::vector<Eigen::Vector3d>& b) {
  double worst = 0.0;
  for (const auto& p : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : b) best = std::min(best, vangle(p, q));
    worst = std::max(worst, best);
  }
  return worst;
}

double hausdorff(const std::vector<Eigen::Vector3d>& a, const std::vector<Eigen::Vector3d>& b) {
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  return std::max(directed(a, b), directed(b, a));
}

Eigen::Matrix3d frame(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  const Eigen::Vector3d e1 = a.normalized();
  const Eigen::Vector3d e2 = (b - b.dot(e1) * e1).normalized();
  Eigen::Matrix3d f;
  f.col(0) = e1;
  f.col(1) = e2;
  f.col(2) = e1.cross(e2);
  return f;
}

}  // namespace

double hausdorff_angle(const std::vector<BlochPoint>& a, const std::vector<BlochPoint>& b) {
  return hausdorff(to_vectors(a), to_vectors(b));
}

double aligned_hausdorff(const std::vector<BlochPoint>& a, const std::vector<BlochPoint>& b) {
  const auto va = to_vectors(a);
  const auto vb = to_vectors(b);
  if (va.size() < 2 || vb.size() < 2) return hausdorff(va, vb);
  // Reference edge in b: b[0] and its nearest non-coincident, non-antipodal neighbour.
  std::size_t j1 = 0;
  double ref = std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j < vb.size(); ++j) {
    const double t = vangle(vb[0], vb[j]);
    if (t > 1e-6 && t < std::numbers::pi - 1e-6 && t < ref) {
      ref = t;
      j1 = j;
    }
  }
  if (j1 == 0) return hausdorff(va, vb);
  const Eigen::Matrix3d fb = frame(vb[0], vb[j1]);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < va.size(); ++i)
    for (std::size_t k = 0; k < va.size(); ++k) {
      if (i == k || std::abs(vangle(va[i], va[k]) - ref) > 0.05) continue;
      const Eigen::Matrix3d r = fb * frame(va[i], va[k]).transpose();
      std::vector<Eigen::Vector3d> rotated;
      rotated.reserve(va.size());
      for (const auto& v : va) rotated.push_back(r * v);
      best = std::min(best, hausdorff(rotated, vb));
    }
  return best;
}

std::vector<BlochPoint> platonic_vertices(std::string_view name) {
  std::vector<Eigen::Vector3d> v;
  const double g = std::numbers::phi;
  if (name == "tetrahedron") {
    v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  } else if (name == "octahedron") {
    v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  } else if (name == "cube") {
    for (int sx : {-1, 1})
      for (int sy : {-1, 1})
        for (int sz : {-1, 1}) v.emplace_back(sx, sy, sz);
  } else if (name == "icosahedron") {
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1}) {
        v.emplace_back(0, s1, s2 * g);
        v.emplace_back(s1, s2 * g, 0);
        v.emplace_back(s2 * g, 0, s1);
      }
  } else if (name == "dodecahedron") {
    for (int sx : {-1, 1})
      for (int sy : {-1, 1})
        for (int sz : {-1, 1}) v.emplace_back(sx, sy, sz);
    for (int s1 : {-1, 1})
      for (int s2 : {-1, 1}) {
        v.emplace_back(0, s1 / g, s2 * g);
        v.emplace_back(s1 / g, s2 * g, 0);
        v.emplace_back(s2 * g, 0, s1 / g);
      }
  } else {
    throw std::domain_error("unknown Platonic solid: " + std::string(name));
  }
  for (auto& x : v) x.normalize();
  return to_points(v);
}

std::vector<BlochPoint> dual_vertices(const std::vector<BlochPoint>& pts) {
  const auto v = to_vectors(pts);
  const std::size_t n = v.size();
  std::vector<Eigen::Vector3d> normals;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Eigen::Vector3d nrm = (v[j] - v[i]).cross(v[k] - v[i]);
        if (nrm.norm() < 1e-9) continue;
        nrm.normalize();
        if (nrm.dot(v[i]) < 0.0) nrm = -nrm;
        const double off = nrm.dot(v[i]);
        bool face = true;
        for (std::size_t m = 0; m < n && face; ++m)
          if (nrm.dot(v[m]) > off + 1e-9) face = false;
        if (!face) continue;
        const bool seen = std::any_of(normals.begin(), normals.end(),
                                      [&](const Eigen::Vector3d& q) { return vangle(q, nrm) < 1e-7; });
        if (!seen) normals.push_back(nrm);
      }
  return to_points(normals);
}

double coulomb_energy(const std::vector<BlochPoint>& pts) {
  const auto v = to_vectors(pts);
  double e = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) e += 1.0 / (v[i] - v[j]).norm();
  return e;
}

double min_pair_angle(const std::vector<BlochPoint>& pts) {
  const auto v = to_vectors(pts);
  double best = std::numbers::pi;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) best = std::min(best, vangle(v[i], v[j]));
  return best;
}

}  // namespace majent
