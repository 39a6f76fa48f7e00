#include "majent/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "majent/geometry.hpp"

namespace majent {

BlochPoint dicke_cpp(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::domain_error("dicke_cpp: need 0 <= k <= n, n >= 1");
  return BlochPoint::make(2.0 * std::acos(std::sqrt(static_cast<double>(n - k) / n)), 0.0);
}

double dicke_entanglement(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::domain_error("dicke_entanglement: need 0 <= k <= n, n >= 1");
  // Evaluate with the smaller excitation number so that the result is exactly
  // symmetric under k -> n - k.
  k = std::min(k, n - k);
  if (k == 0) return 0.0;
  const double nn = n;
  const double term = k * std::log2(nn / k) + (n - k) * std::log2(nn / (n - k));
  return term - log_binomial(n, k) / std::numbers::ln2;
}

BoundsReport entanglement_bounds(int n) {
  if (n < 2) throw std::domain_error("entanglement_bounds: n must be >= 2");
  BoundsReport r;
  r.n = n;
  r.dicke_lower = dicke_entanglement(n, n / 2);
  r.stirling_lower = 0.5 * std::log2(n * std::numbers::pi / 2.0);
  r.upper = std::log2(n + 1.0);
  r.general_lower = n / 2.0;
  r.general_upper = n - 1.0;
  return r;
}

bool MomentReport::design(int t, double tol) const {
  if (t < 1 || t > 2) throw std::domain_error("MomentReport::design: only t = 1, 2 are supported");
  return anticoherent(tol) && (t == 1 || second_moment_deviation < tol);
}

MomentReport moment_report(const MajoranaPoints& points) {
  MomentReport r;
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  for (const auto& p : points.points) {
    const Eigen::Vector3d v = p.vector();
    r.spin_vector += v;
    m += v * v.transpose();
  }
  r.spin_vector /= points.n;
  m /= points.n;
  m -= Eigen::Matrix3d::Identity() / 3.0;
  r.second_moment_deviation = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(m).eigenvalues().cwiseAbs().maxCoeff();
  return r;
}

DualityReport duality_report(const SymmetricState& a, const SymmetricState& b, const SolverConfig& config) {
  const CPPSet ca = find_cpps(a, config);
  const CPPSet cb = find_cpps(b, config);
  DualityReport r;
  r.cpp_count_a = static_cast<int>(ca.cpps.size());
  r.cpp_count_b = static_cast<int>(cb.cpps.size());
  r.mps_a_to_cpps_b = hausdorff_angle(state_to_points(a).points, cb.cpps);
  r.cpps_a_to_mps_b = hausdorff_angle(ca.cpps, state_to_points(b).points);
  return r;
}

}  // namespace majent
