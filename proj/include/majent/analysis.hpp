#pragma once

#include <Eigen/Core>

#include "majent/cpp_solver.hpp"
#include "majent/majorana.hpp"
#include "majent/symstate.hpp"

namespace majent {

/// Closest product point of |S_{n,k}> on the phi = 0 meridian.
BlochPoint dicke_cpp(int n, int k);

/// Closed-form E_g(|S_{n,k}>) in bits.
double dicke_entanglement(int n, int k);

struct BoundsReport {
  int n = 0;
  double dicke_lower = 0.0;     ///< E_g of the balanced Dicke state
  double stirling_lower = 0.0;  ///< log2 sqrt(n pi / 2)
  double upper = 0.0;           ///< log2(n + 1)
  double general_lower = 0.0;   ///< n / 2, general (non-symmetric) states
  double general_upper = 0.0;   ///< n - 1
};

BoundsReport entanglement_bounds(int n);

struct MomentReport {
  Eigen::Vector3d spin_vector = Eigen::Vector3d::Zero();
  double second_moment_deviation = 0.0;

  bool anticoherent(double tol = 1e-9) const { return spin_vector.norm() < tol; }
  bool design(int t, double tol = 1e-9) const;
};

MomentReport moment_report(const MajoranaPoints& points);

struct DualityReport {
  double mps_a_to_cpps_b = 0.0;
  double cpps_a_to_mps_b = 0.0;
  int cpp_count_a = 0;
  int cpp_count_b = 0;

  bool dual_pair(double tol = 1e-5) const { return mps_a_to_cpps_b < tol && cpps_a_to_mps_b < tol; }
};

DualityReport duality_report(const SymmetricState& a, const SymmetricState& b, const SolverConfig& config = {});

}  // namespace majent
