#pragma once

#include <complex>
#include <vector>

#include "majent/symstate.hpp"

namespace majent {

/// Exactly n points (with multiplicity) encoding a symmetric state up to phase.
struct MajoranaPoints {
  int n = 0;
  std::vector<BlochPoint> points;

  MajoranaPoints() = default;
  MajoranaPoints(int n, std::vector<BlochPoint> points);
  explicit MajoranaPoints(std::vector<BlochPoint> points);

 private:
  void validate() const;
};

/// c_k = a_k sqrt(C(n,k)); <lambda(theta,phi)|psi> = cos^n(theta/2) sum_k c_k z^k
/// with z = e^{-i phi} tan(theta/2).
struct MajoranaPolynomial {
  std::vector<Complex> coeffs;
  int degree() const;
};

/// Normalization constant of the permutation-sum construction; stored in log
/// form so that large n does not overflow.
class NormalizationK {
 public:
  static NormalizationK from_log(double log_value);
  explicit NormalizationK(double value);
  double value() const;
  double log_value() const { return log_value_; }

 private:
  NormalizationK() = default;
  double log_value_ = 0.0;
};

MajoranaPolynomial majorana_polynomial(const SymmetricState& state);

/// Roots of sum_k coeffs[k] z^k (coeffs.back() must be nonzero): companion
/// matrix eigenvalues, each polished by one guarded Newton step.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

MajoranaPoints state_to_points(const SymmetricState& state);
SymmetricState points_to_state(const MajoranaPoints& points);
NormalizationK normalization_K(const MajoranaPoints& points);

/// f(sigma) = |<sigma^{(x)n}|psi>|.
double amplitude(const SymmetricState& state, const BlochPoint& sigma);

/// n! K^{-1/2} prod_i |<sigma|phi_i>|.
double overlap_product(const MajoranaPoints& points, const NormalizationK& K,
                       const BlochPoint& sigma);

/// Gauss-Legendre nodes/weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int order);

struct QuadratureSpec {
  int n_theta = 0;
  int n_phi = 0;
  /// (4(n+1), 8(n+1)); integrates f^2 exactly.
  static QuadratureSpec defaults(int n) { return {4 * (n + 1), 8 * (n + 1)}; }
};

/// Integral of f^2 over the sphere: Gauss-Legendre in cos(theta) times the
/// trapezoid rule in phi. Summation order is fixed.
double integrate_amplitude_sq(const SymmetricState& state, const QuadratureSpec& grid);

/// Row-major (theta outer, phi inner) samples of f on theta_i = pi i/(N_theta-1),
/// phi_j = 2 pi j / N_phi.
struct AmplitudeSample {
  double theta;
  double phi;
  double f;
};
std::vector<AmplitudeSample> amplitude_grid(const SymmetricState& state, int n_theta, int n_phi);

/// Smallest pairwise angular separation of the points (pi for n = 1).
double min_separation(const MajoranaPoints& points);

/// Conjugation (phi -> -phi) images of the points.
MajoranaPoints reflect_xz(const MajoranaPoints& points);

/// Rotates each point by U.
MajoranaPoints rotate_points(const MajoranaPoints& points, const Unitary2& u);

}  // namespace majent
