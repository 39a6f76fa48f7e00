#pragma once

#include <complex>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace majent {

using Complex = std::complex<double>;

/// Default magnitude below which a Dicke amplitude counts as zero.
inline constexpr double kSupportTol = 1e-10;

/// Direction on the unit sphere, doubling as a single-qubit state
/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct BlochPoint {
  double theta = 0.0;
  double phi = 0.0;

  /// Canonical form: theta clamped to [0, pi], phi wrapped to [0, 2pi),
  /// phi forced to 0 at the poles.
  static BlochPoint make(double theta, double phi);
  static BlochPoint from_vector(const Eigen::Vector3d& v);
  static BlochPoint from_spinor(Complex up, Complex down);
  static BlochPoint north() { return {0.0, 0.0}; }
  static BlochPoint south();

  Eigen::Vector3d vector() const;
  /// Spinor components (cos(theta/2), e^{i phi} sin(theta/2)); exact at the poles.
  std::pair<Complex, Complex> spinor() const;
  BlochPoint antipode() const;
};

/// Great-circle angle between two directions, in radians.
double angular_distance(const BlochPoint& a, const BlochPoint& b);

/// Permutation-symmetric n-qubit pure state in the Dicke basis |S_{n,k}>.
class SymmetricState {
 public:
  SymmetricState(int n, std::vector<Complex> amps);

  int n() const { return n_; }
  const std::vector<Complex>& amps() const { return amps_; }
  Complex amp(int k) const { return amps_[static_cast<std::size_t>(k)]; }
  double norm() const;
  bool is_normalized(double tol = 1e-10) const;

 private:
  int n_;
  std::vector<Complex> amps_;
};

SymmetricState make_dicke(int n, int k);
SymmetricState normalize(const SymmetricState& state);
Complex inner(const SymmetricState& a, const SymmetricState& b);

/// Multiplies by the phase that makes the largest-magnitude amplitude real
/// and positive (first index wins ties).
SymmetricState canonical_phase(const SymmetricState& state);

/// Haar-random normalized state (complex Gaussian amplitudes).
SymmetricState random_state(int n, std::mt19937_64& rng);
/// Random state with nonnegative real amplitudes.
SymmetricState random_positive_state(int n, std::mt19937_64& rng);
SymmetricState random_real_state(int n, std::mt19937_64& rng);

/// Single-qubit unitary e^{i gamma} [[alpha, -conj(beta)], [beta, conj(alpha)]].
class Unitary2 {
 public:
  Unitary2(Complex alpha, Complex beta, double phase = 0.0);

  static Unitary2 identity() { return {1.0, 0.0}; }
  /// exp(-i angle/2 axis.sigma): rotates Bloch vectors by `angle` about `axis`
  /// (right-handed).
  static Unitary2 rotation(const Eigen::Vector3d& axis, double angle);
  /// A unitary mapping the single-qubit state `p` to |0> (north pole).
  static Unitary2 to_north(const BlochPoint& p);
  static Unitary2 random(std::mt19937_64& rng);

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }
  double phase() const { return phase_; }
  /// Matrix element U_{row,col}, row/col in {0,1}.
  Complex operator()(int row, int col) const;

  Unitary2 adjoint() const;
  Unitary2 operator*(const Unitary2& rhs) const;
  BlochPoint apply(const BlochPoint& p) const;
  Eigen::Matrix3d rotation_matrix() const;

 private:
  Complex alpha_;
  Complex beta_;
  double phase_;
};

/// Matrix of U^{(x)n} restricted to the symmetric subspace, in the Dicke basis
/// (column k is the image of |S_{n,k}>).
Eigen::MatrixXcd wigner_matrix(int n, const Unitary2& u);

/// U^{(x)n}|psi> expressed in the Dicke basis.
SymmetricState rotate_state(const SymmetricState& state, const Unitary2& u);

struct StateClassification {
  bool is_positive = false;
  bool is_real = false;
  /// Every m in (1, n] such that all supported indices agree modulo m.
  std::vector<int> rot_orders;
  std::vector<int> support;

  int max_rot_order() const { return rot_orders.empty() ? 1 : rot_orders.back(); }
  bool is_dicke() const { return support.size() == 1; }
};

StateClassification classify(const SymmetricState& state, double tol = kSupportTol);

/// log of the binomial coefficient, exact for small arguments.
double log_binomial(int n, int k);
double binomial(int n, int k);
/// sqrt(C(n,k)) for k = 0..n, cached for n <= 128.
std::span<const double> sqrt_binomials(int n);

}  // namespace majent
