#include "majent/symstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace majent {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return n <= 60 ? std::round(r) : r;
}

std::span<const double> sqrt_binomials(int n) {
  static const std::vector<std::vector<double>> table = [] {
    std::vector<std::vector<double>> t(129);
    for (int m = 0; m <= 128; ++m) {
      t[m].resize(static_cast<std::size_t>(m) + 1);
      for (int k = 0; k <= m; ++k) t[m][k] = std::sqrt(binomial(m, k));
    }
    return t;
  }();
  if (n < 0 || n > 128) throw std::domain_error("sqrt_binomials: n out of cached range");
  return table[static_cast<std::size_t>(n)];
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::domain_error("log_binomial: k out of range");
  if (n <= 60) return std::log(binomial(n, k));
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// --- BlochPoint -------------------------------------------------------------

BlochPoint BlochPoint::make(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi))
    throw std::domain_error("BlochPoint: non-finite angle");
  theta = std::clamp(theta, 0.0, std::numbers::pi);
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  if (theta == 0.0 || theta == std::numbers::pi) phi = 0.0;
  return {theta, phi};
}

BlochPoint BlochPoint::south() { return {std::numbers::pi, 0.0}; }

BlochPoint BlochPoint::from_vector(const Eigen::Vector3d& v) {
  const double r = v.norm();
  if (!(r > 0.0)) throw std::domain_error("BlochPoint: zero vector");
  const double rho = std::hypot(v.x(), v.y());
  const double theta = std::atan2(rho, v.z());
  const double phi = rho == 0.0 ? 0.0 : std::atan2(v.y(), v.x());
  return make(theta, phi);
}

BlochPoint BlochPoint::from_spinor(Complex up, Complex down) {
  const double a = std::abs(up);
  const double b = std::abs(down);
  if (!(a + b > 0.0)) throw std::domain_error("BlochPoint: zero spinor");
  const double theta = 2.0 * std::atan2(b, a);
  const double phi = (a == 0.0 || b == 0.0) ? 0.0 : std::arg(down) - std::arg(up);
  return make(theta, phi);
}

Eigen::Vector3d BlochPoint::vector() const {
  const double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

std::pair<Complex, Complex> BlochPoint::spinor() const {
  if (theta == std::numbers::pi) return {0.0, std::polar(1.0, phi)};
  return {std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), phi)};
}

BlochPoint BlochPoint::antipode() const {
  return make(std::numbers::pi - theta, phi + std::numbers::pi);
}

double angular_distance(const BlochPoint& a, const BlochPoint& b) {
  // atan2 form stays accurate for nearly coincident and nearly antipodal pairs.
  const Eigen::Vector3d u = a.vector();
  const Eigen::Vector3d v = b.vector();
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

// --- SymmetricState ---------------------------------------------------------

SymmetricState::SymmetricState(int n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {
  if (n < 1) throw std::domain_error("SymmetricState: n must be >= 1");
  if (amps_.size() != static_cast<std::size_t>(n) + 1)
    throw std::domain_error("SymmetricState: expected " + std::to_string(n + 1) +
                            " amplitudes, got " + std::to_string(amps_.size()));
  for (const auto& a : amps_)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::domain_error("SymmetricState: non-finite amplitude");
}

double SymmetricState::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

bool SymmetricState::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

SymmetricState make_dicke(int n, int k) {
  if (n < 1) throw std::domain_error("make_dicke: n must be >= 1");
  if (k < 0 || k > n) throw std::domain_error("make_dicke: k out of range [0, n]");
  std::vector<Complex> amps(static_cast<std::size_t>(n) + 1, 0.0);
  amps[static_cast<std::size_t>(k)] = 1.0;
  return {n, std::move(amps)};
}

SymmetricState normalize(const SymmetricState& state) {
  const double nrm = state.norm();
  if (!(nrm > 0.0)) throw std::domain_error("normalize: zero amplitude vector");
  if (nrm == 1.0) return state;
  std::vector<Complex> amps = state.amps();
  for (auto& a : amps) a /= nrm;
  return {state.n(), std::move(amps)};
}

Complex inner(const SymmetricState& a, const SymmetricState& b) {
  if (a.n() != b.n()) throw std::domain_error("inner: qubit counts differ");
  Complex s = 0.0;
  for (int k = 0; k <= a.n(); ++k) s += std::conj(a.amp(k)) * b.amp(k);
  return s;
}

SymmetricState canonical_phase(const SymmetricState& state) {
  const auto& amps = state.amps();
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t k = 0; k < amps.size(); ++k) {
    const double m = std::abs(amps[k]);
    if (m > best_mag * (1.0 + 1e-12)) {
      best_mag = m;
      best = k;
    }
  }
  if (best_mag <= 0.0) return state;
  const Complex rot = std::conj(amps[best]) / best_mag;
  std::vector<Complex> out(amps.size());
  for (std::size_t k = 0; k < amps.size(); ++k) out[k] = amps[k] * rot;
  out[best] = best_mag;
  return {state.n(), std::move(out)};
}

SymmetricState random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> amps(static_cast<std::size_t>(n) + 1);
  for (auto& a : amps) {
    const double re = g(rng);
    a = Complex(re, g(rng));
  }
  return normalize({n, std::move(amps)});
}

SymmetricState random_positive_state(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Complex> amps(static_cast<std::size_t>(n) + 1);
  for (auto& a : amps) a = u(rng);
  return normalize({n, std::move(amps)});
}

SymmetricState random_real_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> amps(static_cast<std::size_t>(n) + 1);
  for (auto& a : amps) a = g(rng);
  return normalize({n, std::move(amps)});
}

// --- Unitary2 ---------------------------------------------------------------

Unitary2::Unitary2(Complex alpha, Complex beta, double phase)
    : alpha_(alpha), beta_(beta), phase_(phase) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12)
    throw std::domain_error("Unitary2: |alpha|^2 + |beta|^2 must equal 1");
}

Unitary2 Unitary2::rotation(const Eigen::Vector3d& axis, double angle) {
  const double len = axis.norm();
  if (!(len > 0.0)) throw std::domain_error("Unitary2::rotation: zero axis");
  const Eigen::Vector3d a = axis / len;
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  const Complex alpha(c, -s * a.z());
  const Complex beta(s * a.y(), -s * a.x());
  // Re-normalize to absorb rounding in the axis components.
  const double nrm = std::sqrt(std::norm(alpha) + std::norm(beta));
  return {alpha / nrm, beta / nrm};
}

Unitary2 Unitary2::to_north(const BlochPoint& p) {
  const auto [up, down] = p.spinor();
  return {std::conj(up), -down};
}

Unitary2 Unitary2::random(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  double q[4];
  double nrm = 0.0;
  do {
    nrm = 0.0;
    for (double& x : q) {
      x = g(rng);
      nrm += x * x;
    }
  } while (nrm < 1e-12);
  nrm = std::sqrt(nrm);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  return {Complex(q[0], q[1]) / nrm, Complex(q[2], q[3]) / nrm, u(rng)};
}

Complex Unitary2::operator()(int row, int col) const {
  const Complex g = std::polar(1.0, phase_);
  if (row == 0) return g * (col == 0 ? alpha_ : -std::conj(beta_));
  return g * (col == 0 ? beta_ : std::conj(alpha_));
}

Unitary2 Unitary2::adjoint() const { return {std::conj(alpha_), -beta_, -phase_}; }

Unitary2 Unitary2::operator*(const Unitary2& rhs) const {
  // SU(2) parts compose like the first column of the product matrix.
  const Complex a = alpha_ * rhs.alpha_ - std::conj(beta_) * rhs.beta_;
  const Complex b = beta_ * rhs.alpha_ + std::conj(alpha_) * rhs.beta_;
  const double nrm = std::sqrt(std::norm(a) + std::norm(b));
  return {a / nrm, b / nrm, phase_ + rhs.phase_};
}

BlochPoint Unitary2::apply(const BlochPoint& p) const {
  const auto [up, down] = p.spinor();
  const Complex u = alpha_ * up - std::conj(beta_) * down;
  const Complex d = beta_ * up + std::conj(alpha_) * down;
  return BlochPoint::from_spinor(u, d);
}

Eigen::Matrix3d Unitary2::rotation_matrix() const {
  // Columns are the images of the basis directions, built from spinor algebra
  // so that no pole canonicalization is involved.
  auto image = [this](Complex up, Complex down) {
    const Complex u = alpha_ * up - std::conj(beta_) * down;
    const Complex d = beta_ * up + std::conj(alpha_) * down;
    const Complex x = std::conj(u) * d;
    return Eigen::Vector3d(2.0 * x.real(), 2.0 * x.imag(), std::norm(u) - std::norm(d));
  };
  const double h = std::numbers::sqrt2 / 2.0;
  Eigen::Matrix3d r;
  r.col(0) = image(h, h);
  r.col(1) = image(h, Complex(0.0, h));
  r.col(2) = image(1.0, 0.0);
  return r;
}

// --- rotations of symmetric states --------------------------------------------

namespace {

// Coefficients of (a + b y)^m in powers of y.
std::vector<Complex> binomial_power(Complex a, Complex b, int m) {
  std::vector<Complex> apow(static_cast<std::size_t>(m) + 1, 1.0);
  std::vector<Complex> bpow(static_cast<std::size_t>(m) + 1, 1.0);
  for (int j = 1; j <= m; ++j) {
    apow[j] = apow[j - 1] * a;
    bpow[j] = bpow[j - 1] * b;
  }
  std::vector<Complex> out(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) out[j] = binomial(m, j) * apow[m - j] * bpow[j];
  return out;
}

}  // namespace

Eigen::MatrixXcd wigner_matrix(int n, const Unitary2& u) {
  if (n < 1) throw std::domain_error("wigner_matrix: n must be >= 1");
  // The symmetric state sum_k c_k x^{n-k} y^k (c_k = a_k sqrt(C(n,k))) transforms
  // under U by the substitution x -> U00 x + U10 y, y -> U01 x + U11 y.
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  std::vector<double> sq(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) sq[k] = std::sqrt(binomial(n, k));
  for (int k = 0; k <= n; ++k) {
    const auto a = binomial_power(u00, u10, n - k);
    const auto b = binomial_power(u01, u11, k);
    for (int i = 0; i <= n - k; ++i)
      for (int j = 0; j <= k; ++j) d(i + j, k) += a[i] * b[j];
    for (int j = 0; j <= n; ++j) d(j, k) *= sq[k] / sq[j];
  }
  return d;
}

SymmetricState rotate_state(const SymmetricState& state, const Unitary2& u) {
  const Eigen::MatrixXcd d = wigner_matrix(state.n(), u);
  const Eigen::VectorXcd a = Eigen::Map<const Eigen::VectorXcd>(state.amps().data(), state.n() + 1);
  const Eigen::VectorXcd out = d * a;
  return {state.n(), std::vector<Complex>(out.data(), out.data() + out.size())};
}

StateClassification classify(const SymmetricState& state, double tol) {
  const SymmetricState c = canonical_phase(state);
  StateClassification out;
  out.is_real = true;
  out.is_positive = true;
  for (int k = 0; k <= c.n(); ++k) {
    const Complex a = c.amp(k);
    if (std::abs(a) > tol) out.support.push_back(k);
    if (std::abs(a.imag()) > tol) out.is_real = false;
    if (a.real() < -tol) out.is_positive = false;
  }
  out.is_positive = out.is_positive && out.is_real;
  for (int m = 2; m <= c.n(); ++m) {
    bool ok = true;
    for (int k : out.support)
      if ((k - out.support.front()) % m != 0) {
        ok = false;
        break;
      }
    if (ok) out.rot_orders.push_back(m);
  }
  return out;
}

}  // namespace majent
