#include "majent/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace majent {

MajoranaPoints::MajoranaPoints(int n_, std::vector<BlochPoint> pts) : n(n_), points(std::move(pts)) {
  validate();
}

MajoranaPoints::MajoranaPoints(std::vector<BlochPoint> pts)
    : n(static_cast<int>(pts.size())), points(std::move(pts)) {
  validate();
}

void MajoranaPoints::validate() const {
  if (n < 1) throw std::domain_error("MajoranaPoints: n must be >= 1");
  if (points.size() != static_cast<std::size_t>(n))
    throw std::domain_error("MajoranaPoints: expected exactly n points");
}

int MajoranaPolynomial::degree() const {
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    if (coeffs[k] != Complex(0.0)) return k;
  return -1;
}

NormalizationK NormalizationK::from_log(double log_value) {
  if (!std::isfinite(log_value)) throw std::domain_error("NormalizationK: non-finite value");
  NormalizationK k;
  k.log_value_ = log_value;
  return k;
}

NormalizationK::NormalizationK(double value) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw std::domain_error("NormalizationK: K must be positive");
  log_value_ = std::log(value);
}

double NormalizationK::value() const { return std::exp(log_value_); }

MajoranaPolynomial majorana_polynomial(const SymmetricState& state) {
  MajoranaPolynomial p;
  p.coeffs.resize(state.amps().size());
  for (int k = 0; k <= state.n(); ++k) p.coeffs[k] = state.amp(k) * std::sqrt(binomial(state.n(), k));
  return p;
}

namespace {

Complex horner(const std::vector<Complex>& c, Complex z, Complex* deriv) {
  Complex p = c.back();
  Complex dp = 0.0;
  for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
  if (deriv) *deriv = dp;
  return p;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  const int d = static_cast<int>(coeffs.size()) - 1;
  if (d < 1) return {};
  if (coeffs.back() == Complex(0.0)) throw std::domain_error("polynomial_roots: zero leading coefficient");
  if (d == 1) return {-coeffs[0] / coeffs[1]};

  // Rescale z = s w so that the constant term of the monic polynomial in w has
  // unit magnitude; keeps the companion matrix entries balanced.
  const double b0 = std::abs(coeffs[0] / coeffs.back());
  const double s = b0 > 0.0 ? std::pow(b0, 1.0 / d) : 1.0;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -coeffs[i] / coeffs.back() * std::pow(s, i - d);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("polynomial_roots: eigenvalue solver failed");

  std::vector<Complex> roots(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    Complex z = es.eigenvalues()(i) * s;
    Complex dp;
    const Complex p = horner(coeffs, z, &dp);
    if (std::abs(dp) > 0.0) {
      const Complex z1 = z - p / dp;
      if (std::abs(horner(coeffs, z1, nullptr)) < std::abs(p)) z = z1;
    }
    roots[i] = z;
  }
  return roots;
}

MajoranaPoints state_to_points(const SymmetricState& state) {
  const int n = state.n();
  const auto c = majorana_polynomial(state).coeffs;
  double cmax = 0.0;
  for (const auto& x : c) cmax = std::max(cmax, std::abs(x));
  if (!(cmax > 0.0)) throw std::domain_error("state_to_points: zero state");
  const double thr = 1e-14 * cmax;

  int low = 0;
  while (std::abs(c[low]) <= thr) ++low;
  int deg = n;
  while (std::abs(c[deg]) <= thr) --deg;

  std::vector<BlochPoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  // A zero "at infinity" is the south-pole zero direction; its antipode is north.
  for (int i = 0; i < n - deg; ++i) pts.push_back(BlochPoint::north());
  for (int i = 0; i < low; ++i) pts.push_back(BlochPoint::south());
  const std::vector<Complex> reduced(c.begin() + low, c.begin() + deg + 1);
  for (const Complex& zeta : polynomial_roots(reduced)) {
    // Zero at z = zeta corresponds to the factor (u + v z) of the MP spinor (u, v):
    // v/u = -1/zeta.
    const Complex w = -1.0 / zeta;
    pts.push_back(BlochPoint::make(2.0 * std::atan(std::abs(w)), std::arg(w)));
  }
  return {n, std::move(pts)};
}

namespace {

// Coefficients e_k of prod_i (u_i + v_i z) with (u_i, v_i) the MP spinors.
std::vector<Complex> spinor_product(const MajoranaPoints& points) {
  std::vector<Complex> e{1.0};
  for (const auto& p : points.points) {
    const auto [u, v] = p.spinor();
    std::vector<Complex> next(e.size() + 1, 0.0);
    for (std::size_t k = 0; k < e.size(); ++k) {
      next[k] += e[k] * u;
      next[k + 1] += e[k] * v;
    }
    e = std::move(next);
  }
  return e;
}

}  // namespace

SymmetricState points_to_state(const MajoranaPoints& points) {
  if (points.n < 1) throw std::domain_error("points_to_state: need at least one point");
  const auto e = spinor_product(points);
  std::vector<Complex> amps(e.size());
  for (int k = 0; k <= points.n; ++k) amps[k] = e[k] / std::sqrt(binomial(points.n, k));
  return normalize({points.n, std::move(amps)});
}

NormalizationK normalization_K(const MajoranaPoints& points) {
  if (points.n < 1) throw std::domain_error("normalization_K: need at least one point");
  const auto e = spinor_product(points);
  double s = 0.0;
  for (int k = 0; k <= points.n; ++k) s += std::norm(e[k]) / binomial(points.n, k);
  return NormalizationK::from_log(2.0 * std::lgamma(points.n + 1.0) + std::log(s));
}

double amplitude(const SymmetricState& state, const BlochPoint& sigma) {
  const int n = state.n();
  const auto [up, down] = sigma.spinor();
  const Complex x = std::conj(up);
  const Complex y = std::conj(down);
  if (n <= 30) {
    // Horner in the smaller ratio keeps every intermediate bounded.
    const auto sb = sqrt_binomials(n);
    Complex sum = 0.0;
    if (std::abs(x) >= std::abs(y)) {
      const Complex t = y / x;
      for (int k = n; k >= 0; --k) sum = sum * t + state.amp(k) * sb[k];
      Complex xn = 1.0;
      for (int j = 0; j < n; ++j) xn *= x;
      sum *= xn;
    } else {
      const Complex t = x / y;
      for (int k = 0; k <= n; ++k) sum = sum * t + state.amp(k) * sb[k];
      Complex yn = 1.0;
      for (int j = 0; j < n; ++j) yn *= y;
      sum *= yn;
    }
    return std::abs(sum);
  }
  // Log-magnitude evaluation: cos^n(theta/2) underflows for large n.
  const double lx = std::log(std::abs(x));
  const double ly = std::log(std::abs(y));
  const double px = std::arg(x);
  const double py = std::arg(y);
  std::vector<double> logs(static_cast<std::size_t>(n) + 1, -std::numeric_limits<double>::infinity());
  double lmax = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= n; ++k) {
    const double a = std::abs(state.amp(k));
    if (a == 0.0) continue;
    if ((n - k > 0 && std::abs(x) == 0.0) || (k > 0 && std::abs(y) == 0.0)) continue;
    const double l = std::log(a) + 0.5 * log_binomial(n, k) + (n - k > 0 ? (n - k) * lx : 0.0) +
                     (k > 0 ? k * ly : 0.0);
    logs[k] = l;
    lmax = std::max(lmax, l);
  }
  if (!std::isfinite(lmax)) return 0.0;
  Complex sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    if (!std::isfinite(logs[k])) continue;
    const double phase = std::arg(state.amp(k)) + (n - k) * px + k * py;
    sum += std::polar(std::exp(logs[k] - lmax), phase);
  }
  return std::exp(lmax) * std::abs(sum);
}

double overlap_product(const MajoranaPoints& points, const NormalizationK& K, const BlochPoint& sigma) {
  const auto [su, sd] = sigma.spinor();
  double log_prod = std::lgamma(points.n + 1.0) - 0.5 * K.log_value();
  for (const auto& p : points.points) {
    const auto [u, v] = p.spinor();
    const double f = std::abs(std::conj(su) * u + std::conj(sd) * v);
    if (f == 0.0) return 0.0;
    log_prod += std::log(f);
  }
  return std::exp(log_prod);
}

GaussLegendre gauss_legendre(int order) {
  if (order < 1) throw std::domain_error("gauss_legendre: order must be >= 1");
  GaussLegendre gl;
  gl.nodes.resize(static_cast<std::size_t>(order));
  gl.weights.resize(static_cast<std::size_t>(order));
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= order; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) p0 = 1.0;
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int j = 2; j <= order; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    if (order == 1) p0 = 1.0;
    dp = order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.nodes[i] = -x;
    gl.nodes[order - 1 - i] = x;
    gl.weights[i] = w;
    gl.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) gl.nodes[order / 2] = 0.0;
  return gl;
}

double integrate_amplitude_sq(const SymmetricState& state, const QuadratureSpec& grid) {
  if (grid.n_theta < 2 || grid.n_phi < 2) throw std::domain_error("integrate_amplitude_sq: orders must be >= 2");
  const GaussLegendre gl = gauss_legendre(grid.n_theta);
  const double dphi = 2.0 * std::numbers::pi / grid.n_phi;
  double total = 0.0;
  for (int i = 0; i < grid.n_theta; ++i) {
    const double theta = std::acos(gl.nodes[i]);
    double row = 0.0;
    for (int j = 0; j < grid.n_phi; ++j) {
      const double f = amplitude(state, BlochPoint::make(theta, j * dphi));
      row += f * f;
    }
    total += gl.weights[i] * row * dphi;
  }
  return total;
}

std::vector<AmplitudeSample> amplitude_grid(const SymmetricState& state, int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 2) throw std::domain_error("amplitude_grid: grid sizes must be >= 2");
  std::vector<AmplitudeSample> out;
  out.reserve(static_cast<std::size_t>(n_theta) * static_cast<std::size_t>(n_phi));
  for (int i = 0; i < n_theta; ++i) {
    const double theta = i == n_theta - 1 ? std::numbers::pi : std::numbers::pi * i / (n_theta - 1);
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / n_phi;
      out.push_back({theta, phi, amplitude(state, BlochPoint::make(theta, phi))});
    }
  }
  return out;
}

double min_separation(const MajoranaPoints& points) {
  double best = std::numbers::pi;
  for (std::size_t i = 0; i < points.points.size(); ++i)
    for (std::size_t j = i + 1; j < points.points.size(); ++j)
      best = std::min(best, angular_distance(points.points[i], points.points[j]));
  return best;
}

MajoranaPoints reflect_xz(const MajoranaPoints& points) {
  std::vector<BlochPoint> out;
  out.reserve(points.points.size());
  for (const auto& p : points.points) out.push_back(BlochPoint::make(p.theta, -p.phi));
  return {points.n, std::move(out)};
}

MajoranaPoints rotate_points(const MajoranaPoints& points, const Unitary2& u) {
  std::vector<BlochPoint> out;
  out.reserve(points.points.size());
  for (const auto& p : points.points) out.push_back(u.apply(p));
  return {points.n, std::move(out)};
}

}  // namespace majent
