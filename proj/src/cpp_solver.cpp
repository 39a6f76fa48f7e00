#include "majent/cpp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <utility>

#include <Eigen/Eigenvalues>
#include <boost/math/tools/minima.hpp>

#include "majent/majorana.hpp"
#include "majent/parallel.hpp"

namespace majent {

void SolverConfig::validate() const {
  if (n_starts < 12) throw std::domain_error("SolverConfig: n_starts must be >= 12");
  if (!(dedup_angle > 0.0 && dedup_angle < 0.2))
    throw std::domain_error("SolverConfig: dedup_angle must lie in (0, 0.2)");
  if (!(refine_tol > 0.0)) throw std::domain_error("SolverConfig: refine_tol must be positive");
  if (max_iter < 1) throw std::domain_error("SolverConfig: max_iter must be >= 1");
}

EntanglementValue EntanglementValue::from_max_amplitude(double f) {
  const double f2 = f * f;
  return {-std::log2(f2), 1.0 - f2};
}

std::vector<BlochPoint> fibonacci_lattice(int count) {
  std::vector<BlochPoint> pts;
  pts.reserve(static_cast<std::size_t>(count));
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / count;
    pts.push_back(BlochPoint::make(std::acos(z), golden_angle * i));
  }
  return pts;
}

namespace {

// Low-order coefficients of the Majorana polynomial after rotating the state
// by u: c0 + c1 z + c2 z^2 + O(z^3).
struct Jet {
  Complex c0, c1, c2;
};

Jet local_jet(const SymmetricState& s, const Unitary2& u) {
  const int n = s.n();
  const auto sb = sqrt_binomials(n);
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  std::vector<Complex> p00(static_cast<std::size_t>(n) + 1, 1.0), p01(static_cast<std::size_t>(n) + 1, 1.0);
  for (int j = 1; j <= n; ++j) {
    p00[j] = p00[j - 1] * u00;
    p01[j] = p01[j - 1] * u01;
  }
  Jet jet{0.0, 0.0, 0.0};
  for (int k = 0; k <= n; ++k) {
    const Complex ck = s.amp(k) * sb[k];
    if (ck == Complex(0.0)) continue;
    const int m = n - k;
    const Complex a0 = p00[m];
    const Complex a1 = m >= 1 ? static_cast<double>(m) * p00[m - 1] * u10 : 0.0;
    const Complex a2 = m >= 2 ? 0.5 * m * (m - 1) * p00[m - 2] * u10 * u10 : 0.0;
    const Complex b0 = p01[k];
    const Complex b1 = k >= 1 ? static_cast<double>(k) * p01[k - 1] * u11 : 0.0;
    const Complex b2 = k >= 2 ? 0.5 * k * (k - 1) * p01[k - 2] * u11 * u11 : 0.0;
    jet.c0 += ck * a0 * b0;
    jet.c1 += ck * (a1 * b0 + a0 * b1);
    jet.c2 += ck * (a2 * b0 + a1 * b1 + a0 * b2);
  }
  return jet;
}

// Point with chart coordinate z = x + i y in the frame where u maps the chart
// centre to the north pole.
BlochPoint chart_point(const Unitary2& u_adj, const Eigen::Vector2d& d) {
  const Complex z(d.x(), d.y());
  return u_adj.apply(BlochPoint::from_spinor(1.0, std::conj(z)));
}

double amp2(const SymmetricState& s, const BlochPoint& p) {
  const double f = amplitude(s, p);
  return f * f;
}

}  // namespace

LocalMax refine_local_max(const SymmetricState& state, const BlochPoint& start, const SolverConfig& config) {
  const int n = state.n();
  LocalMax out;
  BlochPoint p = start;
  double F = amp2(state, p);
  int stalled = 0;
  for (int it = 0; it < config.max_iter; ++it) {
    out.iterations = it + 1;
    const Unitary2 u = Unitary2::to_north(p);
    const Unitary2 u_adj = u.adjoint();
    const Jet jet = local_jet(state, u);
    // F(z) = |c0 + c1 z + c2 z^2|^2 (1 + |z|^2)^{-n}, expanded to second order.
    const Complex w = std::conj(jet.c0) * jet.c1;
    const Complex v = std::conj(jet.c0) * jet.c2;
    const Eigen::Vector2d g(2.0 * w.real(), -2.0 * w.imag());
    const double iso = 2.0 * (std::norm(jet.c1) - n * std::norm(jet.c0));
    Eigen::Matrix2d h;
    h << iso + 4.0 * v.real(), -4.0 * v.imag(), -4.0 * v.imag(), iso - 4.0 * v.real();
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(h);
    const Eigen::Vector2d lam = es.eigenvalues();
    const Eigen::Matrix2d vec = es.eigenvectors();
    const double scale = std::max({std::abs(lam(0)), std::abs(lam(1)), 1e-12});
    const double gn = g.norm();

    Eigen::Vector2d d = Eigen::Vector2d::Zero();
    if (gn < config.refine_tol) {
      if (lam(1) <= 1e-8 * scale) {
        out.converged = true;
        break;
      }
      // Stationary but not a maximum: leave along the direction of positive curvature.
      d = 1e-3 * vec.col(1);
      if (amp2(state, chart_point(u_adj, -d)) > amp2(state, chart_point(u_adj, d))) d = -d;
    } else {
      for (int i = 0; i < 2; ++i) {
        const double gi = g.dot(vec.col(i));
        d += (lam(i) < -1e-8 * scale ? -gi / lam(i) : gi / scale) * vec.col(i);
      }
      const double len = d.norm();
      if (len > 0.5) d *= 0.5 / len;
    }

    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      const BlochPoint q = chart_point(u_adj, d);
      const double Fq = amp2(state, q);
      if (Fq >= F - 4e-16) {
        stalled = Fq - F < 1e-15 ? stalled + 1 : 0;
        p = q;
        F = Fq;
        accepted = true;
        break;
      }
      d *= 0.5;
    }
    if (!accepted) {
      // Rounding floor: no representable ascent step remains.
      out.converged = gn < 1e-9;
      break;
    }
    // Nearly flat directions (perturbed rings) creep: accept once the value is
    // stationary to rounding for several steps.
    if (stalled >= 8 && gn < 1e-6) {
      out.converged = true;
      break;
    }
  }
  out.point = p;
  out.value = amplitude(state, p);
  return out;
}

std::vector<LocalMax> meridian_maxima(const SymmetricState& state, double phi) {
  const int samples = 24 * state.n() + 48;
  std::vector<double> th(static_cast<std::size_t>(samples)), val(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    th[i] = i == samples - 1 ? std::numbers::pi : std::numbers::pi * i / (samples - 1);
    val[i] = amplitude(state, BlochPoint::make(th[i], phi));
  }
  std::vector<LocalMax> out;
  auto f = [&](double t) { return -amplitude(state, BlochPoint::make(t, phi)); };
  for (int i = 0; i < samples; ++i) {
    const bool left = i == 0 || val[i] >= val[i - 1];
    const bool right = i == samples - 1 || val[i] > val[i + 1];
    if (!(left && right)) continue;
    const double lo = th[std::max(i - 1, 0)];
    const double hi = th[std::min(i + 1, samples - 1)];
    std::uintmax_t iters = 200;
    const auto [t, negf] = boost::math::tools::brent_find_minima(f, lo, hi, 30, iters);
    LocalMax lm;
    lm.converged = true;
    if (-negf >= val[i]) {
      lm.point = BlochPoint::make(t, phi);
      lm.value = -negf;
    } else {
      lm.point = BlochPoint::make(th[i], phi);
      lm.value = val[i];
    }
    out.push_back(lm);
  }
  return out;
}

double positive_max_amplitude(const SymmetricState& state) {
  double best = 0.0;
  for (const auto& m : meridian_maxima(state, 0.0)) best = std::max(best, m.value);
  return best;
}

namespace {

struct Lattice {
  std::vector<BlochPoint> seeds;
  std::vector<std::vector<int>> neighbours;
};

// Seeds depend only on (count, rng_seed); cached because the search loop asks
// for the same lattice many thousands of times.
std::shared_ptr<const Lattice> seed_lattice(int count, std::uint64_t rng_seed) {
  static std::mutex mu;
  static std::map<std::pair<int, std::uint64_t>, std::shared_ptr<const Lattice>> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(count, rng_seed);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  auto lat = std::make_shared<Lattice>();
  std::mt19937_64 rng(rng_seed);
  const Unitary2 r = Unitary2::random(rng);
  for (const auto& p : fibonacci_lattice(count)) lat->seeds.push_back(r.apply(p));
  const auto vs = [&] {
    std::vector<Eigen::Vector3d> v;
    for (const auto& p : lat->seeds) v.push_back(p.vector());
    return v;
  }();
  constexpr int kNeighbours = 6;
  lat->neighbours.resize(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::vector<std::pair<double, int>> d;
    d.reserve(vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (j != i) d.emplace_back(-vs[i].dot(vs[j]), static_cast<int>(j));
    std::partial_sort(d.begin(), d.begin() + kNeighbours, d.end());
    for (int k = 0; k < kNeighbours; ++k) lat->neighbours[i].push_back(d[k].second);
  }
  cache.emplace(key, lat);
  return lat;
}

void require_solvable(const SymmetricState& state) {
  if (state.n() < 2) throw std::domain_error("find_cpps: n must be >= 2");
  if (!state.is_normalized(1e-10)) throw std::domain_error("find_cpps: state is not normalized");
}

struct Distinct {
  std::vector<LocalMax> maxima;  // descending value
  int seeds = 0;
  int converged = 0;
};

Distinct distinct_maxima(const std::vector<LocalMax>& maxima, const SolverConfig& config) {
  Distinct out;
  out.seeds = static_cast<int>(maxima.size());
  std::vector<std::size_t> order(maxima.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return maxima[a].value > maxima[b].value; });
  for (std::size_t idx : order) {
    const LocalMax& m = maxima[idx];
    if (!m.converged) continue;
    ++out.converged;
    const bool dup = std::any_of(out.maxima.begin(), out.maxima.end(), [&](const LocalMax& k) {
      return angular_distance(k.point, m.point) < config.dedup_angle;
    });
    if (!dup) out.maxima.push_back(m);
  }
  if (out.maxima.empty()) throw SolverError("find_cpps: no multistart seed converged");
  return out;
}

CPPSet reduce(const std::vector<LocalMax>& maxima, const SolverConfig& config) {
  const Distinct d = distinct_maxima(maxima, config);
  CPPSet out;
  out.seeds = d.seeds;
  out.converged = d.converged;
  out.max_value = d.maxima.front().value;
  for (const LocalMax& k : d.maxima)
    if (k.value >= out.max_value - 10.0 * config.refine_tol) out.cpps.push_back(k.point);
  return out;
}

// Positive non-Dicke states: every CPP lies on one of the m meridians
// phi = 2 pi r / m, and the set is invariant under the Z rotation by 2 pi / m.
CPPSet meridian_fast_path(const SymmetricState& state, const StateClassification& cls,
                          const SolverConfig& config) {
  std::vector<LocalMax> maxima;
  for (const auto& m : meridian_maxima(state, 0.0)) {
    LocalMax polished = refine_local_max(state, m.point, config);
    if (polished.value < m.value) polished = m;
    polished.converged = true;
    maxima.push_back(polished);
  }
  const int order = cls.max_rot_order();
  std::vector<LocalMax> orbit;
  for (const auto& m : maxima)
    for (int r = 0; r < order; ++r) {
      LocalMax c = m;
      c.point = BlochPoint::make(m.point.theta, m.point.phi + 2.0 * std::numbers::pi * r / order);
      orbit.push_back(c);
    }
  return reduce(orbit, config);
}

std::vector<LocalMax> refine_seeds(const SymmetricState& state, const SolverConfig& config) {
  const auto lattice = seed_lattice(config.n_starts, config.rng_seed);
  std::vector<BlochPoint> seeds;
  if (config.lattice_maxima_only) {
    std::vector<double> val(lattice->seeds.size());
    for (std::size_t i = 0; i < val.size(); ++i) val[i] = amplitude(state, lattice->seeds[i]);
    for (std::size_t i = 0; i < val.size(); ++i) {
      const auto& nb = lattice->neighbours[i];
      if (std::all_of(nb.begin(), nb.end(), [&](int j) { return val[i] >= val[j]; }))
        seeds.push_back(lattice->seeds[i]);
    }
  } else {
    seeds = lattice->seeds;
  }
  if (config.meridian_only)
    for (int i = 0; i < config.n_starts; ++i)
      seeds.push_back(BlochPoint::make(std::numbers::pi * (i + 0.5) / config.n_starts, 0.0));

  std::vector<LocalMax> maxima(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t i) { maxima[i] = refine_local_max(state, seeds[i], config); });
  return maxima;
}

}  // namespace

std::vector<LocalMax> local_maxima(const SymmetricState& state, const SolverConfig& config) {
  config.validate();
  require_solvable(state);
  return distinct_maxima(refine_seeds(state, config), config).maxima;
}

CPPSet find_cpps(const SymmetricState& state, const SolverConfig& config) {
  config.validate();
  require_solvable(state);
  if (config.meridian_only) {
    const StateClassification cls = classify(state);
    if (cls.is_positive && !cls.is_dicke()) return meridian_fast_path(canonical_phase(state), cls, config);
  }
  return reduce(refine_seeds(state, config), config);
}

EntanglementValue geometric_entanglement(const SymmetricState& state, const SolverConfig& config) {
  return EntanglementValue::from_max_amplitude(find_cpps(state, config).max_value);
}

CPPSet detect_ring(const SymmetricState& state, const CPPSet& cppset, const SolverConfig& config) {
  CPPSet out = cppset;
  const StateClassification cls = classify(state);
  if (cls.is_dicke()) {
    const int k = cls.support.front();
    const int n = state.n();
    if (k > 0 && k < n) {
      out.is_ring = true;
      out.ring_theta = 2.0 * std::acos(std::sqrt(static_cast<double>(n - k) / n));
      out.ring_axis = Eigen::Vector3d::UnitZ();
    }
    return out;
  }
  const std::size_t need = static_cast<std::size_t>(std::max(8, state.n()));
  if (cppset.cpps.size() < need) return out;

  // Plane fit through the CPP directions: a ring is a circle cut by that plane.
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  for (const auto& p : cppset.cpps) mean += p.vector();
  mean /= static_cast<double>(cppset.cpps.size());
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const auto& p : cppset.cpps) {
    const Eigen::Vector3d d = p.vector() - mean;
    cov += d * d.transpose();
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(cov);
  Eigen::Vector3d axis = es.eigenvectors().col(0);
  if (axis.z() < 0.0 || (axis.z() == 0.0 && axis.x() < 0.0)) axis = -axis;
  const double offset = mean.dot(axis);
  double resid = 0.0;
  double fmin = 1.0, fmax = 0.0;
  for (const auto& p : cppset.cpps) {
    resid = std::max(resid, std::abs(p.vector().dot(axis) - offset));
    const double f = amplitude(state, p);
    fmin = std::min(fmin, f);
    fmax = std::max(fmax, f);
  }
  if (resid < config.dedup_angle && fmax - fmin < 10.0 * config.refine_tol) {
    out.is_ring = true;
    out.ring_theta = std::acos(std::clamp(offset, -1.0, 1.0));
    out.ring_axis = axis;
  }
  return out;
}

CppStructureReport verify_cpp_structure(const SymmetricState& state, const CPPSet& cppset) {
  CppStructureReport rep;
  const SymmetricState s = canonical_phase(state);
  const StateClassification cls = classify(s);
  if (cls.is_dicke()) {
    rep.excluded = true;
    rep.exclusion = "Dicke";
    return rep;
  }
  if (!cls.is_positive) {
    rep.excluded = true;
    rep.exclusion = "not positive";
    return rep;
  }
  const int n = s.n();
  rep.rot_order = cls.max_rot_order();
  rep.south_mp = std::abs(s.amp(0)) <= kSupportTol;
  rep.north_mp = std::abs(s.amp(n)) <= kSupportTol;
  rep.cpp_count = static_cast<int>(cppset.cpps.size());

  auto is_pole = [](const BlochPoint& p) { return std::sin(p.theta) < 1e-6; };
  const bool symmetric = !cls.rot_orders.empty();
  if (!symmetric) {
    rep.cls = 'c';
    rep.count_bound = (n + 3) / 2;
  } else if (std::all_of(cppset.cpps.begin(), cppset.cpps.end(), is_pole)) {
    rep.cls = 'a';
    rep.count_bound = 2;
  } else {
    rep.cls = 'b';
    rep.count_bound = rep.north_mp && rep.south_mp ? 2 * n - 4 : n;
  }
  rep.count_ok = n < 3 || rep.cpp_count <= rep.count_bound;

  const double step = 2.0 * std::numbers::pi / rep.rot_order;
  for (const auto& p : cppset.cpps) {
    if (is_pole(p)) continue;
    const double r = std::round(p.phi / step);
    const double off = std::abs(p.phi - r * step);
    if (std::sin(p.theta) * off > 1e-6) rep.meridians_ok = false;
    if (rep.cls == 'b') {
      const double f0 = amplitude(s, p);
      for (int k = 1; k < rep.rot_order; ++k)
        if (std::abs(amplitude(s, BlochPoint::make(p.theta, p.phi + k * step)) - f0) > 1e-10)
          rep.orbit_ok = false;
    }
  }
  rep.failure = !(rep.count_ok && rep.meridians_ok && rep.orbit_ok);
  return rep;
}

}  // namespace majent
