#include "majent/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "majent/geometry.hpp"
#include "majent/parallel.hpp"

namespace majent {

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::positive: return "positive";
    case SearchMode::real: return "real";
    case SearchMode::general: return "general";
  }
  return "?";
}

SearchMode parse_search_mode(std::string_view text) {
  if (text == "positive") return SearchMode::positive;
  if (text == "real") return SearchMode::real;
  if (text == "general") return SearchMode::general;
  throw std::domain_error("unknown search mode: " + std::string(text));
}

void SearchConfig::validate() const {
  if (n < 2 || n > 20) throw std::domain_error("SearchConfig: n must lie in [2, 20]");
  if (outer_restarts < 1) throw std::domain_error("SearchConfig: outer_restarts must be >= 1");
  if (!(outer_tol > 0.0)) throw std::domain_error("SearchConfig: outer_tol must be positive");
  if (max_evals < 10) throw std::domain_error("SearchConfig: max_evals must be >= 10");
  if (rot_order && (*rot_order < 2 || *rot_order > n))
    throw std::domain_error("SearchConfig: rot_order must lie in [2, n]");
  if (rot_offset && !rot_order) throw std::domain_error("SearchConfig: rot_offset needs rot_order");
  if (rot_offset && (*rot_offset < 0 || *rot_offset >= *rot_order))
    throw std::domain_error("SearchConfig: rot_offset must lie in [0, rot_order)");
  if (support) {
    if (support->empty()) throw std::domain_error("SearchConfig: support must not be empty");
    for (std::size_t i = 0; i < support->size(); ++i)
      if ((*support)[i] < 0 || (*support)[i] > n || (i > 0 && (*support)[i] <= (*support)[i - 1]))
        throw std::domain_error("SearchConfig: support must be increasing indices in [0, n]");
    if (rot_order) throw std::domain_error("SearchConfig: support and rot_order are exclusive");
  }
  if (subset_size && (*subset_size < 0 || *subset_size > n + 1))
    throw std::domain_error("SearchConfig: subset_size must lie in [0, n + 1]");
  if (pre_rotation && mode != SearchMode::general)
    throw std::domain_error("SearchConfig: pre_rotation needs general mode");
  inner.validate();
}

std::vector<std::vector<int>> search_masks(const SearchConfig& config) {
  const int n = config.n;
  std::vector<std::vector<int>> out;
  std::set<std::vector<int>> seen;
  auto add = [&](std::vector<int> mask) {
    std::vector<int> flipped;
    for (auto it = mask.rbegin(); it != mask.rend(); ++it) flipped.push_back(n - *it);
    if (seen.count(mask) || seen.count(flipped)) return;
    seen.insert(mask);
    out.push_back(std::move(mask));
  };
  auto residue_class = [n](int m, int k0) {
    std::vector<int> mask;
    for (int k = k0; k <= n; k += m) mask.push_back(k);
    return mask;
  };
  if (config.support) {
    add(*config.support);
    return out;
  }
  if (config.rot_order) {
    const int m = *config.rot_order;
    if (config.rot_offset) {
      add(residue_class(m, *config.rot_offset));
    } else {
      for (int k0 = 0; k0 < m; ++k0) add(residue_class(m, k0));
    }
    return out;
  }
  std::vector<int> full(static_cast<std::size_t>(n) + 1);
  std::iota(full.begin(), full.end(), 0);
  add(full);
  if (!config.enumerate_masks) return out;
  for (int m = 2; m <= n; ++m)
    for (int k0 = 0; k0 < m; ++k0) {
      auto mask = residue_class(m, k0);
      if (mask.size() >= 2) add(std::move(mask));
    }
  const int size = config.subset_size.value_or(config.mode == SearchMode::positive ? 3 : 0);
  if (size < 2 || size > n) return out;
  // Lexicographic enumeration of all size-element subsets of {0..n}.
  std::vector<int> pick(static_cast<std::size_t>(size));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    add(pick);
    int i = size - 1;
    while (i >= 0 && pick[i] == n - (size - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

double search_objective(const SymmetricState& state, SearchMode mode, const SolverConfig& inner) {
  if (mode == SearchMode::positive) return EntanglementValue::from_max_amplitude(positive_max_amplitude(state)).eg_log2;
  SolverConfig cfg = inner;
  cfg.lattice_maxima_only = true;
  return EntanglementValue::from_max_amplitude(find_cpps(state, cfg).max_value).eg_log2;
}

namespace {

// Coefficients on a support from a real parameter vector. Positive mode uses
// |x|, real mode x, general mode (re_0, re_1, ..., im_2, im_3, ...): the
// global phase and the z-rotation gauge make the first two amplitudes real.
struct Parametrization {
  int n;
  SearchMode mode;
  std::vector<int> support;

  int dim() const {
    const int s = static_cast<int>(support.size());
    return mode == SearchMode::general ? 2 * s - std::min(s, 2) : s;
  }

  SymmetricState state(const std::vector<double>& x) const {
    std::vector<Complex> a(static_cast<std::size_t>(n) + 1, 0.0);
    const std::size_t s = support.size();
    for (std::size_t i = 0; i < s; ++i) {
      double re = x[i];
      if (mode == SearchMode::positive) re = std::abs(re);
      double im = 0.0;
      if (mode == SearchMode::general && i >= 2) im = x[s + i - 2];
      a[support[i]] = Complex(re, im);
    }
    double nrm = 0.0;
    for (const auto& c : a) nrm += std::norm(c);
    if (nrm < 1e-300) a[support.front()] = 1.0;
    return normalize(SymmetricState(n, std::move(a)));
  }

  std::vector<double> params(const SymmetricState& st) const {
    std::vector<Complex> a;
    for (int k : support) a.push_back(st.amp(k));
    if (mode == SearchMode::general && a.size() >= 2) {
      const double alpha = -(std::arg(a[1]) - std::arg(a[0])) / (support[1] - support[0]);
      const double gamma = -std::arg(a[0]) - support[0] * alpha;
      for (std::size_t i = 0; i < a.size(); ++i) a[i] *= std::polar(1.0, gamma + support[i] * alpha);
    }
    std::vector<double> x;
    for (const auto& c : a) x.push_back(mode == SearchMode::positive ? std::abs(c) : c.real());
    if (mode == SearchMode::general)
      for (std::size_t i = 2; i < a.size(); ++i) x.push_back(a[i].imag());
    return x;
  }
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;  // minimized: -E_g
  long evaluations = 0;
};

// Nelder-Mead with dimension-adapted coefficients, restarted in place from
// the best vertex until a fresh simplex stops improving.
template <class Objective>
SimplexResult nelder_mead(Objective&& h, std::vector<double> x0, double step, int max_evals) {
  const std::size_t d = x0.size();
  const double dd = static_cast<double>(d);
  const double alpha = 1.0, gamma = 1.0 + 2.0 / dd, rho = 0.75 - 0.5 / dd, sigma = 1.0 - 1.0 / dd;
  SimplexResult res;
  res.x = x0;
  res.value = h(x0);
  res.evaluations = 1;
  if (d == 0) return res;

  for (int round = 0; round < 6 && res.evaluations < max_evals; ++round) {
    const double round_start = res.value;
    std::vector<std::vector<double>> v(d + 1, res.x);
    std::vector<double> fv(d + 1, res.value);
    for (std::size_t i = 0; i < d; ++i) {
      v[i + 1][i] += step;
      fv[i + 1] = h(v[i + 1]);
      ++res.evaluations;
    }
    std::vector<std::size_t> order(d + 1);
    while (res.evaluations < max_evals) {
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
      const std::size_t best = order.front(), worst = order.back(), second = order[d - 1];
      double size = 0.0;
      for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = 0; j < d; ++j) size = std::max(size, std::abs(v[i][j] - v[best][j]));
      if (fv[worst] - fv[best] < 1e-13 && size < 1e-9) break;

      std::vector<double> c(d, 0.0);
      for (std::size_t i = 0; i <= d; ++i)
        if (i != worst)
          for (std::size_t j = 0; j < d; ++j) c[j] += v[i][j] / dd;
      auto along = [&](double t) {
        std::vector<double> p(d);
        for (std::size_t j = 0; j < d; ++j) p[j] = c[j] + t * (v[worst][j] - c[j]);
        return p;
      };
      auto xr = along(-alpha);
      const double fr = h(xr);
      ++res.evaluations;
      if (fr < fv[best]) {
        auto xe = along(-alpha * gamma);
        const double fe = h(xe);
        ++res.evaluations;
        if (fe < fr) {
          v[worst] = std::move(xe), fv[worst] = fe;
        } else {
          v[worst] = std::move(xr), fv[worst] = fr;
        }
      } else if (fr < fv[second]) {
        v[worst] = std::move(xr), fv[worst] = fr;
      } else {
        const bool outside = fr < fv[worst];
        auto xc = along(outside ? -alpha * rho : rho);
        const double fc = h(xc);
        ++res.evaluations;
        if (fc < (outside ? fr : fv[worst])) {
          v[worst] = std::move(xc), fv[worst] = fc;
        } else {
          for (std::size_t i = 0; i <= d; ++i) {
            if (i == best) continue;
            for (std::size_t j = 0; j < d; ++j) v[i][j] = v[best][j] + sigma * (v[i][j] - v[best][j]);
            fv[i] = h(v[i]);
            ++res.evaluations;
          }
        }
      }
    }
    const auto it = std::min_element(fv.begin(), fv.end());
    const std::size_t b = static_cast<std::size_t>(it - fv.begin());
    if (fv[b] <= res.value) {
      res.value = fv[b];
      res.x = v[b];
    }
    step = std::max(step * 0.1, 1e-4);
    if (round > 0 && round_start - res.value < 1e-13) break;
  }
  return res;
}

// Point of the simplex {lambda >= 0, sum lambda = 1} closest to v.
Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v) {
  std::vector<double> u(v.data(), v.data() + v.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0.0, tau = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    cum += u[i];
    const double t = (cum - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) tau = t;
  }
  return (v.array() - tau).max(0.0).matrix();
}

// Minimum-norm element of the convex hull of the columns of g (accelerated
// projected gradient on the simplex weights).
Eigen::VectorXd min_norm_hull_point(const Eigen::MatrixXd& g) {
  const Eigen::Index m = g.cols();
  if (m == 1) return g.col(0);
  const Eigen::MatrixXd q = g.transpose() * g;
  const double lip = std::max(q.diagonal().sum(), 1e-300);
  Eigen::VectorXd lam = Eigen::VectorXd::Constant(m, 1.0 / m);
  Eigen::VectorXd y = lam;
  double t = 1.0;
  for (int it = 0; it < 500; ++it) {
    const Eigen::VectorXd next = project_to_simplex(y - q * y / lip);
    const double tn = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    y = next + ((t - 1.0) / tn) * (next - lam);
    lam = next;
    t = tn;
  }
  return g * lam;
}

// Gradient of |<sigma^{(x)n}|psi(x)>|^2 in the search parameters at fixed sigma.
Eigen::VectorXd overlap_gradient(const Parametrization& par, const std::vector<double>& x, const BlochPoint& sigma) {
  const int n = par.n;
  const auto sb = sqrt_binomials(n);
  const auto [s0, s1] = sigma.spinor();
  const std::size_t s = par.support.size();
  std::vector<Complex> at(s);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    double re = x[i];
    if (par.mode == SearchMode::positive) re = std::abs(re);
    const double im = par.mode == SearchMode::general && i >= 2 ? x[s + i - 2] : 0.0;
    at[i] = Complex(re, im);
    norm2 += std::norm(at[i]);
  }
  std::vector<Complex> cs(s);  // conj of the product-state components
  Complex u = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    const int k = par.support[i];
    cs[i] = std::conj(sb[k] * std::pow(s0, n - k) * std::pow(s1, k));
    u += cs[i] * at[i];
  }
  const double G = std::norm(u) / norm2;
  Eigen::VectorXd grad(par.dim());
  for (std::size_t i = 0; i < s; ++i) {
    const Complex w = std::conj(u) * cs[i];
    double gre = 2.0 * (w.real() - G * at[i].real()) / norm2;
    if (par.mode == SearchMode::positive && x[i] < 0.0) gre = -gre;
    grad(static_cast<Eigen::Index>(i)) = gre;
    if (par.mode == SearchMode::general && i >= 2)
      grad(static_cast<Eigen::Index>(s + i - 2)) = -2.0 * (w.imag() + G * at[i].imag()) / norm2;
  }
  return grad;
}

// Local descent on max_j F_j(x) over the local maxima F_j = f_j^2: steepest
// descent along the minimum-norm convex combination of the delta-active
// gradients, with delta shrinking when no progress is possible.
SimplexResult minimax_polish(const Parametrization& par, std::vector<double> x, const SolverConfig& inner,
                             int max_evals) {
  SolverConfig cfg = inner;
  cfg.lattice_maxima_only = true;
  long evals = 0;
  auto maxima = [&](const std::vector<double>& p) {
    ++evals;
    return local_maxima(par.state(p), cfg);
  };
  auto peak = [](const std::vector<LocalMax>& m) { return m.front().value * m.front().value; };
  std::vector<LocalMax> cur = maxima(x);
  double fmax = peak(cur);
  double delta = 1e-3 * fmax;
  double step = 1e-2;
  while (evals < max_evals && delta > 1e-14) {
    std::vector<Eigen::VectorXd> active;
    for (const auto& m : cur)
      if (m.value * m.value >= fmax - delta) active.push_back(overlap_gradient(par, x, m.point));
    Eigen::MatrixXd g(par.dim(), static_cast<Eigen::Index>(active.size()));
    for (std::size_t j = 0; j < active.size(); ++j) g.col(static_cast<Eigen::Index>(j)) = active[j];
    const Eigen::VectorXd w = min_norm_hull_point(g);
    const double wn = w.norm();
    if (wn < 1e-13) {
      delta *= 0.1;
      continue;
    }
    bool moved = false;
    while (step > 1e-12 && evals < max_evals) {
      std::vector<double> trial(x);
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] -= step * w(static_cast<Eigen::Index>(i)) / wn;
      auto tm = maxima(trial);
      const double tf = peak(tm);
      if (tf < fmax - 1e-4 * step * wn) {
        x = std::move(trial);
        cur = std::move(tm);
        fmax = tf;
        step *= 2.0;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) {
      delta *= 0.1;
      step = 1e-3;
    }
  }
  return {x, std::log2(fmax), evals};
}

struct Task {
  std::size_t mask;
  int restart;
};

}  // namespace

SearchResult search_max(const SearchConfig& config) {
  config.validate();
  const auto masks = search_masks(config);
  std::vector<Task> tasks;
  for (std::size_t m = 0; m < masks.size(); ++m) {
    // A single-index support is a Dicke state: nothing to optimize.
    const int restarts = masks[m].size() == 1 ? 1 : config.outer_restarts;
    for (int r = 0; r < restarts; ++r) tasks.push_back({m, r});
  }

  struct Outcome {
    std::vector<double> x;
    double eg = -1.0;
    long evals = 0;
  };
  std::vector<Outcome> outcomes(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t t) {
    const Parametrization par{config.n, config.mode, masks[tasks[t].mask]};
    std::mt19937_64 rng(config.rng_seed + t);
    std::normal_distribution<double> gauss;
    std::vector<double> x0(static_cast<std::size_t>(par.dim()));
    for (auto& v : x0) v = gauss(rng);
    if (config.pre_rotation) {
      SymmetricState start = rotate_state(par.state(x0), *config.pre_rotation);
      std::vector<Complex> a(static_cast<std::size_t>(config.n) + 1, 0.0);
      for (int k : par.support) a[k] = start.amp(k);
      x0 = par.params(SymmetricState(config.n, std::move(a)));
    }
    auto h = [&](const std::vector<double>& x) {
      try {
        return -search_objective(par.state(x), config.mode, config.inner);
      } catch (const SolverError& e) {
        throw SolverError("search_max: inner solver failed in restart " + std::to_string(t) + ": " + e.what());
      }
    };
    SimplexResult sr = nelder_mead(h, x0, 0.3, config.max_evals);
    if (config.polish && config.mode != SearchMode::positive) {
      try {
        const SimplexResult pr = minimax_polish(par, sr.x, config.inner, config.max_evals);
        sr.evaluations += pr.evaluations;
        if (pr.value < sr.value) sr.x = pr.x, sr.value = pr.value;
      } catch (const SolverError& e) {
        throw SolverError("search_max: inner solver failed in restart " + std::to_string(t) + ": " + e.what());
      }
    }
    outcomes[t] = {sr.x, -sr.value, sr.evaluations};
  });

  SearchResult result;
  long evals = 0;
  double best = -1.0;
  std::size_t best_task = 0;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    evals += outcomes[t].evals;
    // Strictly greater: ties keep the earlier task, so the winner does not
    // depend on scheduling.
    if (outcomes[t].eg > best + 1e-12) {
      best = outcomes[t].eg;
      best_task = t;
    }
    result.history.push_back({evals, best});
    result.restarts.push_back({masks[tasks[t].mask], outcomes[t].eg, outcomes[t].evals});
  }
  result.restarts_agreeing = static_cast<int>(std::count_if(
      outcomes.begin(), outcomes.end(), [&](const Outcome& o) { return std::abs(o.eg - best) <= config.outer_tol; }));

  const Parametrization par{config.n, config.mode, masks[tasks[best_task].mask]};
  result.support = par.support;
  result.state = canonical_phase(par.state(outcomes[best_task].x));
  result.points = state_to_points(result.state);
  // The reported value comes from the full solver; the larger maximum of the
  // two evaluations is kept so the value is never flattered by the cheap inner.
  double fmax = find_cpps(result.state, config.inner).max_value;
  if (config.mode == SearchMode::positive) fmax = std::max(fmax, positive_max_amplitude(result.state));
  result.entanglement = EntanglementValue::from_max_amplitude(fmax);
  return result;
}

SymmetricState platonic_state(std::string_view name) {
  auto build = [](int n, std::vector<std::pair<int, double>> terms) {
    std::vector<Complex> a(static_cast<std::size_t>(n) + 1, 0.0);
    for (const auto& [k, v] : terms) a[k] = v;
    return normalize(SymmetricState(n, std::move(a)));
  };
  const auto r = [](double v) { return std::sqrt(v); };
  if (name == "tetrahedron") return build(4, {{0, 1.0 / r(3.0)}, {3, r(2.0 / 3.0)}});
  if (name == "octahedron") return build(6, {{1, 1.0}, {5, 1.0}});
  if (name == "icosahedron") return build(12, {{1, r(7)}, {6, -r(11)}, {11, -r(7)}});
  if (name == "dodecahedron")
    return build(20, {{0, r(187)}, {5, r(627)}, {10, r(247)}, {15, -r(627)}, {20, r(187)}});
  if (name == "cube") {
    // Cube vertices aligned with the faces of the octahedron state's MPs.
    return points_to_state(MajoranaPoints(dual_vertices(state_to_points(platonic_state("octahedron")).points)));
  }
  throw std::domain_error("unknown Platonic state: " + std::string(name));
}

void ClassicalConfig::validate() const {
  if (n < 2) throw std::domain_error("ClassicalConfig: n must be >= 2");
  if (restarts < 1) throw std::domain_error("ClassicalConfig: restarts must be >= 1");
  if (!(step_tol > 0.0)) throw std::domain_error("ClassicalConfig: step_tol must be positive");
}

ClassicalProblem parse_classical_problem(std::string_view text) {
  if (text == "toth") return ClassicalProblem::toth;
  if (text == "thomson") return ClassicalProblem::thomson;
  throw std::domain_error("unknown classical problem: " + std::string(text));
}

namespace {

using Points3 = std::vector<Eigen::Vector3d>;

// Tangential projected descent with an adaptive step. `energy_grad` returns the
// objective and fills the Euclidean gradient.
template <class EnergyGrad>
double descend(Points3& v, EnergyGrad&& energy_grad, double tol, int max_iter) {
  Points3 g(v.size());
  double e = energy_grad(v, g);
  double step = 0.01;
  for (int it = 0; it < max_iter; ++it) {
    double gmax = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      g[i] -= g[i].dot(v[i]) * v[i];
      gmax = std::max(gmax, g[i].norm());
    }
    if (gmax < tol) break;
    Points3 trial(v.size());
    Points3 gt(v.size());
    bool moved = false;
    for (int ls = 0; ls < 60; ++ls) {
      for (std::size_t i = 0; i < v.size(); ++i) trial[i] = (v[i] - step * g[i]).normalized();
      const double et = energy_grad(trial, gt);
      if (et < e) {
        v.swap(trial);
        g.swap(gt);
        e = et;
        step *= 1.5;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  return e;
}

double thomson_energy(const Points3& v, Points3& g) {
  double e = 0.0;
  for (auto& x : g) x.setZero();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const Eigen::Vector3d d = v[i] - v[j];
      const double r = d.norm();
      e += 1.0 / r;
      const Eigen::Vector3d f = d / (r * r * r);
      g[i] -= f;
      g[j] += f;
    }
  return e;
}

// Soft minimum of the pairwise angles at inverse temperature beta, negated so
// that descent spreads the points.
double toth_energy(const Points3& v, Points3& g, double beta) {
  std::vector<double> ang;
  double amin = std::numbers::pi;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      ang.push_back(std::acos(std::clamp(v[i].dot(v[j]), -1.0, 1.0)));
      amin = std::min(amin, ang.back());
    }
  double z = 0.0;
  for (double a : ang) z += std::exp(-beta * (a - amin));
  for (auto& x : g) x.setZero();
  std::size_t idx = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j, ++idx) {
      const double w = std::exp(-beta * (ang[idx] - amin)) / z;
      const double s = std::max(std::sin(ang[idx]), 1e-12);
      // d(angle)/dv_i = -v_j / sin(angle); energy = -softmin, weight w.
      g[i] += w * v[j] / s;
      g[j] += w * v[i] / s;
    }
  return -(amin - std::log(z) / beta);
}

MajoranaPoints canonical_orientation(const Points3& v) {
  std::vector<BlochPoint> pts = to_points(v);
  const Unitary2 u1 = Unitary2::to_north(pts[0]);
  for (auto& p : pts) p = u1.apply(p);
  const Unitary2 u2 = Unitary2::rotation(Eigen::Vector3d::UnitZ(), -pts[1].phi);
  for (auto& p : pts) p = u2.apply(p);
  pts[0] = BlochPoint::north();
  return MajoranaPoints(std::move(pts));
}

}  // namespace

MajoranaPoints classical_points(const ClassicalConfig& config) {
  config.validate();
  const std::size_t n = static_cast<std::size_t>(config.n);
  Points3 best;
  double best_score = std::numeric_limits<double>::infinity();
  for (int r = 0; r < config.restarts; ++r) {
    std::mt19937_64 rng(config.rng_seed + static_cast<std::uint64_t>(r));
    std::normal_distribution<double> gauss;
    Points3 v(n);
    for (auto& x : v) x = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng)).normalized();
    double score;
    if (config.problem == ClassicalProblem::thomson) {
      score = descend(v, thomson_energy, config.step_tol, 200000);
    } else {
      // Temperature halves every stage.
      double beta = 10.0;
      for (int stage = 0; stage < 12; ++stage, beta *= 2.0)
        descend(v, [beta](const Points3& p, Points3& g) { return toth_energy(p, g, beta); }, config.step_tol, 20000);
      score = -min_pair_angle(to_points(v));
    }
    if (score < best_score) {
      best_score = score;
      best = v;
    }
  }
  return canonical_orientation(best);
}

SearchResult evaluate_candidate(const MajoranaPoints& points, const SolverConfig& inner) {
  if (points.n < 2) throw std::domain_error("evaluate_candidate: n must be >= 2");
  SearchResult r;
  r.state = canonical_phase(points_to_state(points));
  r.points = points;
  r.entanglement = EntanglementValue::from_max_amplitude(find_cpps(r.state, inner).max_value);
  r.restarts_agreeing = 1;
  const auto cls = classify(r.state);
  r.support = cls.support;
  return r;
}

}  // namespace majent
