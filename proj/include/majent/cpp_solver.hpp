#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "majent/symstate.hpp"

namespace majent {

/// Raised when no multistart seed converges.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverConfig {
  int n_starts = 400;
  double refine_tol = 1e-12;  ///< gradient-norm stop for f^2
  double dedup_angle = 1e-4;
  int max_iter = 100;
  bool meridian_only = false;  ///< use the positive-state meridian fast path when it applies
  std::uint64_t rng_seed = 42;
  /// Refine only seeds that are local maxima of f over the seed lattice. Much
  /// cheaper; used by the outer search loop.
  bool lattice_maxima_only = false;

  void validate() const;
};

/// Global maxima of the amplitude function.
struct CPPSet {
  std::vector<BlochPoint> cpps;
  double max_value = 0.0;
  bool is_ring = false;
  std::optional<double> ring_theta;            ///< angular radius about ring_axis
  std::optional<Eigen::Vector3d> ring_axis;
  int seeds = 0;
  int converged = 0;
};

struct EntanglementValue {
  double eg_log2 = 0.0;    ///< -log2 max f^2
  double eg_linear = 0.0;  ///< 1 - max f^2

  static EntanglementValue from_max_amplitude(double f);
};

struct LocalMax {
  BlochPoint point;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Fibonacci lattice of `count` directions.
std::vector<BlochPoint> fibonacci_lattice(int count);

/// Modified-Newton ascent on f^2 from `start`, working in the stereographic
/// chart centred on the current iterate.
LocalMax refine_local_max(const SymmetricState& state, const BlochPoint& start, const SolverConfig& config);

/// Local maxima of theta -> f(theta, phi) on one half meridian, refined with Brent.
std::vector<LocalMax> meridian_maxima(const SymmetricState& state, double phi);

/// max f for a state with nonnegative amplitudes: it is attained on phi = 0.
double positive_max_amplitude(const SymmetricState& state);

/// Distinct converged local maxima of f from the multistart, highest first.
std::vector<LocalMax> local_maxima(const SymmetricState& state, const SolverConfig& config = {});

CPPSet find_cpps(const SymmetricState& state, const SolverConfig& config = {});
EntanglementValue geometric_entanglement(const SymmetricState& state, const SolverConfig& config = {});
CPPSet detect_ring(const SymmetricState& state, const CPPSet& cppset, const SolverConfig& config = {});

struct CppStructureReport {
  bool excluded = false;
  std::string exclusion;  ///< "Dicke" or "not positive"
  char cls = '?';         ///< 'a', 'b' or 'c'
  int rot_order = 1;
  bool north_mp = false;
  bool south_mp = false;
  int cpp_count = 0;
  int count_bound = 0;
  bool count_ok = true;
  bool meridians_ok = true;
  bool orbit_ok = true;
  bool failure = false;
};

CppStructureReport verify_cpp_structure(const SymmetricState& state, const CPPSet& cppset);

}  // namespace majent
