#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "majent/cpp_solver.hpp"
#include "majent/majorana.hpp"
#include "majent/symstate.hpp"

namespace majent {

enum class SearchMode { positive, real, general };

std::string_view to_string(SearchMode mode);
SearchMode parse_search_mode(std::string_view text);

struct SearchConfig {
  int n = 4;
  SearchMode mode = SearchMode::positive;
  /// Restrict the support to k = rot_offset (mod rot_order). Without an offset
  /// every residue class is searched.
  std::optional<int> rot_order;
  std::optional<int> rot_offset;
  /// Explicit support; overrides the rotational masks.
  std::optional<std::vector<int>> support;
  /// With no rot_order: also search every rotationally symmetric support
  /// besides the full one.
  bool enumerate_masks = true;
  /// With enumerate_masks: also search every support of exactly this size.
  /// Unset means 3 in positive mode and none otherwise.
  std::optional<int> subset_size;
  int outer_restarts = 4;  ///< per support mask
  double outer_tol = 1e-6;
  int max_evals = 4000;  ///< per simplex run
  /// Real and general modes: follow the simplex with a local minimax descent
  /// on the local-maximum values.
  bool polish = true;
  SolverConfig inner{};
  std::uint64_t rng_seed = 42;
  /// General mode only: rotate every random starting state by this before gauge fixing.
  std::optional<Unitary2> pre_rotation;

  void validate() const;
};

struct HistoryEntry {
  long iteration = 0;  ///< cumulative objective evaluations
  double best = 0.0;   ///< best E_g found so far
};

struct RestartOutcome {
  std::vector<int> support;
  double eg_log2 = 0.0;
  long evaluations = 0;
};

struct SearchResult {
  SymmetricState state{1, {1.0, 0.0}};
  MajoranaPoints points;
  EntanglementValue entanglement;
  int restarts_agreeing = 0;
  std::vector<HistoryEntry> history;
  std::vector<RestartOutcome> restarts;
  std::vector<int> support;
};

/// Support masks searched for a config, in search order. Masks equivalent
/// under k -> n - k are listed once.
std::vector<std::vector<int>> search_masks(const SearchConfig& config);

/// Objective used by the outer loop: E_g with the cheap inner evaluation for
/// the mode (one meridian for positive states, lattice-seeded refinement otherwise).
double search_objective(const SymmetricState& state, SearchMode mode, const SolverConfig& inner);

SearchResult search_max(const SearchConfig& config);

/// Tetrahedron, octahedron, cube, icosahedron or dodecahedron state.
SymmetricState platonic_state(std::string_view name);

enum class ClassicalProblem { toth, thomson };

struct ClassicalConfig {
  int n = 5;
  ClassicalProblem problem = ClassicalProblem::thomson;
  int restarts = 8;
  double step_tol = 1e-10;
  std::uint64_t rng_seed = 42;

  void validate() const;
};

ClassicalProblem parse_classical_problem(std::string_view text);

/// Thomson (minimum Coulomb energy) or Toth (maximum minimum distance) points,
/// rotated so that the first point is the north pole and the second has phi = 0.
MajoranaPoints classical_points(const ClassicalConfig& config);

/// E_g of the state whose MPs are `points`.
SearchResult evaluate_candidate(const MajoranaPoints& points, const SolverConfig& inner = {});

}  // namespace majent
