#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "majent/search.hpp"

namespace majent {

struct TableOptions {
  int n_min = 2;
  int n_max = 12;
  bool positive = true;
  bool general = true;
  /// General-mode searches run for n >= general_from; below it the general
  /// cell repeats the positive result, as in the reference table.
  int general_from = 10;
  int restarts = 4;
  int max_evals = 4000;
  std::uint64_t rng_seed = 42;
};

struct TableCellResult {
  bool computed = false;
  double value = 0.0;
  double target = 0.0;
  double delta = 0.0;  ///< value - target
  double tolerance = 0.0;
  int agreeing = 0;
  /// OK, MISMATCH, EXCEEDS (above target by more than the tolerance),
  /// UNCONVERGED (fewer than 3 agreeing restarts), SKIPPED.
  std::string status = "SKIPPED";
  std::vector<int> support;
};

struct TableRow {
  int n = 0;
  TableCellResult dicke, positive, general, upper;
};

/// Search configuration used for one table cell.
SearchConfig table_search_config(int n, SearchMode mode, const TableOptions& options);
TableCellResult judge_cell(int n, const std::string& column, double value, int agreeing);
std::vector<TableRow> reproduce_table(const TableOptions& options);
std::string table_csv(const std::vector<TableRow>& rows);

struct VerifyOptions {
  std::vector<std::string> suites;  ///< empty: all
  std::optional<int> n;             ///< restrict the per-n suites to one n
  bool corrupt = false;             ///< shift every checked value by 1e-3 (1 + |v|): harness self-test
  std::uint64_t rng_seed = 42;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> lines;
};

std::vector<std::string> verify_suite_names();
std::vector<SuiteResult> run_verify(const VerifyOptions& options);

}  // namespace majent
