#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "majent/cpp_solver.hpp"
#include "majent/majorana.hpp"
#include "majent/symstate.hpp"

namespace majent {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = "1.0.0";

/// Malformed or unreadable input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunManifest {
  std::string command;
  Json config = Json::object();
  std::string version{kVersion};
  std::uint64_t rng_seed = 0;
  std::int64_t wall_time_ms = 0;

  Json to_json() const;
};

Json state_to_json(const SymmetricState& state);
/// Accepts {"n": n, "amps": [[re, im], ...]}; a bare number is a real amplitude.
SymmetricState state_from_json(const Json& j);
Json points_to_json(const MajoranaPoints& points);
MajoranaPoints points_from_json(const Json& j);
Json point_list_json(const std::vector<BlochPoint>& pts);

Json read_json_file(const std::filesystem::path& path);
SymmetricState read_state_file(const std::filesystem::path& path);
MajoranaPoints read_points_file(const std::filesystem::path& path);

/// Writes via a temporary file in the same directory and a rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
/// JSON with the manifest embedded under "manifest", two-space indent, trailing newline.
std::string dump_with_manifest(Json body, const RunManifest& manifest);

/// "%.17g"
std::string format_double(double v);
std::string amplitude_grid_csv(const std::vector<AmplitudeSample>& grid);

struct TableCell {
  int n = 0;
  std::string column;  ///< dicke, positive, general, upper
  double value = 0.0;
  std::string kind;  ///< closed, decimal, search

  double tolerance() const;
};

/// The reference table bundled at build time.
const std::vector<TableCell>& reference_table();
std::vector<TableCell> parse_table_csv(std::string_view csv);
const TableCell& reference_cell(int n, std::string_view column);

}  // namespace majent
