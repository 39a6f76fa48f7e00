#include "majent/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <unistd.h>

#include "majent/table1_data.hpp"

namespace majent {

Json RunManifest::to_json() const {
  Json j;
  j["command"] = command;
  j["config"] = config;
  j["version"] = version;
  j["rng_seed"] = rng_seed;
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

Json state_to_json(const SymmetricState& state) {
  Json amps = Json::array();
  for (const auto& a : state.amps()) amps.push_back(Json::array({a.real(), a.imag()}));
  Json j;
  j["n"] = state.n();
  j["amps"] = std::move(amps);
  return j;
}

namespace {

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string("expected a number for ") + what);
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(std::string("non-finite value for ") + what);
  return v;
}

int field_n(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw InputError("missing integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 1) throw InputError("\"n\" must be >= 1");
  return n;
}

}  // namespace

SymmetricState state_from_json(const Json& j) {
  const int n = field_n(j);
  if (!j.contains("amps") || !j["amps"].is_array()) throw InputError("missing array field \"amps\"");
  const Json& amps = j["amps"];
  if (amps.size() != static_cast<std::size_t>(n) + 1) throw InputError("\"amps\" must have n + 1 entries");
  std::vector<Complex> a;
  for (const auto& e : amps) {
    if (e.is_array()) {
      if (e.size() != 2) throw InputError("complex amplitude must be [re, im]");
      a.emplace_back(number(e[0], "amplitude"), number(e[1], "amplitude"));
    } else {
      a.emplace_back(number(e, "amplitude"), 0.0);
    }
  }
  double norm2 = 0.0;
  for (const auto& c : a) norm2 += std::norm(c);
  if (norm2 == 0.0) throw InputError("state has zero norm");
  // Already normalized to rounding: keep the bits so written states read back unchanged.
  if (std::abs(norm2 - 1.0) < 1e-14) return SymmetricState(n, std::move(a));
  return normalize(SymmetricState(n, std::move(a)));
}

Json point_list_json(const std::vector<BlochPoint>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(Json::array({p.theta, p.phi}));
  return arr;
}

Json points_to_json(const MajoranaPoints& points) {
  Json j;
  j["n"] = points.n;
  j["points"] = point_list_json(points.points);
  return j;
}

MajoranaPoints points_from_json(const Json& j) {
  const int n = field_n(j);
  if (!j.contains("points") || !j["points"].is_array()) throw InputError("missing array field \"points\"");
  std::vector<BlochPoint> pts;
  for (const auto& e : j["points"]) {
    if (!e.is_array() || e.size() != 2) throw InputError("point must be [theta, phi]");
    const double theta = number(e[0], "theta");
    if (theta < -1e-12 || theta > std::numbers::pi + 1e-12) throw InputError("theta outside [0, pi]");
    pts.push_back(BlochPoint::make(std::clamp(theta, 0.0, std::numbers::pi), number(e[1], "phi")));
  }
  if (pts.size() != static_cast<std::size_t>(n)) throw InputError("\"points\" must have n entries");
  return MajoranaPoints(n, std::move(pts));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

SymmetricState read_state_file(const std::filesystem::path& path) { return state_from_json(read_json_file(path)); }

MajoranaPoints read_points_file(const std::filesystem::path& path) { return points_from_json(read_json_file(path)); }

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  const std::filesystem::path dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  const std::filesystem::path tmp = dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw InputError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InputError("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::string dump_with_manifest(Json body, const RunManifest& manifest) {
  body["manifest"] = manifest.to_json();
  return body.dump(2) + "\n";
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string amplitude_grid_csv(const std::vector<AmplitudeSample>& grid) {
  std::string out = "theta,phi,f\n";
  for (const auto& s : grid) {
    out += format_double(s.theta);
    out += ',';
    out += format_double(s.phi);
    out += ',';
    out += format_double(s.f);
    out += '\n';
  }
  return out;
}

double TableCell::tolerance() const {
  if (kind == "closed") return 1e-9;
  if (kind == "decimal") return 1e-6;
  return 1e-4;
}

std::vector<TableCell> parse_table_csv(std::string_view csv) {
  std::vector<TableCell> cells;
  std::istringstream in{std::string(csv)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) f.push_back(tok);
    if (f.size() != 4) throw InputError("table fixture: expected 4 fields: " + line);
    cells.push_back({std::stoi(f[0]), f[1], std::stod(f[2]), f[3]});
  }
  return cells;
}

const std::vector<TableCell>& reference_table() {
  static const std::vector<TableCell> cells = parse_table_csv(kTable1Csv);
  return cells;
}

const TableCell& reference_cell(int n, std::string_view column) {
  for (const auto& c : reference_table())
    if (c.n == n && c.column == column) return c;
  throw std::domain_error("no reference cell for n = " + std::to_string(n) + ", column " + std::string(column));
}

}  // namespace majent
