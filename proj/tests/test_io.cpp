#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <unistd.h>

#include "majent/harness.hpp"
#include "majent/io.hpp"

using namespace majent;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path d = fs::temp_directory_path() / ("majent_io_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("state JSON round trips exactly") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 12; ++n) {
    const SymmetricState s = random_state(n, rng);
    const SymmetricState back = state_from_json(Json::parse(state_to_json(s).dump()));
    REQUIRE(back.n() == n);
    for (int k = 0; k <= n; ++k) CHECK(back.amp(k) == s.amp(k));
  }
}

TEST_CASE("state JSON accepts real entries and normalizes") {
  const SymmetricState s = state_from_json(Json::parse(R"({"n": 2, "amps": [3, [0, 4], 0]})"));
  CHECK(s.amp(0).real() == doctest::Approx(0.6));
  CHECK(s.amp(1).imag() == doctest::Approx(0.8));
  CHECK_THROWS_AS(state_from_json(Json::parse(R"({"n": 2, "amps": [1, 0]})")), InputError);
  CHECK_THROWS_AS(state_from_json(Json::parse(R"({"amps": [1, 0]})")), InputError);
  CHECK_THROWS_AS(state_from_json(Json::parse(R"({"n": 1, "amps": [0, 0]})")), InputError);
  CHECK_THROWS_AS(state_from_json(Json::parse(R"({"n": 1, "amps": [[1, 0, 0], 0]})")), InputError);
  CHECK_THROWS_AS(state_from_json(Json::parse(R"({"n": 0, "amps": [1]})")), InputError);
  CHECK_THROWS_AS(state_from_json(Json::parse(R"({"n": 1, "amps": ["x", 1]})")), InputError);
}

TEST_CASE("points JSON round trips and validates") {
  const MajoranaPoints p(2, {BlochPoint::make(0.3, 1.0), BlochPoint::make(2.0, 5.0)});
  const MajoranaPoints back = points_from_json(Json::parse(points_to_json(p).dump()));
  REQUIRE(back.n == 2);
  CHECK(back.points[1].theta == p.points[1].theta);
  CHECK(back.points[1].phi == p.points[1].phi);
  CHECK_THROWS_AS(points_from_json(Json::parse(R"({"n": 2, "points": [[0, 0]]})")), InputError);
  CHECK_THROWS_AS(points_from_json(Json::parse(R"({"n": 1, "points": [[4, 0]]})")), InputError);
  CHECK_THROWS_AS(points_from_json(Json::parse(R"({"n": 1, "points": [0]})")), InputError);
}

TEST_CASE("files: read, atomic write, malformed input") {
  const fs::path dir = scratch_dir();
  const fs::path f = dir / "state.json";
  write_file_atomic(f, state_to_json(make_dicke(3, 1)).dump());
  CHECK(read_state_file(f).amp(1) == Complex(1.0));
  write_file_atomic(f, "{\"n\": 1, \"points\": [[0, 0]]}");
  CHECK(read_points_file(f).n == 1);
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
  CHECK(entries == 1);
  write_file_atomic(f, "{not json");
  CHECK_THROWS_AS(read_json_file(f), InputError);
  CHECK_THROWS_AS(read_state_file(dir / "missing.json"), InputError);
  CHECK_THROWS_AS(write_file_atomic(dir / "no" / "such" / "dir.json", "x"), InputError);
  fs::remove_all(dir);
}

TEST_CASE("manifest and formatting") {
  RunManifest m;
  m.command = "ent";
  m.rng_seed = 7;
  const std::string text = dump_with_manifest(Json{{"eg", 1.0}}, m);
  CHECK(text.back() == '\n');
  const Json j = Json::parse(text);
  CHECK(j["manifest"]["command"] == "ent");
  CHECK(j["manifest"]["version"] == std::string(kVersion));
  CHECK(j["manifest"]["rng_seed"] == 7);
  CHECK(j["manifest"]["wall_time_ms"] == 0);
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_double(std::log2(3.0))) == std::log2(3.0));
  const std::string csv = amplitude_grid_csv(amplitude_grid(make_dicke(1, 0), 2, 2));
  CHECK(csv.rfind("theta,phi,f\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("reference table fixture") {
  const auto& table = reference_table();
  CHECK(table.size() == 44);
  CHECK(reference_cell(12, "general").value == doctest::Approx(std::log2(243.0 / 28)).epsilon(1e-15));
  CHECK(reference_cell(4, "positive").value == doctest::Approx(std::log2(3.0)).epsilon(1e-15));
  CHECK(reference_cell(5, "positive").tolerance() == 1e-6);
  CHECK(reference_cell(10, "general").tolerance() == 1e-4);
  CHECK(reference_cell(3, "upper").tolerance() == 1e-9);
  CHECK_THROWS_AS(reference_cell(13, "dicke"), std::domain_error);
  CHECK_THROWS_AS(parse_table_csv("n,column,value,kind\n1,2\n"), InputError);
}

TEST_CASE("cell judgement") {
  CHECK(judge_cell(4, "positive", std::log2(3.0), 4).status == "OK");
  CHECK(judge_cell(4, "positive", std::log2(3.0), 2).status == "UNCONVERGED");
  CHECK(judge_cell(4, "positive", std::log2(3.0) - 1e-3, 4).status == "MISMATCH");
  CHECK(judge_cell(10, "general", 2.7534412618, 4).status == "EXCEEDS");
  CHECK(judge_cell(6, "dicke", std::log2(16.0 / 5), 0).status == "OK");
  CHECK(judge_cell(6, "dicke", std::log2(16.0 / 5) + 1e-8, 0).status == "EXCEEDS");
}

TEST_CASE("table rows without searches") {
  TableOptions o;
  o.n_min = 2;
  o.n_max = 4;
  o.positive = false;
  o.general = false;
  const auto rows = reproduce_table(o);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    CHECK(r.dicke.status == "OK");
    CHECK(r.upper.status == "OK");
    CHECK(r.positive.status == "SKIPPED");
  }
  const std::string csv = table_csv(rows);
  CHECK(csv.rfind("n,dicke_max,", 0) == 0);
  o.n_max = 13;
  CHECK_THROWS_AS(reproduce_table(o), std::domain_error);
}

TEST_CASE("verify harness detects corruption") {
  VerifyOptions v;
  v.suites = {"dicke", "bounds", "mbqc"};
  for (const auto& s : run_verify(v)) CHECK_MESSAGE(s.passed, s.name);
  v.corrupt = true;
  for (const auto& s : run_verify(v)) CHECK_FALSE_MESSAGE(s.passed, s.name);
  v.suites = {"nonsense"};
  CHECK_THROWS_AS(run_verify(v), std::domain_error);
  CHECK(verify_suite_names().size() == 8);
}
