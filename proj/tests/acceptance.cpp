// Acceptance run: one PASS/FAIL line per criterion, with the tolerances and
// time limits pinned here. Stretch targets are reported but never fail the run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "majent/analysis.hpp"
#include "majent/geometry.hpp"
#include "majent/harness.hpp"
#include "majent/io.hpp"
#include "majent/mbqc.hpp"
#include "majent/search.hpp"

using namespace majent;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

int failures = 0;

void criterion(int id, const char* what, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) {
    o.pass = false;
    o.detail += fmt("; over the %.0f s limit", limit_s);
  }
  if (!o.pass) ++failures;
  std::printf("[%s] criterion %d: %s (%s) [%.2f s]\n", o.pass ? "PASS" : "FAIL", id, what, o.detail.c_str(), secs);
  std::fflush(stdout);
}

Outcome c1_closed_forms() {
  Outcome o;
  double worst = 0.0;
  auto check = [&](const SymmetricState& s, double target) {
    worst = std::max(worst, std::abs(geometric_entanglement(s).eg_log2 - target));
  };
  check(make_dicke(2, 1), 1.0);
  check(normalize(SymmetricState(3, {1.0, 0.0, 0.0, 1.0})), 1.0);
  check(make_dicke(3, 1), std::log2(9.0 / 4));
  for (int n = 2; n <= 12; ++n) check(make_dicke(n, n / 2), reference_cell(n, "dicke").value);
  o.pass = worst < 1e-9;
  o.detail = fmt("Bell, GHZ3, W3, balanced Dicke n=2..12; max |diff| %.2e < 1e-9", worst);
  return o;
}

Outcome c2_platonic_values() {
  const std::vector<std::pair<const char*, double>> cases{
      {"tetrahedron", std::log2(3.0)}, {"octahedron", std::log2(4.5)}, {"icosahedron", std::log2(243.0 / 28)}};
  double worst = 0.0;
  for (const auto& [name, target] : cases)
    worst = std::max(worst, std::abs(geometric_entanglement(platonic_state(name)).eg_log2 - target));
  return {worst < 1e-7, fmt("tetra, octa, ico; max |diff| %.2e < 1e-7", worst)};
}

Outcome c3_cpp_geometry() {
  struct Case {
    const char* state;
    const char* cpp_solid;  // expected CPP polyhedron
    std::size_t count;
  };
  const std::vector<Case> cases{{"tetrahedron", "tetrahedron", 4},
                                {"octahedron", "cube", 8},
                                {"icosahedron", "dodecahedron", 20},
                                {"dodecahedron", "icosahedron", 12}};
  Outcome o;
  double worst = 0.0;
  std::string counts;
  for (const auto& c : cases) {
    const SymmetricState s = platonic_state(c.state);
    const CPPSet set = find_cpps(s);
    const auto mps = state_to_points(s).points;
    // In place: against the MPs (tetrahedron) or the face normals of the MP solid.
    const auto expected = std::string(c.state) == "tetrahedron" ? mps : dual_vertices(mps);
    const double d = std::max(hausdorff_angle(set.cpps, expected), aligned_hausdorff(set.cpps, platonic_vertices(c.cpp_solid)));
    worst = std::max(worst, d);
    if (set.cpps.size() != c.count) o.pass = false;
    counts += fmt("%s%zu", counts.empty() ? "" : "/", set.cpps.size());
  }
  o.pass = o.pass && worst < 1e-5;
  o.detail = fmt("CPP counts %s (want 4/8/20/12); max Hausdorff %.2e < 1e-5", counts.c_str(), worst);
  return o;
}

Outcome c4_integral() {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int n = 1; n <= 12; ++n)
    for (int i = 0; i < 100; ++i) {
      const SymmetricState s = random_state(n, rng);
      const double target = 4.0 * std::numbers::pi / (n + 1);
      worst = std::max(worst, std::abs(integrate_amplitude_sq(s, QuadratureSpec::defaults(n)) / target - 1.0));
    }
  return {worst < 1e-8, fmt("1200 random states, n=1..12; max rel err %.2e < 1e-8", worst)};
}

Outcome c5_roundtrip() {
  std::mt19937_64 rng(99);
  int tested = 0, skipped = 0;
  double worst = 0.0;
  while (tested < 1000) {
    const int n = 1 + tested % 12;
    const SymmetricState s = random_state(n, rng);
    const MajoranaPoints mp = state_to_points(s);
    if (min_separation(mp) <= 1e-3) {
      ++skipped;
      continue;
    }
    worst = std::max(worst, 1.0 - std::norm(inner(s, points_to_state(mp))));
    ++tested;
  }
  return {worst <= 1e-8, fmt("1000 states (%d resampled for close roots); max infidelity %.2e <= 1e-8", skipped, worst)};
}

Outcome c6_search() {
  Outcome o;
  TableOptions opt;
  std::string cells;
  for (int n = 4; n <= 8; ++n) {
    const SearchResult r = search_max(table_search_config(n, SearchMode::positive, opt));
    const double target = reference_cell(n, "positive").value;
    const double d = std::abs(r.entanglement.eg_log2 - target);
    const bool ok = d <= 1e-4 && r.restarts_agreeing >= 3;
    o.pass = o.pass && ok;
    cells += fmt("%sn=%d %.9f diff %.1e agree %d", cells.empty() ? "" : "; ", n, r.entanglement.eg_log2, d, r.restarts_agreeing);
  }
  o.detail = "positive n=4..8 within 1e-4 with >=3 agreeing restarts: " + cells;
  return o;
}

void c6_stretch() {
  TableOptions opt;
  auto report = [&](int n, SearchMode mode, const char* column) {
    const auto t0 = std::chrono::steady_clock::now();
    const SearchResult r = search_max(table_search_config(n, mode, opt));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double target = reference_cell(n, column).value;
    const double d = r.entanglement.eg_log2 - target;
    const char* status = r.restarts_agreeing < 3 ? "UNCONVERGED" : std::abs(d) <= 1e-3 ? "OK" : d > 0 ? "EXCEEDS" : "MISMATCH";
    std::printf("[INFO] criterion 6 stretch: %s n=%d value %.9f target %.9f diff %+.2e agree %d -> %s [%.2f s]\n", column, n,
                r.entanglement.eg_log2, target, d, r.restarts_agreeing, status, secs);
    std::fflush(stdout);
  };
  for (int n = 9; n <= 12; ++n) report(n, SearchMode::positive, "positive");
  for (int n = 10; n <= 12; ++n) report(n, SearchMode::general, "general");
}

std::vector<BlochPoint> bipyramid() {
  return {BlochPoint::north(), BlochPoint::south(), BlochPoint::make(std::numbers::pi / 2, 0.0),
          BlochPoint::make(std::numbers::pi / 2, 2 * std::numbers::pi / 3),
          BlochPoint::make(std::numbers::pi / 2, 4 * std::numbers::pi / 3)};
}

Outcome c7_classical() {
  Outcome o;
  double worst = 0.0;
  for (const auto& [n, name] : std::vector<std::pair<int, const char*>>{{4, "tetrahedron"}, {6, "octahedron"}, {12, "icosahedron"}}) {
    ClassicalConfig c;
    c.n = n;
    worst = std::max(worst, aligned_hausdorff(classical_points(c).points, platonic_vertices(name)));
  }
  ClassicalConfig c5;
  c5.n = 5;
  const MajoranaPoints t5 = classical_points(c5);
  const double bip = aligned_hausdorff(t5.points, bipyramid());
  const double eg5 = evaluate_candidate(t5).entanglement.eg_log2;
  ClassicalConfig c8;
  c8.n = 8;
  c8.problem = ClassicalProblem::toth;
  const double toth = min_pair_angle(classical_points(c8).points);
  const double cube = min_pair_angle(platonic_vertices("cube"));
  o.pass = worst < 1e-5 && bip < 1e-5 && eg5 < 1.742268948 - 1e-3 && toth > cube;
  o.detail = fmt("Thomson 4/6/12 Hausdorff %.1e; Thomson 5 vs bipyramid %.1e; bipyramid Eg %.9f < %.9f; Toth 8 min angle %.6f > cube %.6f",
                 worst, bip, eg5, 1.742268948 - 1e-3, toth, cube);
  return o;
}

Outcome c8_positive_structure() {
  std::mt19937_64 rng(8);
  int states = 0, failures_here = 0, asym = 0;
  double worst_reflect = 0.0;
  for (int n = 4; n <= 8; ++n)
    for (int i = 0; i < 200; ++i) {
      const SymmetricState s = random_positive_state(n, rng);
      const CppStructureReport rep = verify_cpp_structure(s, find_cpps(s));
      if (rep.excluded || rep.failure) ++failures_here;
      const MajoranaPoints mp = state_to_points(s);
      const double d = hausdorff_angle(mp.points, reflect_xz(mp).points);
      worst_reflect = std::max(worst_reflect, d);
      if (d >= 1e-8) ++asym;
      ++states;
    }
  return {failures_here == 0 && asym == 0,
          fmt("%d positive states n=4..8; structure failures %d; MP reflection max %.1e < 1e-8", states, failures_here, worst_reflect)};
}

Outcome c9_spin() {
  std::vector<BlochPoint> pyr{BlochPoint::north()};
  for (int i = 0; i < 4; ++i) pyr.push_back(BlochPoint::make(std::numbers::pi / 2, i * std::numbers::pi / 2));
  const double sp = moment_report(MajoranaPoints(pyr)).spin_vector.norm();
  const double so = moment_report(state_to_points(platonic_state("octahedron"))).spin_vector.norm();
  const double si = moment_report(state_to_points(platonic_state("icosahedron"))).spin_vector.norm();
  return {sp > 0.01 && so < 1e-10 && si < 1e-10,
          fmt("square pyramid |S| %.3f > 0.01; octa %.1e, ico %.1e < 1e-10", sp, so, si)};
}

Outcome c10_mbqc() {
  const MbqcReport r = eta_threshold(1);
  const double ratio = r.eta_threshold / 0.001;
  const double lin = 1.0 - std::exp2(-dicke_entanglement(10000, 1));
  const double d = std::abs(lin - (1.0 - std::exp(-1.0)));
  return {ratio < 3.0 && ratio > 1.0 / 3.0 && d < 1e-3,
          fmt("k=1 eta* %.6e (ratio to 0.001: %.3f); |EG(S_{1e4,1}) - (1-1/e)| %.1e < 1e-3", r.eta_threshold, ratio, d)};
}

}  // namespace

int main() {
  criterion(1, "closed-form entanglement", 1.0, c1_closed_forms);
  criterion(2, "Platonic entanglement values", 10.0, c2_platonic_values);
  criterion(3, "Platonic CPP geometry", 30.0, c3_cpp_geometry);
  criterion(4, "integral of f^2 is 4pi/(n+1)", 10.0, c4_integral);
  criterion(5, "state/point round trip", 10.0, c5_roundtrip);
  criterion(6, "maximum search", 600.0, c6_search);
  c6_stretch();
  criterion(7, "classical point baselines", 60.0, c7_classical);
  criterion(8, "CPP structure of positive states", 120.0, c8_positive_structure);
  criterion(9, "spin vector of Platonic points", 1.0, c9_spin);
  criterion(10, "MBQC threshold and Dicke limit", 1.0, c10_mbqc);
  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
