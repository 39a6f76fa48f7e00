#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "majent/analysis.hpp"
#include "majent/cpp_solver.hpp"
#include "majent/geometry.hpp"
#include "majent/harness.hpp"
#include "majent/io.hpp"
#include "majent/majorana.hpp"
#include "majent/mbqc.hpp"
#include "majent/parallel.hpp"
#include "majent/search.hpp"

using namespace majent;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;

struct Globals {
  std::uint64_t seed = 42;
  std::optional<int> threads;
  bool json = false;
  bool timing = false;
  std::string out;
  std::string command;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

Globals g;

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

RunManifest manifest(Json config) {
  RunManifest m;
  m.command = g.command;
  config["seed"] = g.seed;
  config["threads"] = thread_count();
  m.config = std::move(config);
  m.rng_seed = g.seed;
  if (g.timing)
    m.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - g.start).count();
  return m;
}

// JSON results go to --out when given, else to stdout under --json.
void emit_json(const Json& body, const Json& config, const std::string& text) {
  const std::string doc = dump_with_manifest(body, manifest(config));
  if (!g.out.empty()) write_file_atomic(g.out, doc);
  std::cout << (g.json ? doc : text);
}

// CSV goes to --out (manifest in a sidecar) or stdout.
void emit_csv(const std::string& csv, const Json& config, const std::string& text) {
  if (g.out.empty()) {
    std::cout << csv;
    return;
  }
  write_file_atomic(g.out, csv);
  write_file_atomic(g.out + ".manifest.json", manifest(config).to_json().dump(2) + "\n");
  std::cout << text;
}

struct StateInput {
  std::string file;
  std::string platonic;
  std::vector<int> dicke;

  void add(CLI::App* sub) {
    sub->add_option("file", file, "state JSON file");
    sub->add_option("--platonic", platonic, "built-in Platonic state instead of a file");
    sub->add_option("--dicke", dicke, "Dicke state N K instead of a file")->expected(2);
  }

  SymmetricState load() const {
    const int given = !file.empty() + !platonic.empty() + !dicke.empty();
    if (given != 1) throw InputError("give exactly one of a state file, --platonic or --dicke");
    if (!platonic.empty()) return platonic_state(platonic);
    if (!dicke.empty()) return make_dicke(dicke[0], dicke[1]);
    return read_state_file(file);
  }

  Json describe() const {
    if (!platonic.empty()) return platonic;
    if (!dicke.empty()) return dicke;
    return file;
  }
};

struct SolverFlags {
  SolverConfig cfg;

  void add(CLI::App* sub) {
    sub->add_option("--n-starts", cfg.n_starts, "multistart seed count")->capture_default_str();
    sub->add_option("--refine-tol", cfg.refine_tol, "gradient tolerance of the local refinement")->capture_default_str();
    sub->add_option("--dedup-angle", cfg.dedup_angle, "angle below which maxima are merged")->capture_default_str();
    sub->add_option("--max-iter", cfg.max_iter, "refinement iterations per seed")->capture_default_str();
    sub->add_flag("--meridian-only", cfg.meridian_only, "meridian fast path for positive states");
  }

  SolverConfig get() const {
    SolverConfig c = cfg;
    c.rng_seed = g.seed;
    return c;
  }

  Json describe() const {
    const SolverConfig c = get();
    return Json{{"n_starts", c.n_starts}, {"refine_tol", c.refine_tol}, {"dedup_angle", c.dedup_angle},
                {"max_iter", c.max_iter}, {"meridian_only", c.meridian_only}, {"rng_seed", c.rng_seed}};
  }
};

std::string points_text(const std::vector<BlochPoint>& pts) {
  std::string s;
  for (const auto& p : pts) s += fmt("  %s %s\n", format_double(p.theta).c_str(), format_double(p.phi).c_str());
  return s;
}

Json cpp_json(const SymmetricState& st, const CPPSet& set) {
  const EntanglementValue e = EntanglementValue::from_max_amplitude(set.max_value);
  Json j;
  j["eg_log2"] = e.eg_log2;
  j["eg_linear"] = e.eg_linear;
  j["max_amplitude"] = set.max_value;
  j["cpps"] = point_list_json(set.cpps);
  j["is_ring"] = set.is_ring;
  if (set.is_ring) {
    j["ring_theta"] = *set.ring_theta;
    j["ring_axis"] = {set.ring_axis->x(), set.ring_axis->y(), set.ring_axis->z()};
  }
  j["n"] = st.n();
  return j;
}

std::string ring_text(const CPPSet& set) {
  if (!set.is_ring) return "";
  return fmt("ring: theta = %.9f about axis (%.6f, %.6f, %.6f)\n", *set.ring_theta, set.ring_axis->x(),
             set.ring_axis->y(), set.ring_axis->z());
}

int cmd_ent(const StateInput& in, const SolverFlags& sf) {
  const SymmetricState st = in.load();
  const SolverConfig cfg = sf.get();
  const CPPSet set = detect_ring(st, find_cpps(st, cfg), cfg);
  const EntanglementValue e = EntanglementValue::from_max_amplitude(set.max_value);
  std::string text = fmt("Eg = %.9f\nEG = %.9f\n", e.eg_log2, e.eg_linear);
  text += set.is_ring ? fmt("CPPs: ring (%zu sampled maxima)\n", set.cpps.size()) : fmt("CPPs: %zu\n", set.cpps.size());
  emit_json(cpp_json(st, set), Json{{"input", in.describe()}, {"solver", sf.describe()}}, text);
  return 0;
}

int cmd_cpps(const StateInput& in, const SolverFlags& sf) {
  const SymmetricState st = in.load();
  const SolverConfig cfg = sf.get();
  const CPPSet set = detect_ring(st, find_cpps(st, cfg), cfg);
  std::string text = fmt("max f = %.12f (f^2 = %.12f)\n", set.max_value, set.max_value * set.max_value);
  text += fmt("%zu CPPs from %d converged of %d seeds\n", set.cpps.size(), set.converged, set.seeds);
  text += ring_text(set);
  text += "theta phi:\n" + points_text(set.cpps);
  emit_json(cpp_json(st, set), Json{{"input", in.describe()}, {"solver", sf.describe()}}, text);
  return 0;
}

int cmd_points(const StateInput& in) {
  const SymmetricState st = in.load();
  const MajoranaPoints pts = state_to_points(st);
  const std::string text = fmt("%d Majorana points (theta phi), min separation %.3e:\n", pts.n, min_separation(pts)) +
                           points_text(pts.points);
  emit_json(points_to_json(pts), Json{{"input", in.describe()}}, text);
  return 0;
}

int cmd_state(const std::string& file) {
  const MajoranaPoints pts = read_points_file(file);
  const SymmetricState st = canonical_phase(points_to_state(pts));
  std::string text = fmt("n = %d, K = %.12g\nk re im:\n", st.n(), normalization_K(pts).value());
  for (int k = 0; k <= st.n(); ++k)
    text += fmt("  %d %s %s\n", k, format_double(st.amp(k).real()).c_str(), format_double(st.amp(k).imag()).c_str());
  emit_json(state_to_json(st), Json{{"input", file}}, text);
  return 0;
}

int cmd_dicke(int n, std::optional<int> k, bool csv) {
  std::vector<int> ks;
  if (k) {
    ks.push_back(*k);
  } else {
    for (int i = 0; i <= n; ++i) ks.push_back(i);
  }
  std::string text = fmt("%4s %4s %14s %14s %14s\n", "n", "k", "cpp_theta", "Eg", "EG");
  std::string rows = "n,k,cpp_theta,eg_log2,eg_linear\n";
  Json arr = Json::array();
  for (int kk : ks) {
    const double e = dicke_entanglement(n, kk);
    const double theta = dicke_cpp(n, kk).theta;
    const double lin = 1.0 - std::exp2(-e);
    text += fmt("%4d %4d %14.9f %14.9f %14.9f\n", n, kk, theta, e, lin);
    rows += fmt("%d,%d,", n, kk) + format_double(theta) + "," + format_double(e) + "," + format_double(lin) + "\n";
    arr.push_back(Json{{"n", n}, {"k", kk}, {"cpp_theta", theta}, {"eg_log2", e}, {"eg_linear", lin}});
  }
  const Json config{{"n", n}, {"k", k ? Json(*k) : Json()}};
  if (csv) {
    emit_csv(rows, config, text);
  } else {
    emit_json(Json{{"rows", arr}}, config, text);
  }
  return 0;
}

int cmd_bounds(int n_min, int n_max, bool csv) {
  std::string text = fmt("%4s %14s %14s %14s %10s %10s\n", "n", "dicke_lower", "stirling_lower", "upper",
                         "gen_lower", "gen_upper");
  std::string rows = "n,dicke_lower,stirling_lower,upper,general_lower,general_upper\n";
  Json arr = Json::array();
  for (int n = n_min; n <= n_max; ++n) {
    const BoundsReport b = entanglement_bounds(n);
    text += fmt("%4d %14.9f %14.9f %14.9f %10.1f %10.1f\n", n, b.dicke_lower, b.stirling_lower, b.upper, b.general_lower,
                b.general_upper);
    rows += std::to_string(n) + "," + format_double(b.dicke_lower) + "," + format_double(b.stirling_lower) + "," +
            format_double(b.upper) + "," + format_double(b.general_lower) + "," + format_double(b.general_upper) + "\n";
    arr.push_back(Json{{"n", n},
                       {"dicke_lower", b.dicke_lower},
                       {"stirling_lower", b.stirling_lower},
                       {"upper", b.upper},
                       {"general_lower", b.general_lower},
                       {"general_upper", b.general_upper}});
  }
  const Json config{{"n_min", n_min}, {"n_max", n_max}};
  if (csv) {
    emit_csv(rows, config, text);
  } else {
    emit_json(Json{{"rows", arr}}, config, text);
  }
  return 0;
}

int cmd_moments(const std::string& points_file, const StateInput& in, double tol) {
  MajoranaPoints pts;
  Json source;
  if (!points_file.empty()) {
    pts = read_points_file(points_file);
    source = points_file;
  } else {
    pts = state_to_points(in.load());
    source = in.describe();
  }
  const MomentReport r = moment_report(pts);
  std::string text = fmt("spin vector = (%.3e, %.3e, %.3e), |spin| = %.6e\n", r.spin_vector.x(), r.spin_vector.y(),
                         r.spin_vector.z(), r.spin_vector.norm());
  text += fmt("second-moment deviation = %.6e\n", r.second_moment_deviation);
  text += fmt("anticoherent (order 1): %s\n2-design: %s\n", r.anticoherent(tol) ? "yes" : "no",
              r.design(2, tol) ? "yes" : "no");
  Json body{{"spin_vector", {r.spin_vector.x(), r.spin_vector.y(), r.spin_vector.z()}},
            {"spin_norm", r.spin_vector.norm()},
            {"second_moment_deviation", r.second_moment_deviation},
            {"anticoherent", r.anticoherent(tol)},
            {"design2", r.design(2, tol)}};
  emit_json(body, Json{{"input", source}, {"tol", tol}}, text);
  return 0;
}

int cmd_duality(const std::vector<std::string>& files, const std::vector<std::string>& platonic, const SolverFlags& sf) {
  std::vector<SymmetricState> st;
  if (files.size() == 2 && platonic.empty()) {
    for (const auto& f : files) st.push_back(read_state_file(f));
  } else if (platonic.size() == 2 && files.empty()) {
    for (const auto& p : platonic) st.push_back(platonic_state(p));
  } else {
    throw InputError("duality needs two state files or --platonic A B");
  }
  const DualityReport r = duality_report(st[0], st[1], sf.get());
  std::string text = fmt("MPs(a) vs CPPs(b): %.3e\nCPPs(a) vs MPs(b): %.3e\nCPP counts: %d, %d\n%s\n",
                         r.mps_a_to_cpps_b, r.cpps_a_to_mps_b, r.cpp_count_a, r.cpp_count_b,
                         r.dual_pair() ? "dual pair" : "not a dual pair");
  Json body{{"mps_a_to_cpps_b", r.mps_a_to_cpps_b},
            {"cpps_a_to_mps_b", r.cpps_a_to_mps_b},
            {"cpp_count_a", r.cpp_count_a},
            {"cpp_count_b", r.cpp_count_b},
            {"dual_pair", r.dual_pair()}};
  emit_json(body, Json{{"files", files}, {"platonic", platonic}, {"solver", sf.describe()}}, text);
  return 0;
}

struct SearchFlags {
  SearchConfig cfg;
  std::string mode = "positive";
  std::optional<int> rot_order, rot_offset, subset_size;
  std::vector<int> support;
  bool no_masks = false;

  SearchConfig get(const SolverFlags& sf) {
    SearchConfig c = cfg;
    c.mode = parse_search_mode(mode);
    c.rot_order = rot_order;
    c.rot_offset = rot_offset;
    c.subset_size = subset_size;
    if (!support.empty()) c.support = support;
    c.enumerate_masks = !no_masks;
    c.inner = sf.get();
    c.rng_seed = g.seed;
    c.validate();
    return c;
  }
};

int cmd_search(SearchFlags& f, const SolverFlags& sf) {
  const SearchConfig c = f.get(sf);
  const SearchResult r = search_max(c);
  std::string text = fmt("n = %d, mode = %s\nEg = %.9f\nEG = %.9f\n", c.n, std::string(to_string(c.mode)).c_str(),
                         r.entanglement.eg_log2, r.entanglement.eg_linear);
  text += fmt("restarts agreeing within %.1e: %d of %zu\n", c.outer_tol, r.restarts_agreeing, r.restarts.size());
  text += "support:";
  for (int k : r.support) text += " " + std::to_string(k);
  text += "\namplitudes (k re im):\n";
  for (int k = 0; k <= c.n; ++k)
    if (std::abs(r.state.amp(k)) > kSupportTol)
      text += fmt("  %d %.12f %.12f\n", k, r.state.amp(k).real(), r.state.amp(k).imag());
  Json body = state_to_json(r.state);
  body["points"] = point_list_json(r.points.points);
  body["eg_log2"] = r.entanglement.eg_log2;
  body["eg_linear"] = r.entanglement.eg_linear;
  body["restarts_agreeing"] = r.restarts_agreeing;
  body["support"] = r.support;
  Json hist = Json::array();
  for (const auto& h : r.history) hist.push_back(Json::array({h.iteration, h.best}));
  body["history"] = hist;
  Json config{{"n", c.n},
              {"mode", to_string(c.mode)},
              {"rot_order", c.rot_order ? Json(*c.rot_order) : Json()},
              {"rot_offset", c.rot_offset ? Json(*c.rot_offset) : Json()},
              {"support", f.support},
              {"enumerate_masks", c.enumerate_masks},
              {"subset_size", c.subset_size ? Json(*c.subset_size) : Json()},
              {"outer_restarts", c.outer_restarts},
              {"outer_tol", c.outer_tol},
              {"max_evals", c.max_evals},
              {"polish", c.polish},
              {"inner", sf.describe()}};
  emit_json(body, config, text);
  return 0;
}

int cmd_classical(ClassicalConfig c, const std::string& problem, bool evaluate, const SolverFlags& sf) {
  c.problem = parse_classical_problem(problem);
  c.rng_seed = g.seed;
  const MajoranaPoints pts = classical_points(c);
  std::string text = fmt("%s, n = %d\nmin pair angle = %.9f deg\nCoulomb energy = %.9f\n", problem.c_str(), c.n,
                         min_pair_angle(pts.points) * 180.0 / std::numbers::pi, coulomb_energy(pts.points));
  Json body = points_to_json(pts);
  body["min_pair_angle"] = min_pair_angle(pts.points);
  body["coulomb_energy"] = coulomb_energy(pts.points);
  if (evaluate) {
    const SearchResult r = evaluate_candidate(pts, sf.get());
    text += fmt("Eg of the points' state = %.9f\n", r.entanglement.eg_log2);
    body["eg_log2"] = r.entanglement.eg_log2;
  }
  text += "theta phi:\n" + points_text(pts.points);
  emit_json(body,
            Json{{"n", c.n}, {"problem", problem}, {"restarts", c.restarts}, {"step_tol", c.step_tol},
                 {"evaluate", evaluate}},
            text);
  return 0;
}

int cmd_table(TableOptions o, const std::string& mode) {
  o.positive = mode == "positive" || mode == "all";
  o.general = mode == "general" || mode == "all";
  if (!o.positive && !o.general) throw InputError("--mode must be positive, general or all");
  if (o.general && !o.positive) o.positive = true;  // the general column falls back on the positive result
  o.rng_seed = g.seed;
  const auto rows = reproduce_table(o);
  std::string text = fmt("%3s %12s %12s %-12s %12s %-12s %12s\n", "n", "dicke", "positive", "", "general", "", "upper");
  for (const auto& r : rows)
    text += fmt("%3d %12.9f %12.9f %-12s %12.9f %-12s %12.9f\n", r.n, r.dicke.value, r.positive.value,
                r.positive.status.c_str(), r.general.value, r.general.status.c_str(), r.upper.value);
  emit_csv(table_csv(rows),
           Json{{"n_min", o.n_min}, {"n_max", o.n_max}, {"mode", mode}, {"general_from", o.general_from},
                {"restarts", o.restarts}, {"max_evals", o.max_evals}},
           text);
  return 0;
}

int cmd_grid(const StateInput& in, int n_theta, int n_phi) {
  const SymmetricState st = in.load();
  const auto grid = amplitude_grid(st, n_theta, n_phi);
  emit_csv(amplitude_grid_csv(grid), Json{{"input", in.describe()}, {"n_theta", n_theta}, {"n_phi", n_phi}},
           fmt("wrote %zu samples\n", grid.size()));
  return 0;
}

int cmd_mbqc(int k) {
  const MbqcReport r = eta_threshold(k);
  std::string text = fmt("k = %d\nEG asymptotic = %.9f\neta threshold = %.6e\n0.001 k^-3/2 = %.6e\nruled out at 0.001 k^-3/2: %s\n",
                         r.k, r.eg_linear_asymptotic, r.eta_threshold, r.paper_threshold, r.ruled_out ? "yes" : "no");
  Json body{{"k", r.k},
            {"eg_linear_asymptotic", r.eg_linear_asymptotic},
            {"eta_threshold", r.eta_threshold},
            {"paper_threshold", r.paper_threshold},
            {"ruled_out", r.ruled_out}};
  emit_json(body, Json{{"k", k}}, text);
  return 0;
}

int cmd_verify(VerifyOptions o) {
  o.rng_seed = g.seed;
  const auto results = run_verify(o);
  bool ok = true;
  std::string text;
  Json arr = Json::array();
  for (const auto& s : results) {
    text += fmt("[%s] %s\n", s.passed ? "PASS" : "FAIL", s.name.c_str());
    for (const auto& l : s.lines) text += "    " + l + "\n";
    ok = ok && s.passed;
    arr.push_back(Json{{"suite", s.name}, {"passed", s.passed}, {"lines", s.lines}});
  }
  text += fmt("%s: %zu suites\n", ok ? "PASS" : "FAIL", results.size());
  emit_json(Json{{"passed", ok}, {"suites", arr}},
            Json{{"suites", o.suites}, {"n", o.n ? Json(*o.n) : Json()}, {"corrupt", o.corrupt}}, text);
  return ok ? 0 : kExitVerify;
}

int cmd_classify(const StateInput& in) {
  const SymmetricState st = in.load();
  const StateClassification c = classify(canonical_phase(st));
  const MajoranaPoints mps = state_to_points(st);
  const double reflect = hausdorff_angle(mps.points, reflect_xz(mps).points);
  std::string text = fmt("positive: %s\nreal: %s\n", c.is_positive ? "yes" : "no", c.is_real ? "yes" : "no");
  text += "rotation orders:";
  for (int m : c.rot_orders) text += " " + std::to_string(m);
  text += "\nsupport:";
  for (int k : c.support) text += " " + std::to_string(k);
  text += fmt("\nMP set vs its reflection through the x-z plane: %.3e\n", reflect);
  Json body{{"is_positive", c.is_positive},
            {"is_real", c.is_real},
            {"rot_orders", c.rot_orders},
            {"support", c.support},
            {"mp_reflection_distance", reflect}};
  emit_json(body, Json{{"input", in.describe()}}, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric entanglement of symmetric multiqubit states"};
  app.require_subcommand(1);
  // Global options are also accepted after the subcommand.
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads (overrides MAJ_ENT_THREADS)");
  app.add_flag("--json", g.json, "print JSON instead of text");
  app.add_option("--out", g.out, "write the result file here");
  app.add_flag("--timing", g.timing, "record wall time in the manifest (output is then not byte-reproducible)");

  std::function<int()> run;
  auto bind = [&](CLI::App* sub, std::function<int()> fn) {
    sub->callback([&run, fn, sub] {
      g.command = sub->get_name();
      run = fn;
    });
  };

  StateInput ent_in, cpps_in, points_in, grid_in, classify_in, moments_in;
  SolverFlags ent_sf, cpps_sf, dual_sf, search_sf, classical_sf;

  auto* ent = app.add_subcommand("ent", "geometric entanglement of a state");
  ent_in.add(ent);
  ent_sf.add(ent);
  bind(ent, [&] { return cmd_ent(ent_in, ent_sf); });

  auto* cpps = app.add_subcommand("cpps", "closest product points of a state");
  cpps_in.add(cpps);
  cpps_sf.add(cpps);
  bind(cpps, [&] { return cmd_cpps(cpps_in, cpps_sf); });

  auto* points = app.add_subcommand("points", "Majorana points of a state");
  points_in.add(points);
  bind(points, [&] { return cmd_points(points_in); });

  std::string state_file;
  auto* state = app.add_subcommand("state", "state from a Majorana points file");
  state->add_option("file", state_file, "points JSON file")->required();
  bind(state, [&] { return cmd_state(state_file); });

  int dicke_n = 0;
  std::optional<int> dicke_k;
  bool dicke_csv = false;
  auto* dicke = app.add_subcommand("dicke", "closed-form Dicke-state entanglement");
  dicke->add_option("--n", dicke_n, "qubits")->required();
  dicke->add_option("--k", dicke_k, "excitations (default: all)");
  dicke->add_flag("--csv", dicke_csv, "CSV output");
  bind(dicke, [&] { return cmd_dicke(dicke_n, dicke_k, dicke_csv); });

  int bounds_n = 0, bounds_n_max = 0;
  bool bounds_csv = false;
  auto* bounds = app.add_subcommand("bounds", "entanglement bounds");
  auto* bn = bounds->add_option("--n", bounds_n, "single n");
  bounds->add_option("--n-max", bounds_n_max, "rows n = 2..n_max")->excludes(bn);
  bounds->add_flag("--csv", bounds_csv, "CSV output");
  bind(bounds, [&] {
    if (bounds_n == 0 && bounds_n_max == 0) throw InputError("bounds needs --n or --n-max");
    return bounds_n ? cmd_bounds(bounds_n, bounds_n, bounds_csv) : cmd_bounds(2, bounds_n_max, bounds_csv);
  });

  std::string moments_points;
  double moments_tol = 1e-9;
  auto* moments = app.add_subcommand("moments", "spin vector and second moments of the Majorana points");
  moments->add_option("--points", moments_points, "points JSON file");
  moments_in.add(moments);
  moments->add_option("--tol", moments_tol, "tolerance of the anticoherence and design predicates")->capture_default_str();
  bind(moments, [&] { return cmd_moments(moments_points, moments_in, moments_tol); });

  std::vector<std::string> dual_files, dual_platonic;
  auto* duality = app.add_subcommand("duality", "MP/CPP interchange between two states");
  duality->add_option("files", dual_files, "two state files");
  duality->add_option("--platonic", dual_platonic, "two built-in Platonic states")->expected(2);
  dual_sf.add(duality);
  bind(duality, [&] { return cmd_duality(dual_files, dual_platonic, dual_sf); });

  SearchFlags sflags;
  auto* search = app.add_subcommand("search", "search for maximally entangled states");
  search->add_option("--n", sflags.cfg.n, "qubits")->required();
  search->add_option("--mode", sflags.mode, "positive, real or general")->capture_default_str();
  search->add_option("--rot-order", sflags.rot_order, "restrict the support to one rotation order m");
  search->add_option("--rot-offset", sflags.rot_offset, "with --rot-order: the residue k0");
  search->add_option("--support", sflags.support, "explicit support indices");
  search->add_option("--subset-size", sflags.subset_size, "also search every support of this size");
  search->add_flag("--no-masks", sflags.no_masks, "search the full support only");
  search->add_option("--restarts", sflags.cfg.outer_restarts, "restarts per support")->capture_default_str();
  search->add_option("--outer-tol", sflags.cfg.outer_tol, "agreement tolerance")->capture_default_str();
  search->add_option("--max-evals", sflags.cfg.max_evals, "evaluations per simplex run")->capture_default_str();
  search_sf.cfg.n_starts = 200;
  search_sf.add(search);
  bind(search, [&] { return cmd_search(sflags, search_sf); });

  ClassicalConfig ccfg;
  std::string cproblem = "thomson";
  bool cevaluate = false;
  auto* classical = app.add_subcommand("classical", "Thomson or Toth point configurations");
  classical->add_option("--n", ccfg.n, "points")->required();
  classical->add_option("--problem", cproblem, "thomson or toth")->capture_default_str();
  classical->add_option("--restarts", ccfg.restarts, "random restarts")->capture_default_str();
  classical->add_option("--step-tol", ccfg.step_tol, "tangential gradient tolerance")->capture_default_str();
  classical->add_flag("--evaluate", cevaluate, "also compute Eg of the points' state");
  classical_sf.add(classical);
  bind(classical, [&] { return cmd_classical(ccfg, cproblem, cevaluate, classical_sf); });

  TableOptions topt;
  std::string tmode = "all";
  auto* table = app.add_subcommand("table", "reproduce the maximal-entanglement table");
  table->add_option("--n-min", topt.n_min, "first row")->capture_default_str();
  table->add_option("--n-max", topt.n_max, "last row")->capture_default_str();
  table->add_option("--mode", tmode, "positive, general or all")->capture_default_str();
  table->add_option("--general-from", topt.general_from, "run general searches from this n")->capture_default_str();
  table->add_option("--restarts", topt.restarts, "restarts per support")->capture_default_str();
  table->add_option("--max-evals", topt.max_evals, "evaluations per simplex run")->capture_default_str();
  bind(table, [&] { return cmd_table(topt, tmode); });

  int grid_nt = 91, grid_np = 180;
  auto* grid = app.add_subcommand("amplitude-grid", "CSV samples of f(theta, phi)");
  grid_in.add(grid);
  grid->add_option("--n-theta", grid_nt, "theta samples, poles included")->capture_default_str();
  grid->add_option("--n-phi", grid_np, "phi samples")->capture_default_str();
  bind(grid, [&] { return cmd_grid(grid_in, grid_nt, grid_np); });

  int mbqc_k = 1;
  auto* mbqc = app.add_subcommand("mbqc", "approximate-MBQC criteria for Dicke families");
  mbqc->add_option("--k", mbqc_k, "excitations")->capture_default_str();
  bind(mbqc, [&] { return cmd_mbqc(mbqc_k); });

  VerifyOptions vopt;
  int verify_n = 0;
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--suite", vopt.suites, "suite name (repeatable)");
  verify->add_option("--n", verify_n, "restrict per-n suites to this n");
  verify->add_flag("--corrupt", vopt.corrupt, "perturb every checked value; all suites must fail");
  bind(verify, [&] {
    if (verify_n) vopt.n = verify_n;
    return cmd_verify(vopt);
  });

  auto* cls = app.add_subcommand("classify", "positivity, reality and rotational symmetry");
  classify_in.add(cls);
  bind(cls, [&] { return cmd_classify(classify_in); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  int threads = 1;
  if (const char* env = std::getenv("MAJ_ENT_THREADS")) {
    try {
      threads = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: MAJ_ENT_THREADS must be an integer\n";
      return kExitInput;
    }
  }
  if (g.threads) threads = *g.threads;
  set_thread_count(threads);

  try {
    return run();
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
