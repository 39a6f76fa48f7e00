#include "majent/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include "majent/analysis.hpp"
#include "majent/geometry.hpp"
#include "majent/io.hpp"
#include "majent/mbqc.hpp"

namespace majent {

namespace {

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

}  // namespace

SearchConfig table_search_config(int n, SearchMode mode, const TableOptions& options) {
  SearchConfig c;
  c.n = n;
  c.mode = mode;
  c.outer_restarts = options.restarts;
  c.max_evals = options.max_evals;
  c.rng_seed = options.rng_seed;
  if (mode == SearchMode::general && n == 12) {
    // Seed with the support of the icosahedron state.
    c.rot_order = 5;
    c.rot_offset = 1;
  }
  return c;
}

TableCellResult judge_cell(int n, const std::string& column, double value, int agreeing) {
  const TableCell& ref = reference_cell(n, column);
  TableCellResult r;
  r.computed = true;
  r.value = value;
  r.target = ref.value;
  r.delta = value - ref.value;
  r.tolerance = ref.tolerance();
  r.agreeing = agreeing;
  if (ref.kind != "closed" && agreeing < 3) {
    r.status = "UNCONVERGED";
  } else if (std::abs(r.delta) <= r.tolerance) {
    r.status = "OK";
  } else {
    r.status = r.delta > 0.0 ? "EXCEEDS" : "MISMATCH";
  }
  return r;
}

std::vector<TableRow> reproduce_table(const TableOptions& options) {
  if (options.n_min < 2 || options.n_max > 12 || options.n_min > options.n_max)
    throw std::domain_error("reproduce_table: need 2 <= n_min <= n_max <= 12");
  std::vector<TableRow> rows;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    TableRow row;
    row.n = n;
    row.dicke = judge_cell(n, "dicke", dicke_entanglement(n, n / 2), 0);
    row.upper = judge_cell(n, "upper", entanglement_bounds(n).upper, 0);
    std::optional<SearchResult> pos;
    if (options.positive) {
      pos = search_max(table_search_config(n, SearchMode::positive, options));
      row.positive = judge_cell(n, "positive", pos->entanglement.eg_log2, pos->restarts_agreeing);
      row.positive.support = pos->support;
    }
    if (options.general) {
      if (n >= options.general_from) {
        const SearchResult gen = search_max(table_search_config(n, SearchMode::general, options));
        // Positive states are feasible in general mode: keep the better one.
        if (pos && pos->entanglement.eg_log2 > gen.entanglement.eg_log2) {
          row.general = judge_cell(n, "general", pos->entanglement.eg_log2, pos->restarts_agreeing);
          row.general.support = pos->support;
        } else {
          row.general = judge_cell(n, "general", gen.entanglement.eg_log2, gen.restarts_agreeing);
          row.general.support = gen.support;
        }
      } else if (pos) {
        row.general = judge_cell(n, "general", row.positive.value, row.positive.agreeing);
        row.general.support = row.positive.support;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out =
      "n,dicke_max,dicke_delta,positive_max,positive_delta,positive_agreeing,positive_status,"
      "general_max,general_delta,general_agreeing,general_status,upper,upper_delta\n";
  auto cell = [](const TableCellResult& c, bool with_agreement) {
    std::string s;
    if (!c.computed) return std::string(with_agreement ? ",,," : ",") + c.status;
    s = format_double(c.value) + "," + format_double(c.delta);
    if (with_agreement) s += "," + std::to_string(c.agreeing) + "," + c.status;
    return s;
  };
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ",";
    out += format_double(r.dicke.value) + "," + format_double(r.dicke.delta) + ",";
    out += cell(r.positive, true) + ",";
    out += cell(r.general, true) + ",";
    out += format_double(r.upper.value) + "," + format_double(r.upper.delta) + "\n";
  }
  return out;
}

namespace {

struct Context {
  const VerifyOptions& opt;
  double tamper(double v) const { return opt.corrupt ? v + 1e-3 * (1.0 + std::abs(v)) : v; }
  std::vector<int> ns(int lo, int hi) const {
    if (opt.n) return {*opt.n};
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
};

void check(SuiteResult& s, bool ok, const std::string& line) {
  s.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
  if (!ok) s.passed = false;
}

SuiteResult suite_theorem1(const Context& cx) {
  SuiteResult s{"theorem1", true, {}};
  std::mt19937_64 rng(cx.opt.rng_seed);
  for (int n : cx.ns(1, 12)) {
    const double target = 4.0 * std::numbers::pi / (n + 1);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double v = cx.tamper(integrate_amplitude_sq(random_state(n, rng), QuadratureSpec::defaults(n)));
      worst = std::max(worst, std::abs(v - target) / target);
    }
    check(s, worst < 1e-8, fmt("n=%d integral of f^2 = 4pi/%d = %.12f, worst relative error %.2e over 100 states", n, n + 1, target, worst));
  }
  return s;
}

SuiteResult suite_roundtrip(const Context& cx) {
  SuiteResult s{"roundtrip", true, {}};
  std::mt19937_64 rng(cx.opt.rng_seed + 1);
  for (int n : cx.ns(1, 12)) {
    double worst = 0.0;
    int used = 0, skipped = 0;
    while (used < 100) {
      const SymmetricState st = random_state(n, rng);
      const MajoranaPoints pts = state_to_points(st);
      if (min_separation(pts) <= 1e-3) {
        ++skipped;
        continue;
      }
      const double fid = cx.tamper(std::norm(inner(st, points_to_state(pts))));
      worst = std::max(worst, std::abs(1.0 - fid));
      ++used;
    }
    check(s, worst <= 1e-8, fmt("n=%d coefficients -> points -> coefficients, worst infidelity %.2e (100 states, %d skipped)", n, worst, skipped));
  }
  return s;
}

SuiteResult suite_dicke(const Context& cx) {
  SuiteResult s{"dicke", true, {}};
  for (int n : cx.ns(2, 12)) {
    double worst = 0.0;
    bool symmetric = true;
    for (int k = 0; k <= n; ++k) {
      const double closed = dicke_entanglement(n, k);
      symmetric = symmetric && closed == dicke_entanglement(n, n - k);
      const double numeric = cx.tamper(geometric_entanglement(make_dicke(n, k)).eg_log2);
      worst = std::max(worst, std::abs(numeric - closed));
    }
    const TableCell& ref = reference_cell(n, "dicke");
    const double dref = std::abs(cx.tamper(dicke_entanglement(n, n / 2)) - ref.value);
    check(s, worst < 1e-7 && symmetric && dref < 1e-9,
          fmt("n=%d closed form vs solver max |diff| %.2e, k<->n-k symmetric, reference diff %.2e", n, worst, dref));
  }
  return s;
}

SuiteResult suite_bounds(const Context& cx) {
  SuiteResult s{"bounds", true, {}};
  for (int n : cx.ns(2, 12)) {
    const BoundsReport b = entanglement_bounds(n);
    const double dicke = cx.tamper(b.dicke_lower);
    const double pos = reference_cell(n, "positive").value;
    const double gen = reference_cell(n, "general").value;
    const bool chain = b.stirling_lower <= dicke && dicke <= pos + 1e-9 && pos <= gen + 1e-9 && gen < b.upper &&
                       std::abs(dicke - reference_cell(n, "dicke").value) < 1e-9 &&
                       std::abs(b.upper - reference_cell(n, "upper").value) < 1e-9;
    check(s, chain, fmt("n=%d stirling %.6f <= dicke %.9f <= positive %.9f <= general %.9f < log2(n+1) %.9f", n,
                        b.stirling_lower, dicke, pos, gen, b.upper));
  }
  return s;
}

SuiteResult suite_duality(const Context& cx) {
  SuiteResult s{"duality", true, {}};
  const std::pair<const char*, const char*> pairs[] = {
      {"tetrahedron", "tetrahedron"}, {"octahedron", "cube"}, {"icosahedron", "dodecahedron"}};
  for (const auto& [a, b] : pairs) {
    const DualityReport r = duality_report(platonic_state(a), platonic_state(b));
    const double d1 = cx.tamper(r.mps_a_to_cpps_b);
    const double d2 = cx.tamper(r.cpps_a_to_mps_b);
    check(s, d1 < 1e-5 && d2 < 1e-5,
          fmt("%s / %s: MPs(a) vs CPPs(b) %.2e, CPPs(a) vs MPs(b) %.2e", a, b, d1, d2));
  }
  return s;
}

SuiteResult suite_lemmas(const Context& cx) {
  SuiteResult s{"lemmas", true, {}};
  std::mt19937_64 rng(cx.opt.rng_seed + 2);
  for (int n : cx.ns(4, 8)) {
    int failures = 0, excluded = 0;
    double worst_reflect = 0.0;
    for (int i = 0; i < 200; ++i) {
      const SymmetricState st = random_positive_state(n, rng);
      const CppStructureReport rep = verify_cpp_structure(st, find_cpps(st));
      if (rep.excluded) ++excluded;
      if (rep.failure) ++failures;
      const MajoranaPoints mps = state_to_points(random_real_state(n, rng));
      worst_reflect = std::max(worst_reflect, cx.tamper(hausdorff_angle(mps.points, reflect_xz(mps).points)));
    }
    check(s, failures == 0 && worst_reflect < 1e-8,
          fmt("n=%d positive states: %d structure violations (%d excluded) of 200; real states MP reflection mismatch %.2e",
              n, failures, excluded, worst_reflect));
  }
  return s;
}

SuiteResult suite_mbqc(const Context& cx) {
  SuiteResult s{"mbqc", true, {}};
  const MbqcReport r = eta_threshold(1);
  const double eta = cx.tamper(r.eta_threshold);
  check(s, eta > 1e-3 / 3.0 && eta < 3e-3, fmt("k=1 threshold eta* = %.6e (rough form 1e-3)", eta));
  const double finite = 1.0 - std::exp2(-dicke_entanglement(10000, 1));
  const double gap = std::abs(cx.tamper(finite) - (1.0 - std::exp(-1.0)));
  check(s, gap < 1e-3, fmt("n=10^4 finite linear entanglement %.9f vs 1-1/e, gap %.2e", finite, gap));
  bool decreasing = true;
  for (int k = 1; k < 100; ++k) decreasing = decreasing && eta_threshold(k + 1).eta_threshold < eta_threshold(k).eta_threshold;
  check(s, decreasing, "threshold strictly decreasing for k = 1..100");
  return s;
}

SuiteResult suite_search(const Context& cx) {
  SuiteResult s{"search", true, {}};
  TableOptions topt;
  topt.rng_seed = cx.opt.rng_seed;
  for (int n : cx.ns(4, 8)) {
    if (n < 4 || n > 8) continue;
    const SearchResult r = search_max(table_search_config(n, SearchMode::positive, topt));
    const TableCellResult c = judge_cell(n, "positive", cx.tamper(r.entanglement.eg_log2), r.restarts_agreeing);
    check(s, c.status == "OK",
          fmt("n=%d positive search %.9f vs %.9f, diff %.2e, %d restarts agree: %s", n, c.value, c.target, c.delta,
              c.agreeing, c.status.c_str()));
  }
  return s;
}

using SuiteFn = SuiteResult (*)(const Context&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"theorem1", suite_theorem1}, {"roundtrip", suite_roundtrip}, {"dicke", suite_dicke},
      {"bounds", suite_bounds},     {"duality", suite_duality},     {"lemmas", suite_lemmas},
      {"mbqc", suite_mbqc},         {"search", suite_search}};
  return r;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& options) {
  for (const auto& name : options.suites) {
    const auto& r = registry();
    if (std::none_of(r.begin(), r.end(), [&](const auto& e) { return e.first == name; }))
      throw std::domain_error("unknown verify suite: " + name);
  }
  const Context cx{options};
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : registry()) {
    if (!options.suites.empty() && std::find(options.suites.begin(), options.suites.end(), name) == options.suites.end())
      continue;
    out.push_back(fn(cx));
  }
  return out;
}

}  // namespace majent
