// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when a gating criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sigf5/bounds.hpp"
#include "sigf5/cli.hpp"
#include "sigf5/f5.hpp"
#include "sigf5/macaulay.hpp"
#include "sigf5/regularity.hpp"
#include "sigf5/system_io.hpp"

using namespace sigf5;
using json = nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

std::string fmt(const char* pattern, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

struct CliOutcome {
  int code;
  std::string out;
  std::string err;
};

CliOutcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sigf5");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// ---- criterion 1: the circles worked example ----

const json& find_step(const json& trace, unsigned d, std::size_t i) {
  for (const auto& s : trace) {
    if (s["d"] == d && s["i"] == i) return s;
  }
  throw std::runtime_error("missing step");
}

// True when `row` is a nonzero multiple of `printed` over GF(p).
bool proportional(const json& row, const std::vector<std::int64_t>& printed, const PrimeField& f) {
  const auto& dense = row["dense"];
  if (dense.size() != printed.size()) return false;
  std::size_t lead = 0;
  while (lead < printed.size() && printed[lead] == 0) ++lead;
  if (lead == printed.size() || dense[lead].get<std::int64_t>() == 0) return false;
  const Fp scale = f.div(f.element(dense[lead].get<std::int64_t>()), f.element(printed[lead]));
  for (std::size_t c = 0; c < printed.size(); ++c) {
    if (f.element(dense[c].get<std::int64_t>()) != f.mul(scale, f.element(printed[c]))) return false;
  }
  return true;
}

Verdict criterion_circles() {
  Verdict v;
  const auto t0 = Clock::now();
  const auto r = cli({"gb", std::string(SIGF5_DATA_DIR) + "/circles.sys", "--trace", "--format", "json"});
  const double elapsed = seconds_since(t0);
  v.require(r.code == 0, "gb exit code " + std::to_string(r.code));
  if (r.code != 0) return v;
  const json doc = json::parse(r.out);
  const PrimeField field(doc["p"].get<std::uint32_t>());
  const auto& trace = doc["trace"];

  const auto& m23 = find_step(trace, 2, 3);
  v.require(m23["reduced"].size() == 3 && m23["cols"] == 10, "M_{2,3} is not 3 x 10");
  const std::vector<std::vector<std::int64_t>> printed{
      {1, 0, 1, -2, -2, 1, 0, 0, 0, 1}, {0, 1, -1, 2, 3, -2, 0, 0, 0, -3}, {0, 0, 2, -2, -4, 3, 0, 0, 0, 1}};
  for (std::size_t k = 0; k < 3 && k < m23["reduced"].size(); ++k) {
    v.require(proportional(m23["reduced"][k], printed[k], field), "reduced M_{2,3} row " + std::to_string(k + 1));
  }

  const std::vector<std::pair<std::string, std::string>> table{
      {"(1,h)", "x^2*h"}, {"(1,z)", "x^2*z"}, {"(1,y)", "x^2*y"}, {"(1,x)", "x^3"},
      {"(2,h)", "x*y*h"}, {"(2,z)", "x*y*z"}, {"(2,y)", "x*y^2"}, {"(2,x)", "y^3"},
      {"(3,h)", "y^2*h"}, {"(3,z)", "y^2*z"}, {"(3,y)", "x*z^2"}, {"(3,x)", "y*z^2"}};
  const auto& m33 = find_step(trace, 3, 3)["reduced"];
  bool same_table = m33.size() == table.size();
  for (std::size_t k = 0; same_table && k < table.size(); ++k) {
    same_table = m33[k]["signature"] == table[k].first && m33[k]["lt"] == table[k].second;
  }
  v.require(same_table, "degree-3 signature/LT table");

  std::set<std::string> excluded;
  for (std::size_t i = 1; i <= 3; ++i) {
    for (const auto& e : find_step(trace, 4, i)["excluded"]) excluded.insert(e.get<std::string>());
  }
  v.require(excluded == std::set<std::string>{"(2,x^2)", "(3,x*y)", "(3,x^2)"}, "degree-4 exclusions");
  const auto& m43 = find_step(trace, 4, 3);
  v.require(m43["built"].size() == 27 && m43["cols"] == 35, "M_{4,3} is not 27 x 35");

  bool z4 = false;
  for (const auto& e : doc["bases"][2]["new"]) z4 = z4 || (e["signature"] == "(3,y^2)" && e["lt"] == "z^4");
  v.require(z4, "new element ((3,y^2), z^4)");
  v.require(doc["totals"]["zero_reductions"] == 0, "reductions to zero");
  v.require(elapsed < 1.0, "runtime " + fmt("%.3f s", elapsed));
  v.detail = "M_{2,3} 3x10 rows match up to scale; 12-row degree-3 table; exclusions {(2,x^2),(3,xy),(3,x^2)}; "
             "M_{4,3} 27x35; ((3,y^2), z^4); 0 zero reductions; " + fmt("%.3f s", elapsed);
  return v;
}

// ---- criterion 2: printed N_F5 columns ----

Verdict criterion_tables() {
  Verdict v;
  const auto t0 = Clock::now();
  struct Table {
    unsigned delta;
    unsigned n_min;
    std::vector<double> printed;
  };
  const std::vector<Table> tables{{2, 7, {25.6, 29.7, 33.9, 38.1, 42.3, 46.4, 50.7, 54.9, 59.1, 63.3}},
                                  {3, 5, {24.2, 30.1, 36.1, 42.1, 48.15, 54.19}}};
  constexpr double kTolerance = 0.05;
  std::size_t matched = 0, total = 0;
  double worst = 0;
  for (const auto& t : tables) {
    const unsigned n_max = t.n_min + static_cast<unsigned>(t.printed.size()) - 1;
    const auto r = cli({"bounds", "--delta-min", std::to_string(t.delta), "--delta-max", std::to_string(t.delta),
                        "--n-min", std::to_string(t.n_min), "--n-max", std::to_string(n_max), "--format", "json"});
    v.require(r.code == 0, "bounds exit code");
    if (r.code != 0) continue;
    const json rows = json::parse(r.out);
    for (std::size_t k = 0; k < t.printed.size(); ++k) {
      const double ours = rows[k]["log2_nf5_exact"].get<double>();
      const double diff = std::abs(ours - t.printed[k]);
      worst = std::max(worst, diff);
      ++total;
      if (diff <= kTolerance) {
        ++matched;
      } else {
        char buf[160];
        std::snprintf(buf, sizeof buf, "delta=%u n=%u: %.4f vs printed %.2f (|diff| %.4f > %.2f)", t.delta,
                      t.n_min + static_cast<unsigned>(k), ours, t.printed[k], diff, kTolerance);
        v.require(false, buf);
      }
    }
  }
  const double elapsed = seconds_since(t0);
  v.require(elapsed < 1.0, "runtime " + fmt("%.3f s", elapsed));
  v.detail = std::to_string(matched) + "/" + std::to_string(total) + " printed log2 N_F5 values within 0.05; " +
             fmt("%.3f s", elapsed);
  return v;
}

// ---- criterion 3: asymptotic constants ----

Verdict criterion_constants() {
  Verdict v;
  const double log2_b[] = {4.294889968, 6.164453788, 7.446763612, 8.429308942, 9.227401400,
                           9.899960455, 10.48137341, 10.99352583, 11.45123225};
  double worst_b = 0;
  for (unsigned delta = 2; delta <= 10; ++delta) worst_b = std::max(worst_b, std::abs(log2_bigB(delta) - log2_b[delta - 2]));
  v.require(worst_b <= 1e-6, "log2 B deviation " + fmt("%.2e", worst_b));

  // Baseline exponent curves: delta = 2..10 on a linear axis, delta = 2^k, k = 1..14, on a log axis.
  const std::map<double, std::vector<double>> linear{
      {3.0, {6.0000, 8.2646, 9.7353, 10.829, 11.700, 12.425, 13.046, 13.588, 14.070}},
      {std::log2(7.0), {5.6145, 7.7338, 9.1100, 10.133, 10.949, 11.627, 12.208, 12.715, 13.166}},
      {2.376, {4.7519, 6.5456, 7.7103, 8.5765, 9.2667, 9.8406, 10.332, 10.762, 11.143}}};
  const std::map<double, std::vector<double>> logscale{
      {3.0, {6.0000, 9.7353, 13.046, 16.190, 19.260, 22.294, 25.311, 28.320, 31.324, 34.326, 37.327, 40.327, 43.328,
             46.328}},
      {std::log2(7.0), {5.6145, 9.1100, 12.208, 15.150, 18.022, 20.863, 23.685, 26.501, 29.311, 32.121, 34.929,
                        37.738, 40.544, 43.351}},
      {2.376, {4.7519, 7.7103, 10.332, 12.822, 15.254, 17.657, 20.046, 22.429, 24.808, 27.186, 29.564, 31.940,
               34.316, 36.692}}};
  // Gated: the delta = 2..10 panel. The log-axis panel is reported only; its Strassen curve is not
  // reproducible by any single omega within 1e-3 (fitted omega ranges over 2.8072..2.8074).
  auto worst_deviation = [](const std::map<double, std::vector<double>>& curves, auto delta_of, std::string& where) {
    double worst = 0;
    for (const auto& [omega, values] : curves) {
      for (std::size_t k = 0; k < values.size(); ++k) {
        const unsigned delta = delta_of(k);
        const double diff = std::abs(baseline_exponent(delta, omega) - values[k]);
        if (diff > worst) {
          worst = diff;
          where = "delta=" + std::to_string(delta) + " omega=" + fmt("%.4f", omega);
        }
      }
    }
    return worst;
  };
  std::string worst_at, worst_log_at;
  const double worst_e = worst_deviation(linear, [](std::size_t k) { return static_cast<unsigned>(k + 2); }, worst_at);
  const double worst_log =
      worst_deviation(logscale, [](std::size_t k) { return 1u << (k + 1); }, worst_log_at);
  v.require(worst_e <= 1e-3, "baseline exponent deviation " + fmt("%.2e", worst_e) + " at " + worst_at);

  bool sandwiched = true;
  for (unsigned delta = 2; delta <= 50; ++delta) {
    const double cube = std::pow(delta, 3.0);
    sandwiched = sandwiched && bigB(delta) >= cube && bigB(delta) <= 3 * cube;
  }
  v.require(sandwiched, "delta^3 <= B <= 3 delta^3 for delta = 2..50");
  const double ratio = bigB(10000) / 1e12;
  v.require(std::abs(ratio - 2.81405669) <= 1e-2, "B(10^4)/10^12 = " + fmt("%.8f", ratio));
  v.detail = "max |log2 B - printed| " + fmt("%.1e", worst_b) + " (delta 2..10); max baseline deviation " +
             fmt("%.1e", worst_e) + " over 27 curve points (delta 2..10; log-axis panel, ungated: " +
             fmt("%.1e", worst_log) + " at " + worst_log_at + "); delta^3 <= B <= 3 delta^3 (2..50); B(10^4)/delta^3 = " +
             fmt("%.8f", ratio);
  return v;
}

// ---- criteria 4, 5, 7, 8: seeded random systems ----

struct Config {
  unsigned delta;
  unsigned n;
};

struct RunRecord {
  Config config;
  std::uint64_t seed = 0;
  unsigned attempt = 0;
  std::size_t zero_top = 0;
  std::size_t zero_full = 0;
  std::uint64_t mults_top = 0;
  BigInt nf5;
  std::size_t polys = 0;
  BigInt polys_bound;
  StructureReport structure;
  std::size_t above_bound = 0;      // elements of degree above the Macaulay bound
  bool capped_run_checked = false;  // ran with D = Macaulay bound + 1
  bool hilbert_ok = false;
  bool hilbert_dual_checked = false;
  bool hilbert_dual_ok = true;
  double f5_seconds = 0;
  double verify_seconds = 0;
};

constexpr unsigned kSeedsPerConfig = 20;
constexpr unsigned kGenerationAttempts = 8;

RunRecord run_instance(Config c, std::uint64_t seed, bool dual_route) {
  RunRecord rec;
  rec.config = c;
  rec.seed = seed;
  SystemSpec spec;
  spec.nvars = c.n;
  spec.degrees.assign(c.n, c.delta);
  spec.seed = seed;
  auto t0 = Clock::now();
  const GeneratedSystem gen = gen_verified_system(spec, true, kGenerationAttempts);
  rec.verify_seconds += seconds_since(t0);
  rec.attempt = gen.attempt;
  const auto& sys = gen.polynomials;
  const unsigned bound = macaulay_bound(spec.degrees);

  t0 = Clock::now();
  F5Options top;
  const F5Result r = run_f5(sys, top);
  F5Options full;
  full.mode = ReductionMode::full;
  const F5Result rf = run_f5(sys, full);
  rec.f5_seconds = seconds_since(t0);

  const RunTotals t = r.stats.totals();
  rec.zero_top = t.zero_reductions;
  rec.zero_full = rf.stats.totals().zero_reductions;
  rec.mults_top = t.multiplications;
  rec.nf5 = nf5_exact(c.n, spec.degrees);
  rec.polys = t.polys_computed;
  rec.polys_bound = polys_bound(spec.degrees);
  rec.structure = structure_check(r, true);
  const auto full_structure = structure_check(rf, true);
  rec.structure.violations.insert(rec.structure.violations.end(), full_structure.violations.begin(),
                                  full_structure.violations.end());
  for (const auto& e : r.elements) rec.above_bound += e.polynomial.degree() > bound;
  if (c.n <= 6) {
    F5Options beyond;
    beyond.max_degree = bound + 1;
    const F5Result rb = run_f5(sys, beyond);
    for (const auto& e : rb.elements) rec.above_bound += e.polynomial.degree() > bound;
    const auto report = structure_check(rb, true);
    rec.structure.violations.insert(rec.structure.violations.end(), report.violations.begin(), report.violations.end());
    rec.capped_run_checked = true;
  }

  t0 = Clock::now();
  const auto expected = regular_series(spec.degrees, c.n, bound);
  const auto actual = hilbert_series(sys, bound);
  rec.hilbert_ok = true;
  for (unsigned d = 0; d <= bound; ++d) {
    rec.hilbert_ok = rec.hilbert_ok && expected.coefficients[d] >= 0 &&
                     static_cast<std::uint64_t>(expected.coefficients[d]) == actual[d];
  }
  if (dual_route) {
    rec.hilbert_dual_checked = true;
    for (unsigned d = 0; d <= bound; ++d) rec.hilbert_dual_ok = rec.hilbert_dual_ok && hilbert_function(sys, d) == actual[d];
  }
  rec.verify_seconds += seconds_since(t0);
  return rec;
}

struct Campaign {
  std::vector<RunRecord> runs;
  std::string error;
};

Campaign run_campaign() {
  const std::vector<Config> configs{{2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 4}, {3, 5}, {3, 6}};
  Campaign out;
  for (const auto& c : configs) {
    for (unsigned k = 0; k < kSeedsPerConfig; ++k) {
      try {
        out.runs.push_back(run_instance(c, 1000 * c.delta + 100 * c.n + k + 1, k == 0));
      } catch (const std::exception& e) {
        out.error = "delta=" + std::to_string(c.delta) + " n=" + std::to_string(c.n) + ": " + e.what();
        return out;
      }
    }
  }
  return out;
}

Verdict criterion_zero_reductions(const Campaign& campaign) {
  Verdict v;
  v.require(campaign.error.empty(), campaign.error);
  std::size_t systems = 0;
  double f5_quadratic = 0, verify_quadratic = 0, worst_ratio = -INFINITY;
  for (const auto& r : campaign.runs) {
    ++systems;
    const std::string tag = "delta=" + std::to_string(r.config.delta) + " n=" + std::to_string(r.config.n) +
                            " seed=" + std::to_string(r.seed);
    v.require(r.zero_top == 0 && r.zero_full == 0, tag + ": reductions to zero");
    v.require(BigInt(r.mults_top) <= r.nf5, tag + ": top multiplications above N_F5");
    worst_ratio = std::max(worst_ratio, std::log2(static_cast<double>(r.mults_top)) - log2_big(r.nf5));
    if (r.config.delta == 2) {
      f5_quadratic += r.f5_seconds;
      verify_quadratic += r.verify_seconds;
    }
  }
  v.require(systems == 8 * kSeedsPerConfig, "expected 160 systems, ran " + std::to_string(systems));
  v.require(f5_quadratic + verify_quadratic < 120,
            "quadratic runs took " + fmt("%.1f s", f5_quadratic + verify_quadratic) + " including certification");
  v.detail = std::to_string(systems) + " SNP-verified systems, 0 reductions to zero (top and full); max log2(mults/N_F5) = " +
             fmt("%.2f", worst_ratio) + "; quadratic F5 runs " + fmt("%.1f s", f5_quadratic) +
             " (SNP and Hilbert certification " + fmt("%.1f s", verify_quadratic) + ")";
  return v;
}

Verdict criterion_polys(const Campaign& campaign) {
  Verdict v;
  v.require(campaign.error.empty(), campaign.error);
  double worst = INFINITY;
  for (const auto& r : campaign.runs) {
    const std::string tag = "delta=" + std::to_string(r.config.delta) + " n=" + std::to_string(r.config.n) +
                            " seed=" + std::to_string(r.seed);
    v.require(BigInt(r.polys) <= r.polys_bound, tag + ": polynomials above the bound");
    if (r.config.n >= 5) {
      const double fraction = static_cast<double>(r.polys) / r.polys_bound.convert_to<double>();
      worst = std::min(worst, fraction);
      v.require(fraction >= 0.90, tag + ": " + fmt("%.3f of the bound", fraction));
    }
  }
  v.detail = "polys computed <= (delta^m - 1)/(delta - 1) on every run; smallest fraction for n >= 5: " + fmt("%.3f", worst);
  return v;
}

Verdict criterion_structure(const Campaign& campaign) {
  Verdict v;
  v.require(campaign.error.empty(), campaign.error);
  std::size_t capped = 0;
  for (const auto& r : campaign.runs) {
    const std::string tag = "delta=" + std::to_string(r.config.delta) + " n=" + std::to_string(r.config.n) +
                            " seed=" + std::to_string(r.seed);
    v.require(r.structure.ok(), tag + ": " + (r.structure.ok() ? "" : r.structure.violations.front()));
    v.require(r.above_bound == 0, tag + ": basis element above the Macaulay bound");
    capped += r.capped_run_checked;
  }
  v.detail = "signatures (j,t) with max_var(t) <= j-1 and max_var(LT) <= j on " + std::to_string(campaign.runs.size()) +
             " runs (top and full); no element above the Macaulay bound, including " + std::to_string(capped) +
             " runs with D = bound + 1";
  return v;
}

Verdict criterion_hilbert(const Campaign& campaign) {
  Verdict v;
  v.require(campaign.error.empty(), campaign.error);
  std::size_t dual = 0;
  for (const auto& r : campaign.runs) {
    const std::string tag = "delta=" + std::to_string(r.config.delta) + " n=" + std::to_string(r.config.n) +
                            " seed=" + std::to_string(r.seed);
    v.require(r.hilbert_ok, tag + ": Hilbert function differs from the regular series");
    v.require(r.hilbert_dual_ok, tag + ": Hilbert routes disagree");
    dual += r.hilbert_dual_checked;
  }
  std::size_t sequences = 0;
  const std::vector<std::vector<unsigned>> lists{std::vector<unsigned>(8, 2), std::vector<unsigned>(8, 3),
                                                 {2, 2, 3, 3, 4, 5, 5, 6}};
  for (const auto& degrees : lists) {
    for (std::size_t i = 1; i <= 8; ++i) {
      ++sequences;
      const auto b = b_series(i, degrees, macaulay_bound(degrees));
      const unsigned lo = degrees[i - 1];
      unsigned hi = lo;
      for (std::size_t k = 0; k + 1 < i; ++k) hi += degrees[k] - 1;
      bool ok = true;
      for (unsigned e = lo; e <= hi; ++e) ok = ok && b[e] > 0 && b[e] == b[lo + hi - e];
      for (unsigned e = lo; e < (lo + hi) / 2; ++e) ok = ok && b[e] <= b[e + 1];
      for (unsigned e = lo + 1; e < hi; ++e) ok = ok && b[e] * b[e] >= b[e - 1] * b[e + 1];
      v.require(ok, "b-sequence i=" + std::to_string(i) + " not symmetric/unimodal/log-concave");
    }
  }
  v.detail = "Hilbert series equals the regular series up to the Macaulay bound on " +
             std::to_string(campaign.runs.size()) + " systems (" + std::to_string(dual) +
             " cross-checked degree by degree); " + std::to_string(sequences) +
             " b-sequences symmetric, unimodal, log-concave";
  return v;
}

// ---- criterion 6: oracle agreement through the CLI ----

Verdict criterion_oracle() {
  Verdict v;
  const auto t0 = Clock::now();
  const std::vector<Config> configs{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}};
  const auto dir = std::filesystem::temp_directory_path() / "sigf5_acceptance";
  std::filesystem::create_directories(dir);
  std::size_t passed = 0;
  for (unsigned k = 0; k < 20; ++k) {
    const Config c = configs[k % configs.size()];
    SystemSpec spec;
    spec.nvars = c.n;
    spec.degrees.assign(c.n, c.delta);
    spec.seed = 7000 + k;
    auto sys = gen_system(spec);
    v.require(is_regular(sys), "system " + std::to_string(k) + " not regular");
    const auto path = (dir / ("oracle_" + std::to_string(k) + ".sys")).string();
    {
      std::ofstream file(path);
      write_system({default_variable_names(c.n), PrimeField(), sys, {}}, file);
    }
    const auto r = cli({"verify", path, "--check", "gb-oracle", "--format", "json"});
    const bool ok = r.code == 0 && json::parse(r.out)["status"] == "pass";
    v.require(ok, "delta=" + std::to_string(c.delta) + " n=" + std::to_string(c.n) + " seed=" +
                      std::to_string(spec.seed) + ": " + r.out + r.err);
    passed += ok;
  }
  std::filesystem::remove_all(dir);
  const double elapsed = seconds_since(t0);
  v.require(elapsed < 30, "runtime " + fmt("%.1f s", elapsed));
  v.detail = std::to_string(passed) + "/20 regular systems (n = m <= 4, delta <= 3): reduced basis LT ideal equals "
             "the Buchberger LT ideal; " + fmt("%.2f s", elapsed);
  return v;
}

// ---- criterion 9: printed top-mode counts, informational ----

Verdict criterion_printed_counts(const Campaign& campaign) {
  Verdict v;
  const std::map<unsigned, double> printed{{7, 19.83}, {8, 22.95}, {9, 26.19}};
  std::string detail;
  for (const auto& [n, value] : printed) {
    std::uint64_t mults = 0;
    for (const auto& r : campaign.runs) {
      if (r.config.delta == 2 && r.config.n == n && r.seed % 100 == 1) mults = r.mults_top;
    }
    if (mults == 0) {
      SystemSpec spec;
      spec.nvars = n;
      spec.degrees.assign(n, 2);
      spec.seed = 2000 + 100 * n + 1;
      const auto gen = gen_verified_system(spec, true, kGenerationAttempts);
      mults = run_f5(gen.polynomials).stats.totals().multiplications;
    }
    const double ours = std::log2(static_cast<double>(mults));
    v.require(std::abs(ours - value) <= 2.0, "n=" + std::to_string(n) + fmt(": %.2f", ours));
    detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + fmt(" %.2f", ours) +
              fmt(" vs %.2f", value);
  }
  v.detail = "top-mode log2 multiplications (delta=2) " + detail + ", tolerance 2.0";
  return v;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int number, const Verdict& v, bool gating) {
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << number << (gating ? "" : " (informational)") << ": "
              << v.detail << '\n';
    for (const auto& f : v.failures) std::cout << "    - " << f << '\n';
    std::cout.flush();
    if (gating) all = all && v.pass;
  };
  report(1, criterion_circles(), true);
  report(2, criterion_tables(), true);
  report(3, criterion_constants(), true);
  const Campaign campaign = run_campaign();
  report(4, criterion_zero_reductions(campaign), true);
  report(5, criterion_polys(campaign), true);
  report(6, criterion_oracle(), true);
  report(7, criterion_structure(campaign), true);
  report(8, criterion_hilbert(campaign), true);
  report(9, criterion_printed_counts(campaign), false);
  return all ? 0 : 1;
}
