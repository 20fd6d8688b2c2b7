#include "sigf5/cli.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigf5/bounds.hpp"
#include "sigf5/f5.hpp"
#include "sigf5/macaulay.hpp"
#include "sigf5/oracle.hpp"
#include "sigf5/regularity.hpp"
#include "sigf5/system_io.hpp"

namespace sigf5::cli {

namespace {

using json = nlohmann::ordered_json;

// Raised for malformed input files or parameters; mapped to kInputError.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a requested command is refused; mapped to kUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};


std::string fixed(double v, int digits) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string join(const std::vector<unsigned>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + std::to_string(v[k]);
  return out;
}

// Writes to --out when given, else to the command's stream.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

std::string signature_text(const Signature& s, std::span<const std::string> names) {
  return "(" + std::to_string(s.index) + "," + s.multiplier.to_string(names) + ")";
}

// ---- shared system handling ----

struct LoadedSystem {
  PolynomialSystem system;
  bool homogenized = false;
};

LoadedSystem load_system(const std::string& path, std::optional<std::uint32_t> prime, bool homogenize_input) {
  LoadedSystem out{read_system_file(path, prime), false};
  if (homogenize_input) {
    out.system = homogenize(out.system);
    out.homogenized = true;
  }
  for (std::size_t k = 0; k < out.system.polynomials.size(); ++k) {
    const Polynomial& f = out.system.polynomials[k];
    if (f.is_zero()) throw InputError("polynomial " + std::to_string(k + 1) + " is zero");
    if (!f.is_homogeneous()) {
      throw InputError("polynomial " + std::to_string(k + 1) + " is not homogeneous (use --homogenize)");
    }
    if (f.degree() == 0) throw InputError("polynomial " + std::to_string(k + 1) + " is constant");
    if (k > 0 && f.degree() < out.system.polynomials[k - 1].degree()) {
      throw InputError("polynomials must be listed by ascending degree");
    }
  }
  return out;
}

std::vector<unsigned> degrees_of(const std::vector<Polynomial>& polys) {
  std::vector<unsigned> out;
  for (const auto& f : polys) out.push_back(f.degree());
  return out;
}

// ---- gb ----

struct GbConfig {
  std::string file;
  unsigned degree_bound = 0;
  std::string mode = "top";
  std::optional<std::uint32_t> prime;
  std::string format = "text";
  std::string out;
  bool homogenize = false;
  bool trace = false;
};

json row_json(const SignedRow& row, const DegreeBasis& cols, std::span<const std::string> names, const PrimeField& field,
              bool dense) {
  json r;
  r["signature"] = signature_text(row.signature, names);
  r["lt"] = row.entries.empty() ? "0" : cols[row.entries.lead()].to_string(names);
  if (dense) {
    std::vector<std::int64_t> values(cols.size(), 0);
    for (std::size_t t = 0; t < row.entries.size(); ++t) values[row.entries.cols[t]] = field.signed_value(row.entries.vals[t]);
    r["dense"] = values;
  }
  return r;
}

constexpr std::size_t kDenseTraceColumns = 64;

json gb_json(const LoadedSystem& loaded, const F5Result& result, const std::vector<Polynomial>& reduced,
             std::optional<bool> snp) {
  const auto& names = loaded.system.variables;
  const PrimeField& field = loaded.system.field;
  json doc;
  doc["p"] = result.prime;
  doc["n"] = result.num_vars;
  doc["m"] = result.num_polynomials;
  doc["variables"] = names;
  doc["degrees"] = result.degrees;
  doc["D"] = result.max_degree;
  doc["mode"] = to_string(result.mode);
  if (snp) doc["snp"] = *snp;
  json steps = json::array();
  for (const auto& s : result.stats.steps) {
    steps.push_back({{"d", s.degree},
                     {"i", s.index},
                     {"rows", s.rows},
                     {"new_rows", s.new_rows},
                     {"excluded", s.excluded},
                     {"mults", s.multiplications},
                     {"norms", s.normalizations},
                     {"zero_reductions", s.zero_reductions},
                     {"polys_computed", s.computed},
                     {"new_basis", s.new_basis_elements}});
  }
  doc["per_step"] = steps;
  const RunTotals t = result.stats.totals();
  doc["totals"] = {{"mults", t.multiplications},
                   {"norms", t.normalizations},
                   {"zero_reductions", t.zero_reductions},
                   {"rows_built", t.rows_built},
                   {"excluded", t.excluded},
                   {"polys_computed", t.polys_computed},
                   {"basis_elements", t.basis_elements}};
  json bases = json::array();
  for (std::size_t i = 1; i <= result.num_polynomials; ++i) {
    json fresh = json::array();
    for (const auto& e : result.elements) {
      if (e.signature.index != i) continue;
      fresh.push_back({{"signature", signature_text(e.signature, names)},
                       {"lt", e.polynomial.leading_monomial().to_string(names)},
                       {"polynomial", e.polynomial.to_string(names)}});
    }
    bases.push_back({{"i", i}, {"new", fresh}});
  }
  doc["bases"] = bases;
  json red = json::array();
  for (const auto& g : reduced) red.push_back(g.to_string(names));
  doc["reduced_basis"] = red;
  if (!result.trace.empty()) {
    json tr = json::array();
    for (const auto& step : result.trace) {
      const DegreeBasis& cols = *step.built.columns;
      const bool dense = cols.size() <= kDenseTraceColumns;
      json s;
      s["d"] = step.degree;
      s["i"] = step.index;
      s["rows"] = step.built.rows.size();
      s["cols"] = cols.size();
      if (dense) {
        json c = json::array();
        for (std::size_t k = 0; k < cols.size(); ++k) c.push_back(cols[k].to_string(names));
        s["columns"] = c;
      }
      json ex = json::array();
      for (const auto& sig : step.excluded) ex.push_back(signature_text(sig, names));
      s["excluded"] = ex;
      json built = json::array();
      for (const auto& row : step.built.rows) built.push_back(row_json(row, cols, names, field, dense));
      s["built"] = built;
      json reduced_rows = json::array();
      for (const auto& row : step.reduced.rows) reduced_rows.push_back(row_json(row, cols, names, field, dense));
      s["reduced"] = reduced_rows;
      tr.push_back(s);
    }
    doc["trace"] = tr;
  }
  return doc;
}

std::string gb_csv(const F5Result& result) {
  std::ostringstream os;
  os << "d,i,rows,new_rows,excluded,mults,norms,zero_reductions,polys_computed,new_basis\n";
  for (const auto& s : result.stats.steps) {
    os << s.degree << ',' << s.index << ',' << s.rows << ',' << s.new_rows << ',' << s.excluded << ','
       << s.multiplications << ',' << s.normalizations << ',' << s.zero_reductions << ',' << s.computed << ','
       << s.new_basis_elements << '\n';
  }
  return os.str();
}

std::string gb_text(const LoadedSystem& loaded, const F5Result& result, const std::vector<Polynomial>& reduced,
                    std::optional<bool> snp) {
  const auto& names = loaded.system.variables;
  const PrimeField& field = loaded.system.field;
  std::ostringstream os;
  os << "system: n=" << result.num_vars << " m=" << result.num_polynomials << " p=" << result.prime
     << " degrees=" << join(result.degrees) << " D=" << result.max_degree << " mode=" << to_string(result.mode)
     << '\n';
  if (snp) os << "simultaneous Noether position: " << (*snp ? "yes" : "no") << '\n';
  os << "\n   d   i    rows     new excluded           mults     norms zero computed basis\n";
  for (const auto& s : result.stats.steps) {
    char line[160];
    std::snprintf(line, sizeof line, "%4u %3zu %7zu %7zu %8zu %15llu %9llu %4zu %8zu %5zu\n", s.degree, s.index,
                  s.rows, s.new_rows, s.excluded, static_cast<unsigned long long>(s.multiplications),
                  static_cast<unsigned long long>(s.normalizations), s.zero_reductions, s.computed,
                  s.new_basis_elements);
    os << line;
  }
  for (const auto& step : result.trace) {
    const DegreeBasis& cols = *step.built.columns;
    os << "\nM_{" << step.degree << "," << step.index << "}: " << step.built.rows.size() << " rows x " << cols.size()
       << " columns\n";
    if (!step.excluded.empty()) {
      os << "  excluded:";
      for (const auto& sig : step.excluded) os << ' ' << signature_text(sig, names);
      os << '\n';
    }
    const bool dense = cols.size() <= kDenseTraceColumns;
    if (dense) {
      os << "  columns:";
      for (std::size_t k = 0; k < cols.size(); ++k) os << ' ' << cols[k].to_string(names);
      os << '\n';
    }
    for (const auto& row : step.reduced.rows) {
      os << "  " << signature_text(row.signature, names) << "  LT " << cols[row.entries.lead()].to_string(names);
      if (dense) {
        os << "  [";
        std::size_t t = 0;
        for (std::size_t c = 0; c < cols.size(); ++c) {
          std::int64_t v = 0;
          if (t < row.entries.size() && row.entries.cols[t] == c) v = field.signed_value(row.entries.vals[t++]);
          os << (c ? " " : "") << v;
        }
        os << ']';
      }
      os << '\n';
    }
  }
  for (std::size_t i = 1; i <= result.num_polynomials; ++i) {
    os << "\nG_" << i << (i > 1 ? " = G_" + std::to_string(i - 1) + " +" : "") << '\n';
    for (const auto& e : result.elements) {
      if (e.signature.index == i) {
        os << "  (" << signature_text(e.signature, names) << ", " << e.polynomial.to_string(names) << ")\n";
      }
    }
  }
  os << "\nreduced basis (" << reduced.size() << "):\n";
  for (const auto& g : reduced) os << "  " << g.to_string(names) << '\n';
  const RunTotals t = result.stats.totals();
  os << "\ntotals: mults=" << t.multiplications << " norms=" << t.normalizations
     << " zero_reductions=" << t.zero_reductions << " rows_built=" << t.rows_built << " excluded=" << t.excluded
     << " polys_computed=" << t.polys_computed << " basis_elements=" << t.basis_elements << '\n';
  return os.str();
}

int cmd_gb(const GbConfig& cfg, std::ostream& out) {
  const LoadedSystem loaded = load_system(cfg.file, cfg.prime, cfg.homogenize);
  F5Options options;
  options.mode = parse_reduction_mode(cfg.mode);
  options.max_degree = cfg.degree_bound;
  options.keep_trace = cfg.trace;
  const F5Result result = run_f5(loaded.system.polynomials, options);
  const auto reduced = reduce_basis(std::span<const GBasisElement>(result.elements));
  std::optional<bool> snp;
  if (loaded.homogenized) snp = is_snp(loaded.system.polynomials);
  std::string text;
  if (cfg.format == "json") {
    text = gb_json(loaded, result, reduced, snp).dump(2) + "\n";
  } else if (cfg.format == "csv") {
    text = gb_csv(result);
  } else {
    text = gb_text(loaded, result, reduced, snp);
  }
  emit(cfg.out, out, text);
  return kSuccess;
}

// ---- bench ----

struct BenchConfig {
  unsigned n_min = 4;
  unsigned n_max = 6;
  unsigned delta = 2;
  std::string mode = "both";
  unsigned seeds = 1;
  std::uint64_t seed = 1;
  unsigned repetitions = 1;
  unsigned jobs = 1;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::string format = "csv";
  std::string out;
  bool force = false;
  bool no_verify = false;
  bool timing = false;
  unsigned attempts = 4;
};

struct BenchRow {
  unsigned n = 0;
  unsigned delta = 0;
  std::string mode;
  std::uint64_t seed = 0;
  unsigned attempt = 0;
  bool verified = false;
  std::uint64_t mults = 0;
  BigInt nf5;
  std::size_t polys = 0;
  BigInt polys_bound;
  std::size_t basis_elements = 0;
  std::size_t zero_reductions = 0;
  double seconds = 0;
};

constexpr double kBenchLimitLog2 = 40.0;

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  std::vector<std::string> modes;
  if (cfg.mode == "both") {
    modes = {"top", "full"};
  } else {
    parse_reduction_mode(cfg.mode);
    modes = {cfg.mode};
  }
  if (cfg.delta < 1) throw UsageError("degree must be positive");
  if (cfg.n_max > kMaxVariables) throw UsageError("at most " + std::to_string(kMaxVariables) + " variables");
  struct Job {
    unsigned n;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (unsigned n = std::max(1u, cfg.n_min); n <= cfg.n_max; ++n) {
    if (!cfg.force && cfg.delta >= 2) {
      const std::vector<unsigned> degrees(n, cfg.delta);
      const double cost = log2_big(nf5_exact(n, degrees));
      if (cost > kBenchLimitLog2) {
        throw UsageError("n=" + std::to_string(n) + " delta=" + std::to_string(cfg.delta) + " has log2 N_F5 = " +
                         fixed(cost, 2) + " > 40; pass --force to run it");
      }
    }
    for (unsigned k = 0; k < cfg.seeds; ++k) jobs.push_back({n, cfg.seed + k});
  }
  std::vector<std::vector<BenchRow>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        const Job& job = jobs[k];
        SystemSpec spec;
        spec.nvars = job.n;
        spec.degrees.assign(job.n, cfg.delta);
        spec.prime = cfg.prime;
        spec.seed = job.seed;
        const GeneratedSystem gen = gen_verified_system(spec, !cfg.no_verify, cfg.attempts);
        for (const auto& mode : modes) {
          F5Options options;
          options.mode = parse_reduction_mode(mode);
          BenchRow row;
          double best = INFINITY;
          F5Result result;
          for (unsigned rep = 0; rep < std::max(1u, cfg.repetitions); ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            result = run_f5(gen.polynomials, options);
            best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
          }
          const RunTotals t = result.stats.totals();
          row.n = job.n;
          row.delta = cfg.delta;
          row.mode = mode;
          row.seed = job.seed;
          row.attempt = gen.attempt;
          row.verified = gen.verified;
          row.mults = t.multiplications;
          row.nf5 = nf5_exact(job.n, spec.degrees);
          row.polys = t.polys_computed;
          row.polys_bound = polys_bound(spec.degrees);
          row.basis_elements = t.basis_elements;
          row.zero_reductions = t.zero_reductions;
          row.seconds = best;
          results[k].push_back(std::move(row));
        }
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<BenchRow> rows;
  for (auto& r : results) {
    for (auto& row : r) rows.push_back(std::move(row));
  }
  return rows;
}

std::string bench_output(const BenchConfig& cfg, const std::vector<BenchRow>& rows) {
  auto log2u = [](double v) { return v > 0 ? std::log2(v) : -INFINITY; };
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json j{{"n", r.n},
             {"delta", r.delta},
             {"mode", r.mode},
             {"seed", r.seed},
             {"attempt", r.attempt},
             {"snp", r.verified ? "verified" : "skipped"},
             {"mults", r.mults},
             {"log2_mults", log2u(static_cast<double>(r.mults))},
             {"nf5_exact", r.nf5.str()},
             {"log2_nf5_exact", log2_big(r.nf5)},
             {"mults_within_nf5", BigInt(r.mults) <= r.nf5},
             {"polys_computed", r.polys},
             {"log2_polys", log2u(static_cast<double>(r.polys))},
             {"polys_bound", r.polys_bound.str()},
             {"log2_polys_bound", log2_big(r.polys_bound)},
             {"basis_elements", r.basis_elements},
             {"zero_reductions", r.zero_reductions}};
      if (cfg.timing) j["seconds"] = r.seconds;
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "n,delta,mode,seed,attempt,snp,mults,log2_mults,log2_nf5_exact,mults_within_nf5,polys_computed,log2_polys,"
        "polys_bound,log2_polys_bound,basis_elements,zero_reductions";
  if (cfg.timing) os << ",seconds";
  os << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << r.delta << ',' << r.mode << ',' << r.seed << ',' << r.attempt << ','
       << (r.verified ? "verified" : "skipped") << ',' << r.mults << ',' << fixed(log2u(static_cast<double>(r.mults)), 4)
       << ',' << fixed(log2_big(r.nf5), 4) << ',' << (BigInt(r.mults) <= r.nf5 ? "true" : "false") << ',' << r.polys
       << ',' << fixed(log2u(static_cast<double>(r.polys)), 4) << ',' << r.polys_bound << ','
       << fixed(log2_big(r.polys_bound), 4) << ',' << r.basis_elements << ',' << r.zero_reductions;
    if (cfg.timing) os << ',' << fixed(r.seconds, 6);
    os << '\n';
  }
  return os.str();
}

// ---- bounds ----

struct BoundsConfig {
  unsigned delta_min = 2;
  unsigned delta_max = 2;
  unsigned n_min = 7;
  unsigned n_max = 16;
  unsigned excess = 0;
  std::vector<double> omegas{3.0, std::log2(7.0), 2.376};
  std::vector<unsigned> degrees;
  unsigned degrees_n = 0;
  std::string format = "csv";
  std::string out;
};

std::string omega_label(double w) { return fixed(w, 4); }

json bound_row_json(const BoundReport& r, bool capped, double log2_capped,
                    const std::vector<double>& baseline_costs) {
  json j{{"delta", r.delta},
         {"n", r.n},
         {"excess", r.excess},
         {"D", r.macaulay_bound},
         {"nf5_exact", r.nf5_exact.str()},
         {"log2_nf5_exact", r.log2_nf5_exact},
         {"log2_nf5_asymptotic", r.log2_nf5_asymptotic},
         {"lambda0", r.lambda0},
         {"log2_B", r.log2_B},
         {"A", r.A},
         {"polys_bound", r.polys_bound.str()},
         {"log2_polys_bound", log2_big(r.polys_bound)}};
  j["log2_nf5_capped"] = capped ? json(log2_capped) : json(nullptr);
  json be = json::object();
  json bc = json::object();
  for (std::size_t k = 0; k < r.baseline_exponents.size(); ++k) {
    be[omega_label(r.baseline_exponents[k].first)] = r.baseline_exponents[k].second;
    bc[omega_label(r.baseline_exponents[k].first)] = baseline_costs[k];
  }
  j["baseline_exponents"] = be;
  j["log2_baseline_cost"] = bc;
  j["extrapolated"] = false;
  return j;
}

std::string cmd_bounds_text(const BoundsConfig& cfg) {
  if (!cfg.degrees.empty()) {
    // Mixed degrees: only the combinatorial quantities apply.
    std::vector<unsigned> degrees = cfg.degrees;
    std::sort(degrees.begin(), degrees.end());
    const std::size_t n = cfg.degrees_n ? cfg.degrees_n : degrees.size();
    if (n < degrees.size()) throw UsageError("--n must be at least the number of degrees");
    const unsigned big_d = macaulay_bound(degrees);
    const BigInt exact = nf5_exact(n, degrees, big_d);
    const BigInt pb = polys_bound(degrees);
    const bool extrapolated = !uniform_degrees(degrees);
    if (cfg.format == "json") {
      json j{{"degrees", degrees},      {"n", n},
             {"D", big_d},              {"nf5_exact", exact.str()},
             {"log2_nf5_exact", log2_big(exact)}, {"polys_bound", pb.str()},
             {"log2_polys_bound", log2_big(pb)},  {"extrapolated", extrapolated}};
      return json::array({j}).dump(2) + "\n";
    }
    std::ostringstream os;
    os << "degrees,n,D,log2_nf5_exact,nf5_exact,log2_polys_bound,extrapolated\n";
    os << '"' << join(degrees) << "\"," << n << ',' << big_d << ',' << fixed(log2_big(exact), 4) << ',' << exact << ','
       << fixed(log2_big(pb), 4) << ',' << (extrapolated ? "true" : "false") << '\n';
    return os.str();
  }
  json arr = json::array();
  std::ostringstream csv;
  csv << "delta,n,excess,D,log2_nf5_exact,log2_nf5_asymptotic,log2_nf5_capped,lambda0,log2_B,A,log2_polys_bound";
  for (double w : cfg.omegas) csv << ",baseline_exponent_" << omega_label(w);
  for (double w : cfg.omegas) csv << ",log2_baseline_cost_" << omega_label(w);
  csv << '\n';
  for (unsigned delta = cfg.delta_min; delta <= cfg.delta_max; ++delta) {
    if (delta < 2) throw UsageError("bounds need degree at least 2");
    for (unsigned n = cfg.n_min; n <= cfg.n_max; ++n) {
      if (n <= cfg.excess) continue;
      const BoundReport r = bound_report(delta, n, cfg.excess, cfg.omegas);
      const std::size_t m = n - cfg.excess;
      const bool capped = m >= 2;
      const double log2_capped = capped ? log2_nf5_capped_bound(m, delta, cfg.excess) : 0.0;
      std::vector<double> costs;
      for (double w : cfg.omegas) costs.push_back(log2_baseline_cost(n, m, delta, w));
      arr.push_back(bound_row_json(r, capped, log2_capped, costs));
      csv << delta << ',' << n << ',' << cfg.excess << ',' << r.macaulay_bound << ',' << fixed(r.log2_nf5_exact, 4)
          << ',' << fixed(r.log2_nf5_asymptotic, 4) << ',' << (capped ? fixed(log2_capped, 4) : "") << ','
          << fixed(r.lambda0, 9) << ',' << fixed(r.log2_B, 9) << ',' << fixed(r.A, 9) << ','
          << fixed(log2_big(r.polys_bound), 4);
      for (const auto& [w, e] : r.baseline_exponents) csv << ',' << fixed(e, 4);
      for (double c : costs) csv << ',' << fixed(c, 4);
      csv << '\n';
    }
  }
  if (cfg.format == "json") return arr.dump(2) + "\n";
  return csv.str();
}

// ---- gen ----

struct GenConfig {
  unsigned n = 5;
  std::optional<unsigned> m;
  unsigned delta = 2;
  std::vector<unsigned> degrees;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 1;
  std::string out;
  bool no_verify = false;
  unsigned attempts = 4;
};

int cmd_gen(const GenConfig& cfg, std::ostream& out) {
  SystemSpec spec;
  spec.nvars = cfg.n;
  spec.prime = cfg.prime;
  spec.seed = cfg.seed;
  if (!cfg.degrees.empty()) {
    spec.degrees = cfg.degrees;
    std::sort(spec.degrees.begin(), spec.degrees.end());
  } else {
    spec.degrees.assign(cfg.m.value_or(cfg.n), cfg.delta);
  }
  if (spec.degrees.size() > spec.nvars) throw UsageError("more equations than variables");
  if (!is_prime(cfg.prime)) throw UsageError("--prime must be a prime");
  const GeneratedSystem gen = gen_verified_system(spec, !cfg.no_verify, cfg.attempts);
  PolynomialSystem sys{default_variable_names(cfg.n), PrimeField(cfg.prime), gen.polynomials, {}};
  sys.comments.push_back("generated n=" + std::to_string(cfg.n) + " m=" + std::to_string(spec.degrees.size()) +
                         " degrees=" + join(spec.degrees) + " p=" + std::to_string(cfg.prime) +
                         " seed=" + std::to_string(cfg.seed) + " attempt=" + std::to_string(gen.attempt));
  sys.comments.push_back(std::string("verified: ") + (gen.verified ? "snp" : "none"));
  std::ostringstream os;
  write_system(sys, os);
  emit(cfg.out, out, os.str());
  return kSuccess;
}

// ---- verify ----

struct VerifyConfig {
  std::string file;
  std::vector<std::string> checks;
  std::optional<std::uint32_t> prime;
  unsigned degree_bound = 0;
  bool homogenize = false;
  std::string format = "text";
  std::string out;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

CheckResult check_regular(const std::vector<Polynomial>& polys) {
  const auto degrees = degrees_of(polys);
  const unsigned top = macaulay_bound(degrees);
  const auto expected = regular_series(degrees, polys.front().num_vars(), top);
  const auto actual = hilbert_series(polys, top);
  for (unsigned d = 0; d <= top; ++d) {
    if (expected.coefficients[d] < 0 || static_cast<std::uint64_t>(expected.coefficients[d]) != actual[d]) {
      return {"regular", false,
              "Hilbert function " + std::to_string(actual[d]) + " differs from " +
                  std::to_string(expected.coefficients[d]) + " in degree " + std::to_string(d)};
    }
  }
  return {"regular", true, "Hilbert series matches the regular series up to degree " + std::to_string(top)};
}

CheckResult check_snp(const std::vector<Polynomial>& polys) {
  for (std::size_t i = 1; i <= polys.size(); ++i) {
    if (!is_noether_position(polys, i)) {
      return {"snp", false, "x_1..x_" + std::to_string(i) + " not in Noether position for f_1..f_" + std::to_string(i)};
    }
  }
  return {"snp", true, "Noether position holds for every prefix"};
}

CheckResult check_oracle(const std::vector<Polynomial>& polys, unsigned degree_bound) {
  const unsigned cap = degree_bound ? degree_bound : macaulay_bound(degrees_of(polys));
  F5Options options;
  options.max_degree = cap;
  const auto f5 = run_f5(polys, options);
  const auto mine = reduce_basis(std::span<const GBasisElement>(f5.elements));
  try {
    const auto theirs = buchberger(polys, cap);
    const bool same = compare_lt_ideals(mine, theirs);
    return {"gb-oracle", same,
            std::to_string(mine.size()) + " vs " + std::to_string(theirs.size()) + " reduced basis elements" +
                (same ? ", leading ideals agree" : ", leading ideals differ")};
  } catch (const PairLimitExceeded& e) {
    return {"gb-oracle", false, std::string("oracle gave up: ") + e.what()};
  }
}

CheckResult check_structure(const std::vector<Polynomial>& polys, unsigned degree_bound) {
  const unsigned bound = macaulay_bound(degrees_of(polys));
  F5Options options;
  options.max_degree = degree_bound ? degree_bound : bound;
  const auto f5 = run_f5(polys, options);
  auto report = structure_check(f5, true);
  for (const auto& e : f5.elements) {
    if (e.polynomial.degree() > bound) {
      report.violations.push_back("basis element of degree " + std::to_string(e.polynomial.degree()) +
                                  " above the Macaulay bound " + std::to_string(bound));
    }
  }
  if (report.ok()) return {"structure", true, std::to_string(f5.elements.size()) + " basis elements checked"};
  std::string detail = std::to_string(report.violations.size()) + " violations; first: " + report.violations.front();
  return {"structure", false, detail};
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out) {
  const LoadedSystem loaded = load_system(cfg.file, cfg.prime, cfg.homogenize);
  const auto& polys = loaded.system.polynomials;
  std::vector<std::string> checks = cfg.checks;
  if (checks.empty() || (checks.size() == 1 && checks[0] == "all")) {
    checks = {"regular", "noether", "snp", "gb-oracle", "structure"};
  }
  std::vector<CheckResult> results;
  for (const auto& c : checks) {
    if (c == "regular") {
      results.push_back(check_regular(polys));
    } else if (c == "noether") {
      const bool ok = is_noether_position(polys, polys.size());
      results.push_back({"noether", ok, std::string("x_1..x_m ") + (ok ? "are" : "are not") + " in Noether position"});
    } else if (c == "snp") {
      results.push_back(check_snp(polys));
    } else if (c == "gb-oracle") {
      results.push_back(check_oracle(polys, cfg.degree_bound));
    } else if (c == "structure") {
      results.push_back(check_structure(polys, cfg.degree_bound));
    } else {
      throw UsageError("unknown check '" + c + "'");
    }
  }
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  std::string text;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : results) arr.push_back({{"check", r.name}, {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}});
    text = json{{"file", cfg.file}, {"checks", arr}, {"status", all ? "pass" : "fail"}}.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (const auto& r : results) os << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    text = os.str();
  }
  emit(cfg.out, out, text);
  return all ? kSuccess : kVerificationFailure;
}

std::vector<unsigned> parse_degree_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v == 0 || v > 64) throw std::invalid_argument(item);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw UsageError("invalid degree '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty degree list");
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix-F5 Groebner bases over prime fields, with operation counts and complexity bounds"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  const auto format_check = [](std::vector<std::string> allowed) { return CLI::IsMember(std::move(allowed)); };

  GbConfig gb;
  std::uint32_t gb_prime = 0;
  auto* gb_cmd = app.add_subcommand("gb", "Compute G_1..G_m and the reduced Groebner basis of a system file");
  gb_cmd->add_option("file", gb.file, "System file")->required();
  gb_cmd->add_option("--degree-bound,-D", gb.degree_bound, "Largest degree processed (default: Macaulay bound)")
      ->check(CLI::PositiveNumber);
  gb_cmd->add_option("--mode", gb.mode, "Reduction mode")->check(format_check({"top", "full"}));
  gb_cmd->add_option("--prime", gb_prime, "Override the file's prime");
  gb_cmd->add_option("--format", gb.format, "Output format")->check(format_check({"json", "csv", "text"}));
  gb_cmd->add_option("--out", gb.out, "Output file");
  gb_cmd->add_flag("--homogenize", gb.homogenize, "Homogenize with a new last variable h");
  gb_cmd->add_flag("--trace", gb.trace, "Record every matrix M_{d,i}");

  BenchConfig bench;
  std::string bench_seed;
  auto* bench_cmd = app.add_subcommand("bench", "Operation counts on seeded random dense systems");
  bench_cmd->add_option("--n-min", bench.n_min, "Smallest number of variables");
  bench_cmd->add_option("--n-max", bench.n_max, "Largest number of variables");
  bench_cmd->add_option("--delta", bench.delta, "Degree of every equation")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--mode", bench.mode, "Reduction mode")->check(format_check({"top", "full", "both"}));
  bench_cmd->add_option("--seeds", bench.seeds, "Systems per size");
  bench_cmd->add_option("--seed", bench.seed, "First seed");
  bench_cmd->add_option("--repetitions", bench.repetitions, "Timed runs per instance (best kept)");
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--prime", bench.prime, "Field size");
  bench_cmd->add_option("--format", bench.format, "Output format")->check(format_check({"json", "csv"}));
  bench_cmd->add_option("--out", bench.out, "Output file");
  bench_cmd->add_flag("--force", bench.force, "Allow instances with log2 N_F5 above 40");
  bench_cmd->add_flag("--no-verify", bench.no_verify, "Skip the simultaneous Noether position check");
  bench_cmd->add_flag("--timing", bench.timing, "Add wall-clock seconds (output no longer reproducible)");
  bench_cmd->add_option("--attempts", bench.attempts, "Generation attempts per instance")->check(CLI::PositiveNumber);

  BoundsConfig bounds;
  std::string bounds_degrees;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the complexity bounds");
  bounds_cmd->add_option("--delta-min", bounds.delta_min, "Smallest degree");
  bounds_cmd->add_option("--delta-max", bounds.delta_max, "Largest degree");
  bounds_cmd->add_option("--n-min", bounds.n_min, "Smallest number of variables");
  bounds_cmd->add_option("--n-max", bounds.n_max, "Largest number of variables");
  bounds_cmd->add_option("--excess", bounds.excess, "Variables minus equations");
  bounds_cmd->add_option("--omega", bounds.omegas, "Linear algebra exponents for the baseline")->delimiter(',');
  bounds_cmd->add_option("--degrees", bounds_degrees, "Explicit comma-separated degree list");
  bounds_cmd->add_option("--n", bounds.degrees_n, "Number of variables with --degrees (default: list length)");
  bounds_cmd->add_option("--format", bounds.format, "Output format")->check(format_check({"json", "csv"}));
  bounds_cmd->add_option("--out", bounds.out, "Output file");

  GenConfig gen;
  unsigned gen_m = 0;
  std::string gen_degrees;
  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random dense homogeneous system");
  gen_cmd->add_option("--n", gen.n, "Number of variables")->check(CLI::Range(1u, static_cast<unsigned>(kMaxVariables)));
  gen_cmd->add_option("--m", gen_m, "Number of equations (default n)");
  gen_cmd->add_option("--delta", gen.delta, "Degree of every equation")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--degrees", gen_degrees, "Explicit comma-separated degree list");
  gen_cmd->add_option("--prime", gen.prime, "Field size");
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--out", gen.out, "Output file");
  gen_cmd->add_flag("--no-verify", gen.no_verify, "Skip the simultaneous Noether position check");
  gen_cmd->add_option("--attempts", gen.attempts, "Generation attempts")->check(CLI::PositiveNumber);

  VerifyConfig verify;
  std::uint32_t verify_prime = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Check regularity, Noether position, oracle agreement, structure");
  verify_cmd->add_option("file", verify.file, "System file")->required();
  verify_cmd->add_option("--check", verify.checks, "regular, noether, snp, gb-oracle, structure or all")
      ->delimiter(',')
      ->check(format_check({"regular", "noether", "snp", "gb-oracle", "structure", "all"}));
  verify_cmd->add_option("--prime", verify_prime, "Override the file's prime");
  verify_cmd->add_option("--degree-bound,-D", verify.degree_bound, "Degree cap for the basis checks")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--homogenize", verify.homogenize, "Homogenize with a new last variable h");
  verify_cmd->add_option("--format", verify.format, "Output format")->check(format_check({"json", "text"}));
  verify_cmd->add_option("--out", verify.out, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (gb_cmd->parsed()) {
      if (gb_prime) gb.prime = gb_prime;
      return cmd_gb(gb, out);
    }
    if (bench_cmd->parsed()) {
      if (!is_prime(bench.prime)) throw UsageError("--prime must be a prime");
      emit(bench.out, out, bench_output(bench, run_bench(bench)));
      return kSuccess;
    }
    if (bounds_cmd->parsed()) {
      if (!bounds_degrees.empty()) bounds.degrees = parse_degree_list(bounds_degrees);
      emit(bounds.out, out, cmd_bounds_text(bounds));
      return kSuccess;
    }
    if (gen_cmd->parsed()) {
      if (gen_m) gen.m = gen_m;
      if (!gen_degrees.empty()) gen.degrees = parse_degree_list(gen_degrees);
      return cmd_gen(gen, out);
    }
    if (verify_cmd->parsed()) {
      if (verify_prime) verify.prime = verify_prime;
      return cmd_verify(verify, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GenerationFailed& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}

}  // namespace sigf5::cli
