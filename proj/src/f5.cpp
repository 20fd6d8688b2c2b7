#include "sigf5/f5.hpp"

#include <algorithm>
#include <stdexcept>

#include "sigf5/bounds.hpp"
#include "sigf5/macaulay.hpp"

namespace sigf5 {

std::strong_ordering operator<=>(const Signature& a, const Signature& b) {
  if (auto c = a.index <=> b.index; c != 0) return c;
  return grevlex_cmp(a.multiplier, b.multiplier);
}

std::string to_string(ReductionMode mode) { return mode == ReductionMode::top ? "top" : "full"; }

ReductionMode parse_reduction_mode(const std::string& text) {
  if (text == "top") return ReductionMode::top;
  if (text == "full") return ReductionMode::full;
  throw std::invalid_argument("unknown reduction mode '" + text + "'");
}

RunTotals& RunTotals::operator+=(const RunTotals& o) {
  multiplications += o.multiplications;
  normalizations += o.normalizations;
  zero_reductions += o.zero_reductions;
  rows_built += o.rows_built;
  excluded += o.excluded;
  polys_computed += o.polys_computed;
  basis_elements += o.basis_elements;
  return *this;
}

RunTotals RunStats::totals() const {
  RunTotals t;
  for (const auto& s : steps) {
    t.multiplications += s.multiplications;
    t.normalizations += s.normalizations;
    t.zero_reductions += s.zero_reductions;
    t.rows_built += s.new_rows;
    t.excluded += s.excluded;
    t.polys_computed += s.computed;
    t.basis_elements += s.new_basis_elements;
  }
  return t;
}

CriterionSet::CriterionSet(std::shared_ptr<const DegreeBasis> basis)
    : basis_(std::move(basis)), members_(basis_->size(), 0) {}

void CriterionSet::insert(const Monomial& m) { members_[basis_->index_of(m)] = 1; }

bool CriterionSet::contains(const Monomial& m) const {
  return m.degree() == basis_->degree() && members_[basis_->index_of(m)] != 0;
}

bool f5_criterion(const CriterionSet& crit, const Monomial& t) { return crit.contains(t); }

std::vector<SignedRow> build_step(const SignedMatrix& prev, std::size_t index, unsigned index_degree,
                                  const CriterionSet& crit, const MonomialTables& tables,
                                  std::vector<Signature>* excluded) {
  const unsigned d = prev.degree + 1;
  const unsigned mult_degree = d - index_degree;
  const std::size_t n = tables.num_vars();
  std::vector<SignedRow> out;
  for (std::size_t r = 0; r < prev.rows.size(); ++r) {
    const SignedRow& parent = prev.rows[r];
    if (parent.signature.index != index) continue;
    const std::size_t first_var = std::max<std::size_t>(1, tables.max_var(mult_degree - 1, parent.multiplier_column));
    for (std::size_t j = first_var; j <= n; ++j) {
      const std::uint32_t mcol = tables.shift(mult_degree, parent.multiplier_column, j);
      Monomial u = parent.signature.multiplier;
      u.set_exponent(j, u.exponent(j) + 1);
      if (crit.contains_column(mcol)) {
        if (excluded) excluded->push_back({index, u});
        continue;
      }
      SignedRow row;
      row.signature = {index, u};
      row.multiplier_column = mcol;
      row.parent = static_cast<std::int64_t>(r);
      row.entries.cols.reserve(parent.entries.size());
      row.entries.vals = parent.entries.vals;
      for (std::uint32_t c : parent.entries.cols) row.entries.cols.push_back(tables.shift(d, c, j));
      out.push_back(std::move(row));
    }
  }
  // A larger column is a smaller multiplier; x_j shifts preserve the column order within a row.
  std::sort(out.begin(), out.end(),
            [](const SignedRow& a, const SignedRow& b) { return a.multiplier_column > b.multiplier_column; });
  return out;
}

namespace {

// Shared elimination state for one degree: pivot rows keyed by leading column, plus a reusable accumulator.
class Eliminator {
 public:
  Eliminator(std::size_t ncols, const PrimeField& field)
      : field_(field), p_(field.prime()), lazy_(field.prime() < (1u << 20)), pivot_(ncols, -1), acc_(ncols, 0) {}

  void register_pivot(const SparseRow& row, std::size_t position) {
    pivot_[row.lead()] = static_cast<std::int64_t>(position);
  }

  // Reduces rows[k] against pivots at positions < k. Returns false when the row vanishes.
  bool reduce(std::vector<SignedRow>& rows, std::size_t k, ReductionMode mode, StepStats& stats) {
    SparseRow& row = rows[k].entries;
    if (row.empty()) return false;
    if (pivot_[row.lead()] < 0) {
      if (mode == ReductionMode::top) {
        normalize(row, stats);
        return true;
      }
      bool clean = true;
      for (std::uint32_t c : row.cols) clean = clean && (c == row.lead() || pivot_[c] < 0);
      if (clean) {
        normalize(row, stats);
        return true;
      }
    }
    const std::uint32_t start = row.lead();
    for (std::size_t t = 0; t < row.size(); ++t) acc_[row.cols[t]] = row.vals[t].value;
    std::uint32_t touched_end = row.cols.back() + 1;
    std::int64_t lead = -1;
    const std::size_t ncols = acc_.size();
    for (std::size_t c = start; c < ncols; ++c) {
      if (acc_[c] == 0) continue;
      if (acc_[c] >= p_) acc_[c] %= p_;
      if (acc_[c] == 0) continue;
      const std::int64_t piv = pivot_[c];
      if (piv >= 0 && (lead < 0 || mode == ReductionMode::full)) {
        if (static_cast<std::size_t>(piv) >= k) throw std::logic_error("reducer signature not smaller than target");
        const SparseRow& reducer = rows[static_cast<std::size_t>(piv)].entries;
        const std::uint64_t factor = p_ - acc_[c];
        acc_[c] = 0;
        for (std::size_t t = 1; t < reducer.size(); ++t) {
          std::uint64_t& slot = acc_[reducer.cols[t]];
          slot += factor * reducer.vals[t].value;
          if (!lazy_) slot %= p_;
        }
        stats.multiplications += reducer.size() - 1;
        touched_end = std::max(touched_end, reducer.cols.back() + 1);
        continue;
      }
      if (lead < 0) {
        lead = static_cast<std::int64_t>(c);
        if (mode == ReductionMode::top) break;
      }
    }
    if (lead < 0) {
      std::fill(acc_.begin() + start, acc_.begin() + touched_end, 0);
      row.cols.clear();
      row.vals.clear();
      return false;
    }
    row.cols.clear();
    row.vals.clear();
    for (std::size_t c = static_cast<std::size_t>(lead); c < touched_end; ++c) {
      std::uint64_t v = acc_[c];
      if (v == 0) continue;
      if (v >= p_) v %= p_;
      if (v != 0) row.push_back(static_cast<std::uint32_t>(c), Fp{static_cast<std::uint32_t>(v)});
    }
    std::fill(acc_.begin() + start, acc_.begin() + touched_end, 0);
    normalize(row, stats);
    return true;
  }

 private:
  void normalize(SparseRow& row, StepStats& stats) {
    if (row.lead_value().value == 1) return;
    const Fp inv = field_.inv(row.lead_value());
    for (auto& v : row.vals) v = field_.mul(v, inv);
    stats.normalizations += row.size();
  }

  PrimeField field_;
  std::uint64_t p_;
  bool lazy_;
  std::vector<std::int64_t> pivot_;
  std::vector<std::uint64_t> acc_;
};

// Compacts away vanished rows while reducing rows [from, end) in order.
void eliminate_range(SignedMatrix& m, std::size_t from, ReductionMode mode, Eliminator& elim, StepStats& stats) {
  std::size_t write = from;
  for (std::size_t k = from; k < m.rows.size(); ++k) {
    if (write != k) m.rows[write] = std::move(m.rows[k]);
    const std::uint32_t built_lead = m.rows[write].entries.empty() ? 0 : m.rows[write].entries.lead();
    if (!elim.reduce(m.rows, write, mode, stats)) {
      ++stats.zero_reductions;
      continue;
    }
    if (m.rows[write].entries.lead() != built_lead) ++stats.computed;
    elim.register_pivot(m.rows[write].entries, write);
    ++write;
  }
  m.rows.resize(write);
}

Polynomial row_polynomial(const SparseRow& row, const DegreeBasis& basis, const PrimeField& field) {
  std::vector<Term> terms;
  terms.reserve(row.size());
  for (std::size_t t = 0; t < row.size(); ++t) terms.push_back({basis[row.cols[t]], row.vals[t]});
  return Polynomial::from_terms(basis.num_vars(), field, std::move(terms));
}

}  // namespace

void valid_eliminate(SignedMatrix& m, std::size_t reduced_prefix, ReductionMode mode, const PrimeField& field,
                     StepStats& stats) {
  Eliminator elim(m.columns->size(), field);
  for (std::size_t k = 0; k < reduced_prefix; ++k) elim.register_pivot(m.rows[k].entries, k);
  eliminate_range(m, reduced_prefix, mode, elim, stats);
}

std::size_t extract_basis(const SignedMatrix& reduced, std::size_t first_row, std::size_t index,
                          const PrimeField& field, std::vector<GBasisElement>& elements) {
  std::vector<Monomial> leads;
  for (const auto& e : elements) {
    if (e.signature.index <= index) leads.push_back(e.polynomial.leading_monomial());
  }
  const std::size_t before = elements.size();
  for (std::size_t k = first_row; k < reduced.rows.size(); ++k) {
    const SignedRow& row = reduced.rows[k];
    if (row.entries.empty() || row.signature.index != index) continue;
    const Monomial& lt = (*reduced.columns)[row.entries.lead()];
    const bool reducible = std::any_of(leads.begin(), leads.end(), [&](const Monomial& g) { return divides(g, lt); });
    if (reducible) continue;
    elements.push_back({row.signature, row_polynomial(row.entries, *reduced.columns, field)});
  }
  return elements.size() - before;
}

std::vector<GBasisElement> F5Result::basis(std::size_t i) const {
  std::vector<GBasisElement> out;
  for (const auto& e : elements) {
    if (e.signature.index <= i) out.push_back(e);
  }
  return out;
}

std::size_t F5Result::new_elements(std::size_t i) const {
  return static_cast<std::size_t>(
      std::count_if(elements.begin(), elements.end(), [&](const GBasisElement& e) { return e.signature.index == i; }));
}

F5Result run_f5(std::span<const Polynomial> system, const F5Options& options) {
  if (system.empty()) throw std::invalid_argument("empty system");
  require_homogeneous_system(system);
  const std::size_t n = system.front().num_vars();
  const std::size_t m = system.size();
  const PrimeField field = system.front().field();

  F5Result result;
  result.prime = field.prime();
  result.num_polynomials = m;
  result.num_vars = n;
  result.mode = options.mode;
  for (const auto& f : system) {
    if (f.degree() == 0) throw std::invalid_argument("system contains a constant polynomial");
    if (!result.degrees.empty() && f.degree() < result.degrees.back()) {
      throw std::invalid_argument("system is not sorted by degree");
    }
    result.degrees.push_back(f.degree());
  }
  const unsigned max_degree = options.max_degree ? options.max_degree : macaulay_bound(result.degrees);
  if (max_degree < result.degrees.front()) throw std::invalid_argument("degree bound below the smallest degree");
  result.max_degree = max_degree;

  const MonomialTables tables(n, max_degree);
  // Leading columns of every reduced row per degree, tagged with the row index.
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> leads_by_degree(max_degree + 1);

  SignedMatrix prev{0, tables.basis_ptr(0), {}};
  for (unsigned d = result.degrees.front(); d <= max_degree; ++d) {
    SignedMatrix cur{d, tables.basis_ptr(d), {}};
    Eliminator elim(cur.columns->size(), field);
    for (std::size_t i = 1; i <= m; ++i) {
      const unsigned di = result.degrees[i - 1];
      if (d < di) continue;  // M_{d,i} = M_{d,i-1}
      StepStats stats;
      stats.degree = d;
      stats.index = i;
      const std::size_t prefix = cur.rows.size();
      std::vector<Signature> excluded;
      if (d == di) {
        SignedRow row;
        row.signature = {i, Monomial(n)};
        row.multiplier_column = 0;
        for (const auto& term : system[i - 1].terms()) {
          row.entries.push_back(cur.columns->index_of(term.monomial), term.coefficient);
        }
        cur.rows.push_back(std::move(row));
      } else {
        CriterionSet crit(tables.basis_ptr(d - di));
        for (const auto& [idx, col] : leads_by_degree[d - di]) {
          if (idx < i) crit.insert_column(col);
        }
        auto fresh = build_step(prev, i, di, crit, tables, options.keep_trace ? &excluded : nullptr);
        if (!options.keep_trace) {
          // Count exclusions without materializing signatures.
          std::size_t candidates = 0;
          for (const auto& row : prev.rows) {
            if (row.signature.index == i) {
              const std::size_t first = std::max<std::size_t>(1, tables.max_var(d - 1 - di, row.multiplier_column));
              candidates += n - first + 1;
            }
          }
          stats.excluded = candidates - fresh.size();
        } else {
          stats.excluded = excluded.size();
        }
        for (auto& r : fresh) cur.rows.push_back(std::move(r));
      }
      stats.new_rows = cur.rows.size() - prefix;
      stats.rows = cur.rows.size();
      StepTrace trace;
      if (options.keep_trace) {
        trace.degree = d;
        trace.index = i;
        trace.excluded = std::move(excluded);
        trace.built = cur;
      }
      eliminate_range(cur, prefix, options.mode, elim, stats);
      for (std::size_t k = prefix; k < cur.rows.size(); ++k) {
        leads_by_degree[d].push_back({i, cur.rows[k].entries.lead()});
      }
      stats.new_basis_elements = extract_basis(cur, prefix, i, field, result.elements);
      if (options.keep_trace) {
        trace.reduced = cur;
        result.trace.push_back(std::move(trace));
      }
      result.stats.steps.push_back(stats);
    }
    prev = std::move(cur);
  }
  return result;
}

StructureReport structure_check(const F5Result& result, bool snp) {
  StructureReport report;
  for (const auto& e : result.elements) {
    const std::size_t j = e.signature.index;
    const std::string tag = "(" + std::to_string(j) + ", " + e.signature.multiplier.to_string({}) + ")";
    if (j < 1 || j > result.num_polynomials) report.violations.push_back(tag + ": index out of range");
    if (e.polynomial.is_zero()) {
      report.violations.push_back(tag + ": zero polynomial");
      continue;
    }
    if (e.polynomial.degree() > result.max_degree) report.violations.push_back(tag + ": degree above the bound");
    if (!snp) continue;
    if (e.polynomial.leading_monomial().max_var() > j) {
      report.violations.push_back(tag + ": leading monomial uses a variable beyond x_" + std::to_string(j));
    }
    if (e.signature.multiplier.max_var() + 1 > j) {
      report.violations.push_back(tag + ": multiplier uses a variable beyond x_" + std::to_string(j - 1));
    }
  }
  return report;
}

std::vector<Polynomial> reduce_basis(std::span<const Polynomial> basis) {
  std::vector<Polynomial> sorted;
  for (const auto& g : basis) {
    if (!g.is_zero()) sorted.push_back(g.monic());
  }
  // Ascending leading monomial so each minimal generator is kept once.
  std::stable_sort(sorted.begin(), sorted.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (const auto& g : sorted) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
      return divides(h.leading_monomial(), g.leading_monomial());
    });
    if (!redundant) minimal.push_back(g);
  }
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back(minimal[l]);
    }
    out.push_back(normal_form(minimal[k], others).monic());
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_cmp(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return out;
}

std::vector<Polynomial> reduce_basis(std::span<const GBasisElement> basis) {
  std::vector<Polynomial> polys;
  polys.reserve(basis.size());
  for (const auto& e : basis) polys.push_back(e.polynomial);
  return reduce_basis(std::span<const Polynomial>(polys));
}

}  // namespace sigf5
