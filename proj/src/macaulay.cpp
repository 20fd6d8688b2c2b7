#include "sigf5/macaulay.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "sigf5/dense_rank.hpp"

namespace sigf5 {

namespace {

constexpr std::size_t kBlockedThreshold = 1u << 14;

SparseRow multiple_row(const Polynomial& f, const Monomial& t) {
  SparseRow row;
  row.cols.reserve(f.size());
  row.vals.reserve(f.size());
  for (const auto& term : f.terms()) {
    row.push_back(static_cast<std::uint32_t>(grevlex_rank(mul(t, term.monomial))), term.coefficient);
  }
  return row;
}

std::size_t rank_of_rows(const MacaulayMatrix& m, std::span<const std::size_t> selected) {
  if (selected.empty()) return 0;
  if (blocked_rank_supported(m.field) && selected.size() * m.num_cols() >= kBlockedThreshold) {
    return blocked_rank(selected.size(), m.num_cols(), m.field, [&](std::size_t r, double* dst) {
      const SparseRow& row = m.rows[selected[r]];
      for (std::size_t k = 0; k < row.size(); ++k) dst[row.cols[k]] = row.vals[k].value;
    });
  }
  MacaulayMatrix sub{m.degree, m.field, m.columns, {}, {}};
  for (std::size_t k : selected) {
    sub.labels.push_back(m.labels[k]);
    sub.rows.push_back(m.rows[k]);
  }
  return echelon(sub).rank;
}

}  // namespace

void require_homogeneous_system(std::span<const Polynomial> system) {
  for (const auto& f : system) {
    if (f.num_vars() != system.front().num_vars() || !(f.field() == system.front().field())) {
      throw std::invalid_argument("system polynomials live in different rings");
    }
    if (f.is_zero()) throw std::invalid_argument("system contains the zero polynomial");
    if (!f.is_homogeneous()) throw std::invalid_argument("system contains a non-homogeneous polynomial");
  }
}

std::vector<Fp> MacaulayMatrix::dense_row(std::size_t k) const {
  std::vector<Fp> out(num_cols());
  for (std::size_t j = 0; j < rows[k].size(); ++j) out[rows[k].cols[j]] = rows[k].vals[j];
  return out;
}

MacaulayMatrix build_macaulay(std::span<const Polynomial> system, unsigned d) {
  if (system.empty()) throw std::invalid_argument("empty system");
  require_homogeneous_system(system);
  const std::size_t n = system.front().num_vars();
  MacaulayMatrix m{d, system.front().field(), shared_degree_basis(n, d), {}, {}};
  for (std::size_t i = 0; i < system.size(); ++i) {
    const unsigned di = system[i].degree();
    if (di > d) continue;
    for (const auto& t : enumerate(n, d - di, n)) {
      m.labels.push_back(RowLabel{i + 1, t});
      m.rows.push_back(multiple_row(system[i], t));
    }
  }
  return m;
}

EchelonResult echelon(const MacaulayMatrix& m) {
  const PrimeField& k = m.field;
  const std::size_t ncols = m.num_cols();
  EchelonResult out;
  std::vector<std::int64_t> pivot_row(ncols, -1);
  std::vector<Fp> acc(ncols);
  for (const auto& row : m.rows) {
    std::fill(acc.begin(), acc.end(), Fp{});
    for (std::size_t j = 0; j < row.size(); ++j) acc[row.cols[j]] = row.vals[j];
    std::int64_t lead = -1;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (acc[c].value == 0) continue;
      if (pivot_row[c] < 0) {
        if (lead < 0) lead = static_cast<std::int64_t>(c);
        continue;
      }
      const SparseRow& piv = out.rows[static_cast<std::size_t>(pivot_row[c])];
      Fp factor = k.neg(acc[c]);
      for (std::size_t j = 1; j < piv.size(); ++j) {
        acc[piv.cols[j]] = k.add(acc[piv.cols[j]], k.mul(factor, piv.vals[j]));
      }
      out.multiplications += piv.size() - 1;
      acc[c] = Fp{};
    }
    if (lead < 0) continue;
    SparseRow reduced;
    Fp scale = k.inv(acc[static_cast<std::size_t>(lead)]);
    for (std::size_t c = static_cast<std::size_t>(lead); c < ncols; ++c) {
      if (acc[c].value != 0) reduced.push_back(static_cast<std::uint32_t>(c), k.mul(acc[c], scale));
    }
    out.multiplications += reduced.size() - 1;
    // Keep earlier rows free of the new pivot column.
    for (auto& prev : out.rows) {
      auto it = std::lower_bound(prev.cols.begin(), prev.cols.end(), static_cast<std::uint32_t>(lead));
      if (it == prev.cols.end() || *it != static_cast<std::uint32_t>(lead)) continue;
      Fp factor = k.neg(prev.vals[static_cast<std::size_t>(it - prev.cols.begin())]);
      std::vector<Fp> dense(ncols);
      for (std::size_t j = 0; j < prev.size(); ++j) dense[prev.cols[j]] = prev.vals[j];
      for (std::size_t j = 0; j < reduced.size(); ++j) {
        dense[reduced.cols[j]] = k.add(dense[reduced.cols[j]], k.mul(factor, reduced.vals[j]));
      }
      out.multiplications += reduced.size() - 1;
      SparseRow updated;
      for (std::size_t c = prev.lead(); c < ncols; ++c) {
        if (dense[c].value != 0) updated.push_back(static_cast<std::uint32_t>(c), dense[c]);
      }
      prev = std::move(updated);
    }
    pivot_row[static_cast<std::size_t>(lead)] = static_cast<std::int64_t>(out.rows.size());
    out.rows.push_back(std::move(reduced));
  }
  std::vector<std::size_t> order(out.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return out.rows[a].lead() < out.rows[b].lead();
  });
  std::vector<SparseRow> sorted;
  sorted.reserve(order.size());
  for (std::size_t i : order) {
    sorted.push_back(std::move(out.rows[i]));
    out.pivots.push_back((*m.columns)[sorted.back().lead()]);
  }
  out.rows = std::move(sorted);
  out.rank = out.rows.size();
  return out;
}

std::size_t rank(const MacaulayMatrix& m) {
  std::vector<std::size_t> all(m.num_rows());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return rank_of_rows(m, all);
}

std::uint64_t hilbert_function(std::span<const Polynomial> system, unsigned d) {
  if (system.empty()) throw std::invalid_argument("empty system");
  const std::size_t n = system.front().num_vars();
  const std::uint64_t total = binomial(n + d - 1, d);
  MacaulayMatrix m = build_macaulay(system, d);
  // Rows (i, t) with t_j < d_j for all j < i correspond one-to-one with the monomials divisible by
  // some x_j^{d_j}; when those are all of T_d, full rank of this square part settles the rank.
  std::vector<std::size_t> square;
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    const RowLabel& label = m.labels[r];
    bool keep = label.index <= n;
    for (std::size_t j = 1; keep && j < label.index; ++j) {
      keep = label.multiplier.exponent(j) < system[j - 1].degree();
    }
    if (keep) square.push_back(r);
  }
  if (!square.empty() && square.size() == total && rank_of_rows(m, square) == total) return 0;
  return total - rank(m);
}

void write_macaulay_csv(const MacaulayMatrix& m, std::span<const std::string> names, std::ostream& out) {
  out << "row";
  for (const auto& mono : m.columns->monomials()) out << ',' << mono.to_string(names);
  out << '\n';
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    out << '(' << m.labels[r].index << ' ' << m.labels[r].multiplier.to_string(names) << ')';
    for (Fp v : m.dense_row(r)) out << ',' << m.field.signed_value(v);
    out << '\n';
  }
}

}  // namespace sigf5
