#include <algorithm>
#include <optional>
#include <stdexcept>

#include "sigf5/dense_rank.hpp"
#include "sigf5/macaulay.hpp"

namespace sigf5 {

namespace {

// Cost weights of one unit of the dual-step model and of one blocked multiply-add, calibrated on
// dense quadratic and cubic systems with n <= 9; only their ratio matters.
constexpr double kScalarCost = 1e-10;
constexpr double kBlockedCost = 5e-11;
constexpr std::size_t kKernelExtractLimit = 2048;

// Basis of I_d^perp: h functionals on T_d, stored row-major.
struct Complement {
  std::size_t h = 0;
  std::size_t width = 0;
  std::vector<Fp> rows;
  Fp at(std::size_t k, std::size_t col) const { return rows[k * width + col]; }
};

// Reduced row echelon form grown one row at a time.
class IncrementalEchelon {
 public:
  IncrementalEchelon(std::size_t width, const PrimeField& field)
      : width_(width), field_(field), pivot_of_(width, -1) {}

  bool full() const { return rows_.size() == width_; }

  void add(std::vector<Fp>& v) {
    const std::uint64_t p = field_.prime();
    std::int64_t lead = -1;
    for (std::size_t c = 0; c < width_; ++c) {
      if (v[c].value == 0) continue;
      if (pivot_of_[c] < 0) {
        if (lead < 0) lead = static_cast<std::int64_t>(c);
        continue;
      }
      const auto& row = rows_[static_cast<std::size_t>(pivot_of_[c])];
      const std::uint64_t f = p - v[c].value;
      for (std::size_t j = c; j < width_; ++j) {
        if (row[j].value != 0) v[j].value = static_cast<std::uint32_t>((v[j].value + f * row[j].value) % p);
      }
    }
    if (lead < 0) return;
    const auto lc = static_cast<std::size_t>(lead);
    const std::uint64_t s = field_.inv(v[lc]).value;
    for (std::size_t j = lc; j < width_; ++j) v[j].value = static_cast<std::uint32_t>(v[j].value * s % p);
    for (auto& row : rows_) {
      if (row[lc].value == 0) continue;
      const std::uint64_t f = p - row[lc].value;
      for (std::size_t j = lc; j < width_; ++j) {
        if (v[j].value != 0) row[j].value = static_cast<std::uint32_t>((row[j].value + f * v[j].value) % p);
      }
    }
    pivot_of_[lc] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(v);
  }

  // One vector per free column c: 1 at c, minus the pivot rows' entries at c on their pivots.
  std::vector<std::vector<Fp>> nullspace() const {
    std::vector<std::vector<Fp>> out;
    for (std::size_t c = 0; c < width_; ++c) {
      if (pivot_of_[c] >= 0) continue;
      std::vector<Fp> x(width_);
      x[c] = Fp{1};
      for (std::size_t piv = 0; piv < width_; ++piv) {
        if (pivot_of_[piv] < 0) continue;
        x[piv] = field_.neg(rows_[static_cast<std::size_t>(pivot_of_[piv])][c]);
      }
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  std::size_t width_;
  PrimeField field_;
  std::vector<std::int64_t> pivot_of_;
  std::vector<std::vector<Fp>> rows_;
};

Complement dual_step(std::span<const Polynomial> system, const Complement& prev, unsigned d) {
  const std::size_t n = system.front().num_vars();
  const PrimeField& k = system.front().field();
  auto columns = shared_degree_basis(n, d);
  const std::size_t h = prev.h;
  const std::size_t unknowns = n * h;
  IncrementalEchelon eqs(unknowns, k);

  // Functional value at mu through its contraction by x_j: sum_k c[j,k] * prev_k(mu / x_j).
  auto contraction_column = [&](const Monomial& mu, std::size_t j) {
    Monomial q = mu;
    q.set_exponent(j, mu.exponent(j) - 1);
    return static_cast<std::size_t>(grevlex_rank(q));
  };
  auto first_var = [](const Monomial& mu) {
    std::size_t j = 1;
    while (mu.exponent(j) == 0) ++j;
    return j;
  };

  std::vector<Fp> eq(unknowns);
  for (const auto& mu : columns->monomials()) {
    if (eqs.full()) break;
    std::size_t prev_var = 0, prev_col = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      if (mu.exponent(j) == 0) continue;
      std::size_t col = contraction_column(mu, j);
      if (prev_var != 0) {
        std::fill(eq.begin(), eq.end(), Fp{});
        for (std::size_t t = 0; t < h; ++t) {
          eq[(prev_var - 1) * h + t] = prev.at(t, prev_col);
          eq[(j - 1) * h + t] = k.neg(prev.at(t, col));
        }
        eqs.add(eq);
      }
      prev_var = j;
      prev_col = col;
    }
  }
  for (const auto& f : system) {
    if (f.degree() != d || eqs.full()) continue;
    std::fill(eq.begin(), eq.end(), Fp{});
    for (const auto& term : f.terms()) {
      std::size_t j = first_var(term.monomial);
      std::size_t col = contraction_column(term.monomial, j);
      for (std::size_t t = 0; t < h; ++t) {
        auto& slot = eq[(j - 1) * h + t];
        slot = k.add(slot, k.mul(term.coefficient, prev.at(t, col)));
      }
    }
    eqs.add(eq);
  }

  Complement next;
  next.width = columns->size();
  auto null = eqs.nullspace();
  next.h = null.size();
  next.rows.assign(next.h * next.width, Fp{});
  for (std::size_t r = 0; r < null.size(); ++r) {
    for (std::size_t c = 0; c < next.width; ++c) {
      const Monomial& mu = (*columns)[c];
      std::size_t j = first_var(mu);
      std::size_t col = contraction_column(mu, j);
      Fp acc{};
      for (std::size_t t = 0; t < h; ++t) acc = k.add(acc, k.mul(null[r][(j - 1) * h + t], prev.at(t, col)));
      next.rows[r * next.width + c] = acc;
    }
  }
  return next;
}

bool annihilates(const MacaulayMatrix& m, const std::vector<Fp>& kernel, std::size_t h) {
  const std::uint64_t p = m.field.prime();
  const std::size_t width = m.num_cols();
  for (const auto& row : m.rows) {
    for (std::size_t f = 0; f < h; ++f) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < row.size(); ++j) {
        acc = (acc + std::uint64_t{row.vals[j].value} * kernel[f * width + row.cols[j]].value) % p;
      }
      if (acc != 0) return false;
    }
  }
  return true;
}

std::vector<Fp> kernel_from_echelon(const EchelonResult& e, std::size_t width, const PrimeField& field) {
  std::vector<std::int64_t> pivot_of(width, -1);
  for (std::size_t s = 0; s < e.rows.size(); ++s) pivot_of[e.rows[s].lead()] = static_cast<std::int64_t>(s);
  std::vector<Fp> out;
  std::vector<std::vector<Fp>> dense;
  for (const auto& row : e.rows) {
    std::vector<Fp> v(width);
    for (std::size_t j = 0; j < row.size(); ++j) v[row.cols[j]] = row.vals[j];
    dense.push_back(std::move(v));
  }
  for (std::size_t c = 0; c < width; ++c) {
    if (pivot_of[c] >= 0) continue;
    std::vector<Fp> x(width);
    x[c] = Fp{1};
    for (std::size_t s = 0; s < dense.size(); ++s) x[e.rows[s].lead()] = field.neg(dense[s][c]);
    out.insert(out.end(), x.begin(), x.end());
  }
  return out;
}

struct RankOutcome {
  std::uint64_t hf = 0;
  std::optional<Complement> complement;
};

RankOutcome rank_step(std::span<const Polynomial> system, unsigned d) {
  const std::size_t n = system.front().num_vars();
  MacaulayMatrix m = build_macaulay(system, d);
  const std::size_t width = m.num_cols();
  RankOutcome out;
  auto fill_from = [&](const std::vector<std::size_t>& selected) {
    return [&m, &selected](std::size_t r, double* dst) {
      const SparseRow& row = m.rows[selected[r]];
      for (std::size_t j = 0; j < row.size(); ++j) dst[row.cols[j]] = row.vals[j].value;
    };
  };
  if (m.num_rows() == 0) {
    out.hf = width;
    if (width <= kKernelExtractLimit) {
      Complement c{width, width, std::vector<Fp>(width * width)};
      for (std::size_t i = 0; i < width; ++i) c.rows[i * width + i] = Fp{1};
      out.complement = std::move(c);
    }
    return out;
  }
  if (blocked_rank_supported(m.field)) {
    std::vector<std::size_t> square;
    for (std::size_t r = 0; r < m.num_rows(); ++r) {
      const RowLabel& label = m.labels[r];
      bool keep = label.index <= n;
      for (std::size_t j = 1; keep && j < label.index; ++j) keep = label.multiplier.exponent(j) < system[j - 1].degree();
      if (keep) square.push_back(r);
    }
    if (!square.empty()) {
      ModularLU lu(square.size(), width, m.field, fill_from(square));
      if (lu.rank() == square.size()) {
        std::size_t h = width - square.size();
        std::vector<Fp> kernel = lu.kernel_basis();
        if (h == 0 || annihilates(m, kernel, h)) {
          out.hf = h;
          out.complement = Complement{h, width, std::move(kernel)};
          return out;
        }
      }
    }
    std::vector<std::size_t> all(m.num_rows());
    for (std::size_t r = 0; r < all.size(); ++r) all[r] = r;
    ModularLU lu(all.size(), width, m.field, fill_from(all));
    out.hf = width - lu.rank();
    if (out.hf <= kKernelExtractLimit) out.complement = Complement{out.hf, width, lu.kernel_basis()};
    return out;
  }
  EchelonResult e = echelon(m);
  out.hf = width - e.rank;
  if (out.hf <= kKernelExtractLimit) out.complement = Complement{out.hf, width, kernel_from_echelon(e, width, m.field)};
  return out;
}

}  // namespace

std::vector<std::uint64_t> hilbert_series(std::span<const Polynomial> system, unsigned max_degree) {
  if (system.empty()) throw std::invalid_argument("empty system");
  require_homogeneous_system(system);
  const std::size_t n = system.front().num_vars();
  std::vector<std::uint64_t> hf;
  std::optional<Complement> prev;
  for (unsigned d = 0; d <= max_degree; ++d) {
    const double width = static_cast<double>(binomial(n + d - 1, d));
    bool use_dual = false;
    if (prev) {
      const double unknowns = static_cast<double>(n * prev->h);
      const double dual_cost = width * static_cast<double>(n) * unknowns * unknowns * kScalarCost;
      const double rank_cost = width * width * width / 3.0 * kBlockedCost;
      use_dual = prev->h == 0 || dual_cost <= rank_cost;
    }
    if (use_dual) {
      prev = dual_step(system, *prev, d);
      hf.push_back(prev->h);
    } else {
      RankOutcome r = rank_step(system, d);
      hf.push_back(r.hf);
      prev = std::move(r.complement);
    }
  }
  return hf;
}

}  // namespace sigf5
