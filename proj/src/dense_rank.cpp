#include "sigf5/dense_rank.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sigf5 {

namespace {

using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Index = Eigen::Index;

constexpr double kExactLimit = 9007199254740992.0;  // 2^53
constexpr Index kBaseWidth = 16;
constexpr Index kRowChunk = 2048;

// Largest inner dimension whose product sums stay exact on top of an accumulator below 2p.
Index max_inner(double p) {
  double sq = (p - 1) * (p - 1);
  double k = std::floor((kExactLimit - 2 * p) / (2 * sq));
  return k >= 1 ? static_cast<Index>(std::min(k, 1e9)) : 0;
}

class BlockedLU {
 public:
  BlockedLU(Mat&& a, const PrimeField& field)
      : a_(std::move(a)),
        field_(field),
        p_(field.prime()),
        invp_(1.0 / field.prime()),
        kmax_(max_inner(field.prime())),
        pivcol_(a_.rows(), -1) {}

  std::size_t run() {
    rank_ = factor(0, 0, a_.cols());
    return static_cast<std::size_t>(rank_);
  }

  Index rank() const { return rank_; }
  Index cols() const { return a_.cols(); }
  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> out;
    for (Index s = 0; s < rank_; ++s) out.push_back(static_cast<std::size_t>(pivcol_[s]));
    return out;
  }

  // Back substitution through the echelon rows for all free columns at once.
  std::vector<Fp> kernel_basis() const {
    const Index ncols = a_.cols();
    std::vector<char> is_pivot(ncols, 0);
    for (Index s = 0; s < rank_; ++s) is_pivot[pivcol_[s]] = 1;
    std::vector<Index> free_cols;
    for (Index c = 0; c < ncols; ++c) {
      if (!is_pivot[c]) free_cols.push_back(c);
    }
    const Index h = static_cast<Index>(free_cols.size());
    std::vector<Fp> out(static_cast<std::size_t>(h * ncols));
    if (h == 0) return out;
    Mat x = Mat::Zero(ncols, h);
    for (Index f = 0; f < h; ++f) x(free_cols[f], f) = 1.0;
    for (Index s = rank_ - 1; s >= 0; --s) {
      const Index pc = pivcol_[s];
      const Index tail = ncols - pc - 1;
      Eigen::Matrix<double, 1, Eigen::Dynamic> acc = Eigen::Matrix<double, 1, Eigen::Dynamic>::Zero(h);
      for (Index t = 0; t < tail; t += kmax_) {
        Index kk = std::min(kmax_, tail - t);
        acc.noalias() += a_.block(s, pc + 1 + t, 1, kk) * x.block(pc + 1 + t, 0, kk, h);
        for (Index f = 0; f < h; ++f) acc(f) = reduce_scalar(acc(f));
      }
      const double factor = p_ - field_.inv(Fp{static_cast<std::uint32_t>(a_(s, pc))}).value;
      for (Index f = 0; f < h; ++f) x(pc, f) = reduce_scalar(acc(f) * factor);
    }
    for (Index f = 0; f < h; ++f) {
      for (Index c = 0; c < ncols; ++c) out[static_cast<std::size_t>(f * ncols + c)] = Fp{static_cast<std::uint32_t>(x(c, f))};
    }
    return out;
  }

 private:
  template <typename Block>
  void reduce(Block&& b) {
    auto x = b.array();
    x -= p_ * (x * invp_).floor();
    x = (x < 0.0).select(x + p_, x);
    x = (x >= p_).select(x - p_, x);
  }

  double reduce_scalar(double x) const {
    x -= p_ * std::floor(x * invp_);
    if (x < 0) x += p_;
    if (x >= p_) x -= p_;
    return x;
  }

  // Processes columns [c0, c1) for rows [r0, R). Pivot rows land at r0.. with multipliers stored
  // below the diagonal in their pivot columns; columns at or beyond c1 are left untouched.
  Index factor(Index r0, Index c0, Index c1) {
    if (r0 >= a_.rows() || c0 >= c1) return 0;
    if (c1 - c0 <= kBaseWidth) return factor_base(r0, c0, c1);
    Index cm = c0 + (c1 - c0) / 2;
    Index k1 = factor(r0, c0, cm);
    if (k1 > 0) update_right(r0, k1, cm, c1);
    Index k2 = factor(r0 + k1, cm, c1);
    return k1 + k2;
  }

  Index factor_base(Index r0, Index c0, Index c1) {
    const Index rows = a_.rows();
    Index r = r0;
    for (Index col = c0; col < c1 && r < rows; ++col) {
      Index piv = -1;
      for (Index i = r; i < rows; ++i) {
        double v = reduce_scalar(a_(i, col));
        a_(i, col) = v;
        if (piv < 0 && v != 0.0) piv = i;
      }
      if (piv < 0) continue;
      if (piv != r) a_.row(piv).swap(a_.row(r));
      for (Index cc = col; cc < c1; ++cc) a_(r, cc) = reduce_scalar(a_(r, cc));
      pivcol_[r] = col;
      const double inv = field_.inv(Fp{static_cast<std::uint32_t>(a_(r, col))}).value;
      const double* urow = &a_(r, 0);
      const Index w = c1 - col - 1;
      for (Index i = r + 1; i < rows; ++i) {
        double v = a_(i, col);
        if (v == 0.0) continue;
        double l = reduce_scalar(v * inv);
        a_(i, col) = l;
        double* row = &a_(i, 0);
        for (Index cc = 0; cc < w; ++cc) row[col + 1 + cc] -= l * urow[col + 1 + cc];
      }
      ++r;
      // Entries of the remaining panel grow by < p^2 per pivot; keep them in range.
      if ((r - r0) % 8 == 0 && col + 1 < c1) reduce(a_.block(r, col + 1, rows - r, c1 - col - 1));
    }
    if (r < rows) reduce(a_.block(r, c0, rows - r, c1 - c0));
    return r - r0;
  }

  // Applies the k pivots found at rows [r0, r0+k) to columns [cm, c1) of all active rows.
  void update_right(Index r0, Index k, Index cm, Index c1) {
    const Index w = c1 - cm;
    Mat l11(k, k);
    for (Index s = 0; s < k; ++s) {
      for (Index t = 0; t < k; ++t) l11(s, t) = t < s ? a_(r0 + s, pivcol_[r0 + t]) : 0.0;
    }
    solve_unit_lower(l11, 0, k, r0, cm, w);
    const Index below = r0 + k;
    for (Index start = below; start < a_.rows(); start += kRowChunk) {
      Index n = std::min(kRowChunk, a_.rows() - start);
      Mat l21(n, k);
      for (Index i = 0; i < n; ++i) {
        for (Index t = 0; t < k; ++t) l21(i, t) = a_(start + i, pivcol_[r0 + t]);
      }
      auto target = a_.block(start, cm, n, w);
      sub_product(target, l21, 0, k, r0, cm, w);
    }
  }

  // target -= lhs[:, t0:t1] * A[u0 + (t0:t1), cm:cm+w], reduced mod p, chunking the inner dimension.
  template <typename Target, typename Lhs>
  void sub_product(Target&& target, const Lhs& lhs, Index t0, Index t1, Index u0, Index cm, Index w) {
    for (Index t = t0; t < t1; t += kmax_) {
      Index kk = std::min(kmax_, t1 - t);
      target.noalias() -= lhs.block(0, t, lhs.rows(), kk) * a_.block(u0 + t, cm, kk, w);
      reduce(target);
    }
  }

  // Solves L X = B in place for pivot rows [a, b) of the block, L unit lower triangular.
  void solve_unit_lower(const Mat& l, Index a, Index b, Index r0, Index cm, Index w) {
    if (b - a <= kBaseWidth) {
      for (Index s = a + 1; s < b; ++s) {
        auto row = a_.block(r0 + s, cm, 1, w);
        row.noalias() -= l.block(s, a, 1, s - a) * a_.block(r0 + a, cm, s - a, w);
        reduce(row);
      }
      return;
    }
    Index h = a + (b - a) / 2;
    solve_unit_lower(l, a, h, r0, cm, w);
    auto lower = a_.block(r0 + h, cm, b - h, w);
    sub_product(lower, l.block(h, 0, b - h, l.cols()), a, h, r0, cm, w);
    solve_unit_lower(l, h, b, r0, cm, w);
  }

  Mat a_;
  PrimeField field_;
  double p_;
  double invp_;
  Index kmax_;
  std::vector<Index> pivcol_;
  Index rank_ = 0;
};

}  // namespace

bool blocked_rank_supported(const PrimeField& field) {
  return max_inner(field.prime()) >= 64;
}

struct ModularLU::Impl {
  BlockedLU lu;
};

ModularLU::ModularLU(std::size_t nrows, std::size_t ncols, const PrimeField& field, const DenseRowFiller& fill) {
  if (!blocked_rank_supported(field)) throw std::invalid_argument("prime too large for the blocked rank kernel");
  Mat a = Mat::Zero(static_cast<Index>(nrows), static_cast<Index>(ncols));
  for (std::size_t i = 0; i < nrows; ++i) fill(i, a.data() + i * ncols);
  impl_ = std::make_unique<Impl>(Impl{BlockedLU(std::move(a), field)});
  impl_->lu.run();
}

ModularLU::~ModularLU() = default;
ModularLU::ModularLU(ModularLU&&) noexcept = default;
ModularLU& ModularLU::operator=(ModularLU&&) noexcept = default;

std::size_t ModularLU::rank() const { return static_cast<std::size_t>(impl_->lu.rank()); }
std::size_t ModularLU::num_cols() const { return static_cast<std::size_t>(impl_->lu.cols()); }
std::vector<std::size_t> ModularLU::pivot_columns() const { return impl_->lu.pivot_columns(); }
std::vector<Fp> ModularLU::kernel_basis() const { return impl_->lu.kernel_basis(); }

std::size_t blocked_rank(std::size_t nrows, std::size_t ncols, const PrimeField& field,
                         const DenseRowFiller& fill) {
  if (nrows == 0 || ncols == 0) return 0;
  return ModularLU(nrows, ncols, field, fill).rank();
}

}  // namespace sigf5
