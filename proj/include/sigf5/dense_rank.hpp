#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "sigf5/field.hpp"

namespace sigf5 {

// Writes row `row` (ncols entries, each in [0, p)) into `dst`, which is zero on entry.
using DenseRowFiller = std::function<void(std::size_t row, double* dst)>;

// True when products of residues accumulate exactly in doubles for this prime.
bool blocked_rank_supported(const PrimeField& field);

// Recursive blocked LU over GF(p) with row pivoting and column skipping.
// Requires blocked_rank_supported(field).
class ModularLU {
 public:
  ModularLU(std::size_t nrows, std::size_t ncols, const PrimeField& field, const DenseRowFiller& fill);
  ~ModularLU();
  ModularLU(ModularLU&&) noexcept;
  ModularLU& operator=(ModularLU&&) noexcept;

  std::size_t rank() const;
  std::size_t num_cols() const;
  // Pivot columns, increasing.
  std::vector<std::size_t> pivot_columns() const;
  // Basis of the right kernel: one vector per non-pivot column c, with entry 1 at c and 0 at the
  // other non-pivot columns. Vectors are stored as consecutive blocks of num_cols() entries.
  std::vector<Fp> kernel_basis() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::size_t blocked_rank(std::size_t nrows, std::size_t ncols, const PrimeField& field,
                         const DenseRowFiller& fill);

}  // namespace sigf5
