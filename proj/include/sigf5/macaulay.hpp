#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sigf5/polynomial.hpp"
#include "sigf5/sparse_row.hpp"

namespace sigf5 {

// Checks the shared preconditions of polynomial systems: same ring, nonzero, homogeneous.
void require_homogeneous_system(std::span<const Polynomial> system);

struct RowLabel {
  std::size_t index;  // 1-based position of the polynomial in the system
  Monomial multiplier;
  friend bool operator==(const RowLabel&, const RowLabel&) = default;
};

// Row (i, t) holds the coefficients of t * f_i over T_d.
struct MacaulayMatrix {
  unsigned degree = 0;
  PrimeField field;
  std::shared_ptr<const DegreeBasis> columns;
  std::vector<RowLabel> labels;
  std::vector<SparseRow> rows;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_cols() const { return columns->size(); }
  std::vector<Fp> dense_row(std::size_t k) const;
};

// Rows ordered by polynomial index, then multiplier in decreasing grevlex.
MacaulayMatrix build_macaulay(std::span<const Polynomial> system, unsigned d);

struct EchelonResult {
  std::size_t rank = 0;
  std::vector<Monomial> pivots;  // decreasing grevlex
  std::vector<SparseRow> rows;   // reduced row echelon form, monic, aligned with pivots
  std::uint64_t multiplications = 0;
};

// Row-by-row elimination in label order over columns in decreasing grevlex; never swaps columns.
EchelonResult echelon(const MacaulayMatrix& m);

std::size_t rank(const MacaulayMatrix& m);

// C(n+d-1, d) - rank of the degree-d Macaulay matrix.
std::uint64_t hilbert_function(std::span<const Polynomial> system, unsigned d);

// HF(0), ..., HF(max_degree) in one pass. Low degrees are settled by elimination on Macaulay matrices;
// once the orthogonal complement of I_{d-1} is small, I_d^perp is obtained as the set of functionals whose
// contractions by every variable lie in I_{d-1}^perp and that vanish on the generators of degree d.
std::vector<std::uint64_t> hilbert_series(std::span<const Polynomial> system, unsigned max_degree);

void write_macaulay_csv(const MacaulayMatrix& m, std::span<const std::string> names, std::ostream& out);

}  // namespace sigf5
