#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sigf5/polynomial.hpp"
#include "sigf5/sparse_row.hpp"

namespace sigf5 {

// Row label (i, t): the row stands for t * f_i plus rows of smaller signature.
struct Signature {
  std::size_t index = 0;  // 1-based
  Monomial multiplier;
  friend bool operator==(const Signature&, const Signature&) = default;
};
std::strong_ordering operator<=>(const Signature& a, const Signature& b);

struct SignedRow {
  Signature signature;
  std::uint32_t multiplier_column = 0;  // position of the multiplier in its degree basis
  std::int64_t parent = -1;             // row of the degree-(d-1) matrix it was built from; -1 for (i, 1)
  SparseRow entries;
};

// Rows in strictly increasing signature order; columns are T_d in decreasing grevlex.
struct SignedMatrix {
  unsigned degree = 0;
  std::shared_ptr<const DegreeBasis> columns;
  std::vector<SignedRow> rows;
};

enum class ReductionMode { top, full };

std::string to_string(ReductionMode mode);
ReductionMode parse_reduction_mode(const std::string& text);

struct StepStats {
  unsigned degree = 0;
  std::size_t index = 0;
  std::size_t rows = 0;      // rows of M_{d,i} before elimination
  std::size_t new_rows = 0;  // rows with index i built at this step
  std::size_t excluded = 0;  // candidate rows skipped by the criterion
  std::uint64_t multiplications = 0;
  std::uint64_t normalizations = 0;
  std::size_t zero_reductions = 0;
  std::size_t computed = 0;  // rows whose leading monomial moved during elimination
  std::size_t new_basis_elements = 0;
};

struct RunTotals {
  std::uint64_t multiplications = 0;
  std::uint64_t normalizations = 0;
  std::size_t zero_reductions = 0;
  std::size_t rows_built = 0;
  std::size_t excluded = 0;
  std::size_t polys_computed = 0;
  std::size_t basis_elements = 0;

  RunTotals& operator+=(const RunTotals& o);
};

struct RunStats {
  std::vector<StepStats> steps;
  RunTotals totals() const;
};

struct GBasisElement {
  Signature signature;
  Polynomial polynomial;
};

// Membership set of leading monomials of one degree.
class CriterionSet {
 public:
  explicit CriterionSet(std::shared_ptr<const DegreeBasis> basis);
  void insert(const Monomial& m);
  void insert_column(std::uint32_t c) { members_[c] = 1; }
  bool contains(const Monomial& m) const;
  bool contains_column(std::uint32_t c) const { return members_[c] != 0; }
  const DegreeBasis& basis() const { return *basis_; }

 private:
  std::shared_ptr<const DegreeBasis> basis_;
  std::vector<char> members_;
};

bool f5_criterion(const CriterionSet& crit, const Monomial& t);

// New rows (i, u x_j), j >= max_var(u), for every row (i, u) of `prev` (degree d-1), skipping u x_j in
// `crit`. Returned in increasing signature order. Skipped signatures are appended to `excluded`.
std::vector<SignedRow> build_step(const SignedMatrix& prev, std::size_t index, unsigned index_degree,
                                  const CriterionSet& crit, const MonomialTables& tables,
                                  std::vector<Signature>* excluded);

// Rows [0, reduced_prefix) are already reduced pivots. Each later row, in order, is reduced only by rows
// before it, then made monic; rows reducing to zero are removed and counted.
void valid_eliminate(SignedMatrix& m, std::size_t reduced_prefix, ReductionMode mode, const PrimeField& field,
                     StepStats& stats);

// Appends to `elements` every row of `reduced` at or after `first_row` whose leading monomial is not
// divisible by the leading monomial of an element with index <= `index`. Returns the number appended.
std::size_t extract_basis(const SignedMatrix& reduced, std::size_t first_row, std::size_t index,
                          const PrimeField& field, std::vector<GBasisElement>& elements);

struct F5Options {
  ReductionMode mode = ReductionMode::top;
  unsigned max_degree = 0;  // 0 selects the Macaulay bound
  bool keep_trace = false;
};

struct StepTrace {
  unsigned degree = 0;
  std::size_t index = 0;
  std::vector<Signature> excluded;
  SignedMatrix built;    // M_{d,i}
  SignedMatrix reduced;  // reduced M_{d,i}
};

struct F5Result {
  std::uint32_t prime = 0;
  std::size_t num_polynomials = 0;
  std::size_t num_vars = 0;
  unsigned max_degree = 0;
  std::vector<unsigned> degrees;
  ReductionMode mode = ReductionMode::top;
  std::vector<GBasisElement> elements;  // insertion order; G_i is the elements with index <= i
  RunStats stats;
  std::vector<StepTrace> trace;

  std::vector<GBasisElement> basis(std::size_t i) const;
  // Elements with index exactly i, i.e. G_i minus G_{i-1}.
  std::size_t new_elements(std::size_t i) const;
};

// Requires a homogeneous system of positive degrees sorted ascending, and max_degree >= d_1.
F5Result run_f5(std::span<const Polynomial> system, const F5Options& options = {});

struct StructureReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Signature rows are well formed; when `snp`, every ((j, t), g) also has max_var(LT g) <= j and
// max_var(t) <= j - 1.
StructureReport structure_check(const F5Result& result, bool snp);

// Minimal, monic, pairwise fully reduced basis, sorted by decreasing leading monomial.
std::vector<Polynomial> reduce_basis(std::span<const Polynomial> basis);
std::vector<Polynomial> reduce_basis(std::span<const GBasisElement> basis);

}  // namespace sigf5
