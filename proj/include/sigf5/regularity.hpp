#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sigf5/polynomial.hpp"

namespace sigf5 {

struct HilbertSeries {
  std::vector<std::int64_t> coefficients;  // z^0 .. z^trunc
  unsigned truncation() const { return static_cast<unsigned>(coefficients.size() - 1); }
};

// Expansion of prod_j (1 - z^{d_j}) / (1 - z)^n up to z^trunc.
HilbertSeries regular_series(std::span<const unsigned> degrees, std::size_t nvars, unsigned trunc);

// Compares the Hilbert function with the regular series in every degree <= up_to (0: the Macaulay bound).
bool is_regular(std::span<const Polynomial> system, unsigned up_to = 0);

// (f_1, ..., f_i, x_{i+1}, ..., x_n) as explicit polynomials.
std::vector<Polynomial> extended_sequence(std::span<const Polynomial> system, std::size_t i);

// f_1, ..., f_i with x_{i+1}, ..., x_n set to zero, as polynomials in x_1, ..., x_i.
std::vector<Polynomial> restrict_to_leading_vars(std::span<const Polynomial> system, std::size_t i);

// Regularity of the extended sequence, decided on the restriction to x_1..x_i where it is the same question.
bool is_noether_position(std::span<const Polynomial> system, std::size_t i);

bool is_snp(std::span<const Polynomial> system);

struct SystemSpec {
  std::size_t nvars = 0;
  std::vector<unsigned> degrees;  // one per equation, ascending
  std::uint32_t prime = 65521;
  std::uint64_t seed = 0;
};

// Dense homogeneous polynomials with coefficients uniform in [0, p), drawn in decreasing grevlex per polynomial.
std::vector<Polynomial> gen_system(const SystemSpec& spec);

struct GeneratedSystem {
  std::vector<Polynomial> polynomials;
  unsigned attempt = 0;   // 1-based; attempt 1 uses the requested seed
  bool verified = false;  // simultaneous Noether position was checked
};

class GenerationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Seed of the given attempt, derived from the base seed.
std::uint64_t attempt_seed(std::uint64_t seed, unsigned attempt);

// Regenerates with derived seeds until is_snp holds; throws GenerationFailed after max_attempts.
GeneratedSystem gen_verified_system(SystemSpec spec, bool verify, unsigned max_attempts);

// Row-major n x n matrix: x_j is replaced by sum_k a[j][k] x_k.
using LinearChange = std::vector<std::vector<Fp>>;

LinearChange identity_change(std::size_t n);
Polynomial apply_linear_change(const Polynomial& f, const LinearChange& a);
std::vector<Polynomial> apply_linear_change(std::span<const Polynomial> system, const LinearChange& a);

struct ChangeOfVars {
  std::vector<Polynomial> system;
  LinearChange matrix;
  unsigned attempts = 0;
  bool small_field = false;  // p not much larger than the number of variables
};

// Draws invertible substitutions until the result is in simultaneous Noether position.
// Throws std::runtime_error after `max_attempts` failures.
ChangeOfVars random_change_of_vars(std::span<const Polynomial> system, std::uint64_t seed, unsigned max_attempts = 8);

}  // namespace sigf5
