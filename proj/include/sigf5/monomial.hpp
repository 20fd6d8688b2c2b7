#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace sigf5 {

inline constexpr std::size_t kMaxVariables = 32;

// C(n, k) in 64 bits; throws std::overflow_error when it does not fit.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Exponent vector over variables x_1..x_n, x_1 largest. Variable indices are 1-based.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  static Monomial from_exponents(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t nvars, std::size_t j);

  std::size_t num_vars() const { return n_; }
  unsigned degree() const { return degree_; }
  unsigned exponent(std::size_t j) const { return e_[j - 1]; }
  void set_exponent(std::size_t j, unsigned value);
  bool is_one() const { return degree_ == 0; }
  // Largest j with a positive exponent; 0 for the constant monomial.
  std::size_t max_var() const;
  std::size_t hash() const;

  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> e_{};
  std::uint16_t n_ = 0;
  std::uint32_t degree_ = 0;
};

// Graded reverse lexicographic order; `greater` means a ≻ b.
std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b);
inline std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  return grevlex_cmp(a, b);
}

Monomial mul(const Monomial& a, const Monomial& b);
inline Monomial operator*(const Monomial& a, const Monomial& b) { return mul(a, b); }
// True when a divides b.
bool divides(const Monomial& a, const Monomial& b);
// a / b; requires divides(b, a).
Monomial quotient(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
inline std::size_t max_var(const Monomial& a) { return a.max_var(); }

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// All monomials of degree d in x_1..x_i (embedded in n variables), strictly decreasing.
std::vector<Monomial> enumerate(std::size_t i, unsigned d, std::size_t n);

// Position of m in enumerate(n, deg m, n).
std::uint64_t grevlex_rank(const Monomial& m);

// Column basis T_d of a degree-d matrix: monomials in decreasing grevlex order.
class DegreeBasis {
 public:
  DegreeBasis(std::size_t nvars, unsigned degree);

  std::size_t num_vars() const { return n_; }
  unsigned degree() const { return d_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t k) const { return monomials_[k]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  // Column of m; throws std::invalid_argument if m is not in T_d.
  std::uint32_t index_of(const Monomial& m) const;

 private:
  std::size_t n_;
  unsigned d_;
  std::vector<Monomial> monomials_;
};

// Process-wide cache of degree bases; safe to call from several threads.
std::shared_ptr<const DegreeBasis> shared_degree_basis(std::size_t nvars, unsigned degree);

// Degree bases T_0..T_D and the maps T_{d-1} -> T_d given by multiplication by x_j.
class MonomialTables {
 public:
  MonomialTables(std::size_t nvars, unsigned max_degree);

  std::size_t num_vars() const { return n_; }
  unsigned max_degree() const { return static_cast<unsigned>(bases_.size() - 1); }
  const DegreeBasis& basis(unsigned d) const { return *bases_.at(d); }
  std::shared_ptr<const DegreeBasis> basis_ptr(unsigned d) const { return bases_.at(d); }
  // Column of x_j * basis(d-1)[k] in basis(d); j is 1-based, d >= 1.
  std::uint32_t shift(unsigned d, std::uint32_t k, std::size_t j) const {
    return shifts_[d][static_cast<std::size_t>(k) * n_ + (j - 1)];
  }
  // max_var of basis(d)[k].
  std::uint8_t max_var(unsigned d, std::uint32_t k) const { return max_vars_[d][k]; }

 private:
  std::size_t n_;
  std::vector<std::shared_ptr<const DegreeBasis>> bases_;
  std::vector<std::vector<std::uint32_t>> shifts_;
  std::vector<std::vector<std::uint8_t>> max_vars_;
};

}  // namespace sigf5
