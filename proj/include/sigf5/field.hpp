#pragma once

#include <cstdint>
#include <stdexcept>

namespace sigf5 {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("inverse of zero in a prime field") {}
};

// Least nonnegative residue modulo the prime of the owning PrimeField.
struct Fp {
  std::uint32_t value = 0;
  friend constexpr bool operator==(Fp, Fp) = default;
};

enum class ArithOp { add, sub, mul };

class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 65521;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t prime() const { return p_; }

  Fp element(std::int64_t v) const;
  Fp from_rational(std::int64_t num, std::int64_t den) const;
  // Symmetric representative in (-p/2, p/2].
  std::int64_t signed_value(Fp a) const;

  Fp add(Fp a, Fp b) const {
    std::uint64_t s = std::uint64_t{a.value} + b.value;
    return Fp{static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  Fp sub(Fp a, Fp b) const {
    return Fp{a.value >= b.value ? a.value - b.value
                                 : static_cast<std::uint32_t>(std::uint64_t{a.value} + p_ - b.value)};
  }
  Fp neg(Fp a) const { return Fp{a.value == 0 ? 0 : p_ - a.value}; }
  Fp mul(Fp a, Fp b) const {
    return Fp{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
  }
  Fp arith(Fp a, Fp b, ArithOp op) const;
  Fp inv(Fp a) const;
  Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }
  Fp pow(Fp a, std::uint64_t e) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace sigf5
