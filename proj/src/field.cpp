#include "sigf5/field.hpp"

#include <string>

namespace sigf5 {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u}) {
    if (n % q == 0) return n == q;
  }
  for (std::uint64_t q = 7; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

Fp PrimeField::element(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fp{static_cast<std::uint32_t>(r)};
}

Fp PrimeField::from_rational(std::int64_t num, std::int64_t den) const {
  return div(element(num), element(den));
}

std::int64_t PrimeField::signed_value(Fp a) const {
  return a.value > p_ / 2 ? static_cast<std::int64_t>(a.value) - p_ : a.value;
}

Fp PrimeField::arith(Fp a, Fp b, ArithOp op) const {
  switch (op) {
    case ArithOp::add: return add(a, b);
    case ArithOp::sub: return sub(a, b);
    case ArithOp::mul: return mul(a, b);
  }
  return Fp{};
}

Fp PrimeField::inv(Fp a) const {
  if (a.value == 0) throw DivisionByZero();
  std::int64_t r0 = p_, r1 = a.value, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return element(s0);
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const {
  Fp r{1 % p_};
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace sigf5
