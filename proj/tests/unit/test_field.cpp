#include <doctest.h>

#include <random>

#include "sigf5/field.hpp"

using namespace sigf5;

TEST_CASE("arith matches the worked values") {
  const PrimeField big;
  CHECK(big.arith(Fp{65520}, Fp{65520}, ArithOp::mul) == Fp{1});
  const PrimeField small(7);
  CHECK(small.arith(Fp{3}, Fp{5}, ArithOp::mul) == Fp{1});
  CHECK(small.arith(Fp{3}, Fp{5}, ArithOp::add) == Fp{1});
  CHECK(small.arith(Fp{3}, Fp{5}, ArithOp::sub) == Fp{5});
}

TEST_CASE("one is a multiplicative identity and inverses cancel") {
  const PrimeField f;
  std::mt19937_64 rng(11);
  for (int k = 0; k < 2000; ++k) {
    const Fp a{static_cast<std::uint32_t>(rng() % f.prime())};
    CHECK(f.mul(Fp{1}, a) == a);
    CHECK(f.add(a, f.neg(a)) == Fp{0});
    if (a.value != 0) CHECK(f.mul(a, f.inv(a)) == Fp{1});
  }
}

TEST_CASE("inverses") {
  CHECK(PrimeField().inv(Fp{1}) == Fp{1});
  CHECK(PrimeField().inv(Fp{2}) == Fp{32761});
  CHECK(PrimeField(7).inv(Fp{3}) == Fp{5});
  CHECK_THROWS_AS(PrimeField().inv(Fp{0}), DivisionByZero);
}

TEST_CASE("field construction and representatives") {
  CHECK_THROWS_AS(PrimeField(65520), std::invalid_argument);
  CHECK(is_prime(2));
  CHECK(is_prime(4294967291u));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(65519ull * 65521ull));
  const PrimeField f;
  CHECK(f.element(-1) == Fp{65520});
  CHECK(f.signed_value(Fp{65520}) == -1);
  CHECK(f.signed_value(Fp{32760}) == 32760);
  CHECK(f.mul(f.from_rational(3, 2), Fp{2}) == Fp{3});
  CHECK(f.pow(Fp{3}, 65520) == Fp{1});
}

TEST_CASE("arithmetic near the top of 32 bits") {
  const PrimeField f(4294967291u);
  const Fp a{4294967290u};
  CHECK(f.mul(a, a) == Fp{1});
  CHECK(f.add(a, Fp{1}) == Fp{0});
  CHECK(f.mul(Fp{123456789}, f.inv(Fp{123456789})) == Fp{1});
}
