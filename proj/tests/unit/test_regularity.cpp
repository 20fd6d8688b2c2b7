#include <doctest.h>

#include "fixtures.hpp"
#include "sigf5/bounds.hpp"
#include "sigf5/macaulay.hpp"
#include "sigf5/regularity.hpp"

using namespace sigf5;
using namespace sigf5::testing;

namespace {

// The circles with the variable order (y, z, x, h), so that the first two variables are y and z.
std::vector<Polynomial> circles_yz_first() {
  const std::vector<std::string> order{"y", "z", "x", "h"};
  return {circle_poly("x^2 + y^2 - 2*x*z - 2*y*z + z^2 + h^2", order),
          circle_poly("x^2 + x*y + y*z - z^2 - 2*h^2", order),
          circle_poly("x^2 - y^2 + 2*y*z - 2*z^2", order)};
}

}  // namespace

TEST_CASE("regular series") {
  const std::vector<unsigned> two{2, 2};
  CHECK(regular_series(two, 4, 3).coefficients == std::vector<std::int64_t>{1, 4, 8, 12});
  const std::vector<unsigned> three{2, 2, 2};
  CHECK(regular_series(three, 4, 7).coefficients == std::vector<std::int64_t>{1, 4, 7, 8, 8, 8, 8, 8});
  const auto free = regular_series(std::vector<unsigned>{}, 5, 6);
  for (unsigned d = 0; d <= 6; ++d) CHECK(free.coefficients[d] == static_cast<std::int64_t>(binomial(5 + d - 1, d)));
  const auto full = regular_series(std::vector<unsigned>{2, 2, 2, 2}, 4, 6);
  CHECK(full.coefficients == std::vector<std::int64_t>{1, 4, 6, 4, 1, 0, 0});
}

TEST_CASE("regularity") {
  const auto sys = circles();
  CHECK(is_regular(sys));
  CHECK(is_regular(std::vector<Polynomial>(sys.begin(), sys.begin() + 2)));
  for (unsigned delta : {2u, 3u}) {
    const auto f = dense_system(4, 1, delta, 5)[0];
    const std::vector<Polynomial> twice{f, f};
    CHECK_FALSE(is_regular(twice));
    // The copy is already linearly dependent in degree delta.
    CHECK(is_regular(twice, delta - 1));
    CHECK_FALSE(is_regular(twice, delta));
    CHECK(is_regular(std::vector<Polynomial>{f}, 3 * delta));
  }
}

TEST_CASE("Noether position") {
  const auto sys = circles();
  CHECK(is_noether_position(sys, 2));
  CHECK(is_snp(sys));
  CHECK_FALSE(is_noether_position(circles_yz_first(), 2));
  CHECK_FALSE(is_snp(circles_yz_first()));
  const auto dense = dense_system(5, 5, 2, 3);
  for (std::size_t i = 1; i <= 5; ++i) CHECK(is_noether_position(dense, i));
  CHECK(is_noether_position(dense, 5) == is_regular(dense));
  const std::vector<std::string> v{"x1", "x2"};
  CHECK_FALSE(is_snp(std::vector<Polynomial>{parse_polynomial("x2^2", v, PrimeField())}));
  CHECK(is_snp(std::vector<Polynomial>{}));
}

TEST_CASE("extended-sequence regularity agrees with the restriction") {
  std::vector<std::vector<Polynomial>> systems{circles(), circles_yz_first(), dense_system(4, 3, 2, 1),
                                               dense_system(4, 4, 3, 2)};
  const std::vector<std::string> v{"x1", "x2", "x3"};
  const PrimeField f;
  systems.push_back({parse_polynomial("x2^2", v, f), parse_polynomial("x1*x3", v, f)});
  systems.push_back({parse_polynomial("x1*x2", v, f), parse_polynomial("x1^2 + x2^2", v, f)});
  for (const auto& sys : systems) {
    for (std::size_t i = 1; i <= sys.size(); ++i) {
      const auto ext = extended_sequence(sys, i);
      CHECK(ext.size() == sys.front().num_vars());
      CHECK(is_regular(ext) == is_noether_position(sys, i));
    }
  }
}

TEST_CASE("a regular element scales the Hilbert series by (1 - z^d)") {
  const auto sys = dense_system(5, 4, 2, 8);
  for (std::size_t k = 1; k < sys.size(); ++k) {
    const std::vector<Polynomial> before(sys.begin(), sys.begin() + k);
    const std::vector<Polynomial> after(sys.begin(), sys.begin() + k + 1);
    const auto h0 = hilbert_series(before, 7);
    const auto h1 = hilbert_series(after, 7);
    for (unsigned d = 0; d <= 7; ++d) {
      const std::int64_t expected = static_cast<std::int64_t>(h0[d]) - (d >= 2 ? static_cast<std::int64_t>(h0[d - 2]) : 0);
      CHECK(static_cast<std::int64_t>(h1[d]) == std::max<std::int64_t>(expected, 0));
    }
  }
}

TEST_CASE("generator") {
  const auto a = dense_system(5, 5, 2, 42);
  REQUIRE(a.size() == 5);
  for (const auto& f : a) {
    CHECK(f.size() == 15);
    CHECK(f.degree() == 2);
    CHECK(f.is_homogeneous());
  }
  CHECK(a == dense_system(5, 5, 2, 42));
  CHECK_FALSE(a == dense_system(5, 5, 2, 43));
  SystemSpec bad;
  bad.nvars = 3;
  bad.degrees = {2, 2, 2, 2};
  CHECK_THROWS_AS(gen_system(bad), std::invalid_argument);
  bad.degrees = {3, 2};
  CHECK_THROWS_AS(gen_system(bad), std::invalid_argument);
}

TEST_CASE("changes of variables") {
  const auto sys = circles();
  CHECK(apply_linear_change(sys, identity_change(4)) == sys);
  const auto moved = random_change_of_vars(circles_yz_first(), 1);
  CHECK(moved.attempts >= 1);
  CHECK(is_snp(moved.system));
  CHECK_FALSE(moved.small_field);
  const auto again = random_change_of_vars(sys, 2);
  CHECK(is_snp(again.system));
  // (x2^2, x1 x2) is not a regular sequence, so no substitution reaches Noether position.
  const std::vector<std::string> v{"x1", "x2"};
  const std::vector<Polynomial> stuck{parse_polynomial("x2^2", v, PrimeField()),
                                      parse_polynomial("x1*x2", v, PrimeField())};
  CHECK_THROWS_AS(random_change_of_vars(stuck, 3, 4), std::runtime_error);
  CHECK(random_change_of_vars(std::vector<Polynomial>{parse_polynomial("x1*x2", v, PrimeField(7))}, 1).small_field);
}
