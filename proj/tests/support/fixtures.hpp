#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigf5/polynomial.hpp"
#include "sigf5/regularity.hpp"

namespace sigf5::testing {

inline const std::vector<std::string>& circle_vars() {
  static const std::vector<std::string> names{"x", "y", "z", "h"};
  return names;
}

inline Polynomial circle_poly(const std::string& text, const std::vector<std::string>& vars = circle_vars(),
                              PrimeField field = PrimeField()) {
  return parse_polynomial(text, vars, field);
}

// Three homogenized plane circles; x,y,z,h with x largest.
inline std::vector<Polynomial> circles(PrimeField field = PrimeField()) {
  return {circle_poly("x^2 + y^2 - 2*x*z - 2*y*z + z^2 + h^2", circle_vars(), field),
          circle_poly("x^2 + x*y + y*z - z^2 - 2*h^2", circle_vars(), field),
          circle_poly("x^2 - y^2 + 2*y*z - 2*z^2", circle_vars(), field)};
}

inline std::vector<Polynomial> dense_system(std::size_t n, std::size_t m, unsigned delta, std::uint64_t seed,
                                            std::uint32_t prime = PrimeField::kDefaultPrime) {
  SystemSpec spec;
  spec.nvars = n;
  spec.degrees.assign(m, delta);
  spec.prime = prime;
  spec.seed = seed;
  return gen_system(spec);
}

inline Monomial mono(const std::string& text, const std::vector<std::string>& vars = circle_vars()) {
  return parse_polynomial(text, vars, PrimeField()).leading_monomial();
}

}  // namespace sigf5::testing
