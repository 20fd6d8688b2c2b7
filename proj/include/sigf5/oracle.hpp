#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "sigf5/polynomial.hpp"

namespace sigf5 {

struct CriticalPair {
  std::size_t first;
  std::size_t second;
  Monomial lcm;
  unsigned degree;
};

// lcm/LT(f) * f / LC(f) - lcm/LT(g) * g / LC(g).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

class PairLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Normal strategy, no pair criteria. Pairs with lcm degree above `degree_cap` are dropped.
// Returns the reduced, monic basis sorted by decreasing leading monomial.
std::vector<Polynomial> buchberger(std::span<const Polynomial> system, unsigned degree_cap,
                                   std::size_t pair_limit = 200000);

// True when the minimal generators of the two leading-monomial ideals coincide.
bool compare_lt_ideals(std::span<const Polynomial> a, std::span<const Polynomial> b);

std::vector<Monomial> minimal_leading_monomials(std::span<const Polynomial> basis);

}  // namespace sigf5
