#include "sigf5/oracle.hpp"

#include <algorithm>

#include "sigf5/macaulay.hpp"

namespace sigf5 {

namespace {

// Kept separate from the engine's post-processing so the two never share a defect.
std::vector<Polynomial> interreduce(std::vector<Polynomial> basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j != k) others.push_back(basis[j]);
      }
      if (others.empty()) break;
      Polynomial r = normal_form(basis[k], others);
      if (r == basis[k]) continue;
      changed = true;
      if (r.is_zero()) {
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(k));
      } else {
        basis[k] = r.monic();
      }
      break;
    }
  }
  for (auto& g : basis) g = g.monic();
  std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_cmp(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return basis;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const PrimeField& field = f.field();
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Polynomial a = f.times_term(quotient(l, f.leading_monomial()), field.inv(f.leading_coefficient()));
  const Polynomial b = g.times_term(quotient(l, g.leading_monomial()), field.inv(g.leading_coefficient()));
  return a - b;
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> system, unsigned degree_cap, std::size_t pair_limit) {
  require_homogeneous_system(system);
  std::vector<Polynomial> basis;
  std::vector<CriticalPair> pairs;
  std::size_t processed = 0;
  auto add = [&](Polynomial h) {
    h = h.monic();
    const std::size_t k = basis.size();
    basis.push_back(std::move(h));
    for (std::size_t j = 0; j < k; ++j) {
      Monomial l = lcm(basis[j].leading_monomial(), basis[k].leading_monomial());
      const unsigned deg = l.degree();
      if (deg <= degree_cap) pairs.push_back({j, k, std::move(l), deg});
    }
  };
  for (const auto& f : system) {
    Polynomial r = basis.empty() ? f : normal_form(f, basis);
    if (!r.is_zero()) add(std::move(r));
  }
  while (!pairs.empty()) {
    if (++processed > pair_limit) throw PairLimitExceeded("critical pair limit exceeded");
    // Lowest lcm degree first; ties by insertion order keep the run deterministic.
    auto it = std::min_element(pairs.begin(), pairs.end(),
                               [](const CriticalPair& a, const CriticalPair& b) { return a.degree < b.degree; });
    const CriticalPair pair = *it;
    pairs.erase(it);
    Polynomial s = s_polynomial(basis[pair.first], basis[pair.second]);
    if (s.is_zero()) continue;
    Polynomial r = normal_form(s, basis);
    if (!r.is_zero()) add(std::move(r));
  }
  return interreduce(std::move(basis));
}

std::vector<Monomial> minimal_leading_monomials(std::span<const Polynomial> basis) {
  std::vector<Monomial> leads;
  for (const auto& g : basis) {
    if (!g.is_zero()) leads.push_back(g.leading_monomial());
  }
  std::sort(leads.begin(), leads.end(), [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) < 0; });
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
  std::vector<Monomial> minimal;
  for (const auto& m : leads) {
    if (std::none_of(minimal.begin(), minimal.end(), [&](const Monomial& g) { return divides(g, m); })) {
      minimal.push_back(m);
    }
  }
  return minimal;
}

bool compare_lt_ideals(std::span<const Polynomial> a, std::span<const Polynomial> b) {
  return minimal_leading_monomials(a) == minimal_leading_monomials(b);
}

}  // namespace sigf5
