#include "sigf5/regularity.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "sigf5/bounds.hpp"
#include "sigf5/macaulay.hpp"

namespace sigf5 {

namespace {

// Uniform draws from [0, p) by rejection on raw 64-bit output, so the stream is fixed by the seed alone.
class FieldSampler {
 public:
  FieldSampler(std::uint64_t seed, std::uint32_t p) : rng_(seed), p_(p), limit_(UINT64_MAX - UINT64_MAX % p) {}
  Fp next() {
    std::uint64_t v;
    do {
      v = rng_();
    } while (v >= limit_);
    return Fp{static_cast<std::uint32_t>(v % p_)};
  }

 private:
  std::mt19937_64 rng_;
  std::uint64_t p_;
  std::uint64_t limit_;
};

std::vector<unsigned> degrees_of(std::span<const Polynomial> system) {
  std::vector<unsigned> out;
  for (const auto& f : system) out.push_back(f.degree());
  return out;
}

bool invertible(const LinearChange& a, const PrimeField& field) {
  const std::size_t n = a.size();
  MacaulayMatrix m{1, field, shared_degree_basis(n, 1), {}, {}};
  for (std::size_t j = 0; j < n; ++j) {
    SparseRow row;
    for (std::size_t k = 0; k < n; ++k) {
      if (a[j][k].value != 0) row.push_back(static_cast<std::uint32_t>(k), a[j][k]);
    }
    m.labels.push_back({j + 1, Monomial(n)});
    m.rows.push_back(std::move(row));
  }
  return echelon(m).rank == n;
}

}  // namespace

HilbertSeries regular_series(std::span<const unsigned> degrees, std::size_t nvars, unsigned trunc) {
  std::vector<std::int64_t> c(trunc + 1, 0);
  c[0] = 1;
  for (unsigned d : degrees) {
    for (unsigned e = trunc; e >= d && d > 0; --e) {
      c[e] -= c[e - d];
      if (e == d) break;
    }
  }
  for (std::size_t k = 0; k < nvars; ++k) {
    for (unsigned e = 1; e <= trunc; ++e) c[e] += c[e - 1];
  }
  return {std::move(c)};
}

bool is_regular(std::span<const Polynomial> system, unsigned up_to) {
  if (system.empty()) return true;
  require_homogeneous_system(system);
  const auto degrees = degrees_of(system);
  const unsigned top = up_to ? up_to : macaulay_bound(degrees);
  const auto expected = regular_series(degrees, system.front().num_vars(), top);
  const auto actual = hilbert_series(system, top);
  for (unsigned d = 0; d <= top; ++d) {
    if (expected.coefficients[d] < 0 || static_cast<std::uint64_t>(expected.coefficients[d]) != actual[d]) {
      return false;
    }
  }
  return true;
}

std::vector<Polynomial> extended_sequence(std::span<const Polynomial> system, std::size_t i) {
  if (system.empty() || i > system.size()) throw std::invalid_argument("prefix length out of range");
  const std::size_t n = system.front().num_vars();
  const PrimeField field = system.front().field();
  std::vector<Polynomial> out(system.begin(), system.begin() + static_cast<std::ptrdiff_t>(i));
  for (std::size_t j = i + 1; j <= n; ++j) {
    out.push_back(Polynomial::from_terms(n, field, {{Monomial::variable(n, j), field.element(1)}}));
  }
  return out;
}

std::vector<Polynomial> restrict_to_leading_vars(std::span<const Polynomial> system, std::size_t i) {
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < i; ++k) {
    const Polynomial& f = system[k];
    std::vector<Term> kept;
    for (const auto& t : f.terms()) {
      if (t.monomial.max_var() > i) continue;
      Monomial m(i);
      for (std::size_t j = 1; j <= i; ++j) m.set_exponent(j, t.monomial.exponent(j));
      kept.push_back({m, t.coefficient});
    }
    out.push_back(Polynomial::from_terms(i, f.field(), std::move(kept)));
  }
  return out;
}

bool is_noether_position(std::span<const Polynomial> system, std::size_t i) {
  if (i == 0 || i > system.size()) throw std::invalid_argument("prefix length out of range");
  require_homogeneous_system(system);
  const auto restricted = restrict_to_leading_vars(system, i);
  for (const auto& f : restricted) {
    if (f.is_zero()) return false;
  }
  return is_regular(restricted);
}

bool is_snp(std::span<const Polynomial> system) {
  for (std::size_t i = 1; i <= system.size(); ++i) {
    if (!is_noether_position(system, i)) return false;
  }
  return true;
}

std::vector<Polynomial> gen_system(const SystemSpec& spec) {
  if (spec.nvars == 0 || spec.nvars > kMaxVariables) throw std::invalid_argument("unsupported number of variables");
  if (spec.degrees.empty()) throw std::invalid_argument("no equations requested");
  if (spec.degrees.size() > spec.nvars) throw std::invalid_argument("more equations than variables");
  if (!std::is_sorted(spec.degrees.begin(), spec.degrees.end())) throw std::invalid_argument("degrees not ascending");
  const PrimeField field(spec.prime);
  FieldSampler sampler(spec.seed, spec.prime);
  std::vector<Polynomial> out;
  for (unsigned d : spec.degrees) {
    if (d == 0) throw std::invalid_argument("degrees must be positive");
    const auto basis = shared_degree_basis(spec.nvars, d);
    std::vector<Term> terms;
    for (std::size_t k = 0; k < basis->size(); ++k) terms.push_back({(*basis)[k], sampler.next()});
    out.push_back(Polynomial::from_terms(spec.nvars, field, std::move(terms)));
  }
  return out;
}

std::uint64_t attempt_seed(std::uint64_t seed, unsigned attempt) {
  return attempt <= 1 ? seed : seed ^ (0x9E3779B97F4A7C15ull * attempt);
}

GeneratedSystem gen_verified_system(SystemSpec spec, bool verify, unsigned max_attempts) {
  const std::uint64_t base = spec.seed;
  for (unsigned attempt = 1; attempt <= max_attempts; ++attempt) {
    spec.seed = attempt_seed(base, attempt);
    auto polys = gen_system(spec);
    if (!verify) return {std::move(polys), attempt, false};
    if (is_snp(polys)) return {std::move(polys), attempt, true};
  }
  throw GenerationFailed("no generated system passed the simultaneous Noether position check in " +
                         std::to_string(max_attempts) + " attempts (seed " + std::to_string(base) + ")");
}

LinearChange identity_change(std::size_t n) {
  LinearChange a(n, std::vector<Fp>(n, Fp{0}));
  for (std::size_t j = 0; j < n; ++j) a[j][j] = Fp{1};
  return a;
}

Polynomial apply_linear_change(const Polynomial& f, const LinearChange& a) {
  const std::size_t n = f.num_vars();
  if (a.size() != n) throw std::invalid_argument("substitution size does not match the ring");
  const PrimeField& field = f.field();
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t j, unsigned e) -> const Polynomial& {
    auto& cache = powers[j];
    if (cache.empty()) {
      cache.push_back(Polynomial::from_terms(n, field, {{Monomial(n), field.element(1)}}));
      std::vector<Term> lin;
      for (std::size_t k = 0; k < n; ++k) lin.push_back({Monomial::variable(n, k + 1), a[j][k]});
      cache.push_back(Polynomial::from_terms(n, field, std::move(lin)));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  Polynomial out(n, field);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::from_terms(n, field, {{Monomial(n), t.coefficient}});
    for (std::size_t j = 1; j <= n; ++j) {
      if (t.monomial.exponent(j) > 0) prod = prod * power(j - 1, t.monomial.exponent(j));
    }
    out = out + prod;
  }
  return out;
}

std::vector<Polynomial> apply_linear_change(std::span<const Polynomial> system, const LinearChange& a) {
  std::vector<Polynomial> out;
  out.reserve(system.size());
  for (const auto& f : system) out.push_back(apply_linear_change(f, a));
  return out;
}

ChangeOfVars random_change_of_vars(std::span<const Polynomial> system, std::uint64_t seed, unsigned max_attempts) {
  if (system.empty()) throw std::invalid_argument("empty system");
  require_homogeneous_system(system);
  const std::size_t n = system.front().num_vars();
  const PrimeField field = system.front().field();
  FieldSampler sampler(seed, field.prime());
  ChangeOfVars result;
  result.small_field = field.prime() < 100 * n * n;
  for (unsigned attempt = 1; attempt <= max_attempts; ++attempt) {
    LinearChange a(n, std::vector<Fp>(n));
    for (auto& row : a) {
      for (auto& v : row) v = sampler.next();
    }
    if (!invertible(a, field)) continue;
    auto changed = apply_linear_change(system, a);
    if (std::any_of(changed.begin(), changed.end(), [](const Polynomial& f) { return f.is_zero(); })) continue;
    if (is_snp(changed)) {
      result.system = std::move(changed);
      result.matrix = std::move(a);
      result.attempts = attempt;
      return result;
    }
  }
  throw std::runtime_error("no change of variables reached simultaneous Noether position in " +
                           std::to_string(max_attempts) + " attempts");
}

}  // namespace sigf5
