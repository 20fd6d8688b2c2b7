#include "sigf5/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sigf5 {

namespace {

constexpr int kBisectionSteps = 400;

BigInt big_binomial(unsigned top, unsigned k) {
  if (k > top) return 0;
  k = std::min(k, top - k);
  BigInt out = 1;
  for (unsigned j = 1; j <= k; ++j) {
    out *= top - k + j;
    out /= j;
  }
  return out;
}

double log2_binomial_real(double top, double k) {
  return (std::lgamma(top + 1) - std::lgamma(k + 1) - std::lgamma(top - k + 1)) / std::numbers::ln2;
}

void require_delta(unsigned delta) {
  if (delta < 2) throw std::invalid_argument("degree must be at least 2");
}

template <class F>
double bisect(F f, double lo, double hi) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0)) throw std::runtime_error("bisection bracket does not change sign");
  for (int step = 0; step < kBisectionSteps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;
    const double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-15 * std::abs(hi)) return 0.5 * (lo + hi);
  }
  throw std::runtime_error("bisection did not converge");
}

}  // namespace

double log2_big(const BigInt& v) {
  if (v <= 0) return -INFINITY;
  const unsigned bits = boost::multiprecision::msb(v);
  if (bits < 60) return std::log2(v.convert_to<double>());
  const unsigned shift = bits - 60;
  const BigInt top = v >> shift;
  return std::log2(top.convert_to<double>()) + shift;
}

unsigned macaulay_bound(std::span<const unsigned> degrees) {
  if (degrees.empty()) throw std::invalid_argument("degree list is empty");
  unsigned sum = 1;
  for (unsigned d : degrees) {
    if (d == 0) throw std::invalid_argument("degrees must be positive");
    sum += d - 1;
  }
  return sum;
}

bool uniform_degrees(std::span<const unsigned> degrees) {
  return std::all_of(degrees.begin(), degrees.end(), [&](unsigned d) { return d == degrees.front(); });
}

std::vector<BigInt> b_series(std::size_t i, std::span<const unsigned> degrees, unsigned trunc) {
  if (i < 1 || i > degrees.size()) throw std::invalid_argument("index out of range");
  std::vector<BigInt> prod(trunc + 1, 0);
  prod[0] = 1;
  // Each factor (1 - z^d)/(1 - z) = 1 + z + ... + z^{d-1}: a sliding window sum of width d.
  for (std::size_t k = 0; k + 1 < i; ++k) {
    const unsigned width = degrees[k];
    std::vector<BigInt> next(trunc + 1, 0);
    BigInt window = 0;
    for (unsigned e = 0; e <= trunc; ++e) {
      window += prod[e];
      if (e >= width) window -= prod[e - width];
      next[e] = window;
    }
    prod = std::move(next);
  }
  std::vector<BigInt> out(trunc + 1, 0);
  const unsigned shift = degrees[i - 1];
  for (unsigned e = shift; e <= trunc; ++e) out[e] = prod[e - shift];
  return out;
}

BigInt b_coeff(std::size_t i, unsigned d, std::span<const unsigned> degrees) {
  return b_series(i, degrees, d)[d];
}

BigInt nf5_exact(std::size_t n, std::span<const unsigned> degrees, unsigned max_degree) {
  BigInt total = 0;
  std::vector<BigInt> column_count(max_degree + 1);
  for (unsigned d = 0; d <= max_degree; ++d) column_count[d] = big_binomial(static_cast<unsigned>(n) + d - 1, d);
  for (std::size_t i = 1; i <= degrees.size(); ++i) {
    const auto b = b_series(i, degrees, max_degree);
    for (unsigned d = degrees[i - 1]; d <= max_degree; ++d) {
      if (b[d] == 0) continue;
      total += b[d] * big_binomial(static_cast<unsigned>(i) + d - 1, d) * column_count[d];
    }
  }
  return total;
}

BigInt nf5_exact(std::size_t n, std::span<const unsigned> degrees) {
  return nf5_exact(n, degrees, macaulay_bound(degrees));
}

BigInt polys_bound(std::span<const unsigned> degrees) {
  BigInt total = 0;
  BigInt prefix = 1;
  for (unsigned d : degrees) {
    total += prefix;
    prefix *= d;
  }
  return total;
}

double lambda0_residual(unsigned delta, double lambda) {
  const double ratio = std::pow((lambda + 1) / lambda, 2.0 * delta);
  const double q = (2 * lambda + 1) / (3 * lambda * lambda + 3 * lambda + 1);
  return ratio * (1 - delta * q) - 1;
}

double lambda0(unsigned delta) {
  require_delta(delta);
  return bisect([&](double l) { return lambda0_residual(delta, l); }, (delta - 1) / 2.0, delta - 1.0);
}

double bigB(unsigned delta) {
  const double l = lambda0(delta);
  const double num = std::pow((l + 1) / l, 2.0 * delta) - 1;
  const double den = 1 / (l * l) - 1 / ((l + 1) * (l + 1));
  return num / den;
}

double log2_bigB(unsigned delta) { return std::log2(bigB(delta)); }

double bigA(unsigned delta, unsigned excess) {
  const double l = lambda0(delta);
  return (1 - 1.0 / delta) / (2 * std::numbers::pi) * (std::pow(1 + 1 / l, 3) - 1) /
         std::pow(1 + l, 1.0 + excess);
}

double log2_nf5_asymptotic(std::size_t n, unsigned delta, unsigned excess) {
  return static_cast<double>(n) * log2_bigB(delta) + std::log2(static_cast<double>(n)) +
         std::log2(bigA(delta, excess));
}

double log2_baseline_cost(std::size_t n, std::size_t m, unsigned delta, double omega) {
  require_delta(delta);
  const double big_d = static_cast<double>(m) * (delta - 1) + 1;
  return std::log2(static_cast<double>(m)) + std::log2(big_d) +
         omega * log2_binomial_real(static_cast<double>(n) + big_d - 1, big_d);
}

double baseline_exponent(unsigned delta, double omega) {
  require_delta(delta);
  const double dd = delta;
  return omega * (dd * std::log2(dd) - (dd - 1) * std::log2(dd - 1));
}

double digamma(double x) {
  if (!(x > 0)) throw std::domain_error("digamma needs a positive argument");
  double shift = 0;
  while (x < 10) {
    shift -= 1 / x;
    x += 1;
  }
  const double inv2 = 1 / (x * x);
  const double series = inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 / 240)));
  return shift + std::log(x) - 0.5 / x - series;
}

DegreeRho solve_d_rho(std::size_t m, unsigned delta) {
  require_delta(delta);
  if (m < 2) throw std::invalid_argument("at least two equations are needed");
  const double mm = static_cast<double>(m);
  const double dd = delta;
  auto rho_of = [&](double d) { return std::exp(2 * (digamma(d + mm) - digamma(d + 1))); };
  auto gap = [&](double d) {
    const double rho = rho_of(d);
    const double rhs = dd / (1 - std::pow(rho, -dd)) - 1 / (1 - 1 / rho);
    return (d - dd) / (mm - 1) - rhs;
  };
  const double lo = dd + (mm - 1) * (dd - 1) / 2;
  const double hi = dd + (mm - 1) * (dd - 1);
  const double d = bisect(gap, lo, hi);
  return {d, rho_of(d), d / mm};
}

double log2_nf5_capped_bound(std::size_t m, unsigned delta, unsigned excess) {
  const DegreeRho s = solve_d_rho(m, delta);
  const double mm = static_cast<double>(m);
  const double dd = delta;
  const double lr = std::log2(s.rho);
  const double geometric = std::log2((std::pow(s.rho, dd) - 1) / (s.rho - 1));
  return std::log2(mm) + std::log2(mm * (dd - 1) + 1 - (dd - 1)) + dd * lr + (mm - 1) * geometric -
         s.degree * lr + log2_binomial_real(mm + s.degree - 1, s.degree) +
         log2_binomial_real(mm + excess + s.degree - 1, s.degree);
}

BoundReport bound_report(unsigned delta, std::size_t n, unsigned excess, std::span<const double> omegas) {
  require_delta(delta);
  if (n <= excess) throw std::invalid_argument("need more variables than the excess");
  const std::vector<unsigned> degrees(n - excess, delta);
  BoundReport r;
  r.delta = delta;
  r.n = n;
  r.excess = excess;
  r.macaulay_bound = macaulay_bound(degrees);
  r.nf5_exact = nf5_exact(n, degrees, r.macaulay_bound);
  r.log2_nf5_exact = log2_big(r.nf5_exact);
  r.log2_nf5_asymptotic = log2_nf5_asymptotic(n, delta, excess);
  r.lambda0 = lambda0(delta);
  r.log2_B = log2_bigB(delta);
  r.A = bigA(delta, excess);
  r.polys_bound = polys_bound(degrees);
  for (double w : omegas) r.baseline_exponents.emplace_back(w, baseline_exponent(delta, w));
  return r;
}

}  // namespace sigf5
