#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sigf5 {

using BigInt = boost::multiprecision::cpp_int;

// log2 of a positive big integer; -infinity for zero.
double log2_big(const BigInt& v);

// Sum of (d_i - 1) plus one.
unsigned macaulay_bound(std::span<const unsigned> degrees);

// Coefficients 0..trunc of z^{d_i} * prod_{k<i} (1 - z^{d_k}) / (1 - z); i is 1-based.
std::vector<BigInt> b_series(std::size_t i, std::span<const unsigned> degrees, unsigned trunc);
BigInt b_coeff(std::size_t i, unsigned d, std::span<const unsigned> degrees);

// Sum over i and d <= max_degree of b_d^(i) * C(i+d-1, d) * C(n+d-1, d).
BigInt nf5_exact(std::size_t n, std::span<const unsigned> degrees, unsigned max_degree);
BigInt nf5_exact(std::size_t n, std::span<const unsigned> degrees);

// Upper bound on the number of basis elements computed: sum over i of prod_{k<i} d_k.
BigInt polys_bound(std::span<const unsigned> degrees);

// True when every degree equals the first one.
bool uniform_degrees(std::span<const unsigned> degrees);

// Root in [(delta-1)/2, delta-1] of ((l+1)/l)^{2 delta} = 1 / (1 - delta (2l+1)/(3l^2+3l+1)).
double lambda0(unsigned delta);
// Residual ((l+1)/l)^{2 delta} (1 - delta (2l+1)/(3l^2+3l+1)) - 1 of the root equation.
double lambda0_residual(unsigned delta, double lambda);

double bigB(unsigned delta);
double log2_bigB(unsigned delta);
double bigA(unsigned delta, unsigned excess);

// log2 of B^n * n * A with n = m + excess variables.
double log2_nf5_asymptotic(std::size_t n, unsigned delta, unsigned excess);

// log2 of m * D * C(n+D-1, D)^omega with D = m (delta - 1) + 1.
double log2_baseline_cost(std::size_t n, std::size_t m, unsigned delta, double omega);
double baseline_exponent(unsigned delta, double omega);

double digamma(double x);

struct DegreeRho {
  double degree;  // most expensive degree d(m)
  double rho;
  double lambda;  // d(m) / m
};

// Solves 2 psi(d+m) - 2 psi(d+1) = log rho jointly with
// (d - delta)/(m - 1) = delta/(1 - rho^-delta) - 1/(1 - rho^-1). Throws std::runtime_error without convergence.
DegreeRho solve_d_rho(std::size_t m, unsigned delta);

// log2 of m (m(delta-1) + 1 - (delta-1)) B_m(rho)/rho^d C(m+d-1, d) C(m+excess+d-1, d) at (d(m), rho(m)),
// with B_m(r) = r^delta ((1 - r^delta)/(1 - r))^(m-1).
double log2_nf5_capped_bound(std::size_t m, unsigned delta, unsigned excess);

struct BoundReport {
  unsigned delta = 0;
  std::size_t n = 0;
  unsigned excess = 0;
  unsigned macaulay_bound = 0;
  BigInt nf5_exact;
  double log2_nf5_exact = 0;
  double log2_nf5_asymptotic = 0;
  double lambda0 = 0;
  double log2_B = 0;
  double A = 0;
  BigInt polys_bound;
  std::vector<std::pair<double, double>> baseline_exponents;  // (omega, exponent)
};

// m = n - excess equations of degree delta in n variables.
BoundReport bound_report(unsigned delta, std::size_t n, unsigned excess, std::span<const double> omegas);

}  // namespace sigf5
