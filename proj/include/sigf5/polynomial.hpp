#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sigf5/field.hpp"
#include "sigf5/monomial.hpp"

namespace sigf5 {

struct Term {
  Monomial monomial;
  Fp coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial over GF(p); terms strictly decreasing in grevlex, no zero coefficients.
class Polynomial {
 public:
  Polynomial(std::size_t nvars, PrimeField field) : n_(nvars), field_(field) {}
  // Combines equal monomials and drops zero sums.
  static Polynomial from_terms(std::size_t nvars, PrimeField field, std::vector<Term> terms);

  std::size_t num_vars() const { return n_; }
  const PrimeField& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // Throws std::domain_error on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  Fp leading_coefficient() const { return leading_term().coefficient; }
  unsigned degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Fp c) const;
  // c * m * this
  Polynomial times_term(const Monomial& m, Fp c) const;
  Polynomial monic() const;

  // Canonical text: decreasing grevlex, symmetric residues as signed integers.
  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_;
  PrimeField field_;
  std::vector<Term> terms_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables, PrimeField field);

// Full reduction of homogeneous f by homogeneous G; the divisor is the first g in G whose
// leading monomial divides the current term, terms visited in decreasing order.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

}  // namespace sigf5
