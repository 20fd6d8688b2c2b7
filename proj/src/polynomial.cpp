#include "sigf5/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace sigf5 {

namespace {

void require_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars() != b.num_vars() || !(a.field() == b.field())) {
    throw std::invalid_argument("polynomials over different rings");
  }
}

bool term_greater(const Term& a, const Term& b) { return grevlex_cmp(a.monomial, b.monomial) > 0; }

}  // namespace

Polynomial Polynomial::from_terms(std::size_t nvars, PrimeField field, std::vector<Term> terms) {
  Polynomial p(nvars, field);
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (t.monomial.num_vars() != nvars) throw std::invalid_argument("term over a different variable count");
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient = field.add(p.terms_.back().coefficient, t.coefficient);
      if (p.terms_.back().coefficient.value == 0) p.terms_.pop_back();
    } else if (t.coefficient.value != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_compatible(*this, o);
  Polynomial r(n_, field_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && term_greater(*a, *b))) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || term_greater(*b, *a)) {
      r.terms_.push_back(*b++);
    } else {
      Fp c = field_.add(a->coefficient, b->coefficient);
      if (c.value != 0) r.terms_.push_back(Term{a->monomial, c});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.scaled(field_.neg(Fp{1})); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_compatible(*this, o);
  std::vector<Term> products;
  products.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      products.push_back(Term{mul(a.monomial, b.monomial), field_.mul(a.coefficient, b.coefficient)});
    }
  }
  return from_terms(n_, field_, std::move(products));
}

Polynomial Polynomial::scaled(Fp c) const {
  Polynomial r(n_, field_);
  if (c.value == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial, field_.mul(t.coefficient, c)});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, Fp c) const {
  Polynomial r(n_, field_);
  if (c.value == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{mul(t.monomial, m), field_.mul(t.coefficient, c)});
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field_.inv(leading_coefficient()));
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::int64_t c = field_.signed_value(t.coefficient);
    bool negative = c < 0;
    std::uint64_t mag = negative ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + '*';
      out += t.monomial.to_string(names);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars, PrimeField field)
      : s_(text), vars_(vars), field_(field) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        negative = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      terms.push_back(parse_term(negative));
      first = false;
      skip_ws();
      if (pos_ == s_.size()) break;
    }
    return Polynomial::from_terms(vars_.size(), field_, std::move(terms));
  }

 private:
  Term parse_term(bool negative) {
    Fp coeff = negative ? field_.neg(Fp{1}) : Fp{1};
    Monomial mono(vars_.size());
    bool expect_factor = true;
    bool after_integer = false;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (!expect_factor) throw ParseError("expected '*' between factors", pos_);
        coeff = field_.mul(coeff, parse_integer());
        after_integer = true;
        expect_factor = false;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        if (!expect_factor && !after_integer) throw ParseError("expected '*' between factors", pos_);
        std::size_t at = pos_;
        std::size_t j = lookup(parse_identifier(), at);
        unsigned e = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip_ws();
          if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            throw ParseError("expected exponent", pos_);
          }
          e = parse_exponent();
        }
        mono.set_exponent(j, mono.exponent(j) + e);
        after_integer = false;
        expect_factor = false;
      } else if (c == '*') {
        if (expect_factor) throw ParseError("unexpected '*'", pos_);
        ++pos_;
        expect_factor = true;
        after_integer = false;
      } else if (c == '+' || c == '-') {
        break;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      }
    }
    if (expect_factor) throw ParseError("incomplete term", pos_);
    return Term{mono, coeff};
  }

  Fp parse_integer() {
    std::uint64_t acc = 0;
    const std::uint64_t p = field_.prime();
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      acc = (acc * 10 + static_cast<unsigned>(s_[pos_] - '0')) % p;
      ++pos_;
    }
    return Fp{static_cast<std::uint32_t>(acc)};
  }

  unsigned parse_exponent() {
    std::size_t start = pos_;
    std::uint64_t acc = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      acc = acc * 10 + static_cast<unsigned>(s_[pos_] - '0');
      if (acc > UINT16_MAX) throw ParseError("exponent too large", start);
      ++pos_;
    }
    return static_cast<unsigned>(acc);
  }

  std::string_view parse_identifier() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::size_t lookup(std::string_view name, std::size_t at) const {
    for (std::size_t j = 0; j < vars_.size(); ++j) {
      if (vars_[j] == name) return j + 1;
    }
    throw ParseError("unknown variable '" + std::string(name) + "'", at);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::span<const std::string> vars_;
  PrimeField field_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables, PrimeField field) {
  return Parser(text, variables, field).parse();
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  if (f.is_zero()) return f;
  if (!f.is_homogeneous()) throw std::invalid_argument("normal form of a non-homogeneous polynomial");
  for (const auto& g : basis) {
    require_compatible(f, g);
    if (!g.is_homogeneous()) throw std::invalid_argument("normal form by a non-homogeneous basis");
  }
  const PrimeField& k = f.field();
  const unsigned d = f.degree();
  auto columns = shared_degree_basis(f.num_vars(), d);
  std::vector<Fp> acc(columns->size());
  for (const auto& t : f.terms()) acc[grevlex_rank(t.monomial)] = t.coefficient;

  std::vector<Term> remainder;
  for (std::size_t c = 0; c < acc.size(); ++c) {
    if (acc[c].value == 0) continue;
    const Monomial& m = (*columns)[c];
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && divides(g.leading_monomial(), m)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(Term{m, acc[c]});
      continue;
    }
    Monomial q = quotient(m, divisor->leading_monomial());
    Fp factor = k.neg(k.div(acc[c], divisor->leading_coefficient()));
    for (const auto& t : divisor->terms()) {
      auto idx = grevlex_rank(mul(q, t.monomial));
      acc[idx] = k.add(acc[idx], k.mul(factor, t.coefficient));
    }
  }
  return Polynomial::from_terms(f.num_vars(), k, std::move(remainder));
}

}  // namespace sigf5
