#include "sigf5/system_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

namespace sigf5 {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool starts_with_key(const std::string& line, const std::string& key, std::string& rest) {
  if (line.rfind(key, 0) != 0) return false;
  rest = trim(line.substr(key.size()));
  return true;
}

bool valid_name(const std::string& name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= n; ++j) out.push_back("x" + std::to_string(j));
  return out;
}

PolynomialSystem read_system(std::istream& in, std::optional<std::uint32_t> prime) {
  PolynomialSystem sys{{}, PrimeField(prime.value_or(PrimeField::kDefaultPrime)), {}, {}};
  bool have_vars = false;
  bool have_prime = false;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      sys.comments.push_back(trim(line.substr(1)));
      continue;
    }
    std::string rest;
    if (starts_with_key(line, "vars:", rest)) {
      if (have_vars) throw SystemFileError("duplicate vars line", lineno);
      std::size_t start = 0;
      while (start <= rest.size()) {
        const auto comma = rest.find(',', start);
        const std::string name = trim(rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (!valid_name(name)) throw SystemFileError("invalid variable name '" + name + "'", lineno);
        if (std::find(sys.variables.begin(), sys.variables.end(), name) != sys.variables.end()) {
          throw SystemFileError("repeated variable '" + name + "'", lineno);
        }
        sys.variables.push_back(name);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (sys.variables.size() > kMaxVariables) throw SystemFileError("too many variables", lineno);
      have_vars = true;
      continue;
    }
    if (starts_with_key(line, "p:", rest)) {
      if (have_prime || !sys.polynomials.empty()) throw SystemFileError("misplaced p line", lineno);
      try {
        std::size_t used = 0;
        const unsigned long long p = std::stoull(rest, &used);
        if (used != rest.size() || p >= (1ull << 32)) throw std::invalid_argument("range");
        if (!prime) sys.field = PrimeField(static_cast<std::uint32_t>(p));
      } catch (const std::exception&) {
        throw SystemFileError("invalid prime '" + rest + "'", lineno);
      }
      have_prime = true;
      continue;
    }
    if (!have_vars) throw SystemFileError("polynomial before the vars line", lineno);
    try {
      sys.polynomials.push_back(parse_polynomial(line, sys.variables, sys.field));
    } catch (const ParseError& e) {
      throw SystemFileError(e.what(), lineno);
    }
  }
  if (!have_vars) throw SystemFileError("missing vars line", lineno);
  if (sys.polynomials.empty()) throw SystemFileError("no polynomials", lineno);
  return sys;
}

PolynomialSystem read_system_file(const std::string& path, std::optional<std::uint32_t> prime) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_system(in, prime);
}

void write_system(const PolynomialSystem& system, std::ostream& out) {
  for (const auto& c : system.comments) out << "# " << c << '\n';
  out << "vars: ";
  for (std::size_t j = 0; j < system.variables.size(); ++j) out << (j ? "," : "") << system.variables[j];
  out << "\np: " << system.field.prime() << '\n';
  for (const auto& f : system.polynomials) out << f.to_string(system.variables) << '\n';
}

PolynomialSystem homogenize(const PolynomialSystem& system, const std::string& name) {
  if (std::find(system.variables.begin(), system.variables.end(), name) != system.variables.end()) {
    throw std::invalid_argument("homogenizing variable '" + name + "' already present");
  }
  const std::size_t n = system.variables.size() + 1;
  if (n > kMaxVariables) throw std::invalid_argument("too many variables");
  PolynomialSystem out{system.variables, system.field, {}, system.comments};
  out.variables.push_back(name);
  for (const auto& f : system.polynomials) {
    const unsigned d = f.degree();
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      Monomial m(n);
      for (std::size_t j = 1; j < n; ++j) m.set_exponent(j, t.monomial.exponent(j));
      m.set_exponent(n, d - t.monomial.degree());
      terms.push_back({m, t.coefficient});
    }
    out.polynomials.push_back(Polynomial::from_terms(n, system.field, std::move(terms)));
  }
  return out;
}

PolynomialSystem sorted_by_degree(const PolynomialSystem& system) {
  PolynomialSystem out = system;
  std::stable_sort(out.polynomials.begin(), out.polynomials.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  return out;
}

}  // namespace sigf5
