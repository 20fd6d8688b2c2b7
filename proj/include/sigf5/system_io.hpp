#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sigf5/polynomial.hpp"

namespace sigf5 {

struct PolynomialSystem {
  std::vector<std::string> variables;
  PrimeField field;
  std::vector<Polynomial> polynomials;
  std::vector<std::string> comments;  // '#' lines, without the marker
};

// Reports the 1-based line of the failure.
class SystemFileError : public std::runtime_error {
 public:
  SystemFileError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Format: "vars: x,y,z" then "p: 65521" then one polynomial per line; blank lines and '#' comments skipped.
// A missing "p:" line selects 65521; `prime` overrides the file's value.
PolynomialSystem read_system(std::istream& in, std::optional<std::uint32_t> prime = std::nullopt);
PolynomialSystem read_system_file(const std::string& path, std::optional<std::uint32_t> prime = std::nullopt);
void write_system(const PolynomialSystem& system, std::ostream& out);

// Adds a last variable (default name "h") and homogenizes every polynomial to its total degree.
PolynomialSystem homogenize(const PolynomialSystem& system, const std::string& name = "h");

// Stable sort by degree, as the engine requires.
PolynomialSystem sorted_by_degree(const PolynomialSystem& system);

std::vector<std::string> default_variable_names(std::size_t n);

}  // namespace sigf5
