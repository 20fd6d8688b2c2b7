#include "sigf5/monomial.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace sigf5 {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint16_t>(nvars)) {
  if (nvars > kMaxVariables) throw std::invalid_argument("too many variables");
}

Monomial::Monomial(std::initializer_list<unsigned> exponents) : Monomial(exponents.size()) {
  std::size_t j = 1;
  for (unsigned e : exponents) set_exponent(j++, e);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t j = 0; j < exponents.size(); ++j) m.set_exponent(j + 1, exponents[j]);
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t j) {
  Monomial m(nvars);
  m.set_exponent(j, 1);
  return m;
}

void Monomial::set_exponent(std::size_t j, unsigned value) {
  if (j < 1 || j > n_) throw std::out_of_range("variable index out of range");
  if (value > UINT16_MAX) throw std::overflow_error("exponent too large");
  degree_ = degree_ - e_[j - 1] + value;
  e_[j - 1] = static_cast<std::uint16_t>(value);
}

std::size_t Monomial::max_var() const {
  for (std::size_t j = n_; j > 0; --j) {
    if (e_[j - 1] != 0) return j;
  }
  return 0;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ n_;
  for (std::size_t j = 0; j < n_; ++j) {
    h ^= e_[j];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t j = 1; j <= n_; ++j) {
    unsigned e = exponent(j);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += j <= names.size() ? names[j - 1] : "x" + std::to_string(j);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

namespace {

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("monomials over different variable counts");
}

}  // namespace

std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t j = a.num_vars(); j > 0; --j) {
    unsigned x = a.exponent(j), y = b.exponent(j);
    if (x != y) return y <=> x;
  }
  return std::strong_ordering::equal;
}

Monomial mul(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial r(a.num_vars());
  for (std::size_t j = 1; j <= a.num_vars(); ++j) r.set_exponent(j, a.exponent(j) + b.exponent(j));
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  if (a.degree() > b.degree()) return false;
  for (std::size_t j = 1; j <= a.num_vars(); ++j) {
    if (a.exponent(j) > b.exponent(j)) return false;
  }
  return true;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw std::invalid_argument("quotient by a non-divisor");
  Monomial r(a.num_vars());
  for (std::size_t j = 1; j <= a.num_vars(); ++j) r.set_exponent(j, a.exponent(j) - b.exponent(j));
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial r(a.num_vars());
  for (std::size_t j = 1; j <= a.num_vars(); ++j) r.set_exponent(j, std::max(a.exponent(j), b.exponent(j)));
  return r;
}

namespace {

// Appends T^k_rest times the fixed exponents above k, decreasing in grevlex.
void enumerate_into(std::size_t k, unsigned rest, Monomial& cur, std::vector<Monomial>& out) {
  if (k == 1) {
    cur.set_exponent(1, rest);
    out.push_back(cur);
    cur.set_exponent(1, 0);
    return;
  }
  for (unsigned e = 0; e <= rest; ++e) {
    cur.set_exponent(k, e);
    enumerate_into(k - 1, rest - e, cur, out);
  }
  cur.set_exponent(k, 0);
}

}  // namespace

std::vector<Monomial> enumerate(std::size_t i, unsigned d, std::size_t n) {
  if (i > n) throw std::invalid_argument("variable prefix longer than the ring");
  std::vector<Monomial> out;
  if (i == 0) {
    if (d == 0) out.emplace_back(n);
    return out;
  }
  out.reserve(binomial(i + d - 1, d));
  Monomial cur(n);
  enumerate_into(i, d, cur, out);
  return out;
}

namespace {

constexpr std::size_t kPascalRows = 192;

// Saturating Pascal triangle; saturated entries never index an allocatable basis.
const std::vector<std::uint64_t>& pascal() {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> t(kPascalRows * kPascalRows, 0);
    for (std::size_t r = 0; r < kPascalRows; ++r) {
      t[r * kPascalRows] = 1;
      for (std::size_t k = 1; k <= r; ++k) {
        std::uint64_t a = t[(r - 1) * kPascalRows + k - 1], b = t[(r - 1) * kPascalRows + k];
        t[r * kPascalRows + k] = a > UINT64_MAX - b ? UINT64_MAX : a + b;
      }
    }
    return t;
  }();
  return table;
}

std::uint64_t small_binomial(std::size_t n, std::size_t k) {
  if (n < kPascalRows) return pascal()[n * kPascalRows + k];
  return binomial(n, k);
}

}  // namespace

std::uint64_t grevlex_rank(const Monomial& m) {
  std::uint64_t pos = 0;
  unsigned d = m.degree();
  for (std::size_t i = m.num_vars(); i >= 2; --i) {
    unsigned a = m.exponent(i);
    if (a != 0) pos += small_binomial(i + d - 1, d) - small_binomial(i + d - a - 1, d - a);
    d -= a;
  }
  return pos;
}

std::shared_ptr<const DegreeBasis> shared_degree_basis(std::size_t nvars, unsigned degree) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, unsigned>, std::shared_ptr<const DegreeBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{nvars, degree}];
  if (!slot) slot = std::make_shared<const DegreeBasis>(nvars, degree);
  return slot;
}

DegreeBasis::DegreeBasis(std::size_t nvars, unsigned degree)
    : n_(nvars), d_(degree), monomials_(enumerate(nvars, degree, nvars)) {}

std::uint32_t DegreeBasis::index_of(const Monomial& m) const {
  if (m.num_vars() != n_ || m.degree() != d_) throw std::invalid_argument("monomial outside the degree basis");
  return static_cast<std::uint32_t>(grevlex_rank(m));
}

MonomialTables::MonomialTables(std::size_t nvars, unsigned max_degree)
    : n_(nvars), shifts_(max_degree + 1), max_vars_(max_degree + 1) {
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto basis = shared_degree_basis(nvars, d);
    auto& mv = max_vars_[d];
    mv.reserve(basis->size());
    for (const auto& m : basis->monomials()) mv.push_back(static_cast<std::uint8_t>(m.max_var()));
    if (d >= 1) {
      const DegreeBasis& below = *bases_[d - 1];
      auto& table = shifts_[d];
      table.resize(below.size() * nvars);
      for (std::size_t k = 0; k < below.size(); ++k) {
        for (std::size_t j = 1; j <= nvars; ++j) {
          table[k * nvars + (j - 1)] = basis->index_of(mul(below[k], Monomial::variable(nvars, j)));
        }
      }
    }
    bases_.push_back(std::move(basis));
  }
}

}  // namespace sigf5
