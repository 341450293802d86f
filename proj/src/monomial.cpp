#include "edgeal/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace edgeal {

namespace {

void check_ambient(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("monomial ambient size must be in 0..32");
}

Monomial::Exponent checked(long value) {
  if (value < 0) throw std::invalid_argument("negative exponent");
  if (value > std::numeric_limits<Monomial::Exponent>::max())
    throw ExponentOverflow("exponent exceeds 16-bit range");
  return static_cast<Monomial::Exponent>(value);
}

void same_ambient(const Monomial& a, const Monomial& b) {
  if (a.ambient() != b.ambient())
    throw AmbientMismatch("monomials live in rings with " + std::to_string(a.ambient()) + " and " +
                          std::to_string(b.ambient()) + " variables");
}

}  // namespace

Monomial::Monomial(int n) : n_(static_cast<std::uint8_t>(n)) { check_ambient(n); }

Monomial::Monomial(int n, std::initializer_list<int> exps)
    : Monomial(n, std::span<const int>(exps.begin(), exps.size())) {}

Monomial::Monomial(int n, std::span<const int> exps) : Monomial(n) {
  if (exps.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("exponent vector length differs from ambient size");
  for (int i = 0; i < n; ++i) exps_[i] = checked(exps[i]);
}

Monomial Monomial::variable(int n, int i) {
  Monomial m(n);
  if (i < 0 || i >= n) throw std::invalid_argument("variable index out of range");
  m.exps_[i] = 1;
  return m;
}

Monomial Monomial::squarefree(int n, VertexSet support) {
  Monomial m(n);
  if (!support.is_subset_of(VertexSet::full(n)))
    throw std::invalid_argument("support outside ambient variables");
  for (int i : support.members()) m.exps_[i] = 1;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d += exps_[i];
  return d;
}

VertexSet Monomial::support() const {
  VertexSet s;
  for (int i = 0; i < n_; ++i)
    if (exps_[i] > 0) s.insert(i);
  return s;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.begin() + n_, [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  same_ambient(*this, other);
  for (int i = 0; i < n_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  same_ambient(a, b);
  Monomial out(a.n_);
  for (int i = 0; i < a.n_; ++i) out.exps_[i] = checked(long{a.exps_[i]} + long{b.exps_[i]});
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  same_ambient(a, b);
  Monomial out(a.ambient());
  for (int i = 0; i < a.ambient(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  same_ambient(a, b);
  Monomial out(a.ambient());
  for (int i = 0; i < a.ambient(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

Monomial colon(const Monomial& a, const Monomial& b) {
  same_ambient(a, b);
  Monomial out(a.ambient());
  for (int i = 0; i < a.ambient(); ++i)
    out[i] = a[i] > b[i] ? static_cast<Monomial::Exponent>(a[i] - b[i]) : 0;
  return out;
}

Monomial divide(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw std::invalid_argument("divide: not a divisor");
  return colon(a, b);
}

Monomial pow(const Monomial& a, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  Monomial out(a.ambient());
  for (int i = 0; i < a.ambient(); ++i) out[i] = checked(long{a[i]} * k);
  return out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da < db;
  auto ea = a.exponents();
  auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 0; i < m.ambient(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, int n) {
  Monomial out(n);
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "1") return out;
  if (text.empty()) throw std::invalid_argument("empty monomial");
  auto read_int = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
      throw std::invalid_argument("malformed monomial '" + std::string(text) + "'");
    return v;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t star = text.find('*', start);
    if (star == std::string_view::npos) star = text.size();
    std::string_view factor = trim(text.substr(start, star - start));
    if (factor.size() < 2 || factor[0] != 'x')
      throw std::invalid_argument("malformed monomial factor '" + std::string(factor) + "'");
    int exponent = 1;
    std::string_view index = factor.substr(1);
    if (auto caret = index.find('^'); caret != std::string_view::npos) {
      exponent = read_int(index.substr(caret + 1));
      index = index.substr(0, caret);
    }
    int var = read_int(index);
    if (var < 1 || var > n)
      throw std::invalid_argument("variable x" + std::to_string(var) + " outside x1..x" + std::to_string(n));
    out[var - 1] = checked(long{out[var - 1]} + exponent);
    start = star + 1;
  }
  return out;
}

}  // namespace edgeal
