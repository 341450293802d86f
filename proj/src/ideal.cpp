#include "edgeal/ideal.hpp"

#include <algorithm>
#include <cctype>

namespace edgeal {

namespace {

void same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient())
    throw AmbientMismatch("ideals live in rings with " + std::to_string(a.ambient()) + " and " +
                          std::to_string(b.ambient()) + " variables");
}

}  // namespace

std::vector<Monomial> minimize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  // Sorted by degree, so only already-kept monomials can divide a candidate.
  for (const Monomial& m : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(m);
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("ideal ambient size must be in 0..32");
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens) : MonomialIdeal(n) {
  for (const Monomial& m : gens)
    if (m.ambient() != n) throw AmbientMismatch("generator ambient size differs from ideal");
  gens_ = minimize(std::move(gens));
}

MonomialIdeal MonomialIdeal::prime(int n, VertexSet vars) {
  std::vector<Monomial> gens;
  for (int v : vars.members()) gens.push_back(Monomial::variable(n, v));
  return MonomialIdeal(n, std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

Monomial MonomialIdeal::exponent_bound() const {
  Monomial out(n_);
  for (const Monomial& g : gens_) out = lcm(out, g);
  return out;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.ambient() != n_) throw AmbientMismatch("monomial ambient size differs from ideal");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (const Edge& e : g.edges()) gens.push_back(Monomial::edge(g.order(), e));
  return MonomialIdeal(g.order(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  same_ambient(a, b);
  auto gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  same_ambient(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& x : a.gens())
    for (const Monomial& y : b.gens()) gens.push_back(x * y);
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, int s) {
  if (s < 0) throw std::invalid_argument("power: negative exponent");
  MonomialIdeal out = MonomialIdeal::unit(a.ambient());
  for (int k = 0; k < s; ++k) out = product(out, a);
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  same_ambient(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& x : a.gens())
    for (const Monomial& y : b.gens()) gens.push_back(lcm(x, y));
  return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& u) {
  if (u.ambient() != a.ambient()) throw AmbientMismatch("colon: monomial ambient size differs");
  std::vector<Monomial> gens;
  gens.reserve(a.size());
  for (const Monomial& g : a.gens()) gens.push_back(colon(g, u));
  return MonomialIdeal(a.ambient(), std::move(gens));
}

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  same_ambient(a, b);
  return std::all_of(a.gens().begin(), a.gens().end(), [&](const Monomial& g) { return b.contains(g); });
}

VertexSet variables_in(const MonomialIdeal& a) {
  VertexSet out;
  for (const Monomial& g : a.gens())
    if (g.degree() == 1) out = out | g.support();
  return out;
}

namespace {

void transversals(const std::vector<VertexSet>& edges, std::size_t next, VertexSet chosen,
                  std::vector<VertexSet>& out) {
  while (next < edges.size() && edges[next].intersects(chosen)) ++next;
  if (next == edges.size()) {
    out.push_back(chosen);
    return;
  }
  for (int v : edges[next].members()) {
    VertexSet with = chosen;
    with.insert(v);
    transversals(edges, next + 1, with, out);
  }
}

}  // namespace

std::vector<VertexSet> minimal_primes(const MonomialIdeal& a) {
  if (!a.is_squarefree()) throw std::invalid_argument("minimal_primes: ideal is not squarefree");
  if (a.is_unit()) return {};
  std::vector<VertexSet> supports;
  for (const Monomial& g : a.gens()) supports.push_back(g.support());
  std::vector<VertexSet> found;
  transversals(supports, 0, VertexSet{}, found);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<VertexSet> out;
  for (VertexSet t : found) {
    bool minimal = std::none_of(found.begin(), found.end(),
                                [&](VertexSet o) { return o != t && o.is_subset_of(t); });
    if (minimal) out.push_back(t);
  }
  return out;
}

std::string to_string(const MonomialIdeal& a) {
  if (a.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(a.gens()[i]);
  }
  return out + ")";
}

MonomialIdeal parse_ideal(std::string_view text, int n) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("ideal must be written as (g1, g2, ...)");
  text = text.substr(1, text.size() - 2);
  std::vector<Monomial> gens;
  std::size_t start = 0;
  bool any = false;
  for (char c : text) any = any || !std::isspace(static_cast<unsigned char>(c));
  if (!any) throw std::invalid_argument("empty ideal text; write (0) for the zero ideal");
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    std::string trimmed;
    for (char c : item)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed != "0") gens.push_back(parse_monomial(trimmed, n));
    start = comma + 1;
  }
  return MonomialIdeal(n, std::move(gens));
}

nlohmann::json to_json(const Monomial& m) {
  auto e = m.exponents();
  return nlohmann::json(std::vector<int>(e.begin(), e.end()));
}

nlohmann::json to_json(const MonomialIdeal& a) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Monomial& g : a.gens()) gens.push_back(to_json(g));
  return {{"n", a.ambient()}, {"gens", gens}};
}

}  // namespace edgeal
