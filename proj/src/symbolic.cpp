#include "edgeal/symbolic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>

namespace edgeal {

CoverSystem cover_system(const Graph& g) { return {g.order(), minimal_vertex_covers(g)}; }

CoverSystem cover_system(const MonomialIdeal& a) { return {a.ambient(), minimal_primes(a)}; }

namespace {

void check_power(int s) {
  if (s < 1) throw std::invalid_argument("symbolic power exponent must be >= 1, got " + std::to_string(s));
}

int cover_sum(const Monomial& m, VertexSet c) {
  int total = 0;
  for (int i : c.members()) total += m[i];
  return total;
}

std::string pack(const Monomial& m) {
  auto e = m.exponents();
  return std::string(e.begin(), e.end());
}

}  // namespace

bool symbolic_member(const CoverSystem& cs, const Monomial& m, int s) {
  check_power(s);
  if (m.ambient() != cs.n) throw AmbientMismatch("symbolic_member: monomial ambient size differs");
  return std::all_of(cs.covers.begin(), cs.covers.end(),
                     [&](VertexSet c) { return cover_sum(m, c) >= s; });
}

std::vector<Monomial> minimal_solutions(const CoverSystem& cs, int s) {
  check_power(s);
  // Depth-first search from 0: while some inequality is violated, branch on
  // raising one of its coordinates that is still below s. Every minimal
  // solution is reachable because each stays coordinatewise above the path.
  std::vector<Monomial> feasible;
  std::unordered_set<std::string> seen;
  std::vector<Monomial> stack{Monomial(cs.n)};
  seen.insert(pack(stack.back()));
  while (!stack.empty()) {
    Monomial x = stack.back();
    stack.pop_back();
    int best = -1;
    int best_free = kMaxVertices + 1;
    bool dead = false;
    for (std::size_t k = 0; k < cs.covers.size(); ++k) {
      VertexSet c = cs.covers[k];
      if (cover_sum(x, c) >= s) continue;
      int free = 0;
      for (int i : c.members())
        if (x[i] < s) ++free;
      if (free == 0) {
        dead = true;
        break;
      }
      if (free < best_free) {
        best = static_cast<int>(k);
        best_free = free;
      }
    }
    if (dead) continue;
    if (best < 0) {
      feasible.push_back(x);
      continue;
    }
    const auto branch = cs.covers[static_cast<std::size_t>(best)].members();
    for (auto it = branch.rbegin(); it != branch.rend(); ++it) {
      int i = *it;
      if (x[i] >= s) continue;
      Monomial y = x;
      y[i] = static_cast<Monomial::Exponent>(y[i] + 1);
      if (seen.insert(pack(y)).second) stack.push_back(y);
    }
  }
  return minimize(std::move(feasible));
}

namespace {

struct CacheKey {
  int n;
  int s;
  std::vector<std::uint32_t> covers;
  auto operator<=>(const CacheKey&) const = default;
};

std::mutex cache_mu;
std::map<CacheKey, MonomialIdeal>& cache() {
  static std::map<CacheKey, MonomialIdeal> c;
  return c;
}

}  // namespace

MonomialIdeal symbolic_power(const CoverSystem& cs, int s) {
  check_power(s);
  CacheKey key{cs.n, s, {}};
  for (VertexSet c : cs.covers) key.covers.push_back(c.bits());
  {
    std::lock_guard lock(cache_mu);
    if (auto it = cache().find(key); it != cache().end()) return it->second;
  }
  MonomialIdeal result(cs.n, minimal_solutions(cs, s));
  std::lock_guard lock(cache_mu);
  return cache().emplace(std::move(key), std::move(result)).first->second;
}

MonomialIdeal symbolic_power(const Graph& g, int s) { return symbolic_power(cover_system(g), s); }

MonomialIdeal symbolic_power(const MonomialIdeal& squarefree, int s) {
  return symbolic_power(cover_system(squarefree), s);
}

void clear_symbolic_cache() {
  std::lock_guard lock(cache_mu);
  cache().clear();
}

namespace {

void degree_s_monomials(int n, const std::vector<int>& vars, std::size_t idx, int left, Monomial& cur,
                        std::vector<Monomial>& out) {
  if (idx + 1 == vars.size()) {
    cur[vars[idx]] = static_cast<Monomial::Exponent>(left);
    out.push_back(cur);
    cur[vars[idx]] = 0;
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[vars[idx]] = static_cast<Monomial::Exponent>(e);
    degree_s_monomials(n, vars, idx + 1, left - e, cur, out);
  }
  cur[vars[idx]] = 0;
}

}  // namespace

MonomialIdeal symbolic_power_oracle(const Graph& g, int s) {
  check_power(s);
  const int n = g.order();
  if (n > kOracleMaxOrder || s > kOracleMaxPower)
    throw std::invalid_argument("symbolic_power_oracle: limited to n <= 7 and s <= 4");
  std::vector<VertexSet> covers;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits)
    if (is_vertex_cover(g, VertexSet(bits))) covers.emplace_back(bits);
  std::vector<VertexSet> minimal;
  for (VertexSet c : covers) {
    bool is_min = true;
    for (int v : c.members()) {
      VertexSet smaller = c;
      smaller.erase(v);
      if (is_vertex_cover(g, smaller)) is_min = false;
    }
    if (is_min) minimal.push_back(c);
  }
  std::optional<MonomialIdeal> acc;
  for (VertexSet c : minimal) {
    if (c.empty()) return MonomialIdeal(n);
    std::vector<Monomial> gens;
    Monomial cur(n);
    degree_s_monomials(n, c.members(), 0, s, cur, gens);
    MonomialIdeal p(n, std::move(gens));
    acc = acc ? intersect(*acc, p) : p;
  }
  return acc ? *acc : MonomialIdeal::unit(n);
}

}  // namespace edgeal
