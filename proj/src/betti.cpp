#include "edgeal/betti.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <unordered_map>
#include <unordered_set>

#include <omp.h>

namespace edgeal {

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m.exponents()) h = (h ^ e) * 1099511628211ULL;
    return h;
  }
};

bool table_order(const BettiEntry& a, const BettiEntry& b) {
  if (a.i != b.i) return a.i < b.i;
  return canonical_less(a.degree, b.degree);
}

void require_nonzero(const MonomialIdeal& a) {
  if (a.is_zero()) throw RegularityUndefined("Betti numbers of the zero ideal are not defined here");
}

// Membership in a monomial ideal. Exponents beyond the largest generator
// exponent of each variable never matter, so monomials are clipped into the
// box below exponent_bound() and looked up in a precomputed up-closure.
class Membership {
 public:
  explicit Membership(const MonomialIdeal& a) : ideal_(a), bound_(a.exponent_bound()) {
    const int n = a.ambient();
    std::size_t cells = 1;
    stride_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      stride_[i] = cells;
      cells *= static_cast<std::size_t>(bound_[i]) + 1;
      if (cells > kMaxCells) break;
    }
    if (cells > kMaxCells) return;
    table_.assign(cells, 0);
    for (const Monomial& g : a.gens()) table_[index(g)] = 1;
    // Prefix-or along each axis turns generator marks into the up-closure.
    for (int i = 0; i < n; ++i) {
      const std::size_t step = stride_[i];
      const std::size_t extent = static_cast<std::size_t>(bound_[i]) + 1;
      for (std::size_t c = 0; c < cells; ++c)
        if ((c / step) % extent != 0 && table_[c - step]) table_[c] = 1;
    }
  }

  bool contains(const Monomial& m) const {
    if (table_.empty()) return ideal_.contains(m);
    return table_[index(m)] != 0;
  }

 private:
  static constexpr std::size_t kMaxCells = std::size_t{1} << 24;

  std::size_t index(const Monomial& m) const {
    std::size_t idx = 0;
    for (int i = 0; i < m.ambient(); ++i) idx += std::min(m[i], bound_[i]) * stride_[i];
    return idx;
  }

  const MonomialIdeal& ideal_;
  Monomial bound_;
  std::vector<std::size_t> stride_;
  std::vector<unsigned char> table_;
};

// Betti numbers in one multidegree from the upper Koszul complex.
std::vector<BettiEntry> entries_at(const Membership& member, const Monomial& b, Field field) {
  const std::vector<int> verts = b.support().members();
  const std::size_t k = verts.size();
  const std::uint32_t subsets = std::uint32_t{1} << k;
  std::vector<unsigned char> is_face(subsets, 0);
  std::vector<VertexSet> faces;
  for (std::uint32_t sub = 0; sub < subsets; ++sub) {
    Monomial m = b;
    VertexSet f;
    for (std::size_t t = 0; t < k; ++t) {
      if ((sub >> t) & 1U) {
        m[verts[t]] = static_cast<Monomial::Exponent>(m[verts[t]] - 1);
        f.insert(verts[t]);
      }
    }
    if (member.contains(m)) {
      is_face[sub] = 1;
      faces.push_back(f);
    }
  }
  if (faces.empty()) return {};
  // A cone over any vertex is acyclic.
  for (std::size_t t = 0; t < k; ++t) {
    const std::uint32_t bit = std::uint32_t{1} << t;
    bool cone = true;
    for (std::uint32_t sub = 0; sub < subsets && cone; ++sub)
      if (is_face[sub] && !is_face[sub | bit]) cone = false;
    if (cone) return {};
  }
  std::vector<BettiEntry> out;
  for (auto [dim, r] : reduced_homology_from_faces(faces, field)) out.push_back({dim + 1, b, r});
  return out;
}

BettiTable assemble(int n, std::vector<std::vector<BettiEntry>>& per_degree) {
  std::vector<BettiEntry> all;
  for (auto& part : per_degree)
    for (auto& e : part) all.push_back(std::move(e));
  return BettiTable(n, std::move(all));
}

}  // namespace

BettiTable::BettiTable(int n, std::vector<BettiEntry> entries) : n_(n), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), table_order);
}

std::size_t BettiTable::rank(int i, const Monomial& b) const {
  for (const BettiEntry& e : entries_)
    if (e.i == i && e.degree == b) return e.rank;
  return 0;
}

std::map<std::pair<int, int>, std::size_t> BettiTable::graded() const {
  std::map<std::pair<int, int>, std::size_t> out;
  for (const BettiEntry& e : entries_) out[{e.i, e.degree.degree()}] += e.rank;
  return out;
}

int BettiTable::regularity() const {
  if (entries_.empty()) throw RegularityUndefined("empty Betti table");
  int reg = entries_.front().degree.degree() - entries_.front().i;
  for (const BettiEntry& e : entries_) reg = std::max(reg, e.degree.degree() - e.i);
  return reg;
}

int BettiTable::projective_dimension() const {
  int pd = -1;
  for (const BettiEntry& e : entries_) pd = std::max(pd, e.i);
  return pd;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& a, const Deadline& deadline) {
  require_nonzero(a);
  const auto& gens = a.gens();
  std::unordered_set<Monomial, MonomialHash> seen(gens.begin(), gens.end());
  std::vector<Monomial> order(gens.begin(), gens.end());
  // Joining every element with every generator reaches all subset lcms.
  for (std::size_t head = 0; head < order.size(); ++head) {
    if (head % 256 == 0) deadline.check();
    for (const Monomial& g : gens) {
      Monomial j = lcm(order[head], g);
      if (seen.insert(j).second) order.push_back(j);
    }
  }
  std::sort(order.begin(), order.end(), canonical_less);
  return order;
}

SimplicialComplex upper_koszul(const MonomialIdeal& a, const Monomial& b) {
  if (b.ambient() != a.ambient()) throw AmbientMismatch("upper_koszul: multidegree ambient size differs");
  const std::vector<int> verts = b.support().members();
  std::vector<VertexSet> faces;
  for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << verts.size()); ++sub) {
    Monomial m = b;
    VertexSet f;
    for (std::size_t t = 0; t < verts.size(); ++t) {
      if ((sub >> t) & 1U) {
        m[verts[t]] = static_cast<Monomial::Exponent>(m[verts[t]] - 1);
        f.insert(verts[t]);
      }
    }
    if (a.contains(m)) faces.push_back(f);
  }
  return SimplicialComplex::from_facets(std::move(faces));
}

BettiTable betti_table_serial(const MonomialIdeal& a, const BettiOptions& opts) {
  validate_field(opts.field);
  const auto lattice = lcm_lattice(a, opts.deadline);
  const Membership member(a);
  std::vector<std::vector<BettiEntry>> per(lattice.size());
  for (std::size_t idx = 0; idx < lattice.size(); ++idx) {
    opts.deadline.check();
    per[idx] = entries_at(member, lattice[idx], opts.field);
  }
  return assemble(a.ambient(), per);
}

BettiTable betti_table(const MonomialIdeal& a, const BettiOptions& opts) {
  validate_field(opts.field);
  const auto lattice = lcm_lattice(a, opts.deadline);
  const Membership member(a);
  std::vector<std::vector<BettiEntry>> per(lattice.size());
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  const long count = static_cast<long>(lattice.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long idx = 0; idx < count; ++idx) {
    if (stop.load(std::memory_order_relaxed)) continue;
    try {
      opts.deadline.check();
      per[static_cast<std::size_t>(idx)] = entries_at(member, lattice[static_cast<std::size_t>(idx)], opts.field);
    } catch (...) {
#pragma omp critical(edgeal_betti_error)
      if (!error) error = std::current_exception();
      stop.store(true, std::memory_order_relaxed);
    }
  }
  if (error) std::rethrow_exception(error);
  return assemble(a.ambient(), per);
}

int regularity(const MonomialIdeal& a, const BettiOptions& opts) {
  if (a.is_zero()) throw RegularityUndefined("regularity of the zero ideal is not defined here");
  if (a.is_unit()) throw RegularityUndefined("regularity of the unit ideal is not defined here");
  return betti_table(a, opts).regularity();
}

BettiTable taylor_betti_oracle(const MonomialIdeal& a, const BettiOptions& opts) {
  require_nonzero(a);
  validate_field(opts.field);
  const auto& gens = a.gens();
  if (gens.size() > kTaylorMaxGenerators)
    throw std::invalid_argument("taylor_betti_oracle: more than 12 generators");
  const std::uint32_t subsets = std::uint32_t{1} << gens.size();
  std::vector<Monomial> lcms(subsets, Monomial(a.ambient()));
  std::unordered_map<Monomial, std::vector<std::uint32_t>, MonomialHash> by_lcm;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    const int low = std::countr_zero(mask);
    lcms[mask] = lcm(lcms[mask & (mask - 1)], gens[static_cast<std::size_t>(low)]);
    by_lcm[lcms[mask]].push_back(mask);
  }
  std::vector<BettiEntry> entries;
  for (auto& [b, masks] : by_lcm) {
    opts.deadline.check();
    const int top = static_cast<int>(gens.size());
    // level[k] = subsets of size k with lcm b, ascending.
    std::vector<std::vector<std::uint32_t>> level(static_cast<std::size_t>(top + 2));
    for (std::uint32_t m : masks) level[static_cast<std::size_t>(std::popcount(m))].push_back(m);
    for (auto& l : level) std::sort(l.begin(), l.end());
    // boundary_rank[k] = rank of the differential from size k to size k - 1.
    std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top + 2), 0);
    for (int k = 2; k <= top; ++k) {
      const auto& src = level[k];
      const auto& dst = level[k - 1];
      if (src.empty() || dst.empty()) continue;
      IntMatrix m(dst.size(), src.size());
      for (std::size_t c = 0; c < src.size(); ++c) {
        int pos = 0;
        for (std::uint32_t rest = src[c]; rest != 0; rest &= rest - 1, ++pos) {
          const std::uint32_t face = src[c] & ~(rest & (~rest + 1));
          auto it = std::lower_bound(dst.begin(), dst.end(), face);
          if (it != dst.end() && *it == face)
            m(static_cast<std::size_t>(it - dst.begin()), c) = (pos % 2 == 0) ? 1 : -1;
        }
      }
      boundary_rank[k] = rank(m, opts.field);
    }
    for (int k = 1; k <= top; ++k) {
      const std::size_t h = level[k].size() - boundary_rank[k] - boundary_rank[k + 1];
      if (h != 0) entries.push_back({k - 1, b, h});
    }
  }
  return BettiTable(a.ambient(), std::move(entries));
}

nlohmann::json to_json(const BettiTable& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const BettiEntry& e : t.entries())
    out.push_back({{"i", e.i},
                   {"multidegree", to_json(e.degree)},
                   {"total_degree", e.degree.degree()},
                   {"rank", e.rank}});
  return out;
}

}  // namespace edgeal
