#include "edgeal/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgeal {

namespace {

bool face_order(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<VertexSet> facets) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  SimplicialComplex k;
  for (VertexSet f : facets) {
    bool maximal = std::none_of(facets.begin(), facets.end(),
                                [&](VertexSet o) { return o != f && f.is_subset_of(o); });
    if (maximal) k.facets_.push_back(f);
  }
  return k;
}

VertexSet SimplicialComplex::vertex_set() const {
  VertexSet out;
  for (VertexSet f : facets_) out = out | f;
  return out;
}

int SimplicialComplex::dimension() const {
  int d = -2;
  for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return face.is_subset_of(f); });
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::vector<VertexSet> out;
  for (VertexSet f : facets_) {
    if (f.size() > 24) throw std::length_error("facet too large to enumerate faces");
    // Every subset of the facet, by the standard submask walk.
    const std::uint32_t full = f.bits();
    std::uint32_t sub = full;
    while (true) {
      out.emplace_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & full;
    }
  }
  std::sort(out.begin(), out.end(), face_order);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<int, std::size_t> reduced_homology_from_faces(const std::vector<VertexSet>& faces, Field f) {
  validate_field(f);
  std::map<int, std::size_t> out;
  if (faces.empty()) return out;
  int top = -1;
  for (VertexSet s : faces) top = std::max(top, s.size() - 1);
  // by_dim[d + 1] lists the faces of dimension d, sorted by bitset.
  std::vector<std::vector<VertexSet>> by_dim(static_cast<std::size_t>(top + 2));
  for (VertexSet s : faces) by_dim[s.size()].push_back(s);
  for (auto& level : by_dim) std::sort(level.begin(), level.end());

  // ranks[d + 1] = rank of the boundary map from dimension d to d - 1.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 3), 0);
  for (int d = 0; d <= top; ++d) {
    const auto& src = by_dim[d + 1];
    const auto& dst = by_dim[d];
    if (src.empty() || dst.empty()) continue;
    IntMatrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      auto verts = src[c].members();
      for (std::size_t k = 0; k < verts.size(); ++k) {
        VertexSet boundary = src[c];
        boundary.erase(verts[k]);
        auto it = std::lower_bound(dst.begin(), dst.end(), boundary);
        if (it == dst.end() || *it != boundary) throw std::invalid_argument("face list is not downward closed");
        m(static_cast<std::size_t>(it - dst.begin()), c) = (k % 2 == 0) ? 1 : -1;
      }
    }
    ranks[d + 1] = rank(m, f);
  }
  for (int d = -1; d <= top; ++d) {
    const std::size_t chains = by_dim[d + 1].size();
    const std::size_t h = chains - ranks[d + 1] - ranks[d + 2];
    if (h != 0) out[d] = h;
  }
  return out;
}

std::map<int, std::size_t> reduced_homology_ranks(const SimplicialComplex& k, Field f) {
  return reduced_homology_from_faces(k.faces(), f);
}

long reduced_euler_characteristic(const std::vector<VertexSet>& faces) {
  long chi = 0;
  for (VertexSet s : faces) chi += ((s.size() - 1) % 2 == 0) ? 1 : -1;
  return chi;
}

}  // namespace edgeal
