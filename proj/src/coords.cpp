#include "reebcube/coords.hpp"

#include <algorithm>
#include <map>

#include "reebcube/errors.hpp"
#include "reebcube/parallel.hpp"

namespace reebcube {

bool vec_leq(const CoordVec& a, const CoordVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string CubicViolation::describe(const Poset& p) const {
  using K = Kind;
  switch (kind) {
    case K::missing_element: return "no coordinates for element " + std::to_string(x);
    case K::wrong_dimension: return "vector of wrong length at " + p.label(x);
    case K::not_injective: return "duplicate vectors at " + p.label(x) + " and " + p.label(y);
    case K::cover_changes_none:
      return "cover " + p.label(x) + "->" + p.label(y) + " changes no coordinate";
    case K::cover_changes_many:
      return "cover " + p.label(x) + "->" + p.label(y) + " changes several coordinates";
    case K::cover_not_increasing:
      return "cover " + p.label(x) + "->" + p.label(y) + " decreases its coordinate";
  }
  return "?";
}

std::optional<CubicViolation> check_cubic_realization(const Poset& p, const CoordinateMap& c) {
  using K = CubicViolation::Kind;
  if (c.size() != p.size())
    throw Error(Errc::missing_element, "coordinate map does not cover the poset");
  for (int x = 0; x < p.size(); ++x)
    if (static_cast<int>(c.vecs[x].size()) != c.dim) return CubicViolation{K::wrong_dimension, x};

  std::map<CoordVec, int> seen;
  for (int x = 0; x < p.size(); ++x) {
    auto [it, fresh] = seen.emplace(c.vecs[x], x);
    if (!fresh) return CubicViolation{K::not_injective, it->second, x};
  }

  for (const auto& [x, y] : p.covers()) {
    int changed = -1;
    int changes = 0;
    for (int i = 0; i < c.dim; ++i)
      if (c.vecs[x][i] != c.vecs[y][i]) {
        changed = i;
        ++changes;
      }
    if (changes == 0) return CubicViolation{K::cover_changes_none, x, y};
    if (changes > 1) return CubicViolation{K::cover_changes_many, x, y};
    if (c.vecs[x][changed] > c.vecs[y][changed])
      return CubicViolation{K::cover_not_increasing, x, y};
  }
  return std::nullopt;
}

std::string EmbeddingViolation::describe(const Poset& p) const {
  if (order_holds && !coords_hold)
    return p.label(x) + " <= " + p.label(y) + " in the poset but not in coordinates";
  return "coordinates compare " + p.label(x) + " <= " + p.label(y) +
         " but the elements are not ordered";
}

std::optional<EmbeddingViolation> check_order_embedding(const Poset& p, const CoordinateMap& c,
                                                        int jobs) {
  if (c.size() != p.size())
    throw Error(Errc::missing_element, "coordinate map does not cover the poset");
  const int n = p.size();
  std::vector<std::optional<EmbeddingViolation>> found(std::max(jobs, 1));
  run_blocks(n, jobs, [&](int begin, int end, int worker) {
    for (int x = begin; x < end; ++x) {
      for (int y = 0; y < n; ++y) {
        bool order = p.leq(x, y);
        bool coords = vec_leq(c.vecs[x], c.vecs[y]);
        if (order != coords) {
          found[worker] = EmbeddingViolation{x, y, order, coords};
          return;
        }
      }
    }
  });
  for (const auto& v : found)
    if (v) return v;
  return std::nullopt;
}

}  // namespace reebcube
