#include "reebcube/lift.hpp"

#include <algorithm>
#include <set>

#include "reebcube/errors.hpp"
#include "reebcube/type_a.hpp"
#include "reebcube/type_b.hpp"

namespace reebcube {

HeightFunction minimal_heights(const ReebGraph& rg) { return longest_path_ranks(rg.graph); }

namespace {

void check_monotone(const ReebGraph& rg, const HeightFunction& h, bool include_auxiliary) {
  if (static_cast<int>(h.size()) != rg.graph.num_vertices())
    fail(Errc::size_mismatch, "height function size differs from class count");
  for (const Edge& e : rg.graph.edges()) {
    if (e.kind == EdgeKind::auxiliary && !include_auxiliary) continue;
    if (h[e.src] < h[e.dst]) continue;
    Error err(Errc::height_not_monotone,
              "height not strictly increasing along " + to_string(e.kind) + " edge " +
                  rg.graph.label(e.src) + "->" + rg.graph.label(e.dst));
    err.edge_from = e.src;
    err.edge_to = e.dst;
    err.edge_kind = to_string(e.kind);
    throw err;
  }
}

void check_cylindrical(const Projection& pr) {
  CylindricityReport rep = validate_cylindrical(pr);
  if (!rep.all_pass()) {
    for (const auto& line : rep.as_report().lines)
      if (!line.pass) fail(Errc::not_cylindrical, "projection not cylindrical: " + line.witness);
  }
}

CoordinateMap append_heights(const CoordinateMap& c_Q, const Projection& pr,
                             const HorizontalPartition& part, const HeightFunction& h) {
  CoordinateMap c_P;
  c_P.dim = c_Q.dim + 1;
  c_P.vecs.resize(pr.domain.size());
  for (int x = 0; x < pr.domain.size(); ++x) {
    c_P.vecs[x] = c_Q.vecs[pr.map[x]];
    c_P.vecs[x].push_back(h[part.class_of[x]]);
  }
  return c_P;
}

}  // namespace

CoordinateMap extend_cubic(const CoordinateMap& c_Q, const Projection& pr,
                           const HeightFunction& h) {
  check_cylindrical(pr);
  if (check_cubic_realization(pr.codomain, c_Q))
    fail(Errc::base_not_cubic, "base map is not a cubic realization");
  ReebGraph rg = pre_reeb(pr);
  check_monotone(rg, h, false);
  CoordinateMap c_P = append_heights(c_Q, pr, rg.partition, h);
  if (auto v = check_cubic_realization(pr.domain, c_P))
    throw std::logic_error("extension failed to be cubic: " + v->describe(pr.domain));
  return c_P;
}

CoordinateMap extend_order_embedding(const CoordinateMap& c_Q, const Projection& pr,
                                     const HeightFunction& h, int jobs) {
  check_cylindrical(pr);
  if (check_order_embedding(pr.codomain, c_Q, jobs))
    fail(Errc::base_not_embedding, "base map is not an order embedding");
  ReebGraph rg = augmented_pre_reeb(pr, jobs);
  check_monotone(rg, h, true);
  CoordinateMap c_P = append_heights(c_Q, pr, rg.partition, h);
  if (auto v = check_order_embedding(pr.domain, c_P, jobs))
    throw std::logic_error("extension failed to embed: " + v->describe(pr.domain));
  return c_P;
}

Decomposition decompose(const CoordinateMap& c_P, const Projection& pr) {
  if (c_P.size() != pr.domain.size())
    fail(Errc::missing_element, "coordinate map does not cover the domain");
  if (c_P.dim < 1) fail(Errc::not_compatible, "no coordinate to split off");

  Decomposition out;
  out.base.dim = c_P.dim - 1;
  out.base.vecs.assign(pr.codomain.size(), {});

  // Leading block must factor through the projection.
  std::vector<char> assigned(pr.codomain.size(), 0);
  for (int x = 0; x < pr.domain.size(); ++x) {
    CoordVec head(c_P.vecs[x].begin(), c_P.vecs[x].end() - 1);
    int q = pr.map[x];
    if (!assigned[q]) {
      out.base.vecs[q] = std::move(head);
      assigned[q] = 1;
    } else if (out.base.vecs[q] != head) {
      fail(Errc::not_compatible, "leading coordinates vary within the fiber over " +
                                     pr.codomain.label(q));
    }
  }

  ReebGraph rg = pre_reeb(pr);
  out.heights.assign(rg.partition.num_classes(), 0);
  std::vector<char> seen(rg.partition.num_classes(), 0);
  for (int x = 0; x < pr.domain.size(); ++x) {
    int c = rg.partition.class_of[x];
    std::int64_t last = c_P.vecs[x].back();
    if (!seen[c]) {
      out.heights[c] = last;
      seen[c] = 1;
    } else if (out.heights[c] != last) {
      fail(Errc::not_compatible, "last coordinate varies within the horizontal class of " +
                                     pr.domain.label(x));
    }
  }
  check_monotone(rg, out.heights, false);
  return out;
}

bool uniqueness_check(const Projection& pr, const HeightFunction& h1, const HeightFunction& h2,
                      int jobs) {
  ReebGraph rg = augmented_pre_reeb(pr, jobs);
  check_monotone(rg, h1, true);
  check_monotone(rg, h2, true);
  if (!is_total_order(reachability_poset(rg.graph)))
    fail(Errc::not_total_order, "augmented Reeb poset is not a total order");
  const auto& cls = rg.partition.class_of;
  auto sign = [](std::int64_t d) { return d < 0 ? -1 : d > 0 ? 1 : 0; };
  for (int x = 0; x < pr.domain.size(); ++x)
    for (int y = 0; y < pr.domain.size(); ++y)
      if (sign(h1[cls[x]] - h1[cls[y]]) != sign(h2[cls[x]] - h2[cls[y]])) return false;
  return true;
}

std::string to_string(HeightsKind k) { return k == HeightsKind::nu ? "nu" : "minimal"; }

TowerRealization build_tower(char type, int n, HeightsKind kind, int jobs) {
  if (type != 'A' && type != 'B') fail(Errc::type_mismatch, "tower type must be A or B");
  if (n < 1) fail(Errc::rank_too_small, "tower rank must be >= 1");
  if (type == 'A' && n > kMaxRankA) fail(Errc::rank_too_large, "type A towers capped at rank 7");
  if (type == 'B' && n > kMaxRankB) fail(Errc::rank_too_large, "type B towers capped at rank 5");

  TowerRealization t;
  t.type = type;
  t.rank = n;
  t.kind = kind;

  // The point: S_1 in type A, W_0 in type B.
  t.top = type == 'A' ? weak_poset_A(1).poset : weak_poset_B(0).poset;
  t.coords.dim = 0;
  t.coords.vecs.assign(1, {});

  const int first_level = type == 'A' ? 2 : 1;
  for (int k = first_level; k <= n; ++k) {
    TowerLevel level;
    HeightFunction nu;
    if (type == 'A') {
      DeletionA d = deletion_A(k);
      level.proj = std::move(d.proj);
      level.augmented = augmented_pre_reeb(level.proj, jobs);
      for (int c = 0; c < level.augmented.partition.num_classes(); ++c)
        nu.push_back(nu_A(class_subset(d.domain_words[level.augmented.partition.members[c][0]])));
    } else {
      DeletionB d = deletion_B(k);
      level.proj = std::move(d.proj);
      level.augmented = augmented_pre_reeb(level.proj, jobs);
      for (int c = 0; c < level.augmented.partition.num_classes(); ++c)
        nu.push_back(nu_B(class_b(d.domain_words[level.augmented.partition.members[c][0]])));
    }
    level.heights = kind == HeightsKind::nu ? std::move(nu) : minimal_heights(level.augmented);
    check_monotone(level.augmented, level.heights, true);
    if (check_order_embedding(level.proj.codomain, t.coords, jobs))
      fail(Errc::base_not_embedding, "previous level is not an order embedding");
    t.coords = append_heights(t.coords, level.proj, level.augmented.partition, level.heights);
    t.top = level.proj.domain;
    t.levels.push_back(std::move(level));
  }
  if (auto v = check_order_embedding(t.top, t.coords, jobs))
    throw std::logic_error("tower failed to embed: " + v->describe(t.top));
  if (auto v = check_cubic_realization(t.top, t.coords))
    throw std::logic_error("tower failed to be cubic: " + v->describe(t.top));
  return t;
}

DimensionCertificate dimension_certificate(const TowerRealization& t) {
  const int levels = static_cast<int>(t.levels.size());
  std::vector<std::vector<int>> bottoms(levels), tops(levels);
  for (int k = 0; k < levels; ++k) {
    bottoms[k] = bottom_section(t.levels[k].proj);
    tops[k] = top_section(t.levels[k].proj);
  }

  DimensionCertificate cert;
  const unsigned total = 1u << levels;
  for (unsigned mask = 0; mask < total; ++mask) {
    int e = 0;  // the unique element of the base point
    for (int k = 0; k < levels; ++k) e = (mask >> k & 1u) ? tops[k][e] : bottoms[k][e];
    cert.corners.push_back(e);
    cert.corner_vecs.push_back(t.coords.vecs[e]);
  }

  std::set<int> distinct(cert.corners.begin(), cert.corners.end());
  if (distinct.size() != total) fail(Errc::not_a_box, "section composites collide");

  cert.lo.resize(levels);
  cert.hi.resize(levels);
  for (int i = 0; i < levels; ++i) {
    std::set<std::int64_t> values;
    for (const auto& v : cert.corner_vecs) values.insert(v[i]);
    if (values.size() != 2)
      fail(Errc::not_a_box, "coordinate " + std::to_string(i + 1) + " takes " +
                                std::to_string(values.size()) + " values on the corners");
    cert.lo[i] = *values.begin();
    cert.hi[i] = *values.rbegin();
  }
  std::set<CoordVec> distinct_vecs(cert.corner_vecs.begin(), cert.corner_vecs.end());
  if (distinct_vecs.size() != total)
    fail(Errc::not_a_box, "corner vectors do not exhaust the box corners");

  if (!find_subposet_isomorphic(t.top, boolean_lattice(levels), cert.corners))
    fail(Errc::not_boolean, "section composites do not induce a Boolean lattice");
  return cert;
}

CoordinateMap lehmer_coords(const WeakOrderA& wo) {
  const int n = wo.rank;
  CoordinateMap c;
  c.dim = n - 1;
  c.vecs.reserve(wo.words.size());
  for (const Word& w : wo.words) {
    std::vector<int> position(n + 1, 0);
    for (int p = 0; p < n; ++p) position[w.letters[p]] = p;
    CoordVec vec(n - 1, 0);
    for (int k = 2; k <= n; ++k)
      for (int i = 1; i < k; ++i)
        if (position[i] > position[k]) ++vec[k - 2];
    c.vecs.push_back(std::move(vec));
  }
  return c;
}

}  // namespace reebcube
