#include "reebcube/poset.hpp"

#include <algorithm>

#include "reebcube/errors.hpp"

namespace reebcube {

namespace {

// reach[x] = {z : x ~> z} including x, for an acyclic adjacency structure.
std::vector<Bitset> closure_rows(int n, const std::vector<std::vector<int>>& adj) {
  // Kahn order, then sweep it backwards.
  std::vector<int> indeg(n, 0), order;
  order.reserve(n);
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) ++indeg[w];
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    order.push_back(v);
    for (int w : adj[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  std::vector<Bitset> reach(n, Bitset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    reach[v].set(v);
    for (int w : adj[v]) reach[v] |= reach[w];
  }
  return reach;
}

std::vector<std::vector<int>> adjacency_of(int n, const std::vector<Cover>& covers,
                                           bool reversed) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [x, y] : covers)
    reversed ? adj[y].push_back(x) : adj[x].push_back(y);
  return adj;
}

void check_range(const Poset& p, int x) {
  if (x < 0 || x >= p.size()) fail(Errc::unknown_element, "element index out of range");
}

}  // namespace

std::optional<int> Poset::index_of_label(const std::string& s) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == s) return i;
  return std::nullopt;
}

bool Poset::leq(int x, int y) const {
  check_range(*this, x);
  check_range(*this, y);
  return reach_[x].test(y);
}

bool Poset::is_cover(int x, int y) const {
  return std::binary_search(covers_.begin(), covers_.end(), Cover{x, y});
}

Poset Poset::from_hasse(std::vector<std::string> labels, std::vector<Cover> covers) {
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  Poset p;
  p.labels_ = std::move(labels);
  p.covers_ = std::move(covers);
  const int n = p.size();
  p.up_ = adjacency_of(n, p.covers_, false);
  p.down_ = adjacency_of(n, p.covers_, true);
  p.reach_ = closure_rows(n, p.up_);
  p.reach_inv_ = closure_rows(n, p.down_);
  return p;
}

PosetBuild build_poset(std::vector<std::string> labels, std::vector<Cover> covers) {
  const int n = static_cast<int>(labels.size());
  for (const auto& [x, y] : covers)
    if (x < 0 || x >= n || y < 0 || y >= n)
      fail(Errc::unknown_element, "cover references undeclared element");

  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());

  Digraph g(labels);
  for (const auto& [x, y] : covers) g.add_edge(x, y);
  if (auto cyc = find_cycle(g)) {
    Error err(Errc::cycle_detected, "relation contains a directed cycle");
    err.cycle = *cyc;
    throw err;
  }

  auto reach = closure_rows(n, adjacency_of(n, covers, false));
  auto reach_inv = closure_rows(n, adjacency_of(n, covers, true));

  // (x, y) is a genuine cover iff the closed interval [x, y] is just {x, y}.
  std::vector<Cover> kept, removed;
  for (const auto& e : covers) {
    Bitset interval = reach[e.first];
    interval &= reach_inv[e.second];
    (interval.count() == 2 ? kept : removed).push_back(e);
  }
  return {Poset::from_hasse(std::move(labels), std::move(kept)), std::move(removed)};
}

bool is_total_order(const Poset& p) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y)
      if (p.incomparable(x, y)) return false;
  return true;
}

std::string subset_label(unsigned mask) {
  std::string s = "{";
  for (int i = 0; mask >> i; ++i) {
    if (!((mask >> i) & 1u)) continue;
    if (s.size() > 1) s += ',';
    s += std::to_string(i + 1);
  }
  return s + "}";
}

Poset boolean_lattice(int n) {
  if (n < 0) fail(Errc::rank_too_small, "boolean_lattice needs n >= 0");
  const unsigned total = 1u << n;
  std::vector<std::string> labels(total);
  std::vector<Cover> covers;
  for (unsigned m = 0; m < total; ++m) {
    labels[m] = subset_label(m);
    for (int i = 0; i < n; ++i)
      if (!((m >> i) & 1u)) covers.push_back({static_cast<int>(m), static_cast<int>(m | (1u << i))});
  }
  return Poset::from_hasse(std::move(labels), std::move(covers));
}

std::optional<std::vector<std::pair<int, int>>> find_subposet_isomorphic(
    const Poset& p, const Poset& q, const std::vector<int>& candidates) {
  if (static_cast<int>(candidates.size()) != q.size())
    fail(Errc::size_mismatch, "candidate list size differs from |q|");
  for (int c : candidates)
    if (c < 0 || c >= p.size()) fail(Errc::unknown_element, "candidate out of range");
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      if (q.leq(i, j) != p.leq(candidates[i], candidates[j])) return std::nullopt;
  std::vector<std::pair<int, int>> mapping;
  mapping.reserve(q.size());
  for (int i = 0; i < q.size(); ++i) mapping.emplace_back(i, candidates[i]);
  return mapping;
}

Digraph hasse_digraph(const Poset& p) {
  Digraph g(p.labels());
  for (const auto& [x, y] : p.covers()) g.add_edge(x, y);
  return g;
}

Poset reachability_poset(const Digraph& g) {
  if (auto cyc = find_cycle(g)) {
    Error err(Errc::not_acyclic, "graph has a directed cycle");
    err.cycle = *cyc;
    throw err;
  }
  const int n = g.num_vertices();
  auto adj = g.adjacency();
  std::vector<std::vector<int>> radj(n);
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) radj[w].push_back(v);
  auto reach = closure_rows(n, adj);
  auto reach_inv = closure_rows(n, radj);

  std::vector<Cover> covers;
  for (int x = 0; x < n; ++x) {
    reach[x].for_each([&](int y) {
      if (y == x) return;
      Bitset interval = reach[x];
      interval &= reach_inv[y];
      if (interval.count() == 2) covers.push_back({x, y});
    });
  }
  return Poset::from_hasse(g.labels(), std::move(covers));
}

}  // namespace reebcube
