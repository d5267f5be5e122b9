#include "reebcube/digraph.hpp"

#include <algorithm>

#include "reebcube/errors.hpp"

namespace reebcube {

std::string to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::plain: return "plain";
    case EdgeKind::vertical: return "vertical";
    case EdgeKind::auxiliary: return "auxiliary";
  }
  return "?";
}

EdgeKind edge_kind_from_string(const std::string& s) {
  if (s == "plain") return EdgeKind::plain;
  if (s == "vertical") return EdgeKind::vertical;
  if (s == "auxiliary") return EdgeKind::auxiliary;
  fail(Errc::bad_format, "unknown edge kind: " + s);
}

int Digraph::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  return num_vertices() - 1;
}

void Digraph::add_edge(int src, int dst, EdgeKind kind) {
  if (src < 0 || src >= num_vertices() || dst < 0 || dst >= num_vertices())
    fail(Errc::unknown_element, "edge endpoint out of range");
  Edge e{src, dst, kind};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return;
  edges_.insert(it, e);
}

bool Digraph::has_edge(int src, int dst) const {
  Edge lo{src, dst, EdgeKind::plain};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), lo,
                             [](const Edge& a, const Edge& b) {
                               return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
                             });
  return it != edges_.end() && it->src == src && it->dst == dst;
}

bool Digraph::has_edge(int src, int dst, EdgeKind kind) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{src, dst, kind});
}

std::vector<std::vector<int>> Digraph::adjacency() const {
  std::vector<std::vector<int>> adj(num_vertices());
  for (const Edge& e : edges_)
    if (adj[e.src].empty() || adj[e.src].back() != e.dst) adj[e.src].push_back(e.dst);
  return adj;
}

std::vector<std::int64_t> longest_path_ranks(const Digraph& g) {
  if (auto cyc = find_cycle(g)) {
    Error err(Errc::not_acyclic, "graph has a directed cycle");
    err.cycle = *cyc;
    throw err;
  }
  const int n = g.num_vertices();
  auto adj = g.adjacency();
  std::vector<int> indeg(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) ++indeg[w];
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::vector<std::int64_t> rank(n, 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : adj[v]) {
      rank[w] = std::max(rank[w], rank[v] + 1);
      if (--indeg[w] == 0) queue.push_back(w);
    }
  }
  return rank;
}

std::optional<std::vector<int>> find_cycle(const Digraph& g) {
  const int n = g.num_vertices();
  auto adj = g.adjacency();
  // Iterative DFS; 0 = white, 1 = on stack, 2 = done.
  std::vector<int> color(n, 0), parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        int w = adj[v][next++];
        if (color[w] == 1) {
          // Walk parents from v back to w.
          std::vector<int> cyc{w};
          for (int u = v; u != w; u = parent[u]) cyc.push_back(u);
          std::reverse(cyc.begin() + 1, cyc.end());
          return cyc;
        }
        if (color[w] == 0) {
          color[w] = 1;
          parent[w] = v;
          stack.emplace_back(w, 0);
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

}  // namespace reebcube
