#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace reebcube {

enum class EdgeKind { plain, vertical, auxiliary };

std::string to_string(EdgeKind k);
EdgeKind edge_kind_from_string(const std::string& s);

struct Edge {
  int src = 0;
  int dst = 0;
  EdgeKind kind = EdgeKind::plain;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Directed graph with labeled vertices and kind-tagged edges. Parallel edges
// of the same kind are deduplicated; the same (src, dst) pair may appear once
// per kind. Self-loops are representable (and count as directed cycles).
class Digraph {
public:
  Digraph() = default;
  explicit Digraph(std::vector<std::string> labels) : labels_(std::move(labels)) {}

  int num_vertices() const { return static_cast<int>(labels_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_label(int v, std::string s) { labels_[v] = std::move(s); }

  int add_vertex(std::string label);
  // Ignores exact duplicates; endpoints must exist.
  void add_edge(int src, int dst, EdgeKind kind = EdgeKind::plain);

  bool has_edge(int src, int dst) const;  // any kind
  bool has_edge(int src, int dst, EdgeKind kind) const;

  // Sorted by (src, dst, kind).
  const std::vector<Edge>& edges() const { return edges_; }

  // Distinct successor vertices over all edge kinds, ascending.
  std::vector<std::vector<int>> adjacency() const;

private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;  // kept sorted
};

// nullopt when acyclic; otherwise the vertices of a directed cycle in order
// (a self-loop yields a single-vertex cycle).
std::optional<std::vector<int>> find_cycle(const Digraph& g);

inline bool is_acyclic(const Digraph& g) { return !find_cycle(g).has_value(); }

// 0 on sources, else 1 + max over in-neighbors: the pointwise-minimal
// nonnegative integer function strictly increasing along edges. Throws
// Errc::not_acyclic (with a cycle witness) on cyclic input.
std::vector<std::int64_t> longest_path_ranks(const Digraph& g);

}  // namespace reebcube
