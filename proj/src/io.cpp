#include "reebcube/io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "reebcube/errors.hpp"

namespace reebcube {

void write_poset(std::ostream& os, const Poset& p) {
  os << "p " << p.size() << ' ' << p.covers().size() << '\n';
  for (int x = 0; x < p.size(); ++x) os << "e " << x << ' ' << p.label(x) << '\n';
  for (const auto& [x, y] : p.covers()) os << "c " << x << ' ' << y << '\n';
}

namespace {

struct PosetLines {
  std::vector<std::string> labels;
  std::vector<Cover> covers;
};

// Reads exactly one poset block starting at the current line.
PosetLines read_poset_block(std::istream& is) {
  std::string tag;
  int n = 0, m = 0;
  if (!(is >> tag) || tag != "p" || !(is >> n >> m))
    fail(Errc::bad_format, "expected poset header line");
  PosetLines out;
  out.labels.resize(n);
  std::map<int, int> id_to_index;
  for (int k = 0; k < n; ++k) {
    int id;
    std::string label;
    if (!(is >> tag >> id >> label) || tag != "e") fail(Errc::bad_format, "expected element line");
    if (!id_to_index.emplace(id, k).second) fail(Errc::bad_format, "duplicate element id");
    out.labels[k] = label;
  }
  auto lookup = [&](int id) {
    auto it = id_to_index.find(id);
    if (it == id_to_index.end()) fail(Errc::unknown_element, "cover references unknown id");
    return it->second;
  };
  for (int k = 0; k < m; ++k) {
    int a, b;
    if (!(is >> tag >> a >> b) || tag != "c") fail(Errc::bad_format, "expected cover line");
    out.covers.push_back({lookup(a), lookup(b)});
  }
  return out;
}

}  // namespace

Poset read_poset(std::istream& is) {
  auto block = read_poset_block(is);
  return build_poset(std::move(block.labels), std::move(block.covers)).poset;
}

void write_coordinate_map(std::ostream& os, const Poset& p, const CoordinateMap& c) {
  if (c.size() != p.size()) fail(Errc::missing_element, "coordinate map size mismatch");
  for (int x = 0; x < p.size(); ++x) {
    os << p.label(x) << '\t';
    for (int i = 0; i < c.dim; ++i) {
      if (i) os << ',';
      os << c.vecs[x][i];
    }
    os << '\n';
  }
}

void write_projection(std::ostream& os, const Projection& pr) {
  write_poset(os, pr.domain);
  write_poset(os, pr.codomain);
  for (int x = 0; x < pr.domain.size(); ++x) os << "m " << x << ' ' << pr.map[x] << '\n';
}

Projection read_projection(std::istream& is) {
  auto dom = read_poset_block(is);
  auto cod = read_poset_block(is);
  std::vector<int> map(dom.labels.size(), -1);
  std::string tag;
  for (std::size_t k = 0; k < map.size(); ++k) {
    int a, b;
    if (!(is >> tag >> a >> b) || tag != "m") fail(Errc::bad_format, "expected mapping line");
    if (a < 0 || a >= static_cast<int>(map.size())) fail(Errc::unknown_element, "bad mapping id");
    map[a] = b;
  }
  return Projection(build_poset(std::move(dom.labels), std::move(dom.covers)).poset,
                    build_poset(std::move(cod.labels), std::move(cod.covers)).poset,
                    std::move(map));
}

void write_digraph(std::ostream& os, const Digraph& g) {
  for (int v = 0; v < g.num_vertices(); ++v) os << "v " << v << ' ' << g.label(v) << '\n';
  for (const Edge& e : g.edges())
    os << "g " << e.src << ' ' << e.dst << ' ' << to_string(e.kind) << '\n';
}

Digraph read_digraph(std::istream& is) {
  Digraph g;
  std::vector<Edge> edges;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      int id;
      std::string label;
      if (!(ls >> id >> label)) fail(Errc::bad_format, "bad vertex line");
      if (id != g.num_vertices()) fail(Errc::bad_format, "vertex ids must be 0,1,2,...");
      g.add_vertex(label);
    } else if (tag == "g") {
      int a, b;
      std::string kind;
      if (!(ls >> a >> b >> kind)) fail(Errc::bad_format, "bad edge line");
      edges.push_back({a, b, edge_kind_from_string(kind)});
    } else {
      fail(Errc::bad_format, "unexpected line: " + line);
    }
  }
  for (const Edge& e : edges) g.add_edge(e.src, e.dst, e.kind);
  return g;
}

void write_dot(std::ostream& os, const Digraph& g, const std::vector<std::vector<int>>& layers) {
  os << "digraph G {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (int v = 0; v < g.num_vertices(); ++v)
    os << "  n" << v << " [label=\"" << g.label(v) << "\"];\n";
  for (const auto& layer : layers) {
    os << "  { rank=same;";
    for (int v : layer) os << " n" << v << ';';
    os << " }\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  n" << e.src << " -> n" << e.dst;
    if (e.kind == EdgeKind::auxiliary) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::bad_format, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace reebcube
