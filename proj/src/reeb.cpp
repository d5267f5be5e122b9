#include "reebcube/reeb.hpp"

#include <algorithm>
#include <numeric>

#include "reebcube/errors.hpp"
#include "reebcube/parallel.hpp"

namespace reebcube {

CoverSplit classify_covers(const Projection& pr) {
  CoverSplit split;
  for (const auto& [x, y] : pr.domain.covers()) {
    int qx = pr.map[x], qy = pr.map[y];
    if (qx == qy) {
      split.vertical.push_back({x, y});
    } else if (pr.codomain.is_cover(qx, qy)) {
      split.horizontal.push_back({x, y});
    } else {
      fail(Errc::cover_condition_violated,
           "cover " + pr.domain.label(x) + "->" + pr.domain.label(y) +
               " projects to non-cover " + pr.codomain.label(qx) + "->" + pr.codomain.label(qy));
    }
  }
  return split;
}

namespace {

int uf_find(std::vector<int>& up, int x) {
  while (up[x] != x) x = up[x] = up[up[x]];
  return x;
}

}  // namespace

HorizontalPartition horizontal_classes(const Projection& pr) {
  const int n = pr.domain.size();
  std::vector<int> up(n);
  std::iota(up.begin(), up.end(), 0);
  for (const auto& [x, y] : classify_covers(pr).horizontal) {
    int rx = uf_find(up, x), ry = uf_find(up, y);
    if (rx != ry) up[std::max(rx, ry)] = std::min(rx, ry);
  }
  // Roots are the smallest members; number classes by root order.
  HorizontalPartition part;
  part.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = uf_find(up, x);
    if (part.class_of[r] == -1) {
      part.class_of[r] = part.num_classes();
      part.members.emplace_back();
    }
    part.class_of[x] = part.class_of[r];
    part.members[part.class_of[x]].push_back(x);
  }
  return part;
}

namespace {

ReebGraph vertical_skeleton(const Projection& pr) {
  ReebGraph rg;
  rg.partition = horizontal_classes(pr);
  std::vector<std::string> labels(rg.partition.num_classes());
  for (int c = 0; c < rg.partition.num_classes(); ++c) labels[c] = "c" + std::to_string(c);
  rg.graph = Digraph(std::move(labels));
  for (const auto& [x, y] : classify_covers(pr).vertical)
    rg.graph.add_edge(rg.partition.class_of[x], rg.partition.class_of[y], EdgeKind::vertical);
  return rg;
}

}  // namespace

ReebGraph pre_reeb(const Projection& pr) { return vertical_skeleton(pr); }

ReebGraph augmented_pre_reeb(const Projection& pr, int jobs) {
  ReebGraph rg = vertical_skeleton(pr);
  const int n = pr.domain.size();
  const auto& cls = rg.partition.class_of;

  // Ordered pair scan for pi-decreasing incomparable pairs, partitioned by
  // rows of the hi element.
  std::vector<std::vector<AuxWitness>> slots(std::max(jobs, 1));
  run_blocks(n, jobs, [&](int begin, int end, int worker) {
    auto& local = slots[worker];
    for (int hi = begin; hi < end; ++hi) {
      int qhi = pr.map[hi];
      for (int lo = 0; lo < n; ++lo) {
        int qlo = pr.map[lo];
        if (qlo == qhi || !pr.codomain.leq(qlo, qhi)) continue;
        if (!pr.domain.incomparable(hi, lo)) continue;
        local.push_back({cls[hi], cls[lo], hi, lo});
      }
    }
  });
  for (const auto& local : slots)
    for (const AuxWitness& w : local)
      if (!rg.graph.has_edge(w.from_class, w.to_class, EdgeKind::auxiliary)) {
        rg.graph.add_edge(w.from_class, w.to_class, EdgeKind::auxiliary);
        rg.aux_witnesses.push_back(w);
      }
  return rg;
}

Poset reeb_poset(const Projection& pr) { return reachability_poset(pre_reeb(pr).graph); }

Poset augmented_reeb_poset(const Projection& pr, int jobs) {
  return reachability_poset(augmented_pre_reeb(pr, jobs).graph);
}

}  // namespace reebcube
