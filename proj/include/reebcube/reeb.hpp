#pragma once

#include <utility>
#include <vector>

#include "reebcube/digraph.hpp"
#include "reebcube/poset.hpp"
#include "reebcube/projection.hpp"

namespace reebcube {

// Covers of the domain split by what the projection does to them.
struct CoverSplit {
  std::vector<Cover> horizontal;  // projects to a codomain cover
  std::vector<Cover> vertical;    // collapsed to a point
};

// Throws Errc::cover_condition_violated (with the offending cover in the
// message) when some cover projects to a non-cover inequality.
CoverSplit classify_covers(const Projection& pr);

// Connected components of the undirected graph of horizontal covers.
// Class ids follow the smallest member element, making every output
// deterministic.
struct HorizontalPartition {
  std::vector<int> class_of;           // domain element -> class id
  std::vector<std::vector<int>> members;  // class id -> elements, ascending

  int num_classes() const { return static_cast<int>(members.size()); }
};

HorizontalPartition horizontal_classes(const Projection& pr);

// Witness pair for an auxiliary edge: hi, lo incomparable in the domain with
// map(lo) < map(hi) strictly.
struct AuxWitness {
  int from_class = -1, to_class = -1;
  int hi = -1, lo = -1;
};

// Directed graph on horizontal classes. Vertical edges come from vertical
// covers; auxiliary edges (augmented graph only) from the full ordered pair
// scan. Vertices are labeled c0, c1, ... by class id; callers that know a
// class parametrization relabel them.
struct ReebGraph {
  Digraph graph;
  HorizontalPartition partition;
  std::vector<AuxWitness> aux_witnesses;  // one per auxiliary edge, first found
};

ReebGraph pre_reeb(const Projection& pr);

// pre_reeb plus auxiliary edges [v'] -> [w'] for every ordered pair with
// pi(w') < pi(v') strictly and v', w' incomparable. Self-loops are kept if
// they arise. The scan is row-partitioned across `jobs` workers with
// deterministic output.
ReebGraph augmented_pre_reeb(const Projection& pr, int jobs = 1);

// Reachability posets of the graphs above; Errc::not_acyclic with a cycle
// witness when the graph has a directed cycle.
Poset reeb_poset(const Projection& pr);
Poset augmented_reeb_poset(const Projection& pr, int jobs = 1);

}  // namespace reebcube
