#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reebcube/coords.hpp"
#include "reebcube/projection.hpp"
#include "reebcube/reeb.hpp"

namespace reebcube {

// Height per horizontal class. Valid for cubic lifts when strictly increasing
// along the pre-Reeb edges, for order-embedding lifts along the augmented
// edges as well.
using HeightFunction = std::vector<std::int64_t>;

// Pointwise-minimal nonnegative heights: longest-path rank in the graph.
HeightFunction minimal_heights(const ReebGraph& rg);

// c_P(x) = c_Q(pi(x)) with h([x]) appended; verified cubic on the domain.
// Throws Errc::not_cylindrical, Errc::base_not_cubic, or
// Errc::height_not_monotone (carrying the violating edge).
CoordinateMap extend_cubic(const CoordinateMap& c_Q, const Projection& pr,
                           const HeightFunction& h);

// Same formula with h strictly increasing along the augmented graph; the
// result is verified to be an order embedding of the whole domain.
// Errc::base_not_embedding when c_Q is not one.
CoordinateMap extend_order_embedding(const CoordinateMap& c_Q, const Projection& pr,
                                     const HeightFunction& h, int jobs = 1);

struct Decomposition {
  CoordinateMap base;    // on the codomain
  HeightFunction heights;
};

// Inverse of extend_cubic: splits off the last coordinate, checking that the
// leading block is constant on fibers, the last coordinate constant on
// horizontal classes and strictly increasing along vertical edges.
// Errc::not_compatible otherwise.
Decomposition decompose(const CoordinateMap& c_P, const Projection& pr);

// True when h1 and h2 order every element pair the same way. Both must be
// strictly increasing along the augmented graph and its reachability poset
// must be a total order (Errc::not_total_order otherwise).
bool uniqueness_check(const Projection& pr, const HeightFunction& h1, const HeightFunction& h2,
                      int jobs = 1);

enum class HeightsKind { nu, minimal };

std::string to_string(HeightsKind k);

struct TowerLevel {
  Projection proj;      // P_k -> P_{k-1}
  ReebGraph augmented;  // of proj
  HeightFunction heights;
};

// Inductive order-embedding realization of the type-A or type-B deletion
// tower; level heights are the type's nu or the minimal heights.
struct TowerRealization {
  char type = 'A';
  int rank = 0;
  HeightsKind kind = HeightsKind::minimal;
  Poset top;
  std::vector<TowerLevel> levels;  // bottom level first
  CoordinateMap coords;            // on top; one coordinate per level
};

// type 'A': 1 <= n <= 7 (n - 1 levels); type 'B': 1 <= n <= 5 (n levels).
TowerRealization build_tower(char type, int n, HeightsKind kind, int jobs = 1);

// Composite bottom/top sections and their verification against an n-box and
// the Boolean lattice.
struct DimensionCertificate {
  std::vector<int> corners;          // element of top per subset mask
  std::vector<CoordVec> corner_vecs;
  CoordVec lo, hi;                   // the two values per coordinate
};

// Checks that the 2^levels section composites have box-corner coordinates
// and induce a subposet isomorphic to B_levels. Errc::not_a_box /
// Errc::not_boolean with witnesses.
DimensionCertificate dimension_certificate(const TowerRealization& t);

// Classical by-value inversion counts: coordinate k-1 of a word counts the
// letters below k standing right of k. A cubic realization of the weak order
// that is not an order embedding.
CoordinateMap lehmer_coords(const WeakOrderA& wo);

}  // namespace reebcube
