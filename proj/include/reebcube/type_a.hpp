#pragma once

#include <cstdint>
#include <utility>

#include "reebcube/report.hpp"
#include "reebcube/words.hpp"

namespace reebcube {

// Horizontal class of the deletion S_n -> S_{n-1}: the set of letters lying
// right of n, as a bitmask over [n-1] with i stored at bit i-1. The binary
// valuation of the class is literally the mask value.
struct SubsetClass {
  int rank = 0;      // the n of S_n
  unsigned mask = 0; // subset of [n-1]

  unsigned full() const { return (1u << (rank - 1)) - 1; }
  friend bool operator==(const SubsetClass&, const SubsetClass&) = default;
};

SubsetClass class_subset(const Word& w);

std::int64_t nu_A(const SubsetClass& a);

// With m = min([n-1] \ A): (A \ [m-1]) u {m}. Increases nu by exactly 1.
// Throws Errc::successor_undefined when A = [n-1].
SubsetClass successor_A(const SubsetClass& a);

// Explicit representative pair (v, w) realizing the auxiliary successor edge
// A -> s(A) when 1 in A: v = dec([n-1]\A) n dec(A), w = dec-free increasing
// analogue for s(A). Throws Errc::not_auxiliary_case when 1 is not in A.
std::pair<Word, Word> witness_pair_A(const SubsetClass& a);

// Pre-Reeb graph of deletion_A(n) is vertex- and edge-identical to the Hasse
// diagram of the Boolean lattice of [n-1] under class_subset. 2 <= n <= 6.
CheckReport verify_boolean_iso(int n);

// Augmented pre-Reeb graph of deletion_A(n): acyclic, every edge increases
// nu_A, all successor edges present with the vertical/auxiliary split at
// 1 in A, and the reachability poset is the nu-chain. 2 <= n <= 5.
CheckReport verify_total_order_A(int n, int jobs = 1);

}  // namespace reebcube
