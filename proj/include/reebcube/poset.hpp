#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reebcube/bitset.hpp"
#include "reebcube/digraph.hpp"

namespace reebcube {

using Cover = std::pair<int, int>;  // (x, y): x -> y is a cover

// Finite poset given by its Hasse diagram. Elements are indices 0..n-1 with
// display labels; reachability is precomputed as bitset rows both ways, making
// leq an O(1) lookup.
class Poset {
public:
  Poset() = default;

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of_label(const std::string& s) const;

  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<int>& up_covers(int x) const { return up_[x]; }
  const std::vector<int>& down_covers(int x) const { return down_[x]; }

  bool leq(int x, int y) const;
  bool incomparable(int x, int y) const { return !leq(x, y) && !leq(y, x); }
  bool is_cover(int x, int y) const;

  // {z : x <= z}, including x itself.
  const Bitset& up_set(int x) const { return reach_[x]; }
  // {z : z <= y}, including y itself.
  const Bitset& down_set(int y) const { return reach_inv_[y]; }

  bool operator==(const Poset& o) const {
    return labels_ == o.labels_ && covers_ == o.covers_;
  }

  // Trusts `covers` to be the acyclic, irredundant cover relation.
  static Poset from_hasse(std::vector<std::string> labels, std::vector<Cover> covers);

private:
  std::vector<std::string> labels_;
  std::vector<Cover> covers_;            // sorted
  std::vector<std::vector<int>> up_, down_;
  std::vector<Bitset> reach_, reach_inv_;
};

struct PosetBuild {
  Poset poset;
  std::vector<Cover> removed;  // input pairs dropped as transitively implied
};

// Accepts any acyclic relation; performs transitive reduction and reports the
// removed pairs. Throws Errc::cycle_detected (with a cycle witness) or
// Errc::unknown_element.
PosetBuild build_poset(std::vector<std::string> labels, std::vector<Cover> covers);

bool is_total_order(const Poset& p);

// "{1,3}" for mask 0b101, "{}" for the empty set (i stored at bit i-1).
std::string subset_label(unsigned mask);

// Subsets of [n] ordered by inclusion; element order is by bitmask value,
// covers add one element.
Poset boolean_lattice(int n);

// Checks that `candidates` (one element of p per element of q, in q's element
// order) induces in p exactly the order of q. Returns the (q index, p index)
// mapping, or nullopt if the induced order differs. Throws Errc::size_mismatch.
std::optional<std::vector<std::pair<int, int>>> find_subposet_isomorphic(
    const Poset& p, const Poset& q, const std::vector<int>& candidates);

Digraph hasse_digraph(const Poset& p);

// Poset of directed reachability in an acyclic graph; covers are the
// transitive reduction. Throws Errc::not_acyclic with a cycle witness.
Poset reachability_poset(const Digraph& g);

}  // namespace reebcube
