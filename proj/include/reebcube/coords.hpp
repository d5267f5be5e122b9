#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reebcube/poset.hpp"

namespace reebcube {

using CoordVec = std::vector<std::int64_t>;

// Integer coordinate vectors of a fixed length, one per poset element.
struct CoordinateMap {
  int dim = 0;
  std::vector<CoordVec> vecs;  // indexed like the poset's elements

  int size() const { return static_cast<int>(vecs.size()); }
};

bool vec_leq(const CoordVec& a, const CoordVec& b);

struct CubicViolation {
  enum class Kind { missing_element, wrong_dimension, not_injective, cover_changes_none,
                    cover_changes_many, cover_not_increasing };
  Kind kind;
  int x = -1, y = -1;  // witness pair or cover
  std::string describe(const Poset& p) const;
};

// nullopt iff c is injective and every cover changes exactly one coordinate,
// strictly increasing there.
std::optional<CubicViolation> check_cubic_realization(const Poset& p, const CoordinateMap& c);

struct EmbeddingViolation {
  int x = -1, y = -1;
  bool order_holds = false;   // x <= y in p
  bool coords_hold = false;   // c(x) <= c(y) componentwise
  std::string describe(const Poset& p) const;
};

// nullopt iff for all pairs, x <= y in p exactly when c(x) <= c(y)
// componentwise. The scan may be partitioned across `jobs` workers; the
// reported witness is the first in row-major pair order either way.
std::optional<EmbeddingViolation> check_order_embedding(const Poset& p, const CoordinateMap& c,
                                                        int jobs = 1);

}  // namespace reebcube
