#pragma once

#include <string>
#include <vector>

#include "reebcube/poset.hpp"
#include "reebcube/report.hpp"
#include "reebcube/words.hpp"

namespace reebcube {

// Surjective poset map, stored elementwise. Arbitrary posets are allowed so
// that non-cylindrical inputs can be expressed and rejected by validation.
struct Projection {
  Poset domain;
  Poset codomain;
  std::vector<int> map;  // domain element -> codomain element

  Projection() = default;
  Projection(Poset dom, Poset cod, std::vector<int> m);
};

// Deletion projections with their word tables kept alongside, for the
// type-specific structure maps.
struct DeletionA {
  int rank = 0;  // S_rank -> S_{rank-1}
  Projection proj;
  std::vector<Word> domain_words, codomain_words;
};

struct DeletionB {
  int rank = 0;  // W_rank -> W_{rank-1}
  Projection proj;
  std::vector<SignedWord> domain_words, codomain_words;
};

DeletionA deletion_A(int n);  // 2 <= n <= 7, erases the letter n
DeletionB deletion_B(int n);  // 1 <= n <= 5, erases the letter +-n

// Fiber over q sorted bottom to top. Throws Errc::fiber_not_chain when two
// fiber elements are incomparable, Errc::unknown_element when q is out of
// range.
std::vector<int> fiber(const Projection& pr, int q);

// q -> min / max of its fiber; requires every fiber to be a chain.
std::vector<int> bottom_section(const Projection& pr);
std::vector<int> top_section(const Projection& pr);

struct CylindricityReport {
  CheckLine cover_condition;
  CheckLine fiber_condition;
  CheckLine section_condition;

  bool all_pass() const {
    return cover_condition.pass && fiber_condition.pass && section_condition.pass;
  }
  CheckReport as_report() const { return CheckReport{{cover_condition, fiber_condition, section_condition}}; }
};

// 1) every domain cover maps to equality or a codomain cover; 2) every fiber
// is a chain with at least 2 elements; 3) bottom/top sections identify the
// codomain Hasse diagram with induced subgraphs of the domain Hasse diagram.
CylindricityReport validate_cylindrical(const Projection& pr);

}  // namespace reebcube
