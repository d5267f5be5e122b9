#include "reebcube/type_a.hpp"

#include <doctest.h>

#include <set>

#include "reebcube/reeb.hpp"
#include "helpers.hpp"

using namespace reebcube;
using testutil::error_code_of;

namespace {

Word w(const std::string& s) { return Word{parse_letters(s)}; }

}  // namespace

TEST_CASE("class_subset") {
  CHECK(class_subset(w("1 2 3 4")).mask == 0b000);
  CHECK(class_subset(w("4 1 2 3")).mask == 0b111);
  CHECK(class_subset(w("1 4 2 3")).mask == 0b110);  // {2,3}
}

TEST_CASE("nu_A and successor_A") {
  CHECK(nu_A({4, 0b000}) == 0);
  CHECK(nu_A({3, 0b011}) == 3);
  CHECK(nu_A({3, 0b010}) == 2);

  CHECK(successor_A({3, 0b000}).mask == 0b001);
  CHECK(successor_A({3, 0b001}).mask == 0b010);
  CHECK(successor_A({4, 0b011}).mask == 0b100);  // {1,2} -> {3}
  CHECK(error_code_of([] { successor_A({3, 0b011}); }) == Errc::successor_undefined);

  // nu(s(A)) = nu(A) + 1 everywhere s is defined.
  for (int n = 2; n <= 6; ++n)
    for (unsigned mask = 0; mask + 1 < (1u << (n - 1)); ++mask)
      CHECK(nu_A(successor_A({n, mask})) == nu_A({n, mask}) + 1);
}

TEST_CASE("witness_pair_A") {
  // A = {1} in S_3: the proof's pair is v = 231, w = 132.
  auto [v, ww] = witness_pair_A({3, 0b001});
  CHECK(v == w("2 3 1"));
  CHECK(ww == w("1 3 2"));

  CHECK(error_code_of([] { witness_pair_A({3, 0b010}); }) == Errc::not_auxiliary_case);

  // Across ranks: right classes, incomparable, strictly decreasing images.
  for (int n = 3; n <= 5; ++n)
    for (unsigned mask = 1; mask + 1 < (1u << (n - 1)); mask += 2) {  // 1 in A
      SubsetClass a{n, mask};
      auto [u, t] = witness_pair_A(a);
      CHECK(class_subset(u) == a);
      CHECK(class_subset(t) == successor_A(a));
      InvSetA iu = inv_A(u), it = inv_A(t);
      CHECK(((iu.bits & ~it.bits) != 0 && (it.bits & ~iu.bits) != 0));
      Word pu = u, pt = t;
      std::erase(pu.letters, n);
      std::erase(pt.letters, n);
      InvSetA ipu = inv_A(pu), ipt = inv_A(pt);
      CHECK((ipt.bits & ~ipu.bits) == 0);
      CHECK(ipt.bits != ipu.bits);
    }
}

TEST_CASE("verify_boolean_iso") {
  for (int n = 2; n <= 5; ++n) {
    CheckReport rep = verify_boolean_iso(n);
    CHECK(rep.all_pass());
  }
  ReebGraph r2 = pre_reeb(deletion_A(2).proj);
  CHECK(r2.graph.num_vertices() == 2);
  CHECK(r2.graph.num_edges() == 1);
  ReebGraph r5 = pre_reeb(deletion_A(5).proj);
  CHECK(r5.graph.num_vertices() == 16);
  CHECK(r5.graph.num_edges() == 32);
}

TEST_CASE("verify_total_order_A") {
  for (int n = 2; n <= 4; ++n) CHECK(verify_total_order_A(n).all_pass());
  CHECK(error_code_of([] { verify_total_order_A(1); }) == Errc::rank_too_small);
}

TEST_CASE("class_subset is constant on classes and separates them") {
  for (int n = 2; n <= 4; ++n) {
    DeletionA d = deletion_A(n);
    HorizontalPartition part = horizontal_classes(d.proj);
    std::set<unsigned> seen;
    for (int c = 0; c < part.num_classes(); ++c) {
      unsigned mask = class_subset(d.domain_words[part.members[c][0]]).mask;
      for (int x : part.members[c]) REQUIRE(class_subset(d.domain_words[x]).mask == mask);
      CHECK(seen.insert(mask).second);
    }
  }
}

TEST_CASE("minimal heights coincide with nu in type A") {
  for (int n = 2; n <= 4; ++n) {
    DeletionA d = deletion_A(n);
    ReebGraph rg = augmented_pre_reeb(d.proj);
    auto min = longest_path_ranks(rg.graph);
    for (int c = 0; c < rg.partition.num_classes(); ++c)
      CHECK(min[c] == nu_A(class_subset(d.domain_words[rg.partition.members[c][0]])));
  }
}
