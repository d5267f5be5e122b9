#include "reebcube/words.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "helpers.hpp"

using namespace reebcube;
using testutil::error_code_of;

namespace {

Word w(const std::string& s) { return Word{parse_letters(s)}; }
SignedWord sw(const std::string& s) { return SignedWord{parse_letters(s)}; }

std::set<std::vector<int>> letter_set(const std::vector<SignedWord>& ws) {
  std::set<std::vector<int>> out;
  for (const auto& x : ws) out.insert(x.letters);
  return out;
}

}  // namespace

TEST_CASE("perms: counts, order, caps") {
  CHECK(perms(1) == std::vector<Word>{w("1")});
  CHECK(perms(3).size() == 6);
  CHECK(perms(5).size() == 120);
  CHECK(perms(3).front() == w("1 2 3"));
  CHECK(perms(3).back() == w("3 2 1"));
  auto p4 = perms(4);
  CHECK(std::is_sorted(p4.begin(), p4.end()));
  CHECK(error_code_of([] { perms(8); }) == Errc::rank_too_large);
}

TEST_CASE("signed_perms: counts and caps") {
  CHECK(letter_set(signed_perms(1)) == std::set<std::vector<int>>{{1}, {-1}});
  CHECK(signed_perms(2).size() == 8);
  CHECK(signed_perms(4).size() == 384);
  auto s3 = signed_perms(3);
  CHECK(std::is_sorted(s3.begin(), s3.end()));
  CHECK(error_code_of([] { signed_perms(6); }) == Errc::rank_too_large);
}

TEST_CASE("covers_A") {
  auto up = covers_A(w("1 2 3"));
  CHECK(std::set<Word>(up.begin(), up.end()) == std::set<Word>{w("2 1 3"), w("1 3 2")});
  CHECK(covers_A(w("3 2 1")).empty());
  CHECK(covers_A(w("2 1 4 3")) == std::vector<Word>{w("2 4 1 3")});
}

TEST_CASE("covers_B") {
  auto up = covers_B(sw("1 2"));
  CHECK(std::set<SignedWord>(up.begin(), up.end()) ==
        std::set<SignedWord>{sw("-1 2"), sw("2 1")});
  // (-1,-2) is the maximum of W_2; (-2,-1) still has the swap -2 < -1.
  CHECK(covers_B(sw("-1 -2")).empty());
  CHECK(covers_B(sw("-2 -1")) == std::vector<SignedWord>{sw("-1 -2")});
  CHECK(covers_B(sw("2 -1")) == std::vector<SignedWord>{sw("-2 -1")});
}

TEST_CASE("weak posets: sizes and shapes") {
  WeakOrderA a2 = weak_poset_A(2);
  CHECK(a2.poset.size() == 2);
  CHECK(a2.poset.covers() == std::vector<Cover>{{0, 1}});

  WeakOrderA a3 = weak_poset_A(3);
  CHECK(a3.poset.size() == 6);
  CHECK(a3.poset.covers().size() == 6);

  WeakOrderB b2 = weak_poset_B(2);
  CHECK(b2.poset.size() == 8);
  CHECK(b2.poset.covers().size() == 8);
  // The Hasse diagram of W_2 is an octagon: undirected degree 2 everywhere.
  std::vector<int> degree(8, 0);
  for (const auto& [x, y] : b2.poset.covers()) {
    ++degree[x];
    ++degree[y];
  }
  CHECK(std::count(degree.begin(), degree.end(), 2) == 8);
}

TEST_CASE("inv_A") {
  CHECK(inv_A(w("1 2 3")).bits == 0);
  InvSetA full = inv_A(w("3 2 1"));
  CHECK(full.bits == ((1u << inv_a_bit(3, 2, 1)) | (1u << inv_a_bit(3, 3, 1)) |
                      (1u << inv_a_bit(3, 3, 2))));
  InvSetA i312 = inv_A(w("3 1 2"));
  CHECK(i312.bits == ((1u << inv_a_bit(3, 3, 1)) | (1u << inv_a_bit(3, 3, 2))));
}

TEST_CASE("inv_B") {
  CHECK(inv_B(sw("1 2")).bits == 0);

  InvSetB x = inv_B(sw("-2 1"));
  std::uint64_t expected = (std::uint64_t{1} << inv_b_neg_bit(2, 2)) |
                           (std::uint64_t{1} << inv_b_pair_pos_bit(2, 2, 1));
  CHECK(x.bits == expected);

  // The maximum of W_2 carries every symbol.
  InvSetB top = inv_B(sw("-1 -2"));
  std::uint64_t all = (std::uint64_t{1} << inv_b_neg_bit(2, 1)) |
                      (std::uint64_t{1} << inv_b_neg_bit(2, 2)) |
                      (std::uint64_t{1} << inv_b_pair_neg_bit(2, 2, 1)) |
                      (std::uint64_t{1} << inv_b_pair_pos_bit(2, 2, 1));
  CHECK(top.bits == all);

  // Words of positive letters have no one-letter symbols.
  for (const SignedWord& v : signed_perms(3)) {
    if (std::any_of(v.letters.begin(), v.letters.end(), [](int a) { return a < 0; })) continue;
    for (int i = 1; i <= 3; ++i) {
      bool has = (inv_B(v).bits >> inv_b_neg_bit(3, i)) & 1;
      CHECK_FALSE(has);
    }
  }
}

TEST_CASE("weak_leq_by_inversions") {
  CHECK(weak_leq_by_inversions(w("1 2 3"), w("3 1 2")));
  CHECK_FALSE(weak_leq_by_inversions(w("2 1 3"), w("1 3 2")));
  CHECK(weak_leq_by_inversions(sw("1 2"), sw("-1 -2")));
  CHECK(error_code_of([] { weak_leq_by_inversions(w("1 2"), w("1 2 3")); }) ==
        Errc::type_mismatch);
}

TEST_CASE("inversion order oracle matches cover closure (small ranks)") {
  for (int n = 1; n <= 4; ++n) {
    WeakOrderA wo = weak_poset_A(n);
    for (int x = 0; x < wo.poset.size(); ++x)
      for (int y = 0; y < wo.poset.size(); ++y)
        REQUIRE(weak_leq_by_inversions(wo.words[x], wo.words[y]) == wo.poset.leq(x, y));
  }
  for (int n = 1; n <= 3; ++n) {
    WeakOrderB wo = weak_poset_B(n);
    for (int x = 0; x < wo.poset.size(); ++x)
      for (int y = 0; y < wo.poset.size(); ++y)
        REQUIRE(weak_leq_by_inversions(wo.words[x], wo.words[y]) == wo.poset.leq(x, y));
  }
}

TEST_CASE("inversion count grows by one along covers") {
  WeakOrderA a4 = weak_poset_A(4);
  for (const auto& [x, y] : a4.poset.covers()) {
    InvSetA ix = inv_A(a4.words[x]), iy = inv_A(a4.words[y]);
    CHECK(std::popcount(iy.bits) == std::popcount(ix.bits) + 1);
    CHECK((ix.bits & ~iy.bits) == 0);
  }
  WeakOrderB b3 = weak_poset_B(3);
  for (const auto& [x, y] : b3.poset.covers()) {
    InvSetB ix = inv_B(b3.words[x]), iy = inv_B(b3.words[y]);
    CHECK(std::popcount(iy.bits) == std::popcount(ix.bits) + 1);
    CHECK((ix.bits & ~iy.bits) == 0);
  }
}

TEST_CASE("identity empty, maximum full") {
  for (int n = 2; n <= 4; ++n) {
    WeakOrderA wo = weak_poset_A(n);
    CHECK(inv_A(wo.words.front()).bits == 0);
    int tops = 0;
    for (int x = 0; x < wo.poset.size(); ++x)
      if (wo.poset.up_covers(x).empty()) {
        ++tops;
        CHECK(std::popcount(inv_A(wo.words[x]).bits) == n * (n - 1) / 2);
      }
    CHECK(tops == 1);
  }
  for (int n = 1; n <= 3; ++n) {
    WeakOrderB wo = weak_poset_B(n);
    int tops = 0;
    for (int x = 0; x < wo.poset.size(); ++x)
      if (wo.poset.up_covers(x).empty()) {
        ++tops;
        CHECK(std::popcount(inv_B(wo.words[x]).bits) == n * n);
        SignedWord expect;
        for (int i = 1; i <= n; ++i) expect.letters.push_back(-i);
        CHECK(wo.words[x] == expect);
      }
    CHECK(tops == 1);
  }
}

TEST_CASE("word serialization") {
  CHECK(word_str({-2, 1, 3}) == "-2 1 3");
  CHECK(word_label({-2, 1, 3}) == "-2,1,3");
  CHECK(word_str({}) == "e");
  CHECK(parse_letters("e").empty());
  CHECK(parse_letters("-2,1,3") == std::vector<int>{-2, 1, 3});
  CHECK(parse_letters("-2 1 3") == std::vector<int>{-2, 1, 3});
}
