#include "reebcube/poset.hpp"

#include <doctest.h>

#include <sstream>

#include "reebcube/coords.hpp"
#include "reebcube/io.hpp"
#include "reebcube/words.hpp"
#include "helpers.hpp"

using namespace reebcube;
using testutil::error_code_of;
using testutil::leq_by_bfs;

TEST_CASE("build_poset: singleton and transitive reduction") {
  auto single = build_poset({"a"}, {});
  CHECK(single.poset.size() == 1);
  CHECK(single.poset.covers().empty());
  CHECK(single.removed.empty());

  // 3-chain given with its closure: a->c must be reported transitive.
  auto chain = build_poset({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(chain.poset.covers() == std::vector<Cover>{{0, 1}, {1, 2}});
  CHECK(chain.removed == std::vector<Cover>{{0, 2}});
}

TEST_CASE("build_poset: S_3 adjacent-swap covers enumerated by brute force") {
  // All six words and every adjacent ascent, spelled out independently of the
  // words module.
  std::vector<std::string> words{"123", "132", "213", "231", "312", "321"};
  auto index_of = [&](const std::string& w) {
    return static_cast<int>(std::find(words.begin(), words.end(), w) - words.begin());
  };
  std::vector<Cover> covers;
  for (const std::string& w : words)
    for (int p = 0; p + 1 < 3; ++p)
      if (w[p] < w[p + 1]) {
        std::string v = w;
        std::swap(v[p], v[p + 1]);
        covers.push_back({index_of(w), index_of(v)});
      }
  auto built = build_poset(words, covers);
  CHECK(built.poset.size() == 6);
  CHECK(built.poset.covers().size() == 6);  // the weak order of S_3 is a hexagon
  CHECK(built.removed.empty());

  CHECK(built.poset.leq(index_of("123"), index_of("321")));
  CHECK(built.poset.incomparable(index_of("213"), index_of("132")));
}

TEST_CASE("build_poset: errors") {
  CHECK(error_code_of([] { build_poset({"a"}, {{0, 1}}); }) == Errc::unknown_element);
  try {
    build_poset({"a", "b"}, {{0, 1}, {1, 0}});
    FAIL("expected cycle");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cycle_detected);
    CHECK(e.cycle.size() == 2);
  }
}

TEST_CASE("leq: reflexive, transitive, and an S_3 pair") {
  auto chain = build_poset({"a", "b", "c"}, {{0, 1}, {1, 2}}).poset;
  CHECK(chain.leq(0, 2));
  for (int x = 0; x < chain.size(); ++x) CHECK(chain.leq(x, x));
  CHECK(error_code_of([&] { chain.leq(0, 7); }) == Errc::unknown_element);
}

TEST_CASE("find_cycle") {
  Digraph g(std::vector<std::string>{"u", "v", "w"});
  CHECK(is_acyclic(g));

  g.add_edge(0, 1);
  g.add_edge(1, 0);
  auto cyc = find_cycle(g);
  REQUIRE(cyc.has_value());
  CHECK(cyc->size() == 2);

  Digraph loop(std::vector<std::string>{"x"});
  loop.add_edge(0, 0);
  auto self = find_cycle(loop);
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<int>{0});
}

TEST_CASE("reachability_poset") {
  Digraph g(std::vector<std::string>{"u", "v", "w"});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  Poset p = reachability_poset(g);
  CHECK(p.covers() == std::vector<Cover>{{0, 1}, {1, 2}});

  // Idempotent on Hasse diagrams.
  Poset b2 = boolean_lattice(2);
  CHECK(reachability_poset(hasse_digraph(b2)) == b2);

  Digraph cyc(std::vector<std::string>{"u", "v"});
  cyc.add_edge(0, 1);
  cyc.add_edge(1, 0);
  CHECK(error_code_of([&] { reachability_poset(cyc); }) == Errc::not_acyclic);
}

TEST_CASE("is_total_order") {
  auto chain4 = build_poset({"0", "1", "2", "3"}, {{0, 1}, {1, 2}, {2, 3}}).poset;
  CHECK(is_total_order(chain4));
  CHECK_FALSE(is_total_order(boolean_lattice(2)));
}

TEST_CASE("boolean_lattice sizes") {
  CHECK(boolean_lattice(0).size() == 1);
  Poset b2 = boolean_lattice(2);
  CHECK(b2.size() == 4);
  CHECK(b2.covers().size() == 4);
  Poset b3 = boolean_lattice(3);
  CHECK(b3.size() == 8);
  CHECK(b3.covers().size() == 12);  // n * 2^(n-1)
  CHECK(b3.label(5) == "{1,3}");
}

TEST_CASE("check_cubic_realization") {
  auto chain = build_poset({"a", "b"}, {{0, 1}}).poset;
  CoordinateMap good{1, {{0}, {1}}};
  CHECK_FALSE(check_cubic_realization(chain, good).has_value());

  CoordinateMap bad{2, {{0, 0}, {1, 1}}};
  auto v = check_cubic_realization(chain, bad);
  REQUIRE(v.has_value());
  CHECK(v->kind == CubicViolation::Kind::cover_changes_many);

  CoordinateMap dup{1, {{0}, {0}}};
  auto v2 = check_cubic_realization(chain, dup);
  REQUIRE(v2.has_value());
  // Injectivity failure is reported before the cover walk.
  CHECK(v2->kind == CubicViolation::Kind::not_injective);
}

TEST_CASE("check_order_embedding: chains and witnesses") {
  auto chain = build_poset({"a", "b", "c"}, {{0, 1}, {1, 2}}).poset;
  CoordinateMap heights{1, {{0}, {3}, {7}}};
  CHECK_FALSE(check_order_embedding(chain, heights).has_value());

  // Two incomparable elements with comparable vectors.
  Poset b2 = boolean_lattice(2);
  CoordinateMap squash{1, {{0}, {1}, {2}, {3}}};
  auto v = check_order_embedding(b2, squash);
  REQUIRE(v.has_value());
  CHECK(v->coords_hold);
  CHECK_FALSE(v->order_holds);
}

TEST_CASE("find_subposet_isomorphic") {
  auto chain = build_poset({"a", "b"}, {{0, 1}}).poset;
  CHECK(find_subposet_isomorphic(chain, boolean_lattice(1), {0, 1}).has_value());

  // A 4-chain inside any poset is not B_2.
  auto chain4 = build_poset({"0", "1", "2", "3"}, {{0, 1}, {1, 2}, {2, 3}}).poset;
  CHECK_FALSE(find_subposet_isomorphic(chain4, boolean_lattice(2), {0, 1, 2, 3}).has_value());

  CHECK(error_code_of([&] { find_subposet_isomorphic(chain4, boolean_lattice(2), {0, 1}); }) ==
        Errc::size_mismatch);
}

TEST_CASE("poset text format round trip") {
  Poset b3 = boolean_lattice(3);
  std::stringstream ss;
  write_poset(ss, b3);
  Poset back = read_poset(ss);
  CHECK(back == b3);
}

TEST_CASE("poset text format rejects malformed input") {
  auto read_from = [](const std::string& text) {
    std::istringstream in(text);
    return read_poset(in);
  };
  CHECK(error_code_of([&] { read_from("q 1 0\ne 0 a\n"); }) == Errc::bad_format);
  CHECK(error_code_of([&] { read_from("p 2 0\ne 0 a\ne 0 b\n"); }) == Errc::bad_format);
  CHECK(error_code_of([&] { read_from("p 2 1\ne 0 a\ne 1 b\nc 0 9\n"); }) ==
        Errc::unknown_element);
  // Ids need not be dense; covers follow the declared ids.
  Poset sparse = read_from("p 2 1\ne 5 lo\ne 9 hi\nc 5 9\n");
  CHECK(sparse.covers() == std::vector<Cover>{{0, 1}});
}

TEST_CASE("coordinate map text format") {
  auto chain = build_poset({"1,2", "2,1"}, {{0, 1}}).poset;
  CoordinateMap c{1, {{0}, {1}}};
  std::ostringstream out;
  write_coordinate_map(out, chain, c);
  CHECK(out.str() == "1,2\t0\n2,1\t1\n");

  CoordinateMap empty{0, {{}, {}}};
  std::ostringstream out0;
  write_coordinate_map(out0, chain, empty);
  CHECK(out0.str() == "1,2\t\n2,1\t\n");
}

TEST_CASE("partial order axioms and the BFS oracle") {
  for (const Poset& p : {boolean_lattice(3),
                         build_poset({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}).poset,
                         weak_poset_A(3).poset, weak_poset_B(2).poset}) {
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y) {
        CHECK(p.leq(x, y) == leq_by_bfs(p, x, y));
        if (x != y && p.leq(x, y)) CHECK_FALSE(p.leq(y, x));  // antisymmetry
        for (int z = 0; z < p.size(); ++z)
          if (p.leq(x, y) && p.leq(y, z)) CHECK(p.leq(x, z));  // transitivity
      }
    CHECK(reachability_poset(hasse_digraph(p)) == p);
  }
}
