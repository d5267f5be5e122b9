#include "reebcube/projection.hpp"

#include <algorithm>

#include "reebcube/errors.hpp"

namespace reebcube {

Projection::Projection(Poset dom, Poset cod, std::vector<int> m)
    : domain(std::move(dom)), codomain(std::move(cod)), map(std::move(m)) {
  if (static_cast<int>(map.size()) != domain.size())
    fail(Errc::size_mismatch, "projection map must cover the domain");
  std::vector<char> hit(codomain.size(), 0);
  for (int q : map) {
    if (q < 0 || q >= codomain.size()) fail(Errc::unknown_element, "projection image out of range");
    hit[q] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    fail(Errc::size_mismatch, "projection is not surjective");
}

DeletionA deletion_A(int n) {
  if (n < 2) fail(Errc::rank_too_small, "deletion_A needs n >= 2");
  DeletionA d;
  d.rank = n;
  WeakOrderA dom = weak_poset_A(n);
  WeakOrderA cod = weak_poset_A(n - 1);
  std::vector<int> map(dom.words.size());
  for (std::size_t x = 0; x < dom.words.size(); ++x) {
    Word image;
    for (int a : dom.words[x].letters)
      if (a != n) image.letters.push_back(a);
    map[x] = cod.index_of(image);
  }
  d.domain_words = std::move(dom.words);
  d.codomain_words = std::move(cod.words);
  d.proj = Projection(std::move(dom.poset), std::move(cod.poset), std::move(map));
  return d;
}

DeletionB deletion_B(int n) {
  if (n < 1) fail(Errc::rank_too_small, "deletion_B needs n >= 1");
  DeletionB d;
  d.rank = n;
  WeakOrderB dom = weak_poset_B(n);
  WeakOrderB cod = weak_poset_B(n - 1);
  std::vector<int> map(dom.words.size());
  for (std::size_t x = 0; x < dom.words.size(); ++x) {
    SignedWord image;
    for (int a : dom.words[x].letters)
      if (std::abs(a) != n) image.letters.push_back(a);
    map[x] = cod.index_of(image);
  }
  d.domain_words = std::move(dom.words);
  d.codomain_words = std::move(cod.words);
  d.proj = Projection(std::move(dom.poset), std::move(cod.poset), std::move(map));
  return d;
}

std::vector<int> fiber(const Projection& pr, int q) {
  if (q < 0 || q >= pr.codomain.size()) fail(Errc::unknown_element, "fiber base out of range");
  std::vector<int> elems;
  for (int x = 0; x < pr.domain.size(); ++x)
    if (pr.map[x] == q) elems.push_back(x);
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = a + 1; b < elems.size(); ++b)
      if (pr.domain.incomparable(elems[a], elems[b])) {
        Error err(Errc::fiber_not_chain, "fiber over " + pr.codomain.label(q) +
                                             " contains incomparable elements " +
                                             pr.domain.label(elems[a]) + ", " +
                                             pr.domain.label(elems[b]));
        throw err;
      }
  std::sort(elems.begin(), elems.end(),
            [&](int a, int b) { return a != b && pr.domain.leq(a, b); });
  return elems;
}

std::vector<int> bottom_section(const Projection& pr) {
  std::vector<int> b(pr.codomain.size());
  for (int q = 0; q < pr.codomain.size(); ++q) b[q] = fiber(pr, q).front();
  return b;
}

std::vector<int> top_section(const Projection& pr) {
  std::vector<int> t(pr.codomain.size());
  for (int q = 0; q < pr.codomain.size(); ++q) t[q] = fiber(pr, q).back();
  return t;
}

namespace {

// Section images must carry the codomain Hasse diagram and nothing more:
// s(q) -> s(q') is a domain cover exactly when q -> q' is a codomain cover.
bool section_is_induced_copy(const Projection& pr, const std::vector<int>& sec,
                             std::string& witness) {
  for (int q = 0; q < pr.codomain.size(); ++q)
    for (int r = 0; r < pr.codomain.size(); ++r) {
      if (q == r) continue;
      bool cod_cover = pr.codomain.is_cover(q, r);
      bool dom_cover = pr.domain.is_cover(sec[q], sec[r]);
      if (cod_cover != dom_cover) {
        witness = "codomain pair " + pr.codomain.label(q) + "->" + pr.codomain.label(r) +
                  (cod_cover ? " is a cover but its section image is not"
                             : " is not a cover yet its section image is");
        return false;
      }
    }
  return true;
}

}  // namespace

CylindricityReport validate_cylindrical(const Projection& pr) {
  CylindricityReport rep;

  rep.cover_condition = {"cover condition: domain covers map to equalities or codomain covers",
                         true, ""};
  for (const auto& [x, y] : pr.domain.covers()) {
    int qx = pr.map[x], qy = pr.map[y];
    if (qx == qy || pr.codomain.is_cover(qx, qy)) continue;
    rep.cover_condition.pass = false;
    rep.cover_condition.witness =
        "cover " + pr.domain.label(x) + "->" + pr.domain.label(y) + " maps to non-cover " +
        pr.codomain.label(qx) + "->" + pr.codomain.label(qy);
    break;
  }

  rep.fiber_condition = {"fiber condition: every fiber a chain with >= 2 elements", true, ""};
  std::string size_witness;
  for (int q = 0; q < pr.codomain.size(); ++q) {
    try {
      auto f = fiber(pr, q);
      if (f.size() < 2 && size_witness.empty())
        size_witness = "fiber over " + pr.codomain.label(q) + " has " +
                       std::to_string(f.size()) + " element(s)";
    } catch (const Error& e) {
      // A non-chain fiber outranks a too-small one as the reported witness.
      rep.fiber_condition.pass = false;
      if (rep.fiber_condition.witness.empty()) rep.fiber_condition.witness = e.what();
    }
  }
  if (!size_witness.empty()) {
    rep.fiber_condition.pass = false;
    if (rep.fiber_condition.witness.empty()) rep.fiber_condition.witness = size_witness;
  }

  rep.section_condition = {"section condition: b and t embed the codomain Hasse diagram",
                           true, ""};
  if (!rep.fiber_condition.pass) {
    rep.section_condition.pass = false;
    rep.section_condition.witness = "not checked: fiber condition failed";
  } else {
    std::string witness;
    auto b = bottom_section(pr);
    auto t = top_section(pr);
    if (!section_is_induced_copy(pr, b, witness)) {
      rep.section_condition.pass = false;
      rep.section_condition.witness = "bottom section: " + witness;
    } else if (!section_is_induced_copy(pr, t, witness)) {
      rep.section_condition.pass = false;
      rep.section_condition.witness = "top section: " + witness;
    }
  }
  return rep;
}

}  // namespace reebcube
