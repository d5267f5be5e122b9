#include "reebcube/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "reebcube/errors.hpp"

namespace reebcube {

std::string word_str(const std::vector<int>& letters) {
  if (letters.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(letters[i]);
  }
  return s;
}

std::string word_label(const std::vector<int>& letters) {
  if (letters.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(letters[i]);
  }
  return s;
}

std::vector<int> parse_letters(const std::string& s) {
  if (s == "e") return {};
  std::string spaced = s;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<int> letters;
  int x;
  while (in >> x) letters.push_back(x);
  if (!in.eof()) fail(Errc::bad_format, "cannot parse word: " + s);
  return letters;
}

std::vector<Word> perms(int n) {
  if (n < 1) fail(Errc::rank_too_small, "perms needs n >= 1");
  if (n > kMaxRankA) fail(Errc::rank_too_large, "perms capped at rank 7");
  std::vector<int> letters(n);
  std::iota(letters.begin(), letters.end(), 1);
  std::vector<Word> out;
  do {
    out.push_back(Word{letters});
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

std::vector<SignedWord> signed_perms(int n) {
  if (n < 1) fail(Errc::rank_too_small, "signed_perms needs n >= 1");
  if (n > kMaxRankB) fail(Errc::rank_too_large, "signed_perms capped at rank 5");
  std::vector<int> letters(n);
  std::iota(letters.begin(), letters.end(), 1);
  std::vector<SignedWord> out;
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      SignedWord w{letters};
      for (int i = 0; i < n; ++i)
        if ((signs >> i) & 1u) w.letters[i] = -w.letters[i];
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(letters.begin(), letters.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> covers_A(const Word& w) {
  std::vector<Word> out;
  for (int p = 0; p + 1 < w.rank(); ++p)
    if (w.letters[p] < w.letters[p + 1]) {
      Word v = w;
      std::swap(v.letters[p], v.letters[p + 1]);
      out.push_back(std::move(v));
    }
  return out;
}

std::vector<SignedWord> covers_B(const SignedWord& w) {
  std::vector<SignedWord> out;
  for (int p = 0; p + 1 < w.rank(); ++p)
    if (w.letters[p] < w.letters[p + 1]) {
      SignedWord v = w;
      std::swap(v.letters[p], v.letters[p + 1]);
      out.push_back(std::move(v));
    }
  if (!w.letters.empty() && w.letters[0] > 0) {
    SignedWord v = w;
    v.letters[0] = -v.letters[0];
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

int pair_index(int j, int i) {  // 1 <= i < j
  return (j - 1) * (j - 2) / 2 + (i - 1);
}

int num_pairs(int n) { return n * (n - 1) / 2; }

}  // namespace

int inv_a_bit(int, int j, int i) { return pair_index(j, i); }
int inv_b_neg_bit(int, int i) { return i - 1; }
int inv_b_pair_neg_bit(int n, int j, int i) { return n + pair_index(j, i); }
int inv_b_pair_pos_bit(int n, int j, int i) { return n + num_pairs(n) + pair_index(j, i); }

InvSetA inv_A(const Word& w) {
  const int n = w.rank();
  InvSetA inv{n, 0};
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (w.letters[p] > w.letters[q])
        inv.bits |= std::uint64_t{1} << inv_a_bit(n, w.letters[p], w.letters[q]);
  return inv;
}

InvSetB inv_B(const SignedWord& w) {
  const int n = w.rank();
  // Position and sign of each absolute value.
  std::vector<int> pos(n + 1, -1), sgn(n + 1, 0);
  for (int p = 0; p < n; ++p) {
    int a = w.letters[p];
    pos[std::abs(a)] = p;
    sgn[std::abs(a)] = a > 0 ? 1 : -1;
  }
  InvSetB inv{n, 0};
  auto set = [&](int bit) { inv.bits |= std::uint64_t{1} << bit; };
  for (int i = 1; i <= n; ++i)
    if (sgn[i] < 0) set(inv_b_neg_bit(n, i));
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      // (j,-i): (+-j) before -i, or (+-i) before -j.
      if ((sgn[i] < 0 && pos[j] < pos[i]) || (sgn[j] < 0 && pos[i] < pos[j]))
        set(inv_b_pair_neg_bit(n, j, i));
      // (j,i): (+-j) before +i, or (+-i) before -j.
      if ((sgn[i] > 0 && pos[j] < pos[i]) || (sgn[j] < 0 && pos[i] < pos[j]))
        set(inv_b_pair_pos_bit(n, j, i));
    }
  return inv;
}

bool weak_leq_by_inversions(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) fail(Errc::type_mismatch, "words of different rank");
  InvSetA a = inv_A(u), b = inv_A(v);
  return (a.bits & ~b.bits) == 0;
}

bool weak_leq_by_inversions(const SignedWord& u, const SignedWord& v) {
  if (u.rank() != v.rank()) fail(Errc::type_mismatch, "signed words of different rank");
  InvSetB a = inv_B(u), b = inv_B(v);
  return (a.bits & ~b.bits) == 0;
}

int WeakOrderA::index_of(const Word& w) const {
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || *it != w) fail(Errc::unknown_element, "word not in this group");
  return static_cast<int>(it - words.begin());
}

int WeakOrderB::index_of(const SignedWord& w) const {
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || *it != w) fail(Errc::unknown_element, "signed word not in this group");
  return static_cast<int>(it - words.begin());
}

WeakOrderA weak_poset_A(int n) {
  WeakOrderA wo;
  wo.rank = n;
  wo.words = perms(n);
  std::vector<std::string> labels;
  labels.reserve(wo.words.size());
  for (const auto& w : wo.words) labels.push_back(word_label(w.letters));
  std::vector<Cover> covers;
  for (int x = 0; x < static_cast<int>(wo.words.size()); ++x)
    for (const auto& up : covers_A(wo.words[x])) covers.push_back({x, wo.index_of(up)});
  wo.poset = build_poset(std::move(labels), std::move(covers)).poset;
  return wo;
}

WeakOrderB weak_poset_B(int n) {
  if (n < 0) fail(Errc::rank_too_small, "weak_poset_B needs n >= 0");
  WeakOrderB wo;
  wo.rank = n;
  if (n == 0) {
    wo.words = {SignedWord{}};
    wo.poset = Poset::from_hasse({word_label({})}, {});
    return wo;
  }
  wo.words = signed_perms(n);
  std::vector<std::string> labels;
  labels.reserve(wo.words.size());
  for (const auto& w : wo.words) labels.push_back(word_label(w.letters));
  std::vector<Cover> covers;
  for (int x = 0; x < static_cast<int>(wo.words.size()); ++x)
    for (const auto& up : covers_B(wo.words[x])) covers.push_back({x, wo.index_of(up)});
  wo.poset = build_poset(std::move(labels), std::move(covers)).poset;
  return wo;
}

}  // namespace reebcube
