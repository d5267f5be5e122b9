#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reebcube/poset.hpp"

namespace reebcube {

// Permutation of {1..n}, written as the sequence of its letters.
struct Word {
  std::vector<int> letters;

  int rank() const { return static_cast<int>(letters.size()); }
  friend auto operator<=>(const Word&, const Word&) = default;
};

// Word on {±1..±n} using each absolute value exactly once. Letters compare in
// the signed order -n < ... < -1 < 1 < ... < n, which is plain int order.
struct SignedWord {
  std::vector<int> letters;

  int rank() const { return static_cast<int>(letters.size()); }
  friend auto operator<=>(const SignedWord&, const SignedWord&) = default;
};

// "-2 1 3" (word lists) and "-2,1,3" (poset labels, which cannot contain
// whitespace). The empty word renders as "e".
std::string word_str(const std::vector<int>& letters);
std::string word_label(const std::vector<int>& letters);
std::vector<int> parse_letters(const std::string& s);

inline constexpr int kMaxRankA = 7;
inline constexpr int kMaxRankB = 5;

// All n! words in lexicographic order. 1 <= n <= 7.
std::vector<Word> perms(int n);
// All 2^n n! signed words in lexicographic (signed) order. 1 <= n <= 5.
std::vector<SignedWord> signed_perms(int n);

// Upward covers: adjacent swaps a b -> b a with a < b; in type B also the
// first-letter sign flip when the first letter is positive.
std::vector<Word> covers_A(const Word& w);
std::vector<SignedWord> covers_B(const SignedWord& w);

// Inversion symbols (j,i) for 1 <= i < j <= n, as a bit table. Fits one word
// up to rank 7.
struct InvSetA {
  int rank = 0;
  std::uint64_t bits = 0;

  friend bool operator==(const InvSetA&, const InvSetA&) = default;
};

// Type-B symbols (-i) for i in [n] and (j,-i), (j,i) for 1 <= i < j <= n.
struct InvSetB {
  int rank = 0;
  std::uint64_t bits = 0;

  friend bool operator==(const InvSetB&, const InvSetB&) = default;
};

// Bit positions inside the tables.
int inv_a_bit(int n, int j, int i);          // (j,i)
int inv_b_neg_bit(int n, int i);             // (-i)
int inv_b_pair_neg_bit(int n, int j, int i); // (j,-i)
int inv_b_pair_pos_bit(int n, int j, int i); // (j,i)

InvSetA inv_A(const Word& w);
InvSetB inv_B(const SignedWord& w);

// Inv(u) contained in Inv(v); equivalent to u <= v in the weak order.
// Throws Errc::type_mismatch on different ranks.
bool weak_leq_by_inversions(const Word& u, const Word& v);
bool weak_leq_by_inversions(const SignedWord& u, const SignedWord& v);

// Weak order assembled from the covers above; element order matches the
// word enumeration order, labels are word_label strings.
struct WeakOrderA {
  int rank = 0;
  Poset poset;
  std::vector<Word> words;

  int index_of(const Word& w) const;
};

struct WeakOrderB {
  int rank = 0;
  Poset poset;
  std::vector<SignedWord> words;

  int index_of(const SignedWord& w) const;
};

WeakOrderA weak_poset_A(int n);  // 1 <= n <= 7
WeakOrderB weak_poset_B(int n);  // 0 <= n <= 5; rank 0 is the empty word

}  // namespace reebcube
