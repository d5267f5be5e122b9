#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "reebcube/digraph.hpp"
#include "reebcube/report.hpp"
#include "reebcube/words.hpp"

namespace reebcube {

// Horizontal class of the deletion W_n -> W_{n-1}: the sign eps of the letter
// +-n together with the set A of signed letters right of it. At most one of
// +i, -i belongs to A; the two masks store i at bit i-1.
struct ClassB {
  int rank = 0;        // the n of W_n
  bool neg = false;    // eps == '-'
  unsigned pos = 0;    // {i : +i in A}
  unsigned negm = 0;   // {i : -i in A}

  unsigned abs() const { return pos | negm; }           // |A|
  unsigned full() const { return (1u << (rank - 1)) - 1; }
  friend bool operator==(const ClassB&, const ClassB&) = default;
};

ClassB class_b(const SignedWord& w);

// "(+,{-1,+2})"; A listed by absolute value ascending.
std::string class_label_B(const ClassB& x);

// Binary string (n,n-1)...(n,1) (-n) (n,-1)...(n,-(n-1)), length 2n-1.
std::string bits_b(const ClassB& x);

// Integer value of bits_b with the positional weights; tops out at
// 2^(2n-1) - 1 on (-, {}).
std::int64_t nu_B(const ClassB& x);

// The four-case successor map; undefined exactly at (-, {}).
ClassB successor_B(const ClassB& x);

// All 2 * 3^(n-1) classes, eps = '+' block first. 1 <= n <= 5.
std::vector<ClassB> enumerate_classes(int n);

// The n-inversion symbols of the class, most significant bit first, e.g.
// {"(3,2)", "(-3)", "(3,-2)"}.
std::vector<std::string> n_inversion_symbols(const ClassB& x);

// Orientation of the fan graph F_n (vertices L, R, 1..n-1; edges LR, Li, iR).
// Bit set = edge reversed relative to the base orientation L->R, L->i, i->R.
// Edge bit layout: 0 = LR, 2i-1 = Li, 2i = iR.
struct OrientationF {
  int rank = 0;
  unsigned reversed = 0;

  friend bool operator==(const OrientationF&, const OrientationF&) = default;
};

// No i may point from the head of LR back to its tail.
bool orientation_acyclic(const OrientationF& o);

// "<>..." over the edges in bit order; '>' = as the base orientation.
std::string orientation_label(const OrientationF& o);

// Directed flip graph on acyclic orientations: one edge per single reversal
// of a base-directed edge. Vertices in increasing bitmask order. 2 <= n <= 5.
Digraph gamma_f(int n);
std::vector<OrientationF> acyclic_orientations(int n);

OrientationF phi(const ClassB& x);
ClassB phi_inverse(const OrientationF& o);

// Phi is a directed-graph isomorphism from the pre-Reeb graph of
// deletion_B(n) onto gamma_f(n). 2 <= n <= 4.
CheckReport verify_gamma_iso(int n);

// Augmented pre-Reeb graph of deletion_B(n): acyclic, nu-increasing, the
// successor chain visits all classes once from (+,{}) to (-,{}), successor
// edges are present, and reachability is the nu-total order. 2 <= n <= 4.
CheckReport verify_total_order_B(int n, int jobs = 1);

// The proof's explicit representatives (u, w) for the auxiliary successor
// edge x -> s(x). Throws Errc::not_auxiliary_case when the edge already lies
// in the pre-Reeb graph.
std::pair<SignedWord, SignedWord> witness_generators_B(const ClassB& x);

// One table line of the rank-3 class listing, ordered by nu.
struct TableLineB {
  int index = 0;
  ClassB cls;
  std::int64_t nu = 0;
  std::int64_t minimal_height = 0;
};

std::vector<TableLineB> reeb_table_B(int n);
// `<index> <epsilon> <A> <inversion symbols> <nu> <minimal-height>`
std::string format_table_line(const TableLineB& line);

// Fits integer weights per n-inversion symbol to the rank-3 minimal heights
// from lines 1, 2, 4, 5, confirms lines 3, 6, 7, and exhibits the line-8
// mismatch (weighted sum 9, minimal height 8).
CheckReport counterexample_weighted_sum();

}  // namespace reebcube
