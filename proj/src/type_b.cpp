#include "reebcube/type_b.hpp"

#include <algorithm>
#include <map>

#include "reebcube/errors.hpp"
#include "reebcube/poset.hpp"
#include "reebcube/reeb.hpp"

namespace reebcube {

ClassB class_b(const SignedWord& w) {
  const int n = w.rank();
  ClassB x;
  x.rank = n;
  bool right = false;
  for (int letter : w.letters) {
    if (std::abs(letter) == n) {
      x.neg = letter < 0;
      right = true;
    } else if (right) {
      (letter > 0 ? x.pos : x.negm) |= 1u << (std::abs(letter) - 1);
    }
  }
  return x;
}

std::string class_label_B(const ClassB& x) {
  std::string s = x.neg ? "(-,{" : "(+,{";
  bool first = true;
  for (int i = 1; i < x.rank; ++i) {
    bool p = x.pos >> (i - 1) & 1u, m = x.negm >> (i - 1) & 1u;
    if (!p && !m) continue;
    if (!first) s += ',';
    first = false;
    s += p ? "+" : "-";
    s += std::to_string(i);
  }
  return s + "})";
}

namespace {

bool bit_n_i(const ClassB& x, int i) {  // (n,i)
  return (x.pos >> (i - 1) & 1u) || (x.neg && !(x.abs() >> (i - 1) & 1u));
}

bool bit_n_neg_i(const ClassB& x, int i) {  // (n,-i)
  return (x.negm >> (i - 1) & 1u) || (x.neg && !(x.abs() >> (i - 1) & 1u));
}

}  // namespace

std::string bits_b(const ClassB& x) {
  const int n = x.rank;
  std::string s;
  for (int i = n - 1; i >= 1; --i) s += bit_n_i(x, i) ? '1' : '0';
  s += x.neg ? '1' : '0';
  for (int i = 1; i <= n - 1; ++i) s += bit_n_neg_i(x, i) ? '1' : '0';
  return s;
}

std::int64_t nu_B(const ClassB& x) {
  const int n = x.rank;
  std::int64_t v = 0;
  for (int i = 1; i <= n - 1; ++i) {
    if (bit_n_neg_i(x, i)) v += std::int64_t{1} << (n - 1 - i);
    if (bit_n_i(x, i)) v += std::int64_t{1} << (n - 1 + i);
  }
  if (x.neg) v += std::int64_t{1} << (n - 1);
  return v;
}

ClassB successor_B(const ClassB& x) {
  const unsigned full = x.full();
  ClassB s = x;
  if (!x.neg) {
    if (x.abs() == full) {  // A1: flip eps
      s.neg = true;
      return s;
    }
    // A2: m = max missing absolute value; drop -i above m, add -m.
    int m = 0;
    for (int i = x.rank - 1; i >= 1; --i)
      if (!(x.abs() >> (i - 1) & 1u)) {
        m = i;
        break;
      }
    const unsigned above_m = full & ~((2u << (m - 1)) - 1);
    s.negm = (x.negm & ~above_m) | (1u << (m - 1));
    return s;
  }
  if (x.pos != 0) {
    // B1: k = max with +k in A; trade +k for all +i with i > k missing from |A|.
    int k = 0;
    for (int i = x.rank - 1; i >= 1; --i)
      if (x.pos >> (i - 1) & 1u) {
        k = i;
        break;
      }
    const unsigned above_k = full & ~((2u << (k - 1)) - 1);
    s.pos = (x.pos & ~(1u << (k - 1))) | (above_k & ~x.abs());
    return s;
  }
  if (x.negm == 0) fail(Errc::successor_undefined, "(-,{}) has no successor");
  // B2: all of A negative; move to eps = + with +s0 plus the high complement.
  int s0 = 1;
  while (!(x.negm >> (s0 - 1) & 1u)) ++s0;
  const unsigned above_s0 = full & ~((2u << (s0 - 1)) - 1);
  s.neg = false;
  s.negm = 0;
  s.pos = (1u << (s0 - 1)) | (above_s0 & ~x.abs());
  return s;
}

std::vector<ClassB> enumerate_classes(int n) {
  if (n < 1) fail(Errc::rank_too_small, "enumerate_classes needs n >= 1");
  if (n > kMaxRankB) fail(Errc::rank_too_large, "enumerate_classes capped at rank 5");
  std::vector<ClassB> out;
  unsigned total = 1;
  for (int i = 1; i < n; ++i) total *= 3;
  for (int e = 0; e < 2; ++e)
    for (unsigned code = 0; code < total; ++code) {
      ClassB x;
      x.rank = n;
      x.neg = e == 1;
      unsigned c = code;
      for (int i = 1; i < n; ++i, c /= 3) {
        if (c % 3 == 1) x.pos |= 1u << (i - 1);
        if (c % 3 == 2) x.negm |= 1u << (i - 1);
      }
      out.push_back(x);
    }
  return out;
}

std::vector<std::string> n_inversion_symbols(const ClassB& x) {
  const int n = x.rank;
  std::vector<std::string> out;
  for (int i = n - 1; i >= 1; --i)
    if (bit_n_i(x, i)) out.push_back("(" + std::to_string(n) + "," + std::to_string(i) + ")");
  if (x.neg) out.push_back("(-" + std::to_string(n) + ")");
  for (int i = 1; i <= n - 1; ++i)
    if (bit_n_neg_i(x, i)) out.push_back("(" + std::to_string(n) + ",-" + std::to_string(i) + ")");
  return out;
}

bool orientation_acyclic(const OrientationF& o) {
  const bool lr_reversed = o.reversed & 1u;
  for (int i = 1; i < o.rank; ++i) {
    bool li_rev = o.reversed >> (2 * i - 1) & 1u;
    bool ir_rev = o.reversed >> (2 * i) & 1u;
    // Head -> i -> tail closes a 3-cycle with LR.
    if (!lr_reversed && li_rev && ir_rev) return false;
    if (lr_reversed && !li_rev && !ir_rev) return false;
  }
  return true;
}

std::string orientation_label(const OrientationF& o) {
  std::string s;
  for (int b = 0; b < 2 * o.rank - 1; ++b) s += (o.reversed >> b & 1u) ? '<' : '>';
  return s;
}

std::vector<OrientationF> acyclic_orientations(int n) {
  if (n < 2) fail(Errc::rank_too_small, "acyclic_orientations needs n >= 2");
  if (n > kMaxRankB) fail(Errc::rank_too_large, "acyclic_orientations capped at rank 5");
  std::vector<OrientationF> out;
  for (unsigned mask = 0; mask < (1u << (2 * n - 1)); ++mask) {
    OrientationF o{n, mask};
    if (orientation_acyclic(o)) out.push_back(o);
  }
  return out;
}

Digraph gamma_f(int n) {
  auto orients = acyclic_orientations(n);
  std::map<unsigned, int> vertex_of;
  std::vector<std::string> labels;
  for (const auto& o : orients) {
    vertex_of[o.reversed] = static_cast<int>(labels.size());
    labels.push_back(orientation_label(o));
  }
  Digraph g(std::move(labels));
  for (const auto& o : orients)
    for (int b = 0; b < 2 * n - 1; ++b) {
      if (o.reversed >> b & 1u) continue;  // only flips away from the base
      OrientationF flipped{n, o.reversed | (1u << b)};
      auto it = vertex_of.find(flipped.reversed);
      if (it != vertex_of.end()) g.add_edge(vertex_of[o.reversed], it->second);
    }
  return g;
}

OrientationF phi(const ClassB& x) {
  OrientationF o{x.rank, 0};
  if (x.neg) o.reversed |= 1u;
  for (int i = 1; i < x.rank; ++i) {
    bool in_pos = x.pos >> (i - 1) & 1u;
    bool in_neg = x.negm >> (i - 1) & 1u;
    if (in_pos) {
      o.reversed |= 1u << (2 * i);  // sink: L->i, R->i
    } else if (in_neg) {
      o.reversed |= 1u << (2 * i - 1);  // source: i->L, i->R
    } else if (x.neg) {
      o.reversed |= (1u << (2 * i - 1)) | (1u << (2 * i));  // through: R->i->L
    }
  }
  return o;
}

ClassB phi_inverse(const OrientationF& o) {
  ClassB x;
  x.rank = o.rank;
  x.neg = o.reversed & 1u;
  for (int i = 1; i < o.rank; ++i) {
    bool li_rev = o.reversed >> (2 * i - 1) & 1u;
    bool ir_rev = o.reversed >> (2 * i) & 1u;
    if (!li_rev && ir_rev) {
      x.pos |= 1u << (i - 1);
    } else if (li_rev && !ir_rev) {
      x.negm |= 1u << (i - 1);
    } else if (li_rev == x.neg) {
      // through vertex, consistent with the LR direction: i absent from A
    } else {
      fail(Errc::not_acyclic, "orientation has head -> " + std::to_string(i) + " -> tail");
    }
  }
  return x;
}

namespace {

// Classes of the pre-Reeb partition via any representative; verifies that the
// parametrization is constant on each class.
std::vector<ClassB> classes_of(const DeletionB& d, const HorizontalPartition& part,
                               bool* constant, std::string* witness) {
  std::vector<ClassB> out(part.num_classes());
  *constant = true;
  for (int c = 0; c < part.num_classes(); ++c) {
    out[c] = class_b(d.domain_words[part.members[c][0]]);
    for (int x : part.members[c])
      if (!(class_b(d.domain_words[x]) == out[c])) {
        *constant = false;
        *witness = "class " + std::to_string(c) + " mixes parameters";
      }
  }
  return out;
}

}  // namespace

CheckReport verify_gamma_iso(int n) {
  if (n < 2) fail(Errc::rank_too_small, "verify_gamma_iso needs n >= 2");
  if (n > 4) fail(Errc::rank_too_large, "verify_gamma_iso capped at n = 4");
  CheckReport rep;
  DeletionB d = deletion_B(n);
  ReebGraph rg = pre_reeb(d.proj);
  Digraph gamma = gamma_f(n);

  bool constant = true;
  std::string witness;
  auto cls = classes_of(d, rg.partition, &constant, &witness);
  rep.add("class parametrization constant on classes", constant, witness);

  int expected = 2;
  for (int i = 1; i < n; ++i) expected *= 3;
  rep.add("vertex counts equal 2*3^(n-1)",
          rg.partition.num_classes() == expected && gamma.num_vertices() == expected,
          std::to_string(rg.partition.num_classes()) + " classes, " +
              std::to_string(gamma.num_vertices()) + " orientations");

  // Phi as a vertex map onto gamma's vertex order.
  std::map<std::string, int> gamma_vertex;
  for (int v = 0; v < gamma.num_vertices(); ++v) gamma_vertex[gamma.label(v)] = v;
  std::vector<int> image(rg.partition.num_classes(), -1);
  std::vector<int> preimage(gamma.num_vertices(), -1);
  bool bijective = true;
  for (int c = 0; c < rg.partition.num_classes(); ++c) {
    auto it = gamma_vertex.find(orientation_label(phi(cls[c])));
    if (it == gamma_vertex.end() || preimage[it->second] != -1) {
      bijective = false;
      break;
    }
    image[c] = it->second;
    preimage[it->second] = c;
  }
  rep.add("Phi is a bijection onto the acyclic orientations", bijective);
  if (!bijective) return rep;

  bool forward = true, backward = true;
  std::string edge_witness;
  for (const Edge& e : rg.graph.edges())
    if (!gamma.has_edge(image[e.src], image[e.dst])) {
      forward = false;
      edge_witness = class_label_B(cls[e.src]) + "->" + class_label_B(cls[e.dst]);
      break;
    }
  for (const Edge& e : gamma.edges())
    if (!rg.graph.has_edge(preimage[e.src], preimage[e.dst], EdgeKind::vertical)) {
      backward = false;
      edge_witness = gamma.label(e.src) + "->" + gamma.label(e.dst);
      break;
    }
  rep.add("Phi maps pre-Reeb edges onto flip edges, both directions",
          forward && backward && rg.graph.num_edges() == gamma.num_edges(), edge_witness);
  return rep;
}

CheckReport verify_total_order_B(int n, int jobs) {
  if (n < 2) fail(Errc::rank_too_small, "verify_total_order_B needs n >= 2");
  if (n > 4) fail(Errc::rank_too_large, "verify_total_order_B capped at n = 4");
  CheckReport rep;
  DeletionB d = deletion_B(n);
  ReebGraph rg = augmented_pre_reeb(d.proj, jobs);
  const int classes = rg.partition.num_classes();

  bool constant = true;
  std::string cw;
  auto cls = classes_of(d, rg.partition, &constant, &cw);

  auto cyc = find_cycle(rg.graph);
  rep.add("augmented pre-Reeb graph is acyclic", !cyc.has_value());

  bool nu_up = true;
  std::string witness;
  for (const Edge& e : rg.graph.edges())
    if (nu_B(cls[e.src]) >= nu_B(cls[e.dst])) {
      nu_up = false;
      witness = class_label_B(cls[e.src]) + "->" + class_label_B(cls[e.dst]);
      break;
    }
  rep.add("every edge strictly increases nu", nu_up, witness);

  std::map<std::string, int> class_index;
  for (int c = 0; c < classes; ++c) class_index[class_label_B(cls[c])] = c;

  // Walk the successor chain from (+,{}).
  int expected = 2;
  for (int i = 1; i < n; ++i) expected *= 3;
  ClassB cur;
  cur.rank = n;
  std::vector<char> seen(classes, 0);
  bool chain_ok = constant, edges_ok = true, nu_steps = true;
  std::string chain_witness = cw;
  int visited = 0;
  while (chain_ok) {
    auto it = class_index.find(class_label_B(cur));
    if (it == class_index.end() || seen[it->second]) {
      chain_ok = false;
      chain_witness = "chain leaves the class set at " + class_label_B(cur);
      break;
    }
    seen[it->second] = 1;
    ++visited;
    if (cur.neg && cur.pos == 0 && cur.negm == 0) break;  // reached (-,{})
    ClassB nxt = successor_B(cur);
    if (nu_B(nxt) <= nu_B(cur)) nu_steps = false;
    if (!rg.graph.has_edge(it->second, class_index[class_label_B(nxt)])) {
      edges_ok = false;
      witness = class_label_B(cur) + "->" + class_label_B(nxt);
    }
    cur = nxt;
  }
  rep.add("successor chain visits all classes once, (+,{}) to (-,{})",
          chain_ok && visited == expected && classes == expected, chain_witness);
  rep.add("nu increases along every successor step", nu_steps);
  rep.add("all successor edges present in the augmented graph", edges_ok, witness);

  ClassB top;
  top.rank = n;
  top.neg = true;
  rep.add("nu at (-,{}) equals 2^(2n-1) - 1",
          nu_B(top) == (std::int64_t{1} << (2 * n - 1)) - 1);

  if (!cyc) {
    Poset reach = reachability_poset(rg.graph);
    bool total = is_total_order(reach);
    for (int c = 0; c < classes && total; ++c)
      for (int e = 0; e < classes && total; ++e)
        if (reach.leq(c, e) != (nu_B(cls[c]) <= nu_B(cls[e]))) total = false;
    rep.add("reachability poset is the nu-total order", total);
  } else {
    rep.add("reachability poset is the nu-total order", false, "graph cyclic");
  }
  return rep;
}

namespace {

void push_mask_letters(std::vector<int>& out, unsigned mask, bool negative, bool ascending) {
  std::vector<int> letters;
  for (int i = 1; mask >> (i - 1); ++i)
    if (mask >> (i - 1) & 1u) letters.push_back(negative ? -i : i);
  std::sort(letters.begin(), letters.end());
  if (!ascending) std::reverse(letters.begin(), letters.end());
  out.insert(out.end(), letters.begin(), letters.end());
}

}  // namespace

std::pair<SignedWord, SignedWord> witness_generators_B(const ClassB& x) {
  const int n = x.rank;
  const unsigned full = x.full();
  ClassB y = successor_B(x);  // throws at (-,{})
  SignedWord u, w;

  if (!x.neg) {
    if (x.abs() == full) fail(Errc::not_auxiliary_case, "case A1 is a pre-Reeb edge");
    int m = 0;
    for (int i = n - 1; i >= 1; --i)
      if (!(x.abs() >> (i - 1) & 1u)) {
        m = i;
        break;
      }
    const unsigned above_m = full & ~((2u << (m - 1)) - 1);
    const unsigned N = x.negm & above_m;
    if (N == 0) fail(Errc::not_auxiliary_case, "special case A2 is a pre-Reeb edge");
    const unsigned Q = x.negm & ~above_m;
    const unsigned C = full & ~x.abs() & ((1u << (m - 1)) - 1);
    // u = inc(C) (-m) (+n) inc(P) dec(-N) dec(-Q)
    push_mask_letters(u.letters, C, false, true);
    u.letters.push_back(-m);
    u.letters.push_back(n);
    push_mask_letters(u.letters, x.pos, false, true);
    push_mask_letters(u.letters, N, true, false);
    push_mask_letters(u.letters, Q, true, false);
    // w = inc(C) inc(N) (+n) (-m) inc(P) dec(-Q)
    push_mask_letters(w.letters, C, false, true);
    push_mask_letters(w.letters, N, false, true);
    w.letters.push_back(n);
    w.letters.push_back(-m);
    push_mask_letters(w.letters, x.pos, false, true);
    push_mask_letters(w.letters, Q, true, false);
  } else if (x.pos != 0) {
    int k = 0;
    for (int i = n - 1; i >= 1; --i)
      if (x.pos >> (i - 1) & 1u) {
        k = i;
        break;
      }
    const unsigned above_k = full & ~((2u << (k - 1)) - 1);
    const unsigned M = above_k & ~x.abs();
    if (M == 0) fail(Errc::not_auxiliary_case, "special case B1 is a pre-Reeb edge");
    const unsigned C = (full & ~x.abs()) & ((1u << (k - 1)) - 1);
    // alpha: the signed letters of A minus +k, ascending.
    std::vector<int> alpha;
    push_mask_letters(alpha, x.pos & ~(1u << (k - 1)), false, true);
    push_mask_letters(alpha, x.negm, true, true);
    std::sort(alpha.begin(), alpha.end());
    // u = inc(C) inc(M) (-n) (+k) alpha
    push_mask_letters(u.letters, C, false, true);
    push_mask_letters(u.letters, M, false, true);
    u.letters.push_back(-n);
    u.letters.push_back(k);
    u.letters.insert(u.letters.end(), alpha.begin(), alpha.end());
    // w = inc(C) (+k) (-n) inc(M) alpha
    push_mask_letters(w.letters, C, false, true);
    w.letters.push_back(k);
    w.letters.push_back(-n);
    push_mask_letters(w.letters, M, false, true);
    w.letters.insert(w.letters.end(), alpha.begin(), alpha.end());
  } else {
    if (x.negm == 0) fail(Errc::successor_undefined, "(-,{}) has no successor");
    int s0 = 1;
    while (!(x.negm >> (s0 - 1) & 1u)) ++s0;
    const unsigned D = x.negm & ~(1u << (s0 - 1));
    const unsigned above_s0 = full & ~((2u << (s0 - 1)) - 1);
    const unsigned C = above_s0 & ~x.abs();
    // u = (1 .. s0-1) inc(C) (-n) (-s0) inc(-D)
    for (int i = 1; i < s0; ++i) u.letters.push_back(i);
    push_mask_letters(u.letters, C, false, true);
    u.letters.push_back(-n);
    u.letters.push_back(-s0);
    push_mask_letters(u.letters, D, true, true);
    // w = inc(-D) (1 .. s0-1) (+n) (+s0) inc(C)
    push_mask_letters(w.letters, D, true, true);
    for (int i = 1; i < s0; ++i) w.letters.push_back(i);
    w.letters.push_back(n);
    w.letters.push_back(s0);
    push_mask_letters(w.letters, C, false, true);
  }

  // The pair must realize the auxiliary edge: right classes, incomparable,
  // strictly decreasing projection.
  if (!(class_b(u) == x) || !(class_b(w) == y))
    throw std::logic_error("witness words land in wrong classes");
  InvSetB iu = inv_B(u), iw = inv_B(w);
  if ((iu.bits & ~iw.bits) == 0 || (iw.bits & ~iu.bits) == 0)
    throw std::logic_error("witness words are comparable");
  SignedWord pu, pw;
  for (int a : u.letters)
    if (std::abs(a) != n) pu.letters.push_back(a);
  for (int a : w.letters)
    if (std::abs(a) != n) pw.letters.push_back(a);
  InvSetB ipu = inv_B(pu), ipw = inv_B(pw);
  if (!((ipw.bits & ~ipu.bits) == 0 && ipw.bits != ipu.bits))
    throw std::logic_error("witness projections are not strictly decreasing");
  return {u, w};
}

std::vector<TableLineB> reeb_table_B(int n) {
  DeletionB d = deletion_B(n);
  ReebGraph rg = augmented_pre_reeb(d.proj);
  auto heights = longest_path_ranks(rg.graph);
  std::vector<TableLineB> lines(rg.partition.num_classes());
  for (int c = 0; c < rg.partition.num_classes(); ++c) {
    lines[c].cls = class_b(d.domain_words[rg.partition.members[c][0]]);
    lines[c].nu = nu_B(lines[c].cls);
    lines[c].minimal_height = heights[c];
  }
  std::sort(lines.begin(), lines.end(),
            [](const TableLineB& a, const TableLineB& b) { return a.nu < b.nu; });
  for (int i = 0; i < static_cast<int>(lines.size()); ++i) lines[i].index = i;
  return lines;
}

std::string format_table_line(const TableLineB& line) {
  std::string a = "{";
  bool first = true;
  for (int i = 1; i < line.cls.rank; ++i) {
    bool p = line.cls.pos >> (i - 1) & 1u, m = line.cls.negm >> (i - 1) & 1u;
    if (!p && !m) continue;
    if (!first) a += ',';
    first = false;
    a += (p ? "+" : "-") + std::to_string(i);
  }
  a += "}";
  std::string symbols = "{";
  auto syms = n_inversion_symbols(line.cls);
  for (std::size_t i = 0; i < syms.size(); ++i) {
    if (i) symbols += ',';
    symbols += syms[i];
  }
  symbols += "}";
  return std::to_string(line.index) + " " + (line.cls.neg ? "-" : "+") + " " + a + " " +
         symbols + " " + std::to_string(line.nu) + " " + std::to_string(line.minimal_height);
}

CheckReport counterexample_weighted_sum() {
  CheckReport rep;
  auto table = reeb_table_B(3);

  // Height of each line and membership bits of the five 3-inversion symbols,
  // in the order (3,-2), (3,-1), (-3), (3,1), (3,2).
  auto has = [&](int line, int sym) {
    const ClassB& x = table[line].cls;
    switch (sym) {
      case 0: return bit_n_neg_i(x, 2);
      case 1: return bit_n_neg_i(x, 1);
      case 2: return x.neg;
      case 3: return bit_n_i(x, 1);
      default: return bit_n_i(x, 2);
    }
  };
  auto h = [&](int line) { return table[line].minimal_height; };

  // Lines 1, 2, 5 are singletons; line 4 then pins the weight of (-3).
  std::int64_t w_3m2 = h(1);
  std::int64_t w_3m1 = h(2);
  std::int64_t w_m3 = h(4) - w_3m1 - w_3m2;
  std::int64_t w_31 = h(5);
  bool weights_ok = w_3m2 == 1 && w_3m1 == 2 && w_m3 == 1 && w_31 == 5;
  rep.add("weights from lines 1,2,4,5: w(3,-2)=1 w(3,-1)=2 w(-3)=1 w(3,1)=5", weights_ok,
          weights_ok ? ""
                     : std::to_string(w_3m2) + "," + std::to_string(w_3m1) + "," +
                           std::to_string(w_m3) + "," + std::to_string(w_31));

  std::int64_t weight[5] = {w_3m2, w_3m1, w_m3, w_31, 0};
  auto weighted_sum = [&](int line) {
    std::int64_t s = 0;
    for (int sym = 0; sym < 4; ++sym)
      if (has(line, sym)) s += weight[sym];
    return s;
  };
  bool consistent = true;
  for (int line : {3, 6, 7})
    if (weighted_sum(line) != h(line)) consistent = false;
  rep.add("lines 3, 6, 7 agree with the weighted sum", consistent);

  std::int64_t sum8 = weighted_sum(8);
  rep.add("line 8: weighted sum 9 differs from minimal height 8",
          sum8 == 9 && h(8) == 8 && sum8 != h(8),
          "sum=" + std::to_string(sum8) + " height=" + std::to_string(h(8)));
  return rep;
}

}  // namespace reebcube
