#pragma once

#include <functional>
#include <string>
#include <vector>

#include "reebcube/errors.hpp"
#include "reebcube/poset.hpp"
#include "reebcube/words.hpp"

namespace testutil {

using reebcube::Cover;
using reebcube::Errc;
using reebcube::Poset;

// Independent reachability oracle: plain BFS over the cover lists, no bitsets.
inline bool leq_by_bfs(const Poset& p, int x, int y) {
  std::vector<int> stack{x};
  std::vector<char> seen(p.size(), 0);
  seen[x] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == y) return true;
    for (int w : p.up_covers(v))
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return false;
}

inline Errc error_code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const reebcube::Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected an error");
}

inline int index_of(const reebcube::WeakOrderA& wo, const std::string& letters) {
  return wo.index_of(reebcube::Word{reebcube::parse_letters(letters)});
}

inline int index_of(const reebcube::WeakOrderB& wo, const std::string& letters) {
  return wo.index_of(reebcube::SignedWord{reebcube::parse_letters(letters)});
}

}  // namespace testutil
