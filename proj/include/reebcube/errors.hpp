#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace reebcube {

enum class Errc {
  unknown_element,
  cycle_detected,
  not_acyclic,
  rank_too_large,
  rank_too_small,
  type_mismatch,
  fiber_not_chain,
  cover_condition_violated,
  height_not_monotone,
  successor_undefined,
  size_mismatch,
  missing_element,
  not_total_order,
  not_compatible,
  not_cylindrical,
  base_not_cubic,
  base_not_embedding,
  not_a_box,
  not_boolean,
  not_auxiliary_case,
  bad_format,
};

// Single exception type; `code` identifies the failure, the payload fields
// below carry a witness when one exists.
class Error : public std::runtime_error {
public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}

  Errc code() const { return code_; }

  // cycle_detected / not_acyclic: the offending directed cycle, as vertex ids.
  std::vector<int> cycle;
  // height_not_monotone: the violating edge (class ids) and its kind tag.
  int edge_from = -1;
  int edge_to = -1;
  std::string edge_kind;

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace reebcube
