#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reebcube {

// Pass/fail lines produced by the theorem-verification routines.
// Rendered as `PASS <name>` or `FAIL <name>  <witness>`.
struct CheckLine {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct CheckReport {
  std::vector<CheckLine> lines;

  void add(std::string name, bool pass, std::string witness = "") {
    lines.push_back({std::move(name), pass, std::move(witness)});
  }

  void append(const CheckReport& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
  }

  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }

  void print(std::ostream& os) const {
    for (const auto& l : lines) {
      os << (l.pass ? "PASS " : "FAIL ") << l.name;
      if (!l.pass && !l.witness.empty()) os << "  " << l.witness;
      os << '\n';
    }
  }
};

}  // namespace reebcube
