#pragma once

#include <iosfwd>
#include <string>

#include "reebcube/lift.hpp"

namespace reebcube {

struct RunConfig {
  std::string command;  // gen | reeb | lift | verify | export-table
  char type = 'A';
  int rank = 0;
  bool augmented = false;
  HeightsKind heights = HeightsKind::minimal;
  std::string format;  // per-command default when empty
  std::string out;     // empty writes to stdout
  int jobs = 1;
};

// Exit code 0 on success, 1 on verification failure, 2 on a config error.
// Primary output goes to `out` (or the --out file), diagnostics to `err`.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Argv front end; same exit codes.
int run_cli(int argc, char** argv);

}  // namespace reebcube
