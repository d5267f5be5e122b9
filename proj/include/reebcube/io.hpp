#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "reebcube/coords.hpp"
#include "reebcube/digraph.hpp"
#include "reebcube/poset.hpp"
#include "reebcube/projection.hpp"

namespace reebcube {

// Poset text format (line based):
//   p <num_elements> <num_covers>
//   e <id> <label>          one per element, ids are nonnegative decimals
//   c <src-id> <dst-id>     one per cover
void write_poset(std::ostream& os, const Poset& p);
Poset read_poset(std::istream& is);

// One line per element: <label><TAB><c1>,<c2>,...,<cd>
void write_coordinate_map(std::ostream& os, const Poset& p, const CoordinateMap& c);

// The two poset blocks followed by `m <domain-id> <codomain-id>` lines.
void write_projection(std::ostream& os, const Projection& pr);
Projection read_projection(std::istream& is);

// Graph text format: `v <id> <label>` lines then `g <src> <dst> <kind>` lines.
void write_digraph(std::ostream& os, const Digraph& g);
Digraph read_digraph(std::istream& is);

// DOT export; vertical edges solid, auxiliary edges dashed, plain edges
// solid. `layers`, when nonempty, emits one rank=same group per entry.
void write_dot(std::ostream& os, const Digraph& g,
               const std::vector<std::vector<int>>& layers = {});

std::string slurp_file(const std::string& path);

}  // namespace reebcube
