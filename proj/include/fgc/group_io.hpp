#pragma once

#include <iosfwd>
#include <string>

#include "fgc/group.hpp"

namespace fgc {

// Two on-disk formats.
//   A (Cayley):      "cayley <n>" then n rows of n integers; identity must
//                    be element 0.
//   B (permutation): "perm <degree>" then one generator per line in
//                    disjoint-cycle notation with 1-based points, e.g.
//                    "(1 2 3)(4 5)"; the group is the generator closure.
// '#' starts a comment line; blank lines are skipped; CRLF tolerated on
// read, LF written.

FiniteGroup parse_group(std::istream& in, const std::string& label);
FiniteGroup parse_group_text(const std::string& text, const std::string& label);
FiniteGroup parse_group_file(const std::string& path);

void serialize_group(const FiniteGroup& g, std::ostream& out);
std::string serialize_group_text(const FiniteGroup& g);
void serialize_group_file(const FiniteGroup& g, const std::string& path);

}  // namespace fgc
