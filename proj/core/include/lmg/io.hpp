#pragma once

#include <string>
#include <string_view>

#include "lmg/graph.hpp"

namespace lmg {

// Text graph format:
//   nodes: a b c        header, required first non-comment line
//   a -- b               line
//   a -> b               arrow (left is tail)
//   a <- b               arrow (left is head)
//   a <-> b              arc
// '#' starts a comment; blank lines are ignored.  Duplicate edges, loops and
// undeclared nodes are rejected with the offending line number.
MixedGraph parse(std::string_view text);

MixedGraph parse_file(const std::string& path);

// Canonical form: sorted node line, edges sorted by endpoints, arrows
// emitted tail-first.  Byte-stable for equal graphs.
std::string serialize(const MixedGraph& g);

} // namespace lmg
