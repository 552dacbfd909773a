#pragma once

#include <functional>
#include <optional>

#include "lmg/graph.hpp"
#include "lmg/representation.hpp"
#include "lmg/separation.hpp"

namespace lmg {

// Brute-force semantic equality: the two independence models coincide.
bool models_equal(const MixedGraph& g1, const MixedGraph& g2, int max_nodes = 12);

// Some graph of the target class with g's skeleton and g's model, or absent.
// Searches every mark assignment of the skeleton filtered by the class
// predicate; deterministic, so the first (lexicographically smallest) match
// is returned.
std::optional<MixedGraph> exhaustive_representable(const MixedGraph& g, GraphClass target,
                                                   int max_edges = 14);

// Streams every graph of the class on nodes {v1..vn} (or on the given
// skeleton) exactly once; stops early when visit returns false.  Guarded:
// default 5 nodes unconstrained, 6 with a fixed skeleton.
void enumerate_class(int node_count, GraphClass class_filter,
                     const std::optional<MixedGraph>& skeleton,
                     const std::function<bool(const MixedGraph&)>& visit,
                     int max_nodes_free = 5, int max_nodes_skeleton = 6);

// True iff g belongs to the class (LMG always; MAG = ancestral + maximal).
bool in_class(const MixedGraph& g, GraphClass c);

} // namespace lmg
