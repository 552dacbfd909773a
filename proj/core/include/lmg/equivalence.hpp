#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lmg/graph.hpp"

namespace lmg {

// Unordered collider triple (a, mid, b): canonical with a < b.
struct Triple {
    NodeId a;
    NodeId mid;
    NodeId b;

    auto operator<=>(const Triple&) const = default;
};

inline Triple make_triple(NodeId x, NodeId mid, NodeId y) {
    return x < y ? Triple{x, mid, y} : Triple{y, mid, x};
}

// Path <j, q_1..q_m, l, i> with j ≁ i where every q_n is a collider on the
// path and a parent of i; discriminates for the triple <q_m, l, i>.
struct DiscriminatingPath {
    std::vector<NodeId> nodes; // at least 4 nodes (m >= 1)
    Triple target;
};

// Collider triples mapped to the minimal n with the triple in D_n.
struct OrderedColliderTable {
    std::map<Triple, int> entries;

    std::set<Triple> triple_set() const;
};

// Minimal collider paths (endpoints non-adjacent) and cycles (adjacent),
// stored with the smaller endpoint first.
struct ColliderPathSet {
    std::set<std::vector<NodeId>> paths;
    std::set<std::vector<NodeId>> cycles;

    bool operator==(const ColliderPathSet&) const = default;
};

enum class EquivMethod { Order, Paths };

std::vector<DiscriminatingPath> discriminating_paths(const MixedGraph& g);

OrderedColliderTable colliders_with_order(const MixedGraph& g);

ColliderPathSet minimal_collider_paths(const MixedGraph& g);

// Unshielded collider triples; for DAGs these are the unshielded collisions.
std::set<Triple> unshielded_colliders(const MixedGraph& g);

// Equivalence criteria.  All binary operations demand a shared node set
// (DomainMismatch) and their stated class memberships (ClassViolation).
bool equivalent_mags(const MixedGraph& g1, const MixedGraph& g2, EquivMethod method);
bool equivalent_dags(const MixedGraph& g1, const MixedGraph& g2);
bool equivalent_simple(const MixedGraph& g1, const MixedGraph& g2); // both UG or both BG
bool equivalent_rcgs(const MixedGraph& g1, const MixedGraph& g2);
bool equivalent_cross(const MixedGraph& g1, const MixedGraph& g2); // each in {RCG,BG,UG,DAG}

// First distinguishing feature between two same-node-set graphs: a skeleton
// edge, a collider triple with order, or a minimal collider path.
std::optional<std::string> equivalence_witness(const MixedGraph& g1, const MixedGraph& g2);

} // namespace lmg
