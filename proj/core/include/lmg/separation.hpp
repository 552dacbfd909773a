#pragma once

#include <optional>
#include <vector>

#include "lmg/graph.hpp"

namespace lmg {

struct SeparationQuery {
    NodeSet a;
    NodeSet b;
    NodeSet c;
};

struct Statement {
    NodeId i;
    NodeId j;
    NodeSet cond;

    auto operator<=>(const Statement&) const = default;
};

// All pairwise separation statements (i, j, C) with i < j, sorted.  Set
// queries reduce to pairwise conjunction (verified by test, not assumed).
struct IndependenceModel {
    std::vector<std::string> labels;
    std::vector<Statement> statements;

    bool operator==(const IndependenceModel&) const = default;

    std::string to_text() const; // sorted lines "i ⊥ j | c1,c2,..."
};

// True iff every inner collider of p is in c ∪ an(c) and every inner
// non-collider is outside c.  Endpoints are not classified; a single edge is
// always m-connecting.
bool is_m_connecting(const MixedGraph& g, const Path& p, NodeSet c);

// Reachability search over (node, arrival-mark) states; the default route.
bool m_separated(const MixedGraph& g, const SeparationQuery& q);
bool m_separated(const MixedGraph& g, NodeId i, NodeId j, NodeSet c);

// Reference semantics: exhaustive enumeration of simple paths.  Ships next
// to the reachability search so their agreement stays testable.
bool m_separated_by_paths(const MixedGraph& g, const SeparationQuery& q);

// Enumerates every (i, j, C) up to the conditioning-size cap.  Graphs above
// max_nodes raise EnumerationLimit.
IndependenceModel independence_model(const MixedGraph& g,
                                     std::optional<int> max_condition_size = std::nullopt,
                                     int max_nodes = 12);

} // namespace lmg
