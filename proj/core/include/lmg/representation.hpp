#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "lmg/graph.hpp"

namespace lmg {

enum class GraphClass { LMG, UG, BG, DAG, RCG, MAG };

std::optional<GraphClass> class_from_name(std::string_view name);
std::string to_string(GraphClass c);

enum class ReprViolation {
    NonChordalLines,
    MinimalColliderPath4,
    UnshieldedCollider,
    UnshieldedNonCollider,
    ArcDirPreservingCycleObstruction,
    ColliderP4C4,
    P4C4,
    NonChordal,
    NonComplete,
};

std::string to_string(ReprViolation v);

struct ReprVerdict {
    bool possible;
    std::optional<ReprViolation> violated_condition;
    std::string witness;
};

// Either reading of the "length 4" condition; Exactly4 (a P4/C4 shape) is
// the default, selected by the oracle-agreement tests.
enum class Length4Reading { Exactly4, AtLeast4 };

// MAG-level predicates (precondition: ancestral and maximal).
ReprVerdict representable_as_dag(const MixedGraph& g,
                                 Length4Reading reading = Length4Reading::Exactly4);
ReprVerdict representable_as_ug(const MixedGraph& g);
ReprVerdict representable_as_bg(const MixedGraph& g);
ReprVerdict representable_as_rcg(const MixedGraph& g);

// Subclass corollaries; each must agree with representable_as_dag on its class.
ReprVerdict representable_as_dag_bg(const MixedGraph& g);
ReprVerdict representable_as_dag_ug(const MixedGraph& g);
ReprVerdict representable_as_dag_rcg(const MixedGraph& g);

// Necessary condition only: false guarantees representable_as_dag is false.
// Dispatches BG / RCG / MAG and checks for a node adjacent to all others in
// the relevant subgraph, per connected component.
bool dag_necessary_condition(const MixedGraph& g);

ReprVerdict representable_as(const MixedGraph& g, GraphClass target);

namespace detail {

// Greedily drops arc heads on arc-direction-preserving cycles, accepting a
// rewrite only when the result is still a Markov equivalent MAG. Returns true
// when no such cycle remains. commit(x, y) applies "arc x <-> y becomes
// arrow x -> y" to h (and may log it); with a null commit h is mutated
// directly. seed != 0 shuffles the candidate order.
bool break_adp_cycles(MixedGraph& h, std::uint64_t seed,
                      const std::function<void(NodeId, NodeId)>& commit);

} // namespace detail

} // namespace lmg
