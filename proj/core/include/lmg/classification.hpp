#pragma once

#include <map>
#include <string>
#include <vector>

#include "lmg/graph.hpp"

namespace lmg {

// Predicate result with a human-readable violating structure when false.
struct Verdict {
    bool ok;
    std::string witness;

    explicit operator bool() const { return ok; }
};

struct ClassMembership {
    bool is_ug = false;
    bool is_bg = false;
    bool is_dag = false;
    bool is_rcg = false;
    bool is_ancestral = false;
    bool is_maximal = false;
    std::map<std::string, std::string> witnesses; // failed predicate -> violation
};

// Ancestral: (1) i ∉ an(pa(i) ∪ sp(i)) and (2) ne(i) ≠ ∅ implies
// pa(i) ∪ sp(i) = ∅, for every node i.
Verdict is_ancestral(const MixedGraph& g);

// Every non-adjacent pair has some separating set (exhaustive search).
Verdict is_maximal(const MixedGraph& g, int max_nodes = 12);

Verdict is_ug(const MixedGraph& g);
Verdict is_bg(const MixedGraph& g);
Verdict is_dag(const MixedGraph& g);
// No arrowhead at a line-incident node, no arc-direction-preserving cycle.
Verdict is_rcg(const MixedGraph& g);

bool is_mag(const MixedGraph& g, int max_nodes = 12);

// Throws ClassViolation unless g is ancestral and maximal.
void require_mag(const MixedGraph& g, int max_nodes = 12);

ClassMembership classify(const MixedGraph& g, int max_nodes = 12);

struct ChainDecomposition {
    // τ_1..τ_T; arrows point from higher-numbered components to lower.
    std::vector<NodeSet> components;
    NodeSet undirected_part = 0;
};

// Line-incident nodes go to the undirected part; the rest split into arc
// connected components, numbered along a topology of the arrow quotient.
ChainDecomposition chain_components(const MixedGraph& g);

} // namespace lmg
