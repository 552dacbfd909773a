#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lmg/errors.hpp"

namespace lmg {

// Nodes are indices into the graph's sorted label table, so index order is
// label order and lexicographic tie-breaking is just ascending iteration.
using NodeId = int;

// Node sets as bitmasks; graphs are capped at 32 nodes.
using NodeSet = std::uint32_t;

inline bool set_contains(NodeSet s, NodeId v) { return (s >> v) & 1u; }
inline NodeSet set_with(NodeSet s, NodeId v) { return s | (NodeSet{1} << v); }
inline NodeSet set_without(NodeSet s, NodeId v) { return s & ~(NodeSet{1} << v); }
inline NodeSet singleton(NodeId v) { return NodeSet{1} << v; }
inline int set_size(NodeSet s) { return std::popcount(s); }
inline NodeSet full_set(int n) { return n == 32 ? ~NodeSet{0} : (NodeSet{1} << n) - 1; }

// Range over the members of a NodeSet in ascending order.
class SetBits {
public:
    explicit SetBits(NodeSet s) : s_(s) {}
    class iterator {
    public:
        explicit iterator(NodeSet s) : s_(s) {}
        NodeId operator*() const { return std::countr_zero(s_); }
        iterator& operator++() { s_ &= s_ - 1; return *this; }
        bool operator!=(const iterator& o) const { return s_ != o.s_; }
    private:
        NodeSet s_;
    };
    iterator begin() const { return iterator(s_); }
    iterator end() const { return iterator(0); }
private:
    NodeSet s_;
};

std::vector<NodeId> set_to_vector(NodeSet s);

enum class Mark : std::uint8_t { None = 0, Tail, Head };

enum class EdgeType : std::uint8_t { Line, Arrow, Arc };

// Canonical edge: a < b, marks at the matching endpoints.
struct Edge {
    NodeId a;
    NodeId b;
    Mark mark_a;
    Mark mark_b;

    auto operator<=>(const Edge&) const = default;
};

// Loopless mixed graph on a sorted, labeled node set.  At most one edge per
// node pair; an edge carries one mark (tail or head) per endpoint:
// (tail,tail) is a line, (tail,head) an arrow, (head,head) an arc.
// All queries are const; treat constructed graphs as immutable values and
// mutate only private working copies.
class MixedGraph {
public:
    static constexpr int kMaxNodes = 32;

    explicit MixedGraph(std::vector<std::string> labels);

    int node_count() const { return n_; }
    NodeSet all_nodes() const { return full_set(n_); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(NodeId v) const { return labels_.at(static_cast<std::size_t>(v)); }

    NodeId node(std::string_view label) const; // throws NodeNotFound
    std::optional<NodeId> try_node(std::string_view label) const;

    bool adjacent(NodeId i, NodeId j) const { return end_mark(i, j) != Mark::None; }
    // The mark edge {i,j} carries at its j end; Mark::None if not adjacent.
    Mark end_mark(NodeId i, NodeId j) const { return marks_[static_cast<std::size_t>(i) * n_ + j]; }
    bool head_at(NodeId i, NodeId j) const { return end_mark(i, j) == Mark::Head; }
    std::optional<EdgeType> edge_type(NodeId i, NodeId j) const;

    void add_edge(NodeId i, Mark mark_i, NodeId j, Mark mark_j);
    void add_edge(NodeId i, NodeId j, EdgeType type); // Arrow points i -> j
    void remove_edge(NodeId i, NodeId j);
    void set_end_mark(NodeId i, NodeId j, Mark mark_at_j);

    int edge_count() const;
    std::vector<Edge> edges() const; // canonical, sorted by (a, b)

    NodeSet adjacents(NodeId v) const;
    NodeSet neighbours(NodeId v) const; // line edges
    NodeSet parents(NodeId v) const;    // u -> v
    NodeSet children(NodeId v) const;   // v -> u
    NodeSet spouses(NodeId v) const;    // arcs

    NodeSet neighbours(std::string_view v) const { return neighbours(node(v)); }
    NodeSet parents(std::string_view v) const { return parents(node(v)); }
    NodeSet spouses(std::string_view v) const { return spouses(node(v)); }

    // Nodes with a direction-preserving path (all arrows, one direction,
    // length >= 1) to some member of s.  Members of s appear only if they
    // reach another member.
    NodeSet ancestors(NodeSet s) const;
    bool is_ancestor_of(NodeId u, NodeId v) const { return set_contains(ancestors(singleton(v)), u); }

    MixedGraph skeleton() const;
    MixedGraph induced_subgraph(NodeSet keep) const;
    // Edge-induced: keeps edges of the given type and only their endpoints.
    MixedGraph edge_type_subgraph(EdgeType type) const;

    bool operator==(const MixedGraph&) const = default;

private:
    void check_node(NodeId v) const;

    int n_;
    std::vector<std::string> labels_;
    std::vector<Mark> marks_; // marks_[i*n_+j]: mark at j of edge {i,j}
};

// A path is a node sequence of length >= 2 with an edge between consecutive
// nodes and no repeated node.  validate_path throws MalformedPath otherwise.
struct Path {
    std::vector<NodeId> nodes;
};

void validate_path(const MixedGraph& g, const Path& p);

struct VConfiguration {
    NodeId left;
    NodeId mid;
    NodeId right;
    bool collider;
    bool shielded;

    auto operator<=>(const VConfiguration&) const = default;
};

// Every 3-node 2-edge path, each unordered {left,right} pair once (left < right).
std::vector<VConfiguration> v_configurations(const MixedGraph& g);

// True iff the triple (a, mid, b) is a collider: heads at mid on both edges.
bool is_collider(const MixedGraph& g, NodeId a, NodeId mid, NodeId b);

// Chordality of the skeleton: no induced chordless cycle on >= 4 nodes.
bool is_chordal(const MixedGraph& g);

bool directed_cycle_exists(const MixedGraph& g);

// All simple cycles (length >= 3) of the skeleton, each once, as node
// sequences starting at their smallest node.  Guarded: throws
// EnumerationLimit when node_count exceeds max_nodes.
std::vector<std::vector<NodeId>> simple_cycles(const MixedGraph& g, int max_nodes = 16);

// Cycles with >= 1 arc and >= 1 arrow whose arrows all point one way around
// the cycle; returned oriented so that arrows point forward.
std::vector<std::vector<NodeId>> arc_direction_preserving_cycles(const MixedGraph& g,
                                                                 int max_nodes = 16);

// Smallest-labeled node adjacent (skeleton sense) to all other nodes.
std::optional<NodeId> dominating_node_exists(const MixedGraph& g);

// Induced 4-node chordless path or cycle whose inner nodes are all colliders
// along it (all four nodes count as inner on a cycle).
bool contains_collider_p4_or_c4(const MixedGraph& g);

// Induced plain P4 or C4.
bool contains_p4_or_c4(const MixedGraph& g);

// Enumerates simple paths (>= 2 nodes) from every start node; ordered, so a
// path and its reverse are both visited.  Stops early when visit returns false.
void for_each_simple_path(const MixedGraph& g,
                          const std::function<bool(const std::vector<NodeId>&)>& visit);

std::string to_string(Mark m);
std::string to_string(EdgeType t);
std::string edge_token(Mark mark_a, Mark mark_b); // "--", "->", "<-", "<->"

} // namespace lmg
