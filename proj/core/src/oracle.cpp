#include "lmg/oracle.hpp"

#include <string>
#include <vector>

#include "lmg/classification.hpp"

namespace lmg {

bool models_equal(const MixedGraph& g1, const MixedGraph& g2, int max_nodes) {
    if (g1.labels() != g2.labels()) throw DomainMismatch("graphs have different node sets");
    return independence_model(g1, std::nullopt, max_nodes) ==
           independence_model(g2, std::nullopt, max_nodes);
}

bool in_class(const MixedGraph& g, GraphClass c) {
    switch (c) {
    case GraphClass::LMG: return true;
    case GraphClass::UG: return is_ug(g).ok;
    case GraphClass::BG: return is_bg(g).ok;
    case GraphClass::DAG: return is_dag(g).ok;
    case GraphClass::RCG: return is_rcg(g).ok;
    case GraphClass::MAG: return is_mag(g);
    }
    return false;
}

namespace {

// Mark assignments per present edge: line, both arrow orientations, arc.
constexpr int kAssignments = 4;

void assign_edge(MixedGraph& g, NodeId a, NodeId b, int code) {
    switch (code) {
    case 0: g.add_edge(a, b, EdgeType::Line); break;
    case 1: g.add_edge(a, b, EdgeType::Arrow); break;
    case 2: g.add_edge(b, a, EdgeType::Arrow); break;
    case 3: g.add_edge(a, b, EdgeType::Arc); break;
    }
}

// Streams every mark assignment of the given skeleton (odometer over edges).
bool stream_assignments(const MixedGraph& base, const std::vector<Edge>& skeleton_edges,
                        GraphClass class_filter,
                        const std::function<bool(const MixedGraph&)>& visit) {
    std::vector<int> code(skeleton_edges.size(), 0);
    while (true) {
        MixedGraph g = base;
        for (std::size_t e = 0; e < skeleton_edges.size(); ++e)
            assign_edge(g, skeleton_edges[e].a, skeleton_edges[e].b, code[e]);
        if (in_class(g, class_filter) && !visit(g)) return false;
        std::size_t e = 0;
        while (e < code.size() && code[e] == kAssignments - 1) code[e++] = 0;
        if (e == code.size()) return true;
        ++code[e];
    }
}

MixedGraph empty_like(const MixedGraph& g) { return MixedGraph(g.labels()); }

} // namespace

std::optional<MixedGraph> exhaustive_representable(const MixedGraph& g, GraphClass target,
                                                   int max_edges) {
    MixedGraph skel = g.skeleton();
    std::vector<Edge> edges = skel.edges();
    if (static_cast<int>(edges.size()) > max_edges)
        throw EnumerationLimit("representability search capped at " + std::to_string(max_edges) +
                               " edges");
    IndependenceModel target_model = independence_model(g);
    std::optional<MixedGraph> found;
    stream_assignments(empty_like(g), edges, target, [&](const MixedGraph& h) {
        if (independence_model(h) == target_model) {
            found = h;
            return false;
        }
        return true;
    });
    return found;
}

void enumerate_class(int node_count, GraphClass class_filter,
                     const std::optional<MixedGraph>& skeleton,
                     const std::function<bool(const MixedGraph&)>& visit, int max_nodes_free,
                     int max_nodes_skeleton) {
    if (skeleton) {
        if (skeleton->node_count() > max_nodes_skeleton)
            throw EnumerationLimit("skeleton-constrained catalog capped at " +
                                   std::to_string(max_nodes_skeleton) + " nodes");
        stream_assignments(empty_like(*skeleton), skeleton->edges(), class_filter, visit);
        return;
    }
    if (node_count > max_nodes_free)
        throw EnumerationLimit("catalog enumeration capped at " +
                               std::to_string(max_nodes_free) + " nodes");

    std::vector<std::string> labels;
    for (int k = 1; k <= node_count; ++k) labels.push_back("v" + std::to_string(k));
    MixedGraph base(labels);

    // Odometer over node pairs with 5 states: absent plus the 4 assignments.
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId i = 0; i < node_count; ++i)
        for (NodeId j = i + 1; j < node_count; ++j) pairs.push_back({i, j});
    std::vector<int> code(pairs.size(), 0);
    while (true) {
        MixedGraph g = base;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (code[e] > 0) assign_edge(g, pairs[e].first, pairs[e].second, code[e] - 1);
        if (in_class(g, class_filter) && !visit(g)) return;
        std::size_t e = 0;
        while (e < code.size() && code[e] == kAssignments) code[e++] = 0;
        if (e == code.size()) return;
        ++code[e];
    }
}

} // namespace lmg
