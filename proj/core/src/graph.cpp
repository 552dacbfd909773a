#include "lmg/graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace lmg {

std::vector<NodeId> set_to_vector(NodeSet s) {
    std::vector<NodeId> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    for (NodeId v : SetBits(s)) out.push_back(v);
    return out;
}

MixedGraph::MixedGraph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > kMaxNodes)
        throw GraphError("too many nodes (max " + std::to_string(kMaxNodes) + ")");
    for (const auto& l : labels_) {
        if (l.empty()) throw GraphError("empty node label");
        for (char c : l)
            if (std::isspace(static_cast<unsigned char>(c)))
                throw GraphError("whitespace in node label '" + l + "'");
    }
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
        throw GraphError("duplicate node label");
    n_ = static_cast<int>(labels_.size());
    marks_.assign(static_cast<std::size_t>(n_) * n_, Mark::None);
}

NodeId MixedGraph::node(std::string_view label) const {
    auto v = try_node(label);
    if (!v) throw NodeNotFound("unknown node '" + std::string(label) + "'");
    return *v;
}

std::optional<NodeId> MixedGraph::try_node(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<NodeId>(it - labels_.begin());
}

void MixedGraph::check_node(NodeId v) const {
    if (v < 0 || v >= n_) throw NodeNotFound("node index " + std::to_string(v) + " out of range");
}

std::optional<EdgeType> MixedGraph::edge_type(NodeId i, NodeId j) const {
    Mark mi = end_mark(j, i), mj = end_mark(i, j);
    if (mj == Mark::None) return std::nullopt;
    if (mi == Mark::Tail && mj == Mark::Tail) return EdgeType::Line;
    if (mi == Mark::Head && mj == Mark::Head) return EdgeType::Arc;
    return EdgeType::Arrow;
}

void MixedGraph::add_edge(NodeId i, Mark mark_i, NodeId j, Mark mark_j) {
    check_node(i);
    check_node(j);
    if (i == j) throw GraphError("loop at node '" + label(i) + "'");
    if (adjacent(i, j))
        throw GraphError("duplicate edge between '" + label(i) + "' and '" + label(j) + "'");
    if (mark_i == Mark::None || mark_j == Mark::None) throw GraphError("edge mark missing");
    marks_[static_cast<std::size_t>(j) * n_ + i] = mark_i;
    marks_[static_cast<std::size_t>(i) * n_ + j] = mark_j;
}

void MixedGraph::add_edge(NodeId i, NodeId j, EdgeType type) {
    switch (type) {
    case EdgeType::Line: add_edge(i, Mark::Tail, j, Mark::Tail); break;
    case EdgeType::Arrow: add_edge(i, Mark::Tail, j, Mark::Head); break;
    case EdgeType::Arc: add_edge(i, Mark::Head, j, Mark::Head); break;
    }
}

void MixedGraph::remove_edge(NodeId i, NodeId j) {
    check_node(i);
    check_node(j);
    marks_[static_cast<std::size_t>(j) * n_ + i] = Mark::None;
    marks_[static_cast<std::size_t>(i) * n_ + j] = Mark::None;
}

void MixedGraph::set_end_mark(NodeId i, NodeId j, Mark mark_at_j) {
    check_node(i);
    check_node(j);
    if (!adjacent(i, j)) throw GraphError("no edge to re-mark");
    if (mark_at_j == Mark::None) throw GraphError("edge mark missing");
    marks_[static_cast<std::size_t>(i) * n_ + j] = mark_at_j;
}

int MixedGraph::edge_count() const {
    int count = 0;
    for (NodeId i = 0; i < n_; ++i)
        for (NodeId j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) ++count;
    return count;
}

std::vector<Edge> MixedGraph::edges() const {
    std::vector<Edge> out;
    for (NodeId i = 0; i < n_; ++i)
        for (NodeId j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) out.push_back({i, j, end_mark(j, i), end_mark(i, j)});
    return out;
}

NodeSet MixedGraph::adjacents(NodeId v) const {
    check_node(v);
    NodeSet s = 0;
    for (NodeId u = 0; u < n_; ++u)
        if (u != v && adjacent(u, v)) s = set_with(s, u);
    return s;
}

NodeSet MixedGraph::neighbours(NodeId v) const {
    check_node(v);
    NodeSet s = 0;
    for (NodeId u = 0; u < n_; ++u)
        if (u != v && edge_type(u, v) == EdgeType::Line) s = set_with(s, u);
    return s;
}

NodeSet MixedGraph::parents(NodeId v) const {
    check_node(v);
    NodeSet s = 0;
    for (NodeId u = 0; u < n_; ++u)
        if (u != v && end_mark(u, v) == Mark::Head && end_mark(v, u) == Mark::Tail)
            s = set_with(s, u);
    return s;
}

NodeSet MixedGraph::children(NodeId v) const {
    check_node(v);
    NodeSet s = 0;
    for (NodeId u = 0; u < n_; ++u)
        if (u != v && end_mark(v, u) == Mark::Head && end_mark(u, v) == Mark::Tail)
            s = set_with(s, u);
    return s;
}

NodeSet MixedGraph::spouses(NodeId v) const {
    check_node(v);
    NodeSet s = 0;
    for (NodeId u = 0; u < n_; ++u)
        if (u != v && edge_type(u, v) == EdgeType::Arc) s = set_with(s, u);
    return s;
}

NodeSet MixedGraph::ancestors(NodeSet s) const {
    if ((s & ~all_nodes()) != 0) throw NodeNotFound("node set out of range");
    NodeSet result = 0;
    std::vector<NodeId> work = set_to_vector(s);
    while (!work.empty()) {
        NodeId v = work.back();
        work.pop_back();
        for (NodeId p : SetBits(parents(v))) {
            if (!set_contains(result, p)) {
                result = set_with(result, p);
                work.push_back(p);
            }
        }
    }
    return result;
}

MixedGraph MixedGraph::skeleton() const {
    MixedGraph g(labels_);
    for (NodeId i = 0; i < n_; ++i)
        for (NodeId j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) g.add_edge(i, j, EdgeType::Line);
    return g;
}

MixedGraph MixedGraph::induced_subgraph(NodeSet keep) const {
    if ((keep & ~all_nodes()) != 0) throw NodeNotFound("node set out of range");
    std::vector<std::string> labels;
    for (NodeId v : SetBits(keep)) labels.push_back(label(v));
    MixedGraph g(std::move(labels));
    for (NodeId i : SetBits(keep))
        for (NodeId j : SetBits(keep)) {
            if (i >= j || !adjacent(i, j)) continue;
            g.add_edge(g.node(label(i)), end_mark(j, i), g.node(label(j)), end_mark(i, j));
        }
    return g;
}

MixedGraph MixedGraph::edge_type_subgraph(EdgeType type) const {
    NodeSet keep = 0;
    for (NodeId i = 0; i < n_; ++i)
        for (NodeId j = i + 1; j < n_; ++j)
            if (edge_type(i, j) == type) keep = set_with(set_with(keep, i), j);
    std::vector<std::string> labels;
    for (NodeId v : SetBits(keep)) labels.push_back(label(v));
    MixedGraph g(std::move(labels));
    for (NodeId i : SetBits(keep))
        for (NodeId j : SetBits(keep)) {
            if (i >= j || edge_type(i, j) != type) continue;
            g.add_edge(g.node(label(i)), end_mark(j, i), g.node(label(j)), end_mark(i, j));
        }
    return g;
}

void validate_path(const MixedGraph& g, const Path& p) {
    if (p.nodes.size() < 2) throw MalformedPath("path needs at least two nodes");
    NodeSet seen = 0;
    for (std::size_t k = 0; k < p.nodes.size(); ++k) {
        NodeId v = p.nodes[k];
        if (v < 0 || v >= g.node_count()) throw MalformedPath("path node out of range");
        if (set_contains(seen, v)) throw MalformedPath("repeated node on path");
        seen = set_with(seen, v);
        if (k > 0 && !g.adjacent(p.nodes[k - 1], v))
            throw MalformedPath("missing edge on path between '" + g.label(p.nodes[k - 1]) +
                                "' and '" + g.label(v) + "'");
    }
}

bool is_collider(const MixedGraph& g, NodeId a, NodeId mid, NodeId b) {
    return g.head_at(a, mid) && g.head_at(b, mid);
}

std::vector<VConfiguration> v_configurations(const MixedGraph& g) {
    std::vector<VConfiguration> out;
    for (NodeId mid = 0; mid < g.node_count(); ++mid) {
        NodeSet adj = g.adjacents(mid);
        for (NodeId a : SetBits(adj))
            for (NodeId b : SetBits(adj)) {
                if (a >= b) continue;
                out.push_back({a, mid, b, is_collider(g, a, mid, b), g.adjacent(a, b)});
            }
    }
    return out;
}

bool is_chordal(const MixedGraph& g) {
    // Maximum cardinality search; the visit order is a reverse perfect
    // elimination order exactly when the skeleton is chordal.
    int n = g.node_count();
    std::vector<NodeSet> adj(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.adjacents(v);

    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    std::vector<NodeId> order;
    for (int step = 0; step < n; ++step) {
        NodeId best = -1;
        for (NodeId v = 0; v < n; ++v)
            if (pos[static_cast<std::size_t>(v)] < 0 &&
                (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        pos[static_cast<std::size_t>(best)] = step;
        order.push_back(best);
        for (NodeId u : SetBits(adj[static_cast<std::size_t>(best)]))
            if (pos[static_cast<std::size_t>(u)] < 0) ++weight[static_cast<std::size_t>(u)];
    }
    for (int step = 0; step < n; ++step) {
        NodeId v = order[static_cast<std::size_t>(step)];
        NodeSet earlier = 0;
        for (NodeId u : SetBits(adj[static_cast<std::size_t>(v)]))
            if (pos[static_cast<std::size_t>(u)] < step) earlier = set_with(earlier, u);
        if (earlier == 0) continue;
        NodeId parent = -1;
        for (NodeId u : SetBits(earlier))
            if (parent < 0 || pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(parent)])
                parent = u;
        NodeSet rest = set_without(earlier, parent);
        if ((rest & ~adj[static_cast<std::size_t>(parent)]) != 0) return false;
    }
    return true;
}

bool directed_cycle_exists(const MixedGraph& g) {
    int n = g.node_count();
    std::vector<int> state(static_cast<std::size_t>(n), 0); // 0 new, 1 open, 2 done
    std::function<bool(NodeId)> dfs = [&](NodeId v) {
        state[static_cast<std::size_t>(v)] = 1;
        for (NodeId c : SetBits(g.children(v))) {
            if (state[static_cast<std::size_t>(c)] == 1) return true;
            if (state[static_cast<std::size_t>(c)] == 0 && dfs(c)) return true;
        }
        state[static_cast<std::size_t>(v)] = 2;
        return false;
    };
    for (NodeId v = 0; v < n; ++v)
        if (state[static_cast<std::size_t>(v)] == 0 && dfs(v)) return true;
    return false;
}

std::vector<std::vector<NodeId>> simple_cycles(const MixedGraph& g, int max_nodes) {
    if (g.node_count() > max_nodes)
        throw EnumerationLimit("cycle enumeration capped at " + std::to_string(max_nodes) +
                               " nodes");
    std::vector<std::vector<NodeId>> cycles;
    std::vector<NodeId> path;
    NodeSet on_path = 0;
    // Cycles are rooted at their smallest node; the direction is fixed by
    // requiring path[1] < path.back() at emission time.
    std::function<void(NodeId, NodeId)> dfs = [&](NodeId root, NodeId v) {
        path.push_back(v);
        on_path = set_with(on_path, v);
        for (NodeId u : SetBits(g.adjacents(v))) {
            if (u == root && path.size() >= 3) {
                if (path[1] < path.back()) cycles.push_back(path);
            } else if (u > root && !set_contains(on_path, u)) {
                dfs(root, u);
            }
        }
        path.pop_back();
        on_path = set_without(on_path, v);
    };
    for (NodeId root = 0; root < g.node_count(); ++root) dfs(root, root);
    return cycles;
}

namespace {

// Checks one traversal direction: every arrow along the cycle points forward.
bool arrows_forward(const MixedGraph& g, const std::vector<NodeId>& cycle, int* arrows,
                    int* arcs) {
    *arrows = 0;
    *arcs = 0;
    std::size_t k = cycle.size();
    for (std::size_t t = 0; t < k; ++t) {
        NodeId a = cycle[t], b = cycle[(t + 1) % k];
        switch (*g.edge_type(a, b)) {
        case EdgeType::Line: break;
        case EdgeType::Arc: ++*arcs; break;
        case EdgeType::Arrow:
            if (!g.head_at(a, b)) return false; // arrow points backward
            ++*arrows;
            break;
        }
    }
    return true;
}

} // namespace

std::vector<std::vector<NodeId>> arc_direction_preserving_cycles(const MixedGraph& g,
                                                                 int max_nodes) {
    std::vector<std::vector<NodeId>> out;
    for (auto& cycle : simple_cycles(g, max_nodes)) {
        int arrows = 0, arcs = 0;
        if (arrows_forward(g, cycle, &arrows, &arcs) && arrows >= 1 && arcs >= 1) {
            out.push_back(cycle);
            continue;
        }
        std::vector<NodeId> rev(cycle.rbegin(), cycle.rend());
        std::rotate(rev.begin(), rev.end() - 1, rev.end()); // keep smallest node first
        if (arrows_forward(g, rev, &arrows, &arcs) && arrows >= 1 && arcs >= 1)
            out.push_back(rev);
    }
    return out;
}

std::optional<NodeId> dominating_node_exists(const MixedGraph& g) {
    NodeSet all = g.all_nodes();
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (set_with(g.adjacents(v), v) == all) return v;
    return std::nullopt;
}

namespace {

// Recovers the node order of an induced P4 (degree sequence 1,1,2,2) or C4;
// returns empty if the 4-node induced subgraph is neither.
std::vector<NodeId> induced_p4_or_c4_order(const MixedGraph& g, const std::vector<NodeId>& s,
                                           bool* is_cycle) {
    int degree[4];
    int edge_total = 0;
    for (int a = 0; a < 4; ++a) {
        degree[a] = 0;
        for (int b = 0; b < 4; ++b)
            if (a != b && g.adjacent(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]))
                ++degree[a];
        edge_total += degree[a];
    }
    edge_total /= 2;
    auto adj = [&](int a, int b) {
        return g.adjacent(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]);
    };
    if (edge_total == 3) { // path?
        int ends[2], m = 0;
        for (int a = 0; a < 4; ++a) {
            if (degree[a] == 1) { if (m < 2) ends[m] = a; ++m; }
            else if (degree[a] != 2) return {};
        }
        if (m != 2) return {};
        std::vector<NodeId> order{s[static_cast<std::size_t>(ends[0])]};
        int prev = -1, cur = ends[0];
        for (int step = 0; step < 3; ++step) {
            for (int b = 0; b < 4; ++b)
                if (b != cur && b != prev && adj(cur, b)) {
                    prev = cur;
                    cur = b;
                    break;
                }
            order.push_back(s[static_cast<std::size_t>(cur)]);
        }
        *is_cycle = false;
        return order;
    }
    if (edge_total == 4) { // cycle?
        for (int a = 0; a < 4; ++a)
            if (degree[a] != 2) return {};
        std::vector<NodeId> order{s[0]};
        int prev = 0, cur = -1;
        for (int b = 1; b < 4; ++b)
            if (adj(0, b)) { cur = b; break; }
        order.push_back(s[static_cast<std::size_t>(cur)]);
        for (int step = 0; step < 2; ++step) {
            for (int b = 0; b < 4; ++b)
                if (b != cur && b != prev && adj(cur, b)) {
                    prev = cur;
                    cur = b;
                    break;
                }
            order.push_back(s[static_cast<std::size_t>(cur)]);
        }
        *is_cycle = true;
        return order;
    }
    return {};
}

} // namespace

bool contains_collider_p4_or_c4(const MixedGraph& g) {
    int n = g.node_count();
    std::vector<NodeId> s(4);
    for (s[0] = 0; s[0] < n; ++s[0])
        for (s[1] = s[0] + 1; s[1] < n; ++s[1])
            for (s[2] = s[1] + 1; s[2] < n; ++s[2])
                for (s[3] = s[2] + 1; s[3] < n; ++s[3]) {
                    bool cyc = false;
                    auto order = induced_p4_or_c4_order(g, s, &cyc);
                    if (order.empty()) continue;
                    if (cyc) {
                        // Two consecutive colliders on the cycle close a
                        // length-4 collider path with the remaining edge.
                        bool coll[4];
                        for (int t = 0; t < 4; ++t)
                            coll[t] = is_collider(g, order[static_cast<std::size_t>((t + 3) % 4)],
                                                  order[static_cast<std::size_t>(t)],
                                                  order[static_cast<std::size_t>((t + 1) % 4)]);
                        for (int t = 0; t < 4; ++t)
                            if (coll[t] && coll[(t + 1) % 4]) return true;
                    } else if (is_collider(g, order[0], order[1], order[2]) &&
                               is_collider(g, order[1], order[2], order[3])) {
                        return true;
                    }
                }
    return false;
}

bool contains_p4_or_c4(const MixedGraph& g) {
    int n = g.node_count();
    std::vector<NodeId> s(4);
    for (s[0] = 0; s[0] < n; ++s[0])
        for (s[1] = s[0] + 1; s[1] < n; ++s[1])
            for (s[2] = s[1] + 1; s[2] < n; ++s[2])
                for (s[3] = s[2] + 1; s[3] < n; ++s[3]) {
                    bool cyc = false;
                    if (!induced_p4_or_c4_order(g, s, &cyc).empty()) return true;
                }
    return false;
}

void for_each_simple_path(const MixedGraph& g,
                          const std::function<bool(const std::vector<NodeId>&)>& visit) {
    std::vector<NodeId> path;
    NodeSet on_path = 0;
    bool stop = false;
    std::function<void(NodeId)> dfs = [&](NodeId v) {
        if (stop) return;
        path.push_back(v);
        on_path = set_with(on_path, v);
        if (path.size() >= 2 && !visit(path)) stop = true;
        if (!stop)
            for (NodeId u : SetBits(g.adjacents(v) & ~on_path)) dfs(u);
        path.pop_back();
        on_path = set_without(on_path, v);
    };
    for (NodeId v = 0; v < g.node_count() && !stop; ++v) dfs(v);
}

std::string to_string(Mark m) {
    switch (m) {
    case Mark::None: return "none";
    case Mark::Tail: return "tail";
    case Mark::Head: return "head";
    }
    return "?";
}

std::string to_string(EdgeType t) {
    switch (t) {
    case EdgeType::Line: return "line";
    case EdgeType::Arrow: return "arrow";
    case EdgeType::Arc: return "arc";
    }
    return "?";
}

std::string edge_token(Mark mark_a, Mark mark_b) {
    if (mark_a == Mark::Tail && mark_b == Mark::Tail) return "--";
    if (mark_a == Mark::Tail && mark_b == Mark::Head) return "->";
    if (mark_a == Mark::Head && mark_b == Mark::Tail) return "<-";
    return "<->";
}

} // namespace lmg
