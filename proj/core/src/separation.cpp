#include "lmg/separation.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace lmg {

namespace {

void check_query(const MixedGraph& g, const SeparationQuery& q) {
    NodeSet all = g.all_nodes();
    if ((q.a & ~all) || (q.b & ~all) || (q.c & ~all))
        throw NodeNotFound("query node out of range");
    if (q.a == 0 || q.b == 0) throw InvalidQuery("a and b must be non-empty");
    if ((q.a & q.b) || (q.a & q.c) || (q.b & q.c))
        throw InvalidQuery("a, b, c must be pairwise disjoint");
}

} // namespace

bool is_m_connecting(const MixedGraph& g, const Path& p, NodeSet c) {
    validate_path(g, p);
    NodeSet c_and_an = c | g.ancestors(c);
    for (std::size_t k = 1; k + 1 < p.nodes.size(); ++k) {
        NodeId v = p.nodes[k];
        bool collider = is_collider(g, p.nodes[k - 1], v, p.nodes[k + 1]);
        if (collider ? !set_contains(c_and_an, v) : set_contains(c, v)) return false;
    }
    return true;
}

namespace {

// Walk reachability matches path semantics only when no arrowhead points at a
// line-incident node; a walk may otherwise revisit such a node under two marks
// and connect where no single path does.
bool walk_search_exact(const MixedGraph& g) {
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.neighbours(v) != 0 && (g.parents(v) | g.spouses(v)) != 0) return false;
    return true;
}

} // namespace

bool m_separated(const MixedGraph& g, const SeparationQuery& q) {
    check_query(g, q);
    if (!walk_search_exact(g)) return m_separated_by_paths(g, q);
    NodeSet c_and_an = q.c | g.ancestors(q.c);
    int n = g.node_count();

    // State: (node, mark at the node on the edge we arrived by).  An inner
    // node passes as a collider when both incident marks are heads and it is
    // in C ∪ an(C), and as a non-collider when it is outside C.
    std::vector<std::array<bool, 2>> visited(static_cast<std::size_t>(n), {false, false});
    std::vector<std::pair<NodeId, Mark>> stack;

    auto arrive = [&](NodeId v, Mark m) {
        if (set_contains(q.b, v)) return true;
        int slot = m == Mark::Head ? 1 : 0;
        if (!visited[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot)]) {
            visited[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot)] = true;
            stack.emplace_back(v, m);
        }
        return false;
    };

    for (NodeId a : SetBits(q.a))
        for (NodeId u : SetBits(g.adjacents(a)))
            if (arrive(u, g.end_mark(a, u))) return false;

    while (!stack.empty()) {
        auto [t, m1] = stack.back();
        stack.pop_back();
        for (NodeId u : SetBits(g.adjacents(t))) {
            Mark m2 = g.end_mark(u, t); // mark at t on the outgoing edge
            bool collider = m1 == Mark::Head && m2 == Mark::Head;
            bool passable = collider ? set_contains(c_and_an, t) : !set_contains(q.c, t);
            if (passable && arrive(u, g.end_mark(t, u))) return false;
        }
    }
    return true;
}

bool m_separated(const MixedGraph& g, NodeId i, NodeId j, NodeSet c) {
    return m_separated(g, {singleton(i), singleton(j), c});
}

bool m_separated_by_paths(const MixedGraph& g, const SeparationQuery& q) {
    check_query(g, q);
    NodeSet c_and_an = q.c | g.ancestors(q.c);
    bool connected = false;
    for_each_simple_path(g, [&](const std::vector<NodeId>& path) {
        if (!set_contains(q.a, path.front())) return true;
        // Prefix pruning: every inner node so far must already be passable.
        for (std::size_t k = 1; k + 1 < path.size(); ++k) {
            NodeId v = path[k];
            bool collider = is_collider(g, path[k - 1], v, path[k + 1]);
            if (collider ? !set_contains(c_and_an, v) : set_contains(q.c, v)) return true;
        }
        if (set_contains(q.b, path.back())) {
            connected = true;
            return false;
        }
        return true;
    });
    return !connected;
}

IndependenceModel independence_model(const MixedGraph& g, std::optional<int> max_condition_size,
                                     int max_nodes) {
    int n = g.node_count();
    if (n > max_nodes)
        throw EnumerationLimit("independence model enumeration capped at " +
                               std::to_string(max_nodes) + " nodes");
    IndependenceModel model{g.labels(), {}};
    int cap = max_condition_size.value_or(n);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) {
            NodeSet others = g.all_nodes() & ~singleton(i) & ~singleton(j);
            // Subset enumeration within the mask.
            NodeSet c = 0;
            while (true) {
                if (set_size(c) <= cap && m_separated(g, i, j, c))
                    model.statements.push_back({i, j, c});
                if (c == others) break;
                c = (c - others) & others;
            }
        }
    std::sort(model.statements.begin(), model.statements.end());
    return model;
}

std::string IndependenceModel::to_text() const {
    // Lines ordered by (i, j, conditioning labels lexicographically).
    auto cond_labels = [&](NodeSet c) {
        std::vector<std::string> v;
        for (NodeId u : SetBits(c)) v.push_back(labels.at(static_cast<std::size_t>(u)));
        return v;
    };
    std::vector<Statement> sorted = statements;
    std::sort(sorted.begin(), sorted.end(), [&](const Statement& x, const Statement& y) {
        if (x.i != y.i) return x.i < y.i;
        if (x.j != y.j) return x.j < y.j;
        return cond_labels(x.cond) < cond_labels(y.cond);
    });
    std::ostringstream out;
    for (const Statement& s : sorted) {
        out << labels.at(static_cast<std::size_t>(s.i)) << " ⊥ "
            << labels.at(static_cast<std::size_t>(s.j)) << " |";
        bool first = true;
        for (const auto& l : cond_labels(s.cond)) {
            out << (first ? " " : ",") << l;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace lmg
