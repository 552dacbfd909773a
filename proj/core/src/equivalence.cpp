#include "lmg/equivalence.hpp"

#include <algorithm>
#include <sstream>

#include "lmg/classification.hpp"

namespace lmg {

namespace {

void check_same_nodes(const MixedGraph& g1, const MixedGraph& g2) {
    if (g1.labels() != g2.labels()) throw DomainMismatch("graphs have different node sets");
}

bool same_skeleton(const MixedGraph& g1, const MixedGraph& g2) {
    return g1.skeleton() == g2.skeleton();
}

std::string path_text(const MixedGraph& g, const std::vector<NodeId>& nodes) {
    std::ostringstream out;
    out << '<';
    for (std::size_t k = 0; k < nodes.size(); ++k) out << (k ? "," : "") << g.label(nodes[k]);
    out << '>';
    return out.str();
}

} // namespace

std::set<Triple> OrderedColliderTable::triple_set() const {
    std::set<Triple> s;
    for (const auto& [t, n] : entries) s.insert(t);
    return s;
}

std::vector<DiscriminatingPath> discriminating_paths(const MixedGraph& g) {
    require_mag(g);
    std::vector<DiscriminatingPath> out;
    for_each_simple_path(g, [&](const std::vector<NodeId>& path) {
        if (path.size() < 4) return true;
        // path = <j, q_1 .. q_m, l, i>
        NodeId j = path.front();
        NodeId i = path.back();
        NodeId l = path[path.size() - 2];
        if (g.adjacent(j, i)) return true;
        bool ok = true;
        for (std::size_t k = 1; k + 2 < path.size() && ok; ++k) {
            NodeId q = path[k];
            ok = is_collider(g, path[k - 1], q, path[k + 1]) &&
                 g.head_at(q, i) && g.end_mark(i, q) == Mark::Tail; // q -> i
        }
        if (ok) out.push_back({path, make_triple(path[path.size() - 3], l, i)});
        return true;
    });
    return out;
}

namespace {

// The collider triples a discriminating path cites: those centred at each q_n.
std::vector<Triple> cited_triples(const std::vector<NodeId>& path) {
    std::vector<Triple> out;
    for (std::size_t k = 1; k + 2 < path.size(); ++k)
        out.push_back(make_triple(path[k - 1], path[k], path[k + 1]));
    return out;
}

OrderedColliderTable collider_orders_unchecked(const MixedGraph& g) {
    OrderedColliderTable table;
    std::set<Triple> colliders;
    for (const VConfiguration& v : v_configurations(g))
        if (v.collider) colliders.insert({v.left, v.mid, v.right});

    for (const Triple& t : colliders)
        if (!g.adjacent(t.a, t.b)) table.entries[t] = 0;

    // Discriminating paths are fixed; iterate to the fixed point, assigning a
    // triple 1 + max(cited orders) once every cited triple has an order.
    std::vector<DiscriminatingPath> paths;
    for_each_simple_path(g, [&](const std::vector<NodeId>& path) {
        if (path.size() < 4 || g.adjacent(path.front(), path.back())) return true;
        NodeId i = path.back();
        for (std::size_t k = 1; k + 2 < path.size(); ++k) {
            NodeId q = path[k];
            if (!is_collider(g, path[k - 1], q, path[k + 1]) || !g.head_at(q, i) ||
                g.end_mark(i, q) != Mark::Tail)
                return true;
        }
        paths.push_back({path, make_triple(path[path.size() - 3], path[path.size() - 2], i)});
        return true;
    });

    bool changed = true;
    while (changed) {
        changed = false;
        for (const DiscriminatingPath& d : paths) {
            if (!colliders.count(d.target) || table.entries.count(d.target)) continue;
            int order = 0;
            bool all_cited = true;
            for (const Triple& c : cited_triples(d.nodes)) {
                auto it = table.entries.find(c);
                if (it == table.entries.end()) {
                    all_cited = false;
                    break;
                }
                order = std::max(order, it->second + 1);
            }
            if (all_cited) {
                table.entries[d.target] = order;
                changed = true;
            }
        }
    }
    return table;
}

ColliderPathSet collider_paths_unchecked(const MixedGraph& g) {
    // All collider paths grouped by endpoint pair, then filtered by
    // inner-node-set minimality within the group.
    std::map<std::pair<NodeId, NodeId>, std::vector<std::pair<NodeSet, std::vector<NodeId>>>>
        groups;
    for_each_simple_path(g, [&](const std::vector<NodeId>& path) {
        if (path.size() < 3) return true;
        for (std::size_t k = 1; k + 1 < path.size(); ++k)
            if (!is_collider(g, path[k - 1], path[k], path[k + 1]))
                return true; // prefix pruning: inner nodes must all collide
        if (path.front() < path.back()) { // canonical direction only
            NodeSet inner = 0;
            for (std::size_t k = 1; k + 1 < path.size(); ++k) inner = set_with(inner, path[k]);
            groups[{path.front(), path.back()}].push_back({inner, path});
        }
        return true;
    });

    ColliderPathSet result;
    for (auto& [endpoints, list] : groups) {
        bool endpoint_edge = g.adjacent(endpoints.first, endpoints.second);
        for (const auto& [inner, path] : list) {
            bool minimal = true;
            for (const auto& [other_inner, other] : list)
                if (other_inner != inner && (other_inner & ~inner) == 0) {
                    minimal = false;
                    break;
                }
            if (!minimal) continue;
            (endpoint_edge ? result.cycles : result.paths).insert(path);
        }
    }
    return result;
}

} // namespace

OrderedColliderTable colliders_with_order(const MixedGraph& g) {
    require_mag(g);
    return collider_orders_unchecked(g);
}

ColliderPathSet minimal_collider_paths(const MixedGraph& g) {
    require_mag(g);
    return collider_paths_unchecked(g);
}

std::set<Triple> unshielded_colliders(const MixedGraph& g) {
    std::set<Triple> s;
    for (const VConfiguration& v : v_configurations(g))
        if (v.collider && !v.shielded) s.insert({v.left, v.mid, v.right});
    return s;
}

bool equivalent_mags(const MixedGraph& g1, const MixedGraph& g2, EquivMethod method) {
    check_same_nodes(g1, g2);
    require_mag(g1);
    require_mag(g2);
    if (!same_skeleton(g1, g2)) return false;
    if (method == EquivMethod::Order)
        return collider_orders_unchecked(g1).triple_set() ==
               collider_orders_unchecked(g2).triple_set();
    // Minimal collider cycles may differ between equivalent graphs; only the
    // paths determine the model.
    return collider_paths_unchecked(g1).paths == collider_paths_unchecked(g2).paths;
}

bool equivalent_dags(const MixedGraph& g1, const MixedGraph& g2) {
    check_same_nodes(g1, g2);
    if (auto v = is_dag(g1); !v.ok) throw ClassViolation("first graph is not a DAG: " + v.witness);
    if (auto v = is_dag(g2); !v.ok) throw ClassViolation("second graph is not a DAG: " + v.witness);
    return same_skeleton(g1, g2) && unshielded_colliders(g1) == unshielded_colliders(g2);
}

bool equivalent_simple(const MixedGraph& g1, const MixedGraph& g2) {
    check_same_nodes(g1, g2);
    bool ug = is_ug(g1).ok && is_ug(g2).ok;
    bool bg = is_bg(g1).ok && is_bg(g2).ok;
    if (!ug && !bg) throw ClassViolation("expects two UGs or two BGs");
    return g1 == g2;
}

bool equivalent_rcgs(const MixedGraph& g1, const MixedGraph& g2) {
    check_same_nodes(g1, g2);
    if (auto v = is_rcg(g1); !v.ok) throw ClassViolation("first graph is not an RCG: " + v.witness);
    if (auto v = is_rcg(g2); !v.ok)
        throw ClassViolation("second graph is not an RCG: " + v.witness);
    return same_skeleton(g1, g2) && unshielded_colliders(g1) == unshielded_colliders(g2);
}

bool equivalent_cross(const MixedGraph& g1, const MixedGraph& g2) {
    check_same_nodes(g1, g2);
    for (const MixedGraph* g : {&g1, &g2})
        if (auto v = is_rcg(*g); !v.ok)
            throw ClassViolation("graph is not in {RCG, BG, UG, DAG}: " + v.witness);
    return same_skeleton(g1, g2) && unshielded_colliders(g1) == unshielded_colliders(g2);
}

std::optional<std::string> equivalence_witness(const MixedGraph& g1, const MixedGraph& g2) {
    check_same_nodes(g1, g2);
    for (NodeId i = 0; i < g1.node_count(); ++i)
        for (NodeId j = i + 1; j < g1.node_count(); ++j)
            if (g1.adjacent(i, j) != g2.adjacent(i, j))
                return "skeleton edge '" + g1.label(i) + "' ~ '" + g1.label(j) + "' in " +
                       (g1.adjacent(i, j) ? "first" : "second") + " graph only";
    auto t1 = collider_orders_unchecked(g1).triple_set();
    auto t2 = collider_orders_unchecked(g2).triple_set();
    for (const auto& [a, b, side] :
         {std::tuple{&t1, &t2, "first"}, std::tuple{&t2, &t1, "second"}})
        for (const Triple& t : *a)
            if (!b->count(t))
                return "collider with order <" + g1.label(t.a) + "," + g1.label(t.mid) + "," +
                       g1.label(t.b) + "> in " + side + " graph only";
    auto p1 = collider_paths_unchecked(g1);
    auto p2 = collider_paths_unchecked(g2);
    for (const auto& [a, b, side] :
         {std::tuple{&p1, &p2, "first"}, std::tuple{&p2, &p1, "second"}})
        for (const auto& p : a->paths)
            if (!b->paths.count(p))
                return "minimal collider path " + path_text(g1, p) + " in " + side + " graph only";
    return std::nullopt;
}

} // namespace lmg
