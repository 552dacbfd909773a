#include "lmg/representation.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "lmg/classification.hpp"
#include "lmg/equivalence.hpp"

namespace lmg {

std::optional<GraphClass> class_from_name(std::string_view raw) {
    std::string name(raw);
    for (char& ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (name == "lmg") return GraphClass::LMG;
    if (name == "ug") return GraphClass::UG;
    if (name == "bg") return GraphClass::BG;
    if (name == "dag") return GraphClass::DAG;
    if (name == "rcg") return GraphClass::RCG;
    if (name == "mag") return GraphClass::MAG;
    return std::nullopt;
}

std::string to_string(GraphClass c) {
    switch (c) {
    case GraphClass::LMG: return "lmg";
    case GraphClass::UG: return "ug";
    case GraphClass::BG: return "bg";
    case GraphClass::DAG: return "dag";
    case GraphClass::RCG: return "rcg";
    case GraphClass::MAG: return "mag";
    }
    return "?";
}

std::string to_string(ReprViolation v) {
    switch (v) {
    case ReprViolation::NonChordalLines: return "NonChordalLines";
    case ReprViolation::MinimalColliderPath4: return "MinimalColliderPath4";
    case ReprViolation::UnshieldedCollider: return "UnshieldedCollider";
    case ReprViolation::UnshieldedNonCollider: return "UnshieldedNonCollider";
    case ReprViolation::ArcDirPreservingCycleObstruction:
        return "ArcDirPreservingCycleObstruction";
    case ReprViolation::ColliderP4C4: return "ColliderP4C4";
    case ReprViolation::P4C4: return "P4C4";
    case ReprViolation::NonChordal: return "NonChordal";
    case ReprViolation::NonComplete: return "NonComplete";
    }
    return "?";
}

namespace {

std::string seq_text(const MixedGraph& g, const std::vector<NodeId>& nodes) {
    std::ostringstream out;
    out << '<';
    for (std::size_t k = 0; k < nodes.size(); ++k) out << (k ? "," : "") << g.label(nodes[k]);
    out << '>';
    return out.str();
}

std::string triple_text(const MixedGraph& g, const Triple& t) {
    return "<" + g.label(t.a) + "," + g.label(t.mid) + "," + g.label(t.b) + ">";
}

} // namespace

ReprVerdict representable_as_dag(const MixedGraph& g, Length4Reading reading) {
    require_mag(g);
    if (!is_chordal(g.edge_type_subgraph(EdgeType::Line)))
        return {false, ReprViolation::NonChordalLines, "line-induced subgraph is not chordal"};
    ColliderPathSet cps = minimal_collider_paths(g);
    auto hit = [&](const std::vector<NodeId>& p) {
        return reading == Length4Reading::Exactly4 ? p.size() == 4 : p.size() >= 4;
    };
    for (const auto& p : cps.paths)
        if (hit(p))
            return {false, ReprViolation::MinimalColliderPath4,
                    "minimal collider path " + seq_text(g, p)};
    // A chord splits a collider cycle into smaller cycles; only chordless
    // cycles obstruct (the P4/C4 corollaries rely on this).
    auto chordless = [&](const std::vector<NodeId>& p) {
        std::size_t n = p.size();
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 2; y < n; ++y) {
                if (x == 0 && y == n - 1) continue; // closing edge
                if (g.adjacent(p[x], p[y])) return false;
            }
        return true;
    };
    for (const auto& p : cps.cycles)
        if (hit(p) && chordless(p))
            return {false, ReprViolation::MinimalColliderPath4,
                    "minimal collider cycle " + seq_text(g, p)};
    return {true, std::nullopt, ""};
}

ReprVerdict representable_as_ug(const MixedGraph& g) {
    require_mag(g);
    auto uc = unshielded_colliders(g);
    if (!uc.empty())
        return {false, ReprViolation::UnshieldedCollider,
                "unshielded collider " + triple_text(g, *uc.begin())};
    return {true, std::nullopt, ""};
}

ReprVerdict representable_as_bg(const MixedGraph& g) {
    require_mag(g);
    for (const VConfiguration& v : v_configurations(g))
        if (!v.collider && !v.shielded)
            return {false, ReprViolation::UnshieldedNonCollider,
                    "unshielded non-collider " + triple_text(g, make_triple(v.left, v.mid, v.right))};
    return {true, std::nullopt, ""};
}

namespace detail {

bool break_adp_cycles(MixedGraph& h, std::uint64_t seed,
                      const std::function<void(NodeId, NodeId)>& commit) {
    while (true) {
        auto cycles = arc_direction_preserving_cycles(h);
        if (cycles.empty()) return true;
        std::vector<std::pair<NodeId, NodeId>> candidates; // (x, y): drop head at x
        for (const auto& cycle : cycles) {
            std::size_t n = cycle.size();
            for (std::size_t t = 0; t < n; ++t) {
                NodeId a = cycle[t], b = cycle[(t + 1) % n];
                if (h.edge_type(a, b) == EdgeType::Arc) {
                    candidates.push_back({a, b});
                    candidates.push_back({b, a});
                }
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        if (seed != 0) {
            std::mt19937_64 rng(seed);
            std::shuffle(candidates.begin(), candidates.end(), rng);
        }
        bool applied = false;
        for (auto [x, y] : candidates) {
            MixedGraph trial = h;
            trial.set_end_mark(y, x, Mark::Tail);
            if (!is_mag(trial) || !equivalent_mags(h, trial, EquivMethod::Order)) continue;
            if (commit)
                commit(x, y);
            else
                h = trial;
            applied = true;
            break;
        }
        if (!applied) return false;
    }
}

} // namespace detail

ReprVerdict representable_as_rcg(const MixedGraph& g) {
    require_mag(g);
    MixedGraph h = g;
    if (detail::break_adp_cycles(h, 0, nullptr)) return {true, std::nullopt, ""};
    auto cycles = arc_direction_preserving_cycles(h);
    return {false, ReprViolation::ArcDirPreservingCycleObstruction,
            "obstructing cycle " + seq_text(h, cycles.front())};
}

ReprVerdict representable_as_dag_bg(const MixedGraph& g) {
    if (auto v = is_bg(g); !v.ok) throw ClassViolation("not a BG: " + v.witness);
    if (contains_p4_or_c4(g)) return {false, ReprViolation::P4C4, "induced P4 or C4"};
    return {true, std::nullopt, ""};
}

ReprVerdict representable_as_dag_ug(const MixedGraph& g) {
    if (auto v = is_ug(g); !v.ok) throw ClassViolation("not a UG: " + v.witness);
    if (!is_chordal(g)) return {false, ReprViolation::NonChordal, "chordless cycle"};
    return {true, std::nullopt, ""};
}

ReprVerdict representable_as_dag_rcg(const MixedGraph& g) {
    if (auto v = is_rcg(g); !v.ok) throw ClassViolation("not an RCG: " + v.witness);
    if (!is_chordal(g.edge_type_subgraph(EdgeType::Line)))
        return {false, ReprViolation::NonChordalLines, "line-induced subgraph is not chordal"};
    ChainDecomposition d = chain_components(g);
    for (const NodeSet& tau : d.components) {
        NodeSet with_parents = tau;
        for (NodeId v : SetBits(tau)) with_parents |= g.parents(v);
        if (contains_collider_p4_or_c4(g.induced_subgraph(with_parents)))
            return {false, ReprViolation::ColliderP4C4,
                    "collider P4 or C4 in a chain component with its parents"};
    }
    return {true, std::nullopt, ""};
}

namespace {

// A node adjacent to all other members of s, within each connected component
// of the induced subgraph on s.
bool dominated_per_component(const MixedGraph& g, NodeSet s) {
    NodeSet left = s;
    while (left != 0) {
        NodeId start = std::countr_zero(left);
        NodeSet comp = singleton(start);
        std::vector<NodeId> work{start};
        while (!work.empty()) {
            NodeId v = work.back();
            work.pop_back();
            for (NodeId u : SetBits(g.adjacents(v) & s & ~comp)) {
                comp = set_with(comp, u);
                work.push_back(u);
            }
        }
        bool found = false;
        for (NodeId v : SetBits(comp))
            if ((comp & ~set_with(g.adjacents(v), v)) == 0) {
                found = true;
                break;
            }
        if (!found) return false;
        left &= ~comp;
    }
    return true;
}

} // namespace

bool dag_necessary_condition(const MixedGraph& g) {
    if (is_bg(g).ok) return dominated_per_component(g, g.all_nodes());
    if (is_rcg(g).ok) {
        ChainDecomposition d = chain_components(g);
        for (const NodeSet& tau : d.components) {
            NodeSet with_parents = tau;
            for (NodeId v : SetBits(tau)) with_parents |= g.parents(v);
            if (!dominated_per_component(g, with_parents)) return false;
        }
        return true;
    }
    // MAG rule: arc-subgraph nodes together with their parents.
    NodeSet w = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.spouses(v) != 0) w = set_with(w, v);
    NodeSet with_parents = w;
    for (NodeId v : SetBits(w)) with_parents |= g.parents(v);
    return dominated_per_component(g, with_parents);
}

ReprVerdict representable_as(const MixedGraph& g, GraphClass target) {
    switch (target) {
    case GraphClass::DAG: return representable_as_dag(g);
    case GraphClass::UG: return representable_as_ug(g);
    case GraphClass::BG: return representable_as_bg(g);
    case GraphClass::RCG: return representable_as_rcg(g);
    case GraphClass::MAG:
    case GraphClass::LMG:
        require_mag(g);
        return {true, std::nullopt, ""};
    }
    throw Error("unknown target class");
}

} // namespace lmg
