#include "lmg/classification.hpp"

#include <algorithm>
#include <sstream>

#include "lmg/separation.hpp"

namespace lmg {

namespace {

std::string cycle_text(const MixedGraph& g, const std::vector<NodeId>& cycle) {
    std::ostringstream out;
    out << "cycle <";
    for (std::size_t k = 0; k < cycle.size(); ++k)
        out << (k ? "," : "") << g.label(cycle[k]);
    out << ">";
    return out.str();
}

} // namespace

Verdict is_ancestral(const MixedGraph& g) {
    for (NodeId i = 0; i < g.node_count(); ++i) {
        NodeSet ps = g.parents(i) | g.spouses(i);
        if (g.neighbours(i) != 0 && ps != 0)
            return {false, "node '" + g.label(i) + "' has a line and an arrowhead"};
        if (set_contains(g.ancestors(ps), i))
            return {false, "node '" + g.label(i) + "' is an ancestor of its parents or spouses"};
    }
    return {true, ""};
}

Verdict is_maximal(const MixedGraph& g, int max_nodes) {
    if (g.node_count() > max_nodes)
        throw EnumerationLimit("maximality search capped at " + std::to_string(max_nodes) +
                               " nodes");
    for (NodeId i = 0; i < g.node_count(); ++i)
        for (NodeId j = i + 1; j < g.node_count(); ++j) {
            if (g.adjacent(i, j)) continue;
            NodeSet others = g.all_nodes() & ~singleton(i) & ~singleton(j);
            bool separable = false;
            NodeSet c = 0;
            while (true) {
                if (m_separated(g, i, j, c)) {
                    separable = true;
                    break;
                }
                if (c == others) break;
                c = (c - others) & others;
            }
            if (!separable)
                return {false,
                        "inseparable non-adjacent pair ('" + g.label(i) + "','" + g.label(j) + "')"};
        }
    return {true, ""};
}

Verdict is_ug(const MixedGraph& g) {
    for (const Edge& e : g.edges())
        if (e.mark_a != Mark::Tail || e.mark_b != Mark::Tail)
            return {false, "non-line edge '" + g.label(e.a) + "' ~ '" + g.label(e.b) + "'"};
    return {true, ""};
}

Verdict is_bg(const MixedGraph& g) {
    for (const Edge& e : g.edges())
        if (e.mark_a != Mark::Head || e.mark_b != Mark::Head)
            return {false, "non-arc edge '" + g.label(e.a) + "' ~ '" + g.label(e.b) + "'"};
    return {true, ""};
}

Verdict is_dag(const MixedGraph& g) {
    for (const Edge& e : g.edges())
        if (g.edge_type(e.a, e.b) != EdgeType::Arrow)
            return {false, "non-arrow edge '" + g.label(e.a) + "' ~ '" + g.label(e.b) + "'"};
    if (directed_cycle_exists(g)) return {false, "direction-preserving cycle"};
    return {true, ""};
}

Verdict is_rcg(const MixedGraph& g) {
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.neighbours(v) != 0 && (g.parents(v) | g.spouses(v)) != 0)
            return {false, "arrowhead pointing to line-incident node '" + g.label(v) + "'"};
    if (directed_cycle_exists(g)) return {false, "direction-preserving cycle"};
    auto cycles = arc_direction_preserving_cycles(g);
    if (!cycles.empty())
        return {false, "arc-direction-preserving " + cycle_text(g, cycles.front())};
    return {true, ""};
}

bool is_mag(const MixedGraph& g, int max_nodes) {
    return is_ancestral(g).ok && is_maximal(g, max_nodes).ok;
}

void require_mag(const MixedGraph& g, int max_nodes) {
    if (auto v = is_ancestral(g); !v.ok) throw ClassViolation("not ancestral: " + v.witness);
    if (auto v = is_maximal(g, max_nodes); !v.ok) throw ClassViolation("not maximal: " + v.witness);
}

ClassMembership classify(const MixedGraph& g, int max_nodes) {
    ClassMembership m;
    auto record = [&](const char* name, Verdict v, bool* flag) {
        *flag = v.ok;
        if (!v.ok) m.witnesses[name] = v.witness;
    };
    record("ug", is_ug(g), &m.is_ug);
    record("bg", is_bg(g), &m.is_bg);
    record("dag", is_dag(g), &m.is_dag);
    record("rcg", is_rcg(g), &m.is_rcg);
    record("ancestral", is_ancestral(g), &m.is_ancestral);
    record("maximal", is_maximal(g, max_nodes), &m.is_maximal);
    return m;
}

ChainDecomposition chain_components(const MixedGraph& g) {
    if (auto v = is_rcg(g); !v.ok) throw ClassViolation("not an RCG: " + v.witness);

    ChainDecomposition d;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.neighbours(v) != 0) d.undirected_part = set_with(d.undirected_part, v);

    // Arc connected components over the remaining nodes.
    NodeSet rest = g.all_nodes() & ~d.undirected_part;
    std::vector<NodeSet> comps;
    NodeSet assigned = 0;
    for (NodeId v : SetBits(rest)) {
        if (set_contains(assigned, v)) continue;
        NodeSet comp = singleton(v);
        std::vector<NodeId> work{v};
        while (!work.empty()) {
            NodeId x = work.back();
            work.pop_back();
            for (NodeId u : SetBits(g.spouses(x) & rest & ~comp)) {
                comp = set_with(comp, u);
                work.push_back(u);
            }
        }
        assigned |= comp;
        comps.push_back(comp);
    }

    // Number components so arrows between them run from higher to lower:
    // repeatedly take a component with no arrows into an unnumbered one,
    // ties by smallest member label.
    std::vector<bool> numbered(comps.size(), false);
    auto arrows_to_unnumbered = [&](std::size_t a) {
        for (NodeId v : SetBits(comps[a]))
            for (NodeId ch : SetBits(g.children(v) & rest))
                for (std::size_t b = 0; b < comps.size(); ++b)
                    if (b != a && !numbered[b] && set_contains(comps[b], ch)) return true;
        return false;
    };
    for (std::size_t step = 0; step < comps.size(); ++step) {
        std::size_t pick = comps.size();
        for (std::size_t a = 0; a < comps.size(); ++a) {
            if (numbered[a] || arrows_to_unnumbered(a)) continue;
            if (pick == comps.size() ||
                std::countr_zero(comps[a]) < std::countr_zero(comps[pick]))
                pick = a;
        }
        if (pick == comps.size())
            throw ClassViolation("arrow quotient of chain components has a cycle");
        numbered[pick] = true;
        d.components.push_back(comps[pick]);
    }
    return d;
}

} // namespace lmg
