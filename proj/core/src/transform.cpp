#include "lmg/transform.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "lmg/classification.hpp"
#include "lmg/equivalence.hpp"

namespace lmg {

std::string RewriteStep::to_text(const MixedGraph& g) const {
    std::ostringstream out;
    out << "step " << id << ": " << g.label(a) << ' ' << g.label(b) << ' '
        << edge_token(before_a, before_b) << " => " << edge_token(after_a, after_b);
    return out.str();
}

McsOrder mcs_order(const MixedGraph& g) {
    if (auto v = is_ug(g); !v.ok) throw ClassViolation("MCS expects a UG: " + v.witness);
    int n = g.node_count();
    McsOrder order;
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> ranked(static_cast<std::size_t>(n), false);
    for (int rank = 1; rank <= n; ++rank) {
        NodeId best = -1;
        for (NodeId v = 0; v < n; ++v)
            if (!ranked[static_cast<std::size_t>(v)] &&
                (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        ranked[static_cast<std::size_t>(best)] = true;
        order.ranks[best] = rank;
        for (NodeId u : SetBits(g.neighbours(best)))
            if (!ranked[static_cast<std::size_t>(u)]) ++weight[static_cast<std::size_t>(u)];
    }
    return order;
}

namespace {

class StepLog {
public:
    explicit StepLog(std::vector<RewriteStep>* steps) : steps_(steps) {}

    // Records the current marks of {a, b}, applies the new ones.
    void rewrite(MixedGraph& g, NodeId a, NodeId b, Mark new_at_a, Mark new_at_b) {
        RewriteStep s{static_cast<int>(steps_->size()) + 1, a,         b,
                      g.end_mark(b, a),                     g.end_mark(a, b),
                      new_at_a,                             new_at_b};
        g.set_end_mark(b, a, new_at_a);
        g.set_end_mark(a, b, new_at_b);
        steps_->push_back(s);
    }

private:
    std::vector<RewriteStep>* steps_;
};

void check_precondition(const MixedGraph& g, GraphClass target, const TransformOptions& opts,
                        bool* verified_false) {
    ReprVerdict v = representable_as(g, target);
    if (v.possible) return;
    if (!opts.force)
        throw PreconditionViolated("not representable as " + to_string(target) + ": " +
                                   to_string(*v.violated_condition) +
                                   (v.witness.empty() ? "" : " (" + v.witness + ")"));
    *verified_false = true;
}

template <typename T>
void maybe_shuffle(std::vector<T>& items, std::uint64_t seed) {
    if (seed == 0) return;
    std::mt19937_64 rng(seed);
    std::shuffle(items.begin(), items.end(), rng);
}

// Exhaustively replace unshielded collider V-configurations that still carry
// an arc by collisions: drop the head at the outer end of each arc.
void rewrite_unshielded_colliders(MixedGraph& h, StepLog& log, std::uint64_t seed) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Triple> candidates;
        for (const VConfiguration& v : v_configurations(h))
            if (v.collider && !v.shielded &&
                (h.edge_type(v.left, v.mid) == EdgeType::Arc ||
                 h.edge_type(v.right, v.mid) == EdgeType::Arc))
                candidates.push_back({v.left, v.mid, v.right});
        maybe_shuffle(candidates, seed);
        for (const Triple& t : candidates) {
            for (NodeId outer : {t.a, t.b})
                if (h.edge_type(outer, t.mid) == EdgeType::Arc)
                    log.rewrite(h, outer, t.mid, Mark::Tail, Mark::Head);
            changed = true;
            break; // rescan; a rewrite can shield nothing but can consume arcs
        }
    }
}

// Total order with every arrow running from a higher number to a lower one:
// repeatedly number the smallest-label node whose arrow targets are all
// numbered.  Subsumes the arbitrary numbering of arc-only nodes.
std::vector<int> reverse_topological_numbers(const MixedGraph& h) {
    int n = h.node_count();
    std::vector<int> number(static_cast<std::size_t>(n), 0);
    for (int next = 1; next <= n; ++next) {
        NodeId pick = -1;
        for (NodeId v = 0; v < n && pick < 0; ++v) {
            if (number[static_cast<std::size_t>(v)] != 0) continue;
            bool ready = true;
            for (NodeId c : SetBits(h.children(v)))
                if (number[static_cast<std::size_t>(c)] == 0) {
                    ready = false;
                    break;
                }
            if (ready) pick = v;
        }
        if (pick < 0)
            throw Error("internal: arrow structure is cyclic after collider rewriting");
        number[static_cast<std::size_t>(pick)] = next;
    }
    return number;
}

} // namespace

TransformReport to_dag(const MixedGraph& g, const TransformOptions& opts) {
    require_mag(g);
    TransformReport report{g, g, {}, std::nullopt};
    bool forced = false;
    check_precondition(g, GraphClass::DAG, opts, &forced);
    if (forced) report.verified = false;

    MixedGraph& h = report.output;
    StepLog log(&report.steps);

    // Steps 1-2: orient the line part along a maximum cardinality search.
    MixedGraph lines = g.edge_type_subgraph(EdgeType::Line);
    McsOrder mcs = mcs_order(lines);
    for (const Edge& e : g.edges()) {
        if (g.edge_type(e.a, e.b) != EdgeType::Line) continue;
        int ra = mcs.ranks.at(lines.node(g.label(e.a)));
        int rb = mcs.ranks.at(lines.node(g.label(e.b)));
        if (ra < rb)
            log.rewrite(h, e.a, e.b, Mark::Tail, Mark::Head);
        else
            log.rewrite(h, e.b, e.a, Mark::Tail, Mark::Head);
    }

    // Step 3: unshielded colliders become collisions.
    rewrite_unshielded_colliders(h, log, opts.scan_seed);

    // Steps 4-6: one reverse-topological completion, then arcs become arrows
    // from higher numbers to lower ones.
    std::vector<int> number = reverse_topological_numbers(h);
    for (const Edge& e : h.edges()) {
        if (h.edge_type(e.a, e.b) != EdgeType::Arc) continue;
        if (number[static_cast<std::size_t>(e.a)] > number[static_cast<std::size_t>(e.b)])
            log.rewrite(h, e.a, e.b, Mark::Tail, Mark::Head);
        else
            log.rewrite(h, e.b, e.a, Mark::Tail, Mark::Head);
    }
    return report;
}

TransformReport to_ug(const MixedGraph& g, const TransformOptions& opts) {
    require_mag(g);
    TransformReport report{g, g, {}, std::nullopt};
    bool forced = false;
    check_precondition(g, GraphClass::UG, opts, &forced);
    if (forced) report.verified = false;

    StepLog log(&report.steps);
    for (const Edge& e : g.edges())
        if (e.mark_a != Mark::Tail || e.mark_b != Mark::Tail)
            log.rewrite(report.output, e.a, e.b, Mark::Tail, Mark::Tail);
    return report;
}

TransformReport to_bg(const MixedGraph& g, const TransformOptions& opts) {
    require_mag(g);
    TransformReport report{g, g, {}, std::nullopt};
    bool forced = false;
    check_precondition(g, GraphClass::BG, opts, &forced);
    if (forced) report.verified = false;

    StepLog log(&report.steps);
    for (const Edge& e : g.edges())
        if (e.mark_a != Mark::Head || e.mark_b != Mark::Head)
            log.rewrite(report.output, e.a, e.b, Mark::Head, Mark::Head);
    return report;
}

TransformReport to_rcg(const MixedGraph& g, const TransformOptions& opts) {
    require_mag(g);
    TransformReport report{g, g, {}, std::nullopt};
    bool forced = false;
    check_precondition(g, GraphClass::RCG, opts, &forced);
    if (forced) report.verified = false;

    MixedGraph& h = report.output;
    StepLog log(&report.steps);

    bool ok = detail::break_adp_cycles(h, opts.scan_seed, [&](NodeId x, NodeId y) {
        log.rewrite(h, x, y, Mark::Tail, Mark::Head); // x <-> y becomes x -> y
    });
    if (!ok) report.verified = false; // only reachable under force
    return report;
}

TransformReport transform_to(const MixedGraph& g, GraphClass target,
                             const TransformOptions& opts) {
    switch (target) {
    case GraphClass::DAG: return to_dag(g, opts);
    case GraphClass::UG: return to_ug(g, opts);
    case GraphClass::BG: return to_bg(g, opts);
    case GraphClass::RCG: return to_rcg(g, opts);
    default: throw Error("transform target must be one of dag, ug, bg, rcg");
    }
}

} // namespace lmg
