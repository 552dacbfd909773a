#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lmg/graph.hpp"
#include "lmg/representation.hpp"

namespace lmg {

// Maximum cardinality search ranking, 1-based; ties by smallest label.  On a
// chordal UG, orienting lines from lower to higher rank yields a DAG whose
// parents-per-node form cliques.
struct McsOrder {
    std::map<NodeId, int> ranks;
};

McsOrder mcs_order(const MixedGraph& g); // throws ClassViolation unless UG

struct RewriteStep {
    int id;
    NodeId a;
    NodeId b;
    Mark before_a, before_b;
    Mark after_a, after_b;

    std::string to_text(const MixedGraph& g) const;
};

struct TransformReport {
    MixedGraph input;
    MixedGraph output;
    std::vector<RewriteStep> steps;
    std::optional<bool> verified;
};

struct TransformOptions {
    // Run even when the representational precondition fails; the report is
    // then marked verified = false.
    bool force = false;
    // Non-zero: shuffle the rewrite scan order (used by order-robustness
    // tests); zero keeps the deterministic smallest-label order.
    std::uint64_t scan_seed = 0;
};

TransformReport to_dag(const MixedGraph& g, const TransformOptions& opts = {});
TransformReport to_ug(const MixedGraph& g, const TransformOptions& opts = {});
TransformReport to_bg(const MixedGraph& g, const TransformOptions& opts = {});
TransformReport to_rcg(const MixedGraph& g, const TransformOptions& opts = {});

TransformReport transform_to(const MixedGraph& g, GraphClass target,
                             const TransformOptions& opts = {});

} // namespace lmg
