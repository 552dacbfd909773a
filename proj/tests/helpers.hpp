#pragma once

#include <cctype>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lmg/graph.hpp"

namespace lmg::testing {

// Compact builder: whitespace-separated tokens, each an edge ("a--b",
// "a->b", "a<-b", "a<->b") or a bare isolated node ("a").
inline MixedGraph G(const std::string& text) {
    struct Tok {
        std::string a, b;
        Mark ma = Mark::None, mb = Mark::None;
        bool edge = false;
    };
    std::vector<Tok> toks;
    std::set<std::string> names;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        if (end == pos) break;
        std::string tok = text.substr(pos, end - pos);
        pos = end;
        Tok t;
        for (auto [sep, ma, mb] : {std::tuple{"<->", Mark::Head, Mark::Head},
                                   std::tuple{"->", Mark::Tail, Mark::Head},
                                   std::tuple{"<-", Mark::Head, Mark::Tail},
                                   std::tuple{"--", Mark::Tail, Mark::Tail}}) {
            auto at = tok.find(sep);
            if (at != std::string::npos) {
                t = {tok.substr(0, at), tok.substr(at + std::string(sep).size()), ma, mb, true};
                break;
            }
        }
        if (tok.find('-') == std::string::npos) t = {tok, "", Mark::None, Mark::None, false};
        names.insert(t.a);
        if (t.edge) names.insert(t.b);
        toks.push_back(t);
    }
    MixedGraph g(std::vector<std::string>(names.begin(), names.end()));
    for (const auto& t : toks)
        if (t.edge) g.add_edge(g.node(t.a), t.ma, g.node(t.b), t.mb);
    return g;
}

inline NodeSet S(const MixedGraph& g, std::initializer_list<const char*> labels) {
    NodeSet s = 0;
    for (const char* l : labels) s = set_with(s, g.node(l));
    return s;
}

inline std::vector<std::string> node_names(int n) {
    std::vector<std::string> labels;
    for (int k = 1; k <= n; ++k) labels.push_back("v" + std::to_string(k));
    return labels;
}

// Uniform choice among line, both arrow orientations and arc for each
// present pair.
inline void random_assign(std::mt19937_64& rng, MixedGraph& g, NodeId i, NodeId j) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: g.add_edge(i, j, EdgeType::Line); break;
    case 1: g.add_edge(i, j, EdgeType::Arrow); break;
    case 2: g.add_edge(j, i, EdgeType::Arrow); break;
    case 3: g.add_edge(i, j, EdgeType::Arc); break;
    }
}

inline MixedGraph random_graph(std::mt19937_64& rng, int n, double edge_prob = 0.45) {
    MixedGraph g{node_names(n)};
    std::bernoulli_distribution present(edge_prob);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            if (present(rng)) random_assign(rng, g, i, j);
    return g;
}

inline MixedGraph random_skeleton(std::mt19937_64& rng, int n, double edge_prob = 0.45) {
    MixedGraph g{node_names(n)};
    std::bernoulli_distribution present(edge_prob);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            if (present(rng)) g.add_edge(i, j, EdgeType::Line);
    return g;
}

inline MixedGraph random_orientation(std::mt19937_64& rng, const MixedGraph& skeleton) {
    MixedGraph g{skeleton.labels()};
    for (const Edge& e : skeleton.edges()) random_assign(rng, g, e.a, e.b);
    return g;
}

// Chordality oracle: enumerate every induced cycle of the skeleton.
inline bool chordal_by_cycles(const MixedGraph& g) {
    for (const std::vector<NodeId>& cyc : simple_cycles(g)) {
        if (cyc.size() < 4) continue;
        bool chord = false;
        for (std::size_t x = 0; x < cyc.size() && !chord; ++x)
            for (std::size_t y = x + 2; y < cyc.size() && !chord; ++y) {
                if (x == 0 && y == cyc.size() - 1) continue;
                chord = g.adjacent(cyc[x], cyc[y]);
            }
        if (!chord) return false;
    }
    return true;
}

} // namespace lmg::testing
