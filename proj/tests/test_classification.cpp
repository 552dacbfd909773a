#include <doctest.h>

#include <random>

#include "lmg/classification.hpp"
#include "helpers.hpp"

using namespace lmg;
using lmg::testing::G;
using lmg::testing::S;

TEST_CASE("ancestral graphs") {
    Verdict v = is_ancestral(G("a--b c->b"));
    CHECK(!v.ok);
    CHECK(v.witness.find('b') != std::string::npos);

    // j is an ancestor of its spouse i through j -> k -> i.
    CHECK(!is_ancestral(G("i<->j j->k k->i")).ok);

    CHECK(is_ancestral(G("a->b b->c a->c")).ok);
    CHECK(is_ancestral(G("a--b b--c")).ok);
    CHECK(is_ancestral(G("a<->b b<->c")).ok);
}

TEST_CASE("maximality") {
    CHECK(is_maximal(G("a--b b<->c a->c")).ok);
    CHECK(is_maximal(G("a--b b->c c<->d")).ok);
    CHECK(is_maximal(G("a--b b--c c--d")).ok);

    // Classic non-maximal ancestral graph: the arc path a..d has every
    // inner collider an ancestor of an endpoint, so no set separates a, d.
    MixedGraph g = G("a<->b b<->c c<->d b->d c->a");
    CHECK(is_ancestral(g).ok);
    Verdict v = is_maximal(g);
    CHECK(!v.ok);
    CHECK(v.witness.find('a') != std::string::npos);
    CHECK(v.witness.find('d') != std::string::npos);
    CHECK(!is_mag(g));
}

TEST_CASE("class predicates") {
    CHECK(is_ug(G("a--b b--c")).ok);
    CHECK(!is_ug(G("a--b b->c")).ok);
    CHECK(is_bg(G("a<->b")).ok);
    CHECK(is_dag(G("a->b b->c a->c")).ok);
    CHECK(!is_dag(G("a->b b->c c->a")).ok);
    CHECK(!is_rcg(G("i<->j j<->k i->k")).ok);
    CHECK(is_rcg(G("i->j j<->k i->k")).ok);
    CHECK(!is_rcg(G("a--b c->b")).ok);

    MixedGraph empty(std::vector<std::string>{"a", "b"});
    CHECK(is_ug(empty).ok);
    CHECK(is_bg(empty).ok);
    CHECK(is_dag(empty).ok);
    CHECK(is_rcg(empty).ok);
    CHECK(is_ancestral(empty).ok);

    CHECK_THROWS_AS(require_mag(G("i<->j j->k k->i")), ClassViolation);
}

TEST_CASE("classify record") {
    ClassMembership m = classify(G("a--b b->c c<->d"));
    CHECK(!m.is_ug);
    CHECK(!m.is_bg);
    CHECK(!m.is_dag);
    CHECK(m.is_rcg); // no arrowhead at a line-incident node, no cycles at all
    CHECK(m.is_ancestral);
    CHECK(m.is_maximal);
    CHECK(m.witnesses.count("ug") == 1);
}

TEST_CASE("chain components") {
    MixedGraph g = G("i->j j<->k i->k");
    ChainDecomposition d = chain_components(g);
    CHECK(d.undirected_part == 0);
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[0] == S(g, {"j", "k"}));
    CHECK(d.components[1] == S(g, {"i"}));

    MixedGraph ug = G("a--b b--c");
    ChainDecomposition du = chain_components(ug);
    CHECK(du.components.empty());
    CHECK(du.undirected_part == full_set(3));

    MixedGraph chain = G("a->b b->c");
    ChainDecomposition dc = chain_components(chain);
    REQUIRE(dc.components.size() == 3);
    CHECK(dc.components[0] == S(chain, {"c"}));
    CHECK(dc.components[1] == S(chain, {"b"}));
    CHECK(dc.components[2] == S(chain, {"a"}));

    CHECK_THROWS_AS(chain_components(G("i<->j j<->k i->k")), ClassViolation);
}

TEST_CASE("quotient over chain components is acyclic") {
    std::mt19937_64 rng(53);
    int seen = 0;
    for (int t = 0; t < 4000 && seen < 300; ++t) {
        MixedGraph g = lmg::testing::random_graph(rng, 6);
        if (!is_rcg(g).ok) continue;
        ++seen;
        ChainDecomposition d = chain_components(g); // throws on a cyclic quotient
        NodeSet covered = d.undirected_part;
        for (NodeSet tau : d.components) {
            CHECK((tau & covered) == 0);
            covered |= tau;
        }
        CHECK(covered == g.all_nodes());
        // arrows respect the numbering: from higher-numbered to lower
        for (std::size_t hi = 0; hi < d.components.size(); ++hi)
            for (std::size_t lo = 0; lo < hi; ++lo)
                for (NodeId u : SetBits(d.components[lo]))
                    for (NodeId v : SetBits(d.components[hi]))
                        CHECK(!(g.adjacent(u, v) && g.head_at(u, v)));
    }
    CHECK(seen == 300);
}

TEST_CASE("hierarchy on random graphs") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 10000; ++t) {
        MixedGraph g = lmg::testing::random_graph(rng, 2 + static_cast<int>(rng() % 6));
        ClassMembership m = classify(g);
        if (m.is_ug || m.is_bg || m.is_dag) CHECK(m.is_rcg);
        if (m.is_rcg) CHECK(m.is_ancestral);
    }
}

TEST_CASE("subclasses are maximal by nature") {
    std::mt19937_64 rng(61);
    int seen = 0;
    for (int t = 0; t < 8000 && seen < 500; ++t) {
        MixedGraph g = lmg::testing::random_graph(rng, 2 + static_cast<int>(rng() % 6));
        if (!is_rcg(g).ok) continue;
        ++seen;
        CHECK(is_maximal(g).ok);
    }
    CHECK(seen == 500);
}
