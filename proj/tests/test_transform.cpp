#include <doctest.h>

#include <random>

#include "lmg/classification.hpp"
#include "lmg/equivalence.hpp"
#include "lmg/io.hpp"
#include "lmg/oracle.hpp"
#include "lmg/transform.hpp"
#include "helpers.hpp"

using namespace lmg;
using lmg::testing::G;

namespace {

MixedGraph replay(const TransformReport& r) {
    MixedGraph g = r.input;
    for (const RewriteStep& s : r.steps) {
        g.set_end_mark(s.b, s.a, s.after_a);
        g.set_end_mark(s.a, s.b, s.after_b);
    }
    return g;
}

} // namespace

TEST_CASE("mcs order") {
    McsOrder tri = mcs_order(G("a--b b--c a--c"));
    CHECK(tri.ranks.at(0) == 1);
    CHECK(tri.ranks.at(1) == 2);
    CHECK(tri.ranks.at(2) == 3);

    McsOrder path = mcs_order(G("a--b b--c"));
    CHECK(path.ranks.at(0) == 1);
    CHECK(path.ranks.at(1) == 2);
    CHECK(path.ranks.at(2) == 3);

    McsOrder single = mcs_order(MixedGraph(std::vector<std::string>{"x"}));
    CHECK(single.ranks.at(0) == 1);

    CHECK_THROWS_AS(mcs_order(G("a->b")), ClassViolation);
}

TEST_CASE("to_dag") {
    TransformReport r = to_dag(G("a--b b->c c<->d"));
    CHECK(r.output == G("a->b b->c d->c"));
    CHECK(is_dag(r.output).ok);
    CHECK(models_equal(r.input, r.output));
    CHECK(replay(r) == r.output);

    TransformReport chordal = to_dag(G("a--b b--c c--d d--a a--c"));
    CHECK(is_dag(chordal.output).ok);
    CHECK(models_equal(chordal.input, chordal.output));
    for (const auto& v : v_configurations(chordal.output))
        if (v.collider) CHECK(v.shielded);

    TransformReport arc = to_dag(G("i<->j"));
    CHECK(is_dag(arc.output).ok);
    CHECK(arc.output.edge_count() == 1);
}

TEST_CASE("to_ug and to_bg") {
    CHECK(to_ug(G("a->b b->c")).output == G("a--b b--c"));
    CHECK(to_ug(G("a<->b b<->c a<->c")).output == G("a--b b--c a--c"));
    MixedGraph ug = G("a--b b--c");
    CHECK(to_ug(ug).output == ug);

    CHECK(to_bg(G("a->b c->b")).output == G("a<->b b<->c"));
    CHECK(to_bg(G("a--b b--c a--c")).output == G("a<->b b<->c a<->c"));
    MixedGraph bg = G("a<->b");
    CHECK(to_bg(bg).output == bg);
}

TEST_CASE("to_rcg") {
    TransformReport r = to_rcg(G("i<->j j<->k i->k"));
    CHECK(r.output == G("i->j j<->k i->k"));
    CHECK(is_rcg(r.output).ok);
    CHECK(models_equal(r.input, r.output));

    MixedGraph rcg = G("l->h k->h k->i i<->j l->j");
    CHECK(to_rcg(rcg).output == rcg);
}

TEST_CASE("precondition refusal and force") {
    CHECK_THROWS_AS(to_ug(G("a->b c->b")), PreconditionViolated);
    CHECK_THROWS_AS(to_dag(G("i<->j j<->k k<->l")), PreconditionViolated);
    CHECK_THROWS_AS(to_rcg(G("i<->j j<->k i->k m->i")), PreconditionViolated);

    TransformOptions force;
    force.force = true;
    TransformReport r = to_ug(G("a->b c->b"), force);
    CHECK(r.verified == false);
    CHECK(is_ug(r.output).ok);
    CHECK(!models_equal(r.input, r.output));
}

TEST_CASE("idempotence on the target class") {
    std::mt19937_64 rng(97);
    int seen = 0;
    while (seen < 150) {
        MixedGraph g = lmg::testing::random_graph(rng, 5);
        ClassMembership m = classify(g);
        if (!m.is_rcg) continue;
        ++seen;
        if (m.is_ug) CHECK(to_ug(g).output == g);
        if (m.is_bg) CHECK(to_bg(g).output == g);
        if (m.is_dag) CHECK(to_dag(g).output == g);
        CHECK(to_rcg(g).output == g);
    }
}

TEST_CASE("soundness on random mags") {
    std::mt19937_64 rng(101);
    int seen = 0;
    while (seen < 150) {
        MixedGraph g = lmg::testing::random_graph(rng, 5);
        if (!is_mag(g)) continue;
        ++seen;
        for (GraphClass target :
             {GraphClass::DAG, GraphClass::UG, GraphClass::BG, GraphClass::RCG}) {
            if (!representable_as(g, target).possible) continue;
            TransformReport r = transform_to(g, target);
            CHECK(in_class(r.output, target));
            CHECK(models_equal(g, r.output));
            CHECK(replay(r) == r.output);
        }
    }
}

TEST_CASE("step 3 preserves skeleton and unshielded colliders") {
    std::mt19937_64 rng(103);
    int seen = 0;
    while (seen < 100) {
        MixedGraph g = lmg::testing::random_graph(rng, 5);
        if (!is_mag(g) || !representable_as_dag(g).possible) continue;
        ++seen;
        TransformReport r = to_dag(g);
        CHECK(r.output.skeleton() == g.skeleton());
        CHECK(unshielded_colliders(r.output) == unshielded_colliders(g));
    }
}

TEST_CASE("to_rcg preserves minimal collider paths") {
    std::mt19937_64 rng(107);
    int seen = 0;
    while (seen < 100) {
        MixedGraph g = lmg::testing::random_graph(rng, 5);
        if (!is_mag(g) || !representable_as_rcg(g).possible) continue;
        ++seen;
        TransformReport r = to_rcg(g);
        CHECK(minimal_collider_paths(r.output).paths == minimal_collider_paths(g).paths);
    }
}

TEST_CASE("determinism and order robustness") {
    std::mt19937_64 rng(109);
    int seen = 0;
    while (seen < 60) {
        MixedGraph g = lmg::testing::random_graph(rng, 5);
        if (!is_mag(g)) continue;
        ++seen;
        for (GraphClass target :
             {GraphClass::DAG, GraphClass::UG, GraphClass::BG, GraphClass::RCG}) {
            if (!representable_as(g, target).possible) continue;
            CHECK(serialize(transform_to(g, target).output) ==
                  serialize(transform_to(g, target).output));
            TransformOptions shuffled;
            shuffled.scan_seed = rng();
            CHECK(models_equal(transform_to(g, target, shuffled).output, g));
        }
    }
}

TEST_CASE("step log text") {
    TransformReport r = to_dag(G("c<->d b->c"));
    REQUIRE(!r.steps.empty());
    std::string line = r.steps.front().to_text(r.output);
    CHECK(line.find("step 1:") != std::string::npos);
    CHECK(line.find("=>") != std::string::npos);
}
