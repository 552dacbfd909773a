#include <doctest.h>

#include <random>

#include "lmg/io.hpp"
#include "helpers.hpp"

using namespace lmg;
using lmg::testing::G;

TEST_CASE("parse basics") {
    MixedGraph g = parse("nodes: a b\na -- b\n");
    CHECK(g == G("a--b"));
    CHECK(parse("nodes: a b c\n# comment\n\na -> b\nc <-> b\n") == G("a->b c<->b"));
    CHECK(parse("nodes: a b\nb <- a\n") == G("a->b"));
    CHECK(parse("nodes: x\n").node_count() == 1);
}

TEST_CASE("parse errors") {
    auto kind_of = [](const std::string& text) {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return e.kind();
        }
        FAIL("expected ParseError");
        return ParseError::Kind::BadToken;
    };
    CHECK(kind_of("nodes: a b\na -> b\nb -> a\n") == ParseError::Kind::DuplicateEdge);
    CHECK(kind_of("nodes: a\na -- a\n") == ParseError::Kind::Loop);
    CHECK(kind_of("nodes: a b\na -- c\n") == ParseError::Kind::UnknownNode);
    CHECK(kind_of("nodes: a b\na ~ b\n") == ParseError::Kind::BadToken);
    CHECK(kind_of("a -- b\n") == ParseError::Kind::BadToken);

    try {
        parse("nodes: a b\na -- b\na <-> b\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("serialize canonical form") {
    CHECK(serialize(G("b--a")) == "nodes: a b\na -- b\n");
    CHECK(serialize(G("c->a")) == "nodes: a c\nc -> a\n");
    CHECK(serialize(MixedGraph(std::vector<std::string>{"x"})) == "nodes: x\n");
    CHECK(serialize(G("a<->b b--c a->c")) == "nodes: a b c\na <-> b\na -> c\nb -- c\n");
}

TEST_CASE("round trip") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 2000; ++t) {
        MixedGraph g = lmg::testing::random_graph(rng, 1 + static_cast<int>(rng() % 8));
        std::string text = serialize(g);
        MixedGraph back = parse(text);
        CHECK(back == g);
        CHECK(serialize(back) == text);
    }
}
