#include <doctest.h>

#include <random>

#include "ngrank/graph6.hpp"
#include "ngrank/sweep.hpp"

using namespace ngrank;

TEST_CASE("parse known strings") {
    CHECK(parse_graph6("C~") == complete_graph(4));
    CHECK(parse_graph6("C?") == empty_graph(4));
    CHECK(parse_graph6("Ch") == path_graph(4));
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("?") == Graph(0));
    CHECK(parse_graph6(">>graph6<<C~\n") == complete_graph(4));
    CHECK(parse_graph6("Ch \r\n") == path_graph(4));
}

TEST_CASE("emit known strings") {
    CHECK(emit_graph6(complete_graph(4)) == "C~");
    CHECK(emit_graph6(empty_graph(4)) == "C?");
    CHECK(emit_graph6(path_graph(4)) == "Ch");
    CHECK(emit_graph6(complete_graph(2)) == "A_");
    CHECK(emit_graph6(Graph(0)) == "?");
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("Chh"), Graph6Error);  // body too long
    CHECK_THROWS_AS(parse_graph6("D"), Graph6Error);    // body too short
    CHECK_THROWS_AS(parse_graph6("DQp"), Graph6Error);  // nonzero padding
    try {
        parse_graph6("C\x7f");
        FAIL("expected Graph6Error");
    } catch (const Graph6Error& e) {
        CHECK(e.position() == 1);
    }
    try {
        parse_graph6("C h");
        FAIL("expected Graph6Error");
    } catch (const Graph6Error& e) {
        CHECK(e.position() == 1);
    }
    CHECK_THROWS_AS(parse_graph6("~"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("~??"), Graph6Error);
}

TEST_CASE("exhaustive round trip n <= 7") {
    for (std::size_t n = 1; n <= 7; ++n)
        for (std::uint64_t mask = 0; mask < labeled_count(n); ++mask) {
            const auto g = graph_from_edge_mask(n, mask);
            const auto text = emit_graph6(g);
            CHECK(text.size() == 1 + (n * (n - 1) / 2 + 5) / 6);
            CHECK(parse_graph6(text) == g);
        }
}

TEST_CASE("edge mask matches graph6 bit order") {
    // Pair (0,1) is the first body bit, so mask 1 sets the top data bit.
    CHECK(emit_graph6(graph_from_edge_mask(4, 1)) == "C_");
    CHECK(emit_graph6(graph_from_edge_mask(4, 0b111111)) == "C~");
}

TEST_CASE("random round trip, including long headers") {
    std::mt19937_64 rng(6);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t n : {8, 20, 33, 62, 63, 64, 100, 258}) {
        for (int t = 0; t < 5; ++t) {
            Graph g(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (coin(rng)) g.add_edge(i, j);
            const auto text = emit_graph6(g);
            CHECK(parse_graph6(text) == g);
            if (n <= 62) CHECK(text[0] == char(63 + n));
            else CHECK(text[0] == '~');
        }
    }
    CHECK(emit_graph6(Graph(63)).substr(0, 4) == "~??~");
}
