#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ngrank/graph.hpp"
#include "ngrank/sweep.hpp"
#include "oracle.hpp"

using namespace ngrank;

namespace {

std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> s(n);
    std::iota(s.begin(), s.end(), 0);
    std::shuffle(s.begin(), s.end(), rng);
    return s;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("family constructors") {
    const auto k3 = make_family(FamilySpec::complete(3));
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);

    const auto p4 = make_family(FamilySpec::path(4));
    using E = std::vector<std::pair<std::size_t, std::size_t>>;
    CHECK(p4.edges() == E{{0, 1}, {1, 2}, {2, 3}});

    const auto k22 = make_family(FamilySpec::bipartite(2, 2));
    CHECK(k22.edge_count() == 4);
    for (std::size_t v = 0; v < 4; ++v) CHECK(k22.degree(v) == 2);

    CHECK(make_family(FamilySpec::empty(0)).order() == 0);
    CHECK_THROWS_AS(make_family(FamilySpec::bipartite(0, 3)), std::invalid_argument);
}

TEST_CASE("graph invariants on construction") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
    g.add_edge(2, 0);
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(0, 0));
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(4)) == empty_graph(4));
    CHECK(complement(complement(path_graph(5))) == path_graph(5));
    CHECK(complement(complete_bipartite(2, 2)) == disjoint_union(complete_graph(2), complete_graph(2)));

    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        const auto g = random_graph(rng, 1 + t % 70);
        CHECK(complement(complement(g)) == g);
        const auto n = g.order();
        CHECK(complement(g).edge_count() + g.edge_count() == n * (n - 1) / 2);
    }
}

TEST_CASE("disjoint union") {
    CHECK(disjoint_union(complete_graph(1), complete_graph(1)) == empty_graph(2));

    const auto p4p4 = disjoint_union(path_graph(4), path_graph(4));
    CHECK(p4p4.order() == 8);
    CHECK(p4p4.edge_count() == 6);
    CHECK(p4p4.adjacent(4, 5));
    CHECK_FALSE(p4p4.adjacent(3, 4));

    const auto witness = disjoint_union(complete_graph(2), empty_graph(2));
    CHECK(witness == make_family(FamilySpec::parse("K2+E2")));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_graph(rng, 1 + t);
        const auto b = random_graph(rng, 20 - t);
        const auto u = disjoint_union(a, b);
        CHECK(u.order() == a.order() + b.order());
        CHECK(u.edge_count() == a.edge_count() + b.edge_count());
    }
}

TEST_CASE("permute") {
    const std::vector<std::size_t> id{0, 1, 2};
    const std::vector<std::size_t> rev{2, 1, 0};
    CHECK(permute(path_graph(3), id) == path_graph(3));
    const auto r = permute(path_graph(3), rev);
    CHECK(r.edges() == path_graph(3).edges());

    std::mt19937_64 rng(3);
    const auto sigma = random_permutation(rng, 4);
    CHECK(permute(complete_graph(4), sigma) == complete_graph(4));

    const std::vector<std::size_t> bad{0, 0, 1};
    CHECK_THROWS_AS(permute(path_graph(3), bad), std::invalid_argument);
    const std::vector<std::size_t> short_sigma{0, 1};
    CHECK_THROWS_AS(permute(path_graph(3), short_sigma), std::invalid_argument);
}

TEST_CASE("recognize_family examples") {
    CHECK(recognize_family(complete_graph(5)).is_complete);

    const auto star = recognize_family(complete_bipartite(1, 3));
    REQUIRE(star.complete_bipartite_parts);
    CHECK(*star.complete_bipartite_parts == std::pair<std::size_t, std::size_t>{1, 3});

    const auto p4 = recognize_family(path_graph(4));
    CHECK_FALSE(p4.is_complete);
    CHECK_FALSE(p4.is_empty);
    CHECK_FALSE(p4.complete_bipartite_parts);
    CHECK_FALSE(p4.union_of_two_cliques);

    // Parts are normalized to a <= b.
    const auto k51 = recognize_family(complete_bipartite(5, 1));
    CHECK(*k51.complete_bipartite_parts == std::pair<std::size_t, std::size_t>{1, 5});

    // Isolated vertices break the spanning requirement.
    CHECK_FALSE(complete_bipartite_parts(disjoint_union(complete_bipartite(2, 2), empty_graph(1))));

    const auto k1 = recognize_family(complete_graph(1));
    CHECK(k1.is_complete);
    CHECK(k1.is_empty);
    CHECK_FALSE(k1.complete_bipartite_parts);
}

TEST_CASE("complement of K_{a,b} is K_a + K_b for all a, b <= 8") {
    for (std::size_t a = 1; a <= 8; ++a)
        for (std::size_t b = 1; b <= 8; ++b) {
            const auto kab = complete_bipartite(a, b);
            const auto co = complement(kab);
            CHECK(co == disjoint_union(complete_graph(a), complete_graph(b)));
            const std::pair<std::size_t, std::size_t> parts{std::min(a, b), std::max(a, b)};
            CHECK(recognize_family(kab).complete_bipartite_parts == parts);
            CHECK(recognize_family(co).union_of_two_cliques == parts);
        }
}

TEST_CASE("recognizer agrees with brute-force 2-coloring enumeration") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto truth = oracle::complete_bipartite_masks(n);
        for (std::uint64_t mask = 0; mask < labeled_count(n); ++mask) {
            const auto g = graph_from_edge_mask(n, mask);
            CHECK(complete_bipartite_parts(g).has_value() == truth.contains(mask));
        }
    }
}

TEST_CASE("recognition is invariant under relabeling") {
    std::mt19937_64 rng(99);
    const std::vector<Graph> samples{complete_bipartite(2, 5), complement(complete_bipartite(3, 3)),
                                     complete_graph(6), empty_graph(6), path_graph(6)};
    for (const auto& g : samples)
        for (int t = 0; t < 20; ++t) {
            const auto sigma = random_permutation(rng, g.order());
            CHECK(recognize_family(permute(g, sigma)) == recognize_family(g));
        }
    for (int t = 0; t < 200; ++t) {
        const auto g = random_graph(rng, 2 + t % 9, 0.3 + 0.4 * (t % 2));
        const auto sigma = random_permutation(rng, g.order());
        CHECK(recognize_family(permute(g, sigma)) == recognize_family(g));
    }
}

TEST_CASE("family spec text") {
    for (const auto* text : {"P4+P4+K1", "K2,3", "!K2,2", "E5", "!(K2+E2)", "K1"}) {
        const auto spec = FamilySpec::parse(text);
        CHECK(spec.to_string() == text);
        CHECK(make_family(spec).order() == spec.order());
    }
    CHECK(make_family(FamilySpec::parse("!K2,2")) == disjoint_union(complete_graph(2), complete_graph(2)));
    CHECK_THROWS_AS(FamilySpec::parse("Q3"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("P"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("(P3"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("P3 x"), std::invalid_argument);
}
