#include <doctest.h>

#include "ngrank/sweep.hpp"
#include "ngrank/verifiers.hpp"

using namespace ngrank;

namespace {

bool same_outcome(const BoundVerdict& a, const BoundVerdict& b) {
    return a.theorem_id == b.theorem_id && a.applicable == b.applicable && a.bound == b.bound &&
           a.achieved == b.achieved && a.holds == b.holds && a.equality == b.equality &&
           a.characterization_match == b.characterization_match;
}

Graph family(const char* text) { return make_family(FamilySpec::parse(text)); }

}  // namespace

TEST_CASE("product lower bound") {
    const auto k4 = verify_product_lower(complete_graph(4));
    CHECK(k4.achieved == 4);
    CHECK(k4.bound == 4);
    CHECK(k4.equality);
    CHECK(k4.characterization_match);

    const auto e5 = verify_product_lower(empty_graph(5));
    CHECK(e5.achieved == 5);
    CHECK(e5.equality);
    CHECK(e5.characterization_match);

    const auto p4 = verify_product_lower(path_graph(4));
    CHECK(p4.achieved == 16);
    CHECK(p4.holds);
    CHECK_FALSE(p4.equality);
    CHECK(p4.characterization_match);

    CHECK_THROWS_AS(verify_product_lower(Graph(0)), std::invalid_argument);
}

TEST_CASE("sum lower bound") {
    const auto k5 = verify_sum_lower(complete_graph(5));
    CHECK(k5.achieved == 6);
    CHECK(k5.bound == 6);
    CHECK(k5.equality);
    CHECK(k5.characterization_match);

    const auto k22 = verify_sum_lower(complete_bipartite(2, 2));
    CHECK(k22.achieved == 6);
    CHECK(k22.bound == 5);
    CHECK_FALSE(k22.equality);

    const auto p4 = verify_sum_lower(path_graph(4));
    CHECK(p4.achieved == 8);
    CHECK_FALSE(p4.equality);
}

TEST_CASE("strong product bound 2n") {
    const auto k23 = verify_strong_product_2n(complete_bipartite(2, 3));
    CHECK(k23.applicable);
    CHECK(k23.achieved == 10);
    CHECK(k23.equality);
    CHECK(k23.characterization_match);

    const auto two_k2 = verify_strong_product_2n(family("K2+K2"));
    CHECK(two_k2.achieved == 8);
    CHECK(two_k2.equality);
    CHECK(two_k2.characterization_match);

    const auto p4 = verify_strong_product_2n(path_graph(4));
    CHECK(p4.achieved == 16);
    CHECK_FALSE(p4.equality);

    CHECK_FALSE(verify_strong_product_2n(complete_graph(4)).applicable);
    CHECK_FALSE(verify_strong_product_2n(empty_graph(4)).applicable);
    // n = 3: P_3 = K_{1,2} reaches 2n = 6.
    const auto p3 = verify_strong_product_2n(path_graph(3));
    CHECK(p3.applicable);
    CHECK(p3.achieved == 6);
    CHECK(p3.equality);
}

TEST_CASE("strong product bound 3(n-1)") {
    const auto w4 = verify_strong_product_3n(family("K2+E2"));
    CHECK(w4.applicable);
    CHECK(w4.achieved == 9);
    CHECK(w4.bound == 9);
    CHECK(w4.equality);

    const auto w5 = verify_strong_product_3n(family("K3+E2"));
    CHECK(w5.achieved == 12);
    CHECK(w5.equality);

    // Elimination gives rank pair (4, 5) for P_5.
    const auto p5 = verify_strong_product_3n(path_graph(5));
    CHECK(p5.applicable);
    CHECK(p5.achieved == 20);
    CHECK(p5.bound == 12);
    CHECK(p5.holds);
    CHECK_FALSE(p5.equality);

    CHECK_FALSE(verify_strong_product_3n(complete_bipartite(2, 3)).applicable);
    CHECK_FALSE(verify_strong_product_3n(family("K2+K3")).applicable);
    CHECK_FALSE(verify_strong_product_3n(complete_graph(5)).applicable);
}

TEST_CASE("trivial upper bounds") {
    const auto p4 = verify_upper_trivial(path_graph(4));
    CHECK(p4.achieved == 16);
    CHECK(p4.bound == 16);
    CHECK(p4.equality);
    CHECK(p4.characterization_match);

    const auto k4 = verify_upper_trivial(complete_graph(4));
    CHECK(k4.achieved == 4);
    CHECK_FALSE(k4.equality);

    const auto k22 = verify_upper_trivial(complete_bipartite(2, 2));
    CHECK(k22.achieved == 8);
    CHECK_FALSE(k22.equality);
    CHECK(k22.holds);
}

TEST_CASE("classify_small_rank") {
    const auto k6 = classify_small_rank(complete_graph(6));
    CHECK(k6.rank_class == SmallRankClass::RankOne);
    CHECK(k6.cross_check);

    const auto k3k1 = classify_small_rank(family("K3+K1"));
    CHECK(k3k1.rank_class == SmallRankClass::RankTwo);
    CHECK(k3k1.cross_check);

    const auto p4 = classify_small_rank(path_graph(4));
    CHECK(p4.rank_class == SmallRankClass::RankThreePlus);
    CHECK(p4.cross_check);

    // The empty graph on 2 vertices is the complement of K_{1,1}.
    CHECK(classify_small_rank(empty_graph(2)).rank_class == SmallRankClass::RankTwo);
}

TEST_CASE("multiplicity identities") {
    const auto k4 = multiplicity_identities(complete_graph(4));
    CHECK(k4.m_minus1 == 3);
    CHECK(k4.m0_restricted == 0);
    CHECK(k4.multiplicity_sum() == 3);
    CHECK(k4.reconstruction_ok);
    CHECK(k4.extremal_characterization_ok);

    const auto e4 = multiplicity_identities(empty_graph(4));
    CHECK(e4.m_minus1 == 0);
    CHECK(e4.m0_restricted == 3);

    const auto p4 = multiplicity_identities(path_graph(4));
    CHECK(p4.m_minus1 == 0);
    CHECK(p4.m0_restricted == 0);
    CHECK(p4.kernel_in_w_dim == 0u);

    // A graph whose J - A kernel vector has nonzero coordinate sum, so
    // dim(ker A cap W) is smaller than the nullity of J - A.
    Graph g(6);
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                                                        {2, 3}, {2, 4}, {3, 4}, {0, 5}, {1, 5}})
        g.add_edge(i, j);
    const auto odd = multiplicity_identities(g);
    CHECK(odd.m0_restricted == 1);
    CHECK(odd.kernel_in_w_dim == 0u);
    CHECK(odd.reconstruction_ok);
    CHECK(odd.within_dimension);
}

TEST_CASE("exhaustive n <= 6: verdicts hold and are complement-symmetric") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::uint64_t mask = 0; mask < labeled_count(n); ++mask) {
            const auto g = graph_from_edge_mask(n, mask);
            const auto facts = graph_facts(g);
            const auto co_facts = graph_facts(complement(g));
            for (auto id : kAllTheorems) {
                const auto v = verify(id, facts);
                CHECK_FALSE(v.is_violation());
                if (v.equality) CHECK(v.holds);
                if (id != TheoremId::RankClass) CHECK(same_outcome(v, verify(id, co_facts)));
            }
            // Exactly one of: product-lower equality, 2n applicable, n <= 1.
            const bool product_eq = verify(TheoremId::ProductLower, facts).equality;
            const bool strong_applicable = verify(TheoremId::StrongProduct2n, facts).applicable;
            CHECK((n <= 1 || product_eq != strong_applicable));
            const auto m = multiplicity_identities(facts);
            CHECK(m.reconstruction_ok);
            CHECK(m.within_dimension);
            CHECK(m.extremal_characterization_ok);
        }
    }
}

TEST_CASE("theorem ids round-trip through their names") {
    for (auto id : kAllTheorems) CHECK(parse_theorem_id(to_string(id)) == id);
    CHECK_THROWS_AS(parse_theorem_id("Nope"), std::invalid_argument);
}
