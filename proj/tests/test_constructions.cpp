#include <doctest.h>

#include "ngrank/constructions.hpp"
#include "ngrank/sweep.hpp"

using namespace ngrank;

TEST_CASE("build_fullrank examples") {
    const auto c4 = build_fullrank(4);
    CHECK(c4.graph == path_graph(4));
    CHECK(c4.certificate.rank_pair == RankPair{4, 4, 4});
    CHECK(c4.certificate.verified);

    const auto c7 = build_fullrank(7);
    CHECK(c7.graph == disjoint_union(path_graph(6), complete_graph(1)));
    CHECK(c7.certificate.rank_pair == RankPair{7, 7, 7});

    const auto c8 = build_fullrank(8);
    CHECK(c8.graph == disjoint_union(path_graph(4), path_graph(4)));
    CHECK(c8.certificate.rank_pair == RankPair{8, 8, 8});

    const auto c9 = build_fullrank(9);
    CHECK(c9.certificate.recipe.as_family().to_string() == "P4+P4+K1");
    CHECK(c9.certificate.rank_pair == RankPair{9, 9, 9});
    CHECK(c9.certificate.recipe.case_id == 3);

    for (std::size_t n : {0, 1, 2, 3}) CHECK_THROWS_AS(build_fullrank(n), std::invalid_argument);
}

TEST_CASE("full-rank family for 4 <= n <= 60") {
    for (std::size_t n = 4; n <= 60; ++n) {
        const auto c = build_fullrank(n);
        CHECK(c.certificate.verified);
        CHECK(c.certificate.rank_pair.f_g == n);
        CHECK(c.certificate.rank_pair.f_gbar == n);
        std::size_t total = 0;
        for (const auto& part : c.certificate.recipe.components) {
            total += part.order();
            if (part.kind == FamilySpec::Kind::Path) CHECK(part.a % 3 != 2);
        }
        CHECK(total == n);
        if (n % 6 == 2) {
            REQUIRE(c.certificate.recipe.components.size() == 2);
            for (const auto& part : c.certificate.recipe.components) CHECK(part.a % 3 == 1);
        }
    }
}

TEST_CASE("tightness witnesses") {
    const auto sum5 = tightness_witness(CertificateClaim::SumEqualsNPlus1, 5);
    CHECK(sum5.graph == complete_graph(5));
    CHECK(sum5.certificate.rank_pair.sum() == 6);

    const auto prod10 = tightness_witness(CertificateClaim::ProductEquals2n, 5);
    CHECK(prod10.graph == complete_bipartite(2, 3));
    CHECK(prod10.certificate.rank_pair.product() == 10);

    const auto prod9 = tightness_witness(CertificateClaim::ProductEquals3nMinus3, 4);
    CHECK(prod9.graph == disjoint_union(complete_graph(2), empty_graph(2)));
    CHECK(prod9.certificate.rank_pair.product() == 9);

    for (std::size_t n = 4; n <= 20; ++n) {
        for (int variant : {0, 1}) {
            const auto w = tightness_witness(CertificateClaim::ProductEquals3nMinus3, n, variant);
            CHECK(w.certificate.verified);
            CHECK(w.certificate.rank_pair.product() == 3 * (n - 1));
        }
        CHECK(tightness_witness(CertificateClaim::ProductEquals2n, n).certificate.verified);
        CHECK(tightness_witness(CertificateClaim::SumEqualsNPlus1, n).certificate.verified);
        CHECK(tightness_witness(CertificateClaim::FullRankBoth, n).certificate.verified);
    }

    CHECK_THROWS_AS(tightness_witness(CertificateClaim::ProductEquals2n, 2), std::invalid_argument);
    CHECK_THROWS_AS(tightness_witness(CertificateClaim::ProductEquals3nMinus3, 3), std::invalid_argument);
    CHECK_THROWS_AS(tightness_witness(CertificateClaim::SumEqualsNPlus1, 0), std::invalid_argument);
}

TEST_CASE("no full-rank-both graph on 2 or 3 vertices") {
    for (std::size_t n : {2, 3}) {
        bool found = false;
        for (std::uint64_t mask = 0; mask < labeled_count(n); ++mask)
            found = found || claim_holds(CertificateClaim::FullRankBoth, complement_rank_pair(graph_from_edge_mask(n, mask)));
        CHECK_FALSE(found);
    }
    CHECK(claim_holds(CertificateClaim::FullRankBoth, complement_rank_pair(complete_graph(1))));
}

TEST_CASE("claim names") {
    for (auto c : {CertificateClaim::FullRankBoth, CertificateClaim::ProductEquals2n,
                   CertificateClaim::ProductEquals3nMinus3, CertificateClaim::SumEqualsNPlus1})
        CHECK(parse_claim(to_string(c)) == c);
    CHECK_THROWS_AS(parse_claim("Bogus"), std::invalid_argument);
}
