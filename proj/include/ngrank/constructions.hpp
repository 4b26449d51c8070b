#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "ngrank/exact_rank.hpp"
#include "ngrank/graph.hpp"

namespace ngrank {

struct ConstructionRecipe {
    std::size_t n = 0;
    /// n mod 6; selects the components of the full-rank family.
    std::size_t case_id = 0;
    /// Disjoint components, in vertex order.
    std::vector<FamilySpec> components;

    FamilySpec as_family() const { return FamilySpec::join_disjoint(components); }
};

enum class CertificateClaim { FullRankBoth, ProductEquals2n, ProductEquals3nMinus3, SumEqualsNPlus1 };

std::string_view to_string(CertificateClaim c);
CertificateClaim parse_claim(std::string_view name);

struct Certificate {
    ConstructionRecipe recipe;
    RankPair rank_pair;
    CertificateClaim claim = CertificateClaim::FullRankBoth;
    bool verified = false;
};

struct Construction {
    Graph graph;
    Certificate certificate;
};

/// Components of the full-rank graph G_n:
///   n = 0, 4 (mod 6): P_n
///   n = 1, 5 (mod 6): P_{n-1} + K_1
///   n = 2 (mod 6):    P_4 + P_{n-4}
///   n = 3 (mod 6):    P_4 + P_{n-5} + K_1
/// Throws std::invalid_argument for n < 4.
ConstructionRecipe fullrank_recipe(std::size_t n);

/// Builds G_n and certifies rank(A+I) = rank(J-A) = n by exact elimination.
/// Throws std::logic_error if the certificate does not verify.
Construction build_fullrank(std::size_t n);

/// Named equality witnesses:
///   SumEqualsNPlus1        K_n                      (n >= 1)
///   ProductEquals2n        K_{floor(n/2), ceil(n/2)} (n >= 3)
///   ProductEquals3nMinus3  K_2 + (n-2)K_1, or with variant 1 K_{n-2} + 2K_1 (n >= 4)
///   FullRankBoth           build_fullrank(n)        (n >= 4)
/// Throws std::invalid_argument when n is too small for the claim.
Construction tightness_witness(CertificateClaim claim, std::size_t n, int variant = 0);

/// True iff rank_pair satisfies claim exactly.
bool claim_holds(CertificateClaim claim, const RankPair& rank_pair);

}  // namespace ngrank
