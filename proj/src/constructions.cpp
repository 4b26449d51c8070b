#include "ngrank/constructions.hpp"

#include <stdexcept>
#include <string>

namespace ngrank {

namespace {

Construction certify(ConstructionRecipe recipe, CertificateClaim claim) {
    Construction c;
    c.graph = make_family(recipe.as_family());
    c.certificate.rank_pair = complement_rank_pair(c.graph);
    c.certificate.claim = claim;
    c.certificate.verified = claim_holds(claim, c.certificate.rank_pair);
    c.certificate.recipe = std::move(recipe);
    if (!c.certificate.verified) {
        const auto& r = c.certificate.rank_pair;
        throw std::logic_error("certificate " + std::string(to_string(claim)) + " failed for " +
                               c.certificate.recipe.as_family().to_string() + ": ranks (" +
                               std::to_string(r.f_g) + ", " + std::to_string(r.f_gbar) + ")");
    }
    return c;
}

void require_order(bool ok, CertificateClaim claim, std::size_t n, std::size_t minimum) {
    if (!ok)
        throw std::invalid_argument("claim " + std::string(to_string(claim)) + " needs n >= " +
                                    std::to_string(minimum) + " (got " + std::to_string(n) + ")");
}

}  // namespace

std::string_view to_string(CertificateClaim c) {
    switch (c) {
        case CertificateClaim::FullRankBoth: return "FullRankBoth";
        case CertificateClaim::ProductEquals2n: return "ProductEquals2n";
        case CertificateClaim::ProductEquals3nMinus3: return "ProductEquals3nMinus3";
        case CertificateClaim::SumEqualsNPlus1: return "SumEqualsNPlus1";
    }
    return "?";
}

CertificateClaim parse_claim(std::string_view name) {
    for (auto c : {CertificateClaim::FullRankBoth, CertificateClaim::ProductEquals2n,
                   CertificateClaim::ProductEquals3nMinus3, CertificateClaim::SumEqualsNPlus1})
        if (to_string(c) == name) return c;
    throw std::invalid_argument("unknown certificate claim '" + std::string(name) + "'");
}

bool claim_holds(CertificateClaim claim, const RankPair& r) {
    switch (claim) {
        case CertificateClaim::FullRankBoth: return r.f_g == r.n && r.f_gbar == r.n;
        case CertificateClaim::ProductEquals2n: return r.product() == 2 * r.n;
        case CertificateClaim::ProductEquals3nMinus3: return r.n >= 1 && r.product() == 3 * (r.n - 1);
        case CertificateClaim::SumEqualsNPlus1: return r.sum() == r.n + 1;
    }
    return false;
}

ConstructionRecipe fullrank_recipe(std::size_t n) {
    if (n < 4)
        throw std::invalid_argument("build_fullrank: n = " + std::to_string(n) +
                                    " is below 4; the full-rank family starts at n = 4");
    ConstructionRecipe r;
    r.n = n;
    r.case_id = n % 6;
    switch (r.case_id) {
        case 0:
        case 4: r.components = {FamilySpec::path(n)}; break;
        case 1:
        case 5: r.components = {FamilySpec::path(n - 1), FamilySpec::complete(1)}; break;
        case 2: r.components = {FamilySpec::path(4), FamilySpec::path(n - 4)}; break;
        case 3: r.components = {FamilySpec::path(4), FamilySpec::path(n - 5), FamilySpec::complete(1)}; break;
    }
    return r;
}

Construction build_fullrank(std::size_t n) { return certify(fullrank_recipe(n), CertificateClaim::FullRankBoth); }

Construction tightness_witness(CertificateClaim claim, std::size_t n, int variant) {
    ConstructionRecipe r;
    r.n = n;
    r.case_id = n % 6;
    switch (claim) {
        case CertificateClaim::FullRankBoth: return build_fullrank(n);
        case CertificateClaim::SumEqualsNPlus1:
            require_order(n >= 1, claim, n, 1);
            r.components = {FamilySpec::complete(n)};
            break;
        case CertificateClaim::ProductEquals2n:
            require_order(n >= 3, claim, n, 3);
            r.components = {FamilySpec::bipartite(n / 2, n - n / 2)};
            break;
        case CertificateClaim::ProductEquals3nMinus3:
            require_order(n >= 4, claim, n, 4);
            if (variant == 0)
                r.components = {FamilySpec::complete(2), FamilySpec::empty(n - 2)};
            else
                r.components = {FamilySpec::complete(n - 2), FamilySpec::empty(2)};
            break;
    }
    return certify(std::move(r), claim);
}

}  // namespace ngrank
