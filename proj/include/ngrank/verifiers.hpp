#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ngrank/exact_rank.hpp"
#include "ngrank/graph.hpp"

namespace ngrank {

enum class TheoremId {
    ProductLower,     // f(G) f(Gbar) >= n, equality iff G or Gbar is K_n
    SumLower,         // f(G) + f(Gbar) >= n + 1, same equality set
    StrongProduct2n,  // >= 2n off K_n / empty, equality iff G or Gbar is K_{a,n-a}
    StrongProduct3n,  // >= 3(n - 1) off the above families
    UpperTrivial,     // product <= n^2 and sum <= 2n, equality iff both ranks are n
    RankClass,        // f(G) = 1 iff complete, f(G) = 2 iff Gbar complete bipartite
};

inline constexpr std::array<TheoremId, 6> kAllTheorems{
    TheoremId::ProductLower,    TheoremId::SumLower,     TheoremId::StrongProduct2n,
    TheoremId::StrongProduct3n, TheoremId::UpperTrivial, TheoremId::RankClass,
};

std::string_view to_string(TheoremId id);
/// Accepts the names produced by to_string. Throws std::invalid_argument otherwise.
TheoremId parse_theorem_id(std::string_view name);

struct BoundVerdict {
    TheoremId theorem_id = TheoremId::ProductLower;
    bool applicable = true;
    std::size_t bound = 0;
    std::size_t achieved = 0;
    bool holds = true;
    bool equality = false;
    /// False only for a counterexample to an equality characterization.
    bool characterization_match = true;
    std::string detail;

    bool is_violation() const { return applicable && (!holds || !characterization_match); }
};

/// Everything the verdicts read off a graph. Computing it once lets a sweep
/// evaluate all checks from two ranks and two recognizer passes.
struct GraphFacts {
    RankPair ranks;
    FamilyRecognition family;
};

/// Exact facts. Throws std::invalid_argument for n = 0.
GraphFacts graph_facts(const Graph& g);

BoundVerdict verify(TheoremId id, const GraphFacts& facts);

BoundVerdict verify_product_lower(const Graph& g);
BoundVerdict verify_sum_lower(const Graph& g);
BoundVerdict verify_strong_product_2n(const Graph& g);
BoundVerdict verify_strong_product_3n(const Graph& g);
BoundVerdict verify_upper_trivial(const Graph& g);

enum class SmallRankClass { RankOne, RankTwo, RankThreePlus };

std::string_view to_string(SmallRankClass c);

struct SmallRankClassification {
    SmallRankClass rank_class = SmallRankClass::RankThreePlus;
    std::size_t rank = 0;
    /// RankOne iff G complete, and RankTwo iff complement(G) complete bipartite.
    bool cross_check = false;
};

SmallRankClassification classify_small_rank(const Graph& g);

/// Nullity bookkeeping behind the sum bound. W is the orthogonal complement of
/// the all-ones vector.
struct MultiplicityRecord {
    std::size_t n = 0;
    /// Multiplicity of eigenvalue -1 of A_G, i.e. n - rank(A_G + I).
    std::size_t m_minus1 = 0;
    /// Multiplicity of eigenvalue 0 of A_G restricted to W, i.e. n - rank(J - A_G).
    std::size_t m0_restricted = 0;

    std::size_t multiplicity_sum() const { return m_minus1 + m0_restricted; }
    /// 2n - (m_minus1 + m0_restricted).
    std::size_t reconstructed_rank_sum() const { return 2 * n - multiplicity_sum(); }

    /// reconstructed_rank_sum() equals f(G) + f(Gbar).
    bool reconstruction_ok = false;
    /// multiplicity_sum() <= n - 1.
    bool within_dimension = false;
    /// multiplicity_sum() == n - 1 exactly when G or Gbar is K_n.
    bool extremal_characterization_ok = false;

    /// dim(ker A_G intersected with W). Not always equal to m0_restricted: a
    /// kernel vector of J - A_G can have nonzero coordinate sum. Only filled
    /// by the Graph overload.
    std::optional<std::size_t> kernel_in_w_dim;
};

MultiplicityRecord multiplicity_identities(const Graph& g);
MultiplicityRecord multiplicity_identities(const GraphFacts& facts);

}  // namespace ngrank
