#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "ngrank/exact_rank.hpp"

namespace ngrank {

using Rational = boost::rational<long long>;

/// Eigenvalues 2cos(k*pi/(m+1)), k = 1..m, of the path on m vertices.
struct PathSpectrum {
    std::size_t m = 0;
    /// k/(m+1), exact.
    std::vector<Rational> angles;
    /// Floating approximations, for inspection only.
    std::vector<double> values;
    /// Index k with 2cos(k*pi/(m+1)) = -1, decided arithmetically.
    std::optional<std::size_t> minus_one_index;
};

PathSpectrum path_spectrum(std::size_t m);

/// rank(A_{P_m} + I): m, or m - 1 when m = 2 (mod 3).
std::size_t path_complement_rank(std::size_t m);

/// Closed-form rank pair of K_{a,b}: (a + b, 2). Requires a, b >= 1 and ab >= 2.
RankPair complete_bipartite_rank_pair(std::size_t a, std::size_t b);

/// y-coordinate of the kernel recurrence as a linear form in the boundary
/// unknowns a = y_1, b = y_2 and the scalar c = 1^T x.
struct LinearForm {
    Rational a{0};
    Rational b{0};
    Rational c{0};

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Symbolic solution of (J_m - A_{P_m}) x = 0 for even m.
///
/// Writes y_i = x_i - c/2, propagates y_{i+1} = -y_{i-1} from (y_1, y_2) =
/// (a, b), fixes a and b from the boundary rows y_2 = y_{m-1} = c/2, and then
/// closes the loop with c = sum_i x_i = (m/2) c + sum_i y_i.
struct KernelTrace {
    std::size_t m = 0;
    /// m mod 4; 0 or 2.
    std::size_t branch = 0;
    /// y_{m-1} in terms of (a, b), before boundary substitution.
    LinearForm y_m_minus_1;
    /// a = a_per_c * c, b = b_per_c * c after the boundary conditions.
    Rational a_per_c{0};
    Rational b_per_c{0};
    /// sum of y_i in terms of (a, b), and after substitution as a multiple of c.
    LinearForm y_sum;
    Rational y_sum_per_c{0};
    /// The closing relation reads c_coefficient * c = 0.
    Rational c_coefficient{0};
    /// Value forced on c (zero whenever c_coefficient != 0).
    std::optional<Rational> c;
    /// The substituted coordinates satisfy every row of the system identically in c.
    bool recurrence_consistent = false;
    /// Dimension of the kernel read off the symbolic solution.
    std::size_t kernel_dim = 0;
    /// m - rank_exact(J_m - A_{P_m}), the elimination cross-check.
    std::size_t elimination_kernel_dim = 0;
};

/// Throws std::invalid_argument for odd m or m < 2.
KernelTrace kernel_of_j_minus_path(std::size_t m);

}  // namespace ngrank
