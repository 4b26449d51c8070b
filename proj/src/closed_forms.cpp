#include "ngrank/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ngrank {

namespace {

LinearForm operator+(LinearForm x, const LinearForm& y) {
    x.a += y.a;
    x.b += y.b;
    x.c += y.c;
    return x;
}

LinearForm operator-(const LinearForm& x) { return {-x.a, -x.b, -x.c}; }

// Replaces a and b by multiples of c.
Rational substitute(const LinearForm& f, const Rational& a_per_c, const Rational& b_per_c) {
    return f.a * a_per_c + f.b * b_per_c + f.c;
}

}  // namespace

PathSpectrum path_spectrum(std::size_t m) {
    if (m == 0) throw std::invalid_argument("path_spectrum: m must be positive");
    PathSpectrum s;
    s.m = m;
    const auto denom = static_cast<long long>(m + 1);
    for (std::size_t k = 1; k <= m; ++k) {
        s.angles.emplace_back(static_cast<long long>(k), denom);
        s.values.push_back(2.0 * std::cos(static_cast<double>(k) * std::numbers::pi / static_cast<double>(denom)));
    }
    // 2cos(theta) = -1 with theta in (0, pi) forces theta = 2pi/3, i.e. 3k = 2(m+1).
    if (m % 3 == 2) s.minus_one_index = 2 * (m + 1) / 3;
    return s;
}

std::size_t path_complement_rank(std::size_t m) {
    if (m == 0) throw std::invalid_argument("path_complement_rank: m must be positive");
    return m % 3 == 2 ? m - 1 : m;
}

RankPair complete_bipartite_rank_pair(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) throw std::invalid_argument("complete_bipartite_rank_pair: parts must be nonempty");
    if (a * b == 1)
        throw std::invalid_argument("complete_bipartite_rank_pair: a*b = 1 is the degenerate K_2 case");
    // A+I has eigenvalues 1 +- sqrt(ab) and 1 (n-2 times), all nonzero once ab >= 2;
    // the complement K_a u K_b gives J_a (+) J_b.
    return {a + b, a + b, 2};
}

KernelTrace kernel_of_j_minus_path(std::size_t m) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("kernel_of_j_minus_path: m must be even and at least 2 (got " +
                                    std::to_string(m) + ")");
    KernelTrace t;
    t.m = m;
    t.branch = m % 4;

    // y[i] holds y_{i+1}.
    std::vector<LinearForm> y(m);
    y[0] = {Rational(1), Rational(0), Rational(0)};
    y[1] = {Rational(0), Rational(1), Rational(0)};
    for (std::size_t i = 2; i < m; ++i) y[i] = -y[i - 2];
    t.y_m_minus_1 = y[m - 2];
    for (const auto& f : y) t.y_sum = t.y_sum + f;

    const Rational half(1, 2);
    // y_2 = c/2.
    t.b_per_c = half;
    // y_{m-1} = c/2; m - 1 is odd, so this row involves a alone.
    const auto& last = t.y_m_minus_1;
    if (last.a == Rational(0)) throw std::logic_error("kernel_of_j_minus_path: boundary row does not involve a");
    t.a_per_c = (half - last.b * t.b_per_c - last.c) / last.a;

    t.y_sum_per_c = substitute(t.y_sum, t.a_per_c, t.b_per_c);
    // c = sum x_i = (m/2) c + sum y_i.
    t.c_coefficient = Rational(1) - Rational(static_cast<long long>(m), 2) - t.y_sum_per_c;

    // x_i = (y_i + 1/2) c, as multiples of c.
    std::vector<Rational> x(m);
    for (std::size_t i = 0; i < m; ++i) x[i] = substitute(y[i], t.a_per_c, t.b_per_c) + half;
    bool ok = true;
    for (std::size_t i = 0; i < m; ++i) {
        Rational row(0);
        if (i > 0) row += x[i - 1];
        if (i + 1 < m) row += x[i + 1];
        ok = ok && row == Rational(1);
    }
    t.recurrence_consistent = ok;

    if (t.c_coefficient != Rational(0)) {
        t.c = Rational(0);
        t.kernel_dim = 0;
    } else {
        t.kernel_dim = 1;
    }

    t.elimination_kernel_dim = m - rank_exact(j_minus_a(path_graph(m)));
    return t;
}

}  // namespace ngrank
