#include "ngrank/exact_rank.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace ngrank {

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

void check_dimension(std::size_t n, std::size_t cap) {
    if (n > cap)
        throw std::length_error("matrix dimension " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
}

// log2 of prod_i max(1, ||row_i||_2); bounds every minor of the matrix.
double log2_hadamard_bound(std::span<const std::int64_t> a, std::size_t n) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        long double sq = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const auto v = static_cast<long double>(a[i * n + j]);
            sq += v * v;
        }
        if (sq > 1) total += 0.5 * static_cast<double>(std::log2(sq));
    }
    return total;
}

constexpr double kWordBoundBits = 62.0;

// Bareiss on machine words. Every stored entry is a minor of the input, so the
// caller guarantees the Hadamard bound fits in 62 bits; cross products then fit
// in 126 bits before the exact division.
std::size_t bareiss_rank_words(std::vector<std::int64_t> a, std::size_t n) {
    std::size_t rank = 0;
    std::int64_t prev = 1;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) continue;
        if (piv != rank)
            for (std::size_t j = col; j < n; ++j) std::swap(a[piv * n + j], a[rank * n + j]);
        const i128 p = a[rank * n + col];
        for (std::size_t i = rank + 1; i < n; ++i) {
            const i128 f = a[i * n + col];
            for (std::size_t j = col + 1; j < n; ++j) {
                const i128 v = p * a[i * n + j] - f * a[rank * n + j];
                a[i * n + j] = static_cast<std::int64_t>(v / prev);
            }
            a[i * n + col] = 0;
        }
        prev = static_cast<std::int64_t>(p);
        ++rank;
    }
    return rank;
}

std::size_t bareiss_rank_big(std::vector<BigInt> a, std::size_t n) {
    std::size_t rank = 0;
    BigInt prev = 1;
    BigInt tmp;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) continue;
        if (piv != rank)
            for (std::size_t j = col; j < n; ++j) std::swap(a[piv * n + j], a[rank * n + j]);
        const BigInt& p = a[rank * n + col];
        for (std::size_t i = rank + 1; i < n; ++i) {
            const BigInt f = a[i * n + col];
            if (f == 0) {
                for (std::size_t j = col + 1; j < n; ++j) {
                    tmp = p * a[i * n + j];
                    a[i * n + j] = tmp / prev;
                }
            } else {
                for (std::size_t j = col + 1; j < n; ++j) {
                    tmp = p * a[i * n + j] - f * a[rank * n + j];
                    a[i * n + j] = tmp / prev;
                }
            }
            a[i * n + col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    i128 t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        const i128 q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

std::size_t gauss_rank_mod(std::vector<std::uint64_t> a, std::size_t n, std::uint64_t p) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) continue;
        if (piv != rank)
            for (std::size_t j = col; j < n; ++j) std::swap(a[piv * n + j], a[rank * n + j]);
        const auto inv = inverse_mod(a[rank * n + col], p);
        for (std::size_t i = rank + 1; i < n; ++i) {
            if (a[i * n + col] == 0) continue;
            const auto f = mul_mod(a[i * n + col], inv, p);
            for (std::size_t j = col; j < n; ++j) {
                const auto sub = mul_mod(f, a[rank * n + j], p);
                a[i * n + j] = a[i * n + j] >= sub ? a[i * n + j] - sub : a[i * n + j] + p - sub;
            }
        }
        ++rank;
    }
    return rank;
}

// Copies m into machine words when every entry fits and the Hadamard bound
// allows word elimination.
bool to_words(const IntMatrix& m, std::vector<std::int64_t>& out) {
    const auto n = m.dimension();
    out.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& v = m(i, j);
            if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) return false;
            out[i * n + j] = v.convert_to<std::int64_t>();
        }
    return log2_hadamard_bound(out, n) <= kWordBoundBits;
}

// Dense 0/1 rows of A + I (complemented == false) or J - A (complemented == true).
std::vector<std::int64_t> graph_matrix_words(const Graph& g, bool complemented) {
    const auto n = g.order();
    std::vector<std::int64_t> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const bool on = i == j || (g.adjacent(i, j) != complemented);
            a[i * n + j] = on ? 1 : 0;
        }
    }
    return a;
}

std::size_t graph_rank(const Graph& g, bool complemented) {
    const auto n = g.order();
    check_dimension(n, kDefaultMaxDimension);
    auto words = graph_matrix_words(g, complemented);
    if (log2_hadamard_bound(words, n) <= kWordBoundBits)
        return bareiss_rank_words(std::move(words), n);
    return bareiss_rank_big(std::vector<BigInt>(words.begin(), words.end()), n);
}

std::size_t graph_rank_mod(const Graph& g, bool complemented, std::uint64_t p) {
    const auto words = graph_matrix_words(g, complemented);
    return gauss_rank_mod(std::vector<std::uint64_t>(words.begin(), words.end()), g.order(), p);
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::ones(std::size_t n) {
    IntMatrix m(n);
    for (auto& e : m.entries_) e = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const auto n = rows.size();
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("IntMatrix::from_rows: matrix must be square");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

bool IntMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

namespace {

template <typename Op>
IntMatrix entrywise(const IntMatrix& m, const IntMatrix& n, Op op, const char* what) {
    if (m.dimension() != n.dimension())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    IntMatrix r(m.dimension());
    for (std::size_t i = 0; i < m.dimension(); ++i)
        for (std::size_t j = 0; j < m.dimension(); ++j) r(i, j) = op(m(i, j), n(i, j));
    return r;
}

}  // namespace

IntMatrix operator+(const IntMatrix& m, const IntMatrix& n) {
    return entrywise(m, n, [](const BigInt& x, const BigInt& y) { return BigInt(x + y); }, "operator+");
}

IntMatrix operator-(const IntMatrix& m, const IntMatrix& n) {
    return entrywise(m, n, [](const BigInt& x, const BigInt& y) { return BigInt(x - y); }, "operator-");
}

IntMatrix hadamard(const IntMatrix& m, const IntMatrix& n) {
    return entrywise(m, n, [](const BigInt& x, const BigInt& y) { return BigInt(x * y); }, "hadamard");
}

IntMatrix operator*(const IntMatrix& m, const IntMatrix& n) {
    const auto d = m.dimension();
    if (d != n.dimension()) throw std::invalid_argument("operator*: dimension mismatch");
    IntMatrix r(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (m(i, k) == 0) continue;
            for (std::size_t j = 0; j < d; ++j) r(i, j) += m(i, k) * n(k, j);
        }
    return r;
}

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix m(g.order());
    for (auto [i, j] : g.edges()) m(i, j) = m(j, i) = 1;
    return m;
}

IntMatrix a_plus_i(const Graph& g) { return adjacency_matrix(g) + IntMatrix::identity(g.order()); }

IntMatrix j_minus_a(const Graph& g) { return IntMatrix::ones(g.order()) - adjacency_matrix(g); }

std::size_t rank_exact(const IntMatrix& m, std::size_t max_dimension) {
    const auto n = m.dimension();
    check_dimension(n, max_dimension);
    std::vector<std::int64_t> words;
    if (to_words(m, words)) return bareiss_rank_words(std::move(words), n);
    return rank_exact_bigint(m);
}

std::size_t rank_exact_bigint(const IntMatrix& m) {
    const auto n = m.dimension();
    std::vector<BigInt> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
    return bareiss_rank_big(std::move(a), n);
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (p % q == 0) return p == q;
    }
    std::uint64_t d = p - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        auto x = pow_mod(a, d, p);
        if (x == 1 || x == p - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, p);
            if (x == p - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t random_prime_61(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << 60,
                                                       (std::uint64_t{1} << 61) - 1);
    for (;;) {
        const auto c = dist(rng) | 1u;
        if (is_prime(c)) return c;
    }
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p, std::size_t max_dimension) {
    const Prime checked(p);
    const auto n = m.dimension();
    check_dimension(n, max_dimension);
    const BigInt bp = p;
    std::vector<std::uint64_t> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BigInt r = m(i, j) % bp;
            if (r < 0) r += bp;
            a[i * n + j] = r.convert_to<std::uint64_t>();
        }
    return gauss_rank_mod(std::move(a), n, p);
}

RankPair complement_rank_pair(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("complement_rank_pair: graph has no vertices");
    return {g.order(), graph_rank(g, false), graph_rank(g, true)};
}

Prime::Prime(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 62) || !is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not a supported prime");
}

RankPair complement_rank_pair_mod_p(const Graph& g, Prime p) {
    if (g.order() == 0) throw std::invalid_argument("complement_rank_pair_mod_p: graph has no vertices");
    return {g.order(), graph_rank_mod(g, false, p.value()), graph_rank_mod(g, true, p.value())};
}

}  // namespace ngrank
