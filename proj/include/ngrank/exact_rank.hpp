#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ngrank/graph.hpp"

namespace ngrank {

using BigInt = boost::multiprecision::cpp_int;

/// Largest dimension accepted by the rank routines unless overridden.
inline constexpr std::size_t kDefaultMaxDimension = 4096;

/// Dense square matrix with arbitrary-precision integer entries.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix ones(std::size_t n);

    /// Row-major construction; throws unless rows.size() == n and every row has n entries.
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t dimension() const { return n_; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    bool is_symmetric() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> entries_;
};

IntMatrix operator+(const IntMatrix& m, const IntMatrix& n);
IntMatrix operator-(const IntMatrix& m, const IntMatrix& n);
IntMatrix operator*(const IntMatrix& m, const IntMatrix& n);

IntMatrix adjacency_matrix(const Graph& g);
/// A_G + I.
IntMatrix a_plus_i(const Graph& g);
/// J - A_G, which equals A_{complement(G)} + I entrywise.
IntMatrix j_minus_a(const Graph& g);

/// Entrywise product. Throws std::invalid_argument on a dimension mismatch.
IntMatrix hadamard(const IntMatrix& m, const IntMatrix& n);

/// Rank over the rationals by fraction-free (Bareiss) elimination.
///
/// Pivots are the first nonzero entry in the current column, with row swaps
/// only. When the Hadamard bound of the matrix fits in 62 bits the
/// elimination runs on 64-bit words with 128-bit intermediates; otherwise it
/// runs on arbitrary-precision integers. Both paths are exact.
std::size_t rank_exact(const IntMatrix& m, std::size_t max_dimension = kDefaultMaxDimension);

/// Same elimination forced onto arbitrary-precision integers.
std::size_t rank_exact_bigint(const IntMatrix& m);

/// Rank of m reduced modulo the prime p (p < 2^62). Throws
/// std::invalid_argument when p fails a deterministic Miller-Rabin test.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p,
                       std::size_t max_dimension = kDefaultMaxDimension);

/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t p);

/// Uniformly chosen prime in [2^60, 2^61).
std::uint64_t random_prime_61(std::mt19937_64& rng);

/// A modulus that has passed is_prime and is below 2^62.
class Prime {
public:
    /// Throws std::invalid_argument unless p is a prime below 2^62.
    explicit Prime(std::uint64_t p);
    std::uint64_t value() const { return p_; }

private:
    std::uint64_t p_;
};

/// The pair (rank(A_G + I), rank(A_Gbar + I)).
struct RankPair {
    std::size_t n = 0;
    std::size_t f_g = 0;
    std::size_t f_gbar = 0;

    std::size_t product() const { return f_g * f_gbar; }
    std::size_t sum() const { return f_g + f_gbar; }

    friend bool operator==(const RankPair&, const RankPair&) = default;
};

/// Exact complement-rank pair. Throws std::invalid_argument for n = 0.
RankPair complement_rank_pair(const Graph& g);

/// Complement-rank pair with both ranks taken modulo p. Each entry is a lower
/// bound on the exact value.
RankPair complement_rank_pair_mod_p(const Graph& g, Prime p);

}  // namespace ngrank
