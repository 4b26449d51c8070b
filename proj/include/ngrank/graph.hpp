#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ngrank {

/// Simple undirected graph on vertices {0, ..., n-1}.
///
/// Adjacency is stored as one bit row per vertex. Rows are symmetric and the
/// diagonal is always clear; the only mutating entry point is the builder-style
/// add_edge used by constructors before a graph is shared.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    std::size_t order() const { return n_; }
    std::size_t edge_count() const;

    bool adjacent(std::size_t i, std::size_t j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1u;
    }

    /// Adds edge {i, j}. Loops and out-of-range endpoints throw.
    void add_edge(std::size_t i, std::size_t j);

    std::span<const std::uint64_t> row(std::size_t i) const {
        return {bits_.data() + i * words_, words_};
    }
    std::size_t degree(std::size_t i) const;

    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

Graph complement(const Graph& g);

/// Vertices of g2 are relabeled by offset g1.order(); no cross edges.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Result h satisfies h.adjacent(sigma[i], sigma[j]) == g.adjacent(i, j).
/// Throws std::invalid_argument if sigma is not a bijection on {0..n-1}.
Graph permute(const Graph& g, std::span<const std::size_t> sigma);

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t m);
Graph complete_bipartite(std::size_t a, std::size_t b);

/// Description of one of the standard families, possibly nested.
struct FamilySpec {
    enum class Kind { Empty, Complete, Path, CompleteBipartite, DisjointUnion, Complement };

    Kind kind = Kind::Empty;
    std::size_t a = 0;
    std::size_t b = 0;
    std::vector<FamilySpec> operands;

    static FamilySpec empty(std::size_t n) { return {Kind::Empty, n, 0, {}}; }
    static FamilySpec complete(std::size_t n) { return {Kind::Complete, n, 0, {}}; }
    static FamilySpec path(std::size_t m) { return {Kind::Path, m, 0, {}}; }
    static FamilySpec bipartite(std::size_t a, std::size_t b) {
        return {Kind::CompleteBipartite, a, b, {}};
    }
    static FamilySpec join_disjoint(std::vector<FamilySpec> parts) {
        return {Kind::DisjointUnion, 0, 0, std::move(parts)};
    }
    static FamilySpec complement_of(FamilySpec inner) {
        return {Kind::Complement, 0, 0, {std::move(inner)}};
    }

    /// Total vertex count described by this spec.
    std::size_t order() const;

    /// Compact text form, e.g. "P4+P4+K1", "K2,3", "!K2,2", "E5".
    std::string to_string() const;

    /// Parses the text form produced by to_string. Grammar:
    ///   expr := term ('+' term)*
    ///   term := 'K' n | 'K' a ',' b | 'E' n | 'P' n | '!' term | '(' expr ')'
    static FamilySpec parse(const std::string& text);

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws std::invalid_argument for invalid parameters, e.g. an empty
/// bipartite part.
Graph make_family(const FamilySpec& spec);

struct FamilyRecognition {
    bool is_complete = false;
    bool is_empty = false;
    /// Parts (a, b) with a <= b when g is complete bipartite with both parts
    /// nonempty and spanning all vertices.
    std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts;
    /// Parts (a, b) with a <= b when complement(g) is complete bipartite.
    std::optional<std::pair<std::size_t, std::size_t>> union_of_two_cliques;

    friend bool operator==(const FamilyRecognition&, const FamilyRecognition&) = default;
};

FamilyRecognition recognize_family(const Graph& g);

/// Complete-bipartite test only (BFS 2-coloring, then exact edge check).
std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g);

}  // namespace ngrank
