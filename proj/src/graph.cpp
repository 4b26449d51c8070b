#include "ngrank/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <stdexcept>

namespace ngrank {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
}

void Graph::add_edge(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) throw std::out_of_range("add_edge: vertex out of range");
    if (i == j) throw std::invalid_argument("add_edge: loops are not allowed");
    bits_[i * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    bits_[j * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
}

std::size_t Graph::degree(std::size_t i) const {
    std::size_t d = 0;
    for (auto w : row(i)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

Graph complement(const Graph& g) {
    const auto n = g.order();
    Graph h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) h.add_edge(i, j);
    return h;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const auto off = g1.order();
    Graph h(off + g2.order());
    for (auto [i, j] : g1.edges()) h.add_edge(i, j);
    for (auto [i, j] : g2.edges()) h.add_edge(off + i, off + j);
    return h;
}

Graph permute(const Graph& g, std::span<const std::size_t> sigma) {
    const auto n = g.order();
    if (sigma.size() != n) throw std::invalid_argument("permute: permutation has wrong length");
    std::vector<bool> seen(n, false);
    for (auto s : sigma) {
        if (s >= n || seen[s]) throw std::invalid_argument("permute: sigma is not a bijection");
        seen[s] = true;
    }
    Graph h(n);
    for (auto [i, j] : g.edges()) h.add_edge(sigma[i], sigma[j]);
    return h;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) { return complement(Graph(n)); }

Graph path_graph(std::size_t m) {
    Graph g(m);
    for (std::size_t i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("complete_bipartite: both parts must be nonempty");
    Graph g(a + b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

std::size_t FamilySpec::order() const {
    switch (kind) {
        case Kind::Empty:
        case Kind::Complete:
        case Kind::Path: return a;
        case Kind::CompleteBipartite: return a + b;
        case Kind::DisjointUnion: {
            std::size_t n = 0;
            for (const auto& op : operands) n += op.order();
            return n;
        }
        case Kind::Complement: return operands.empty() ? 0 : operands.front().order();
    }
    return 0;
}

std::string FamilySpec::to_string() const {
    switch (kind) {
        case Kind::Empty: return "E" + std::to_string(a);
        case Kind::Complete: return "K" + std::to_string(a);
        case Kind::Path: return "P" + std::to_string(a);
        case Kind::CompleteBipartite: return "K" + std::to_string(a) + "," + std::to_string(b);
        case Kind::DisjointUnion: {
            std::string s;
            for (const auto& op : operands) {
                if (!s.empty()) s += '+';
                s += op.to_string();
            }
            return s;
        }
        case Kind::Complement: {
            const auto& inner = operands.front();
            if (inner.kind == Kind::DisjointUnion) return "!(" + inner.to_string() + ")";
            return "!" + inner.to_string();
        }
    }
    return {};
}

namespace {

class SpecParser {
public:
    explicit SpecParser(const std::string& s) : s_(s) {}

    FamilySpec parse_all() {
        auto spec = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return spec;
    }

private:
    FamilySpec expr() {
        std::vector<FamilySpec> parts{term()};
        skip_ws();
        while (pos_ < s_.size() && s_[pos_] == '+') {
            ++pos_;
            parts.push_back(term());
            skip_ws();
        }
        if (parts.size() == 1) return std::move(parts.front());
        return FamilySpec::join_disjoint(std::move(parts));
    }

    FamilySpec term() {
        skip_ws();
        if (pos_ >= s_.size()) fail("expected a family term");
        const char c = s_[pos_++];
        switch (c) {
            case '!': return FamilySpec::complement_of(term());
            case '(': {
                auto inner = expr();
                skip_ws();
                if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
                ++pos_;
                return inner;
            }
            case 'E': return FamilySpec::empty(number());
            case 'P': return FamilySpec::path(number());
            case 'K': {
                const auto a = number();
                if (pos_ < s_.size() && s_[pos_] == ',') {
                    ++pos_;
                    return FamilySpec::bipartite(a, number());
                }
                return FamilySpec::complete(a);
            }
            default: --pos_; fail("unknown family letter");
        }
        return {};
    }

    std::size_t number() {
        const auto start = pos_;
        std::size_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(s_[pos_] - '0');
            if (v > (std::size_t{1} << 32)) fail("order too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected a number");
        return v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("family spec '" + s_ + "' at position " +
                                    std::to_string(pos_) + ": " + what);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) { return SpecParser(text).parse_all(); }

Graph make_family(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    switch (spec.kind) {
        case Kind::Empty: return empty_graph(spec.a);
        case Kind::Complete: return complete_graph(spec.a);
        case Kind::Path: return path_graph(spec.a);
        case Kind::CompleteBipartite: return complete_bipartite(spec.a, spec.b);
        case Kind::DisjointUnion: {
            Graph g;
            for (const auto& op : spec.operands) g = disjoint_union(g, make_family(op));
            return g;
        }
        case Kind::Complement:
            if (spec.operands.size() != 1)
                throw std::invalid_argument("make_family: complement takes exactly one operand");
            return complement(make_family(spec.operands.front()));
    }
    throw std::invalid_argument("make_family: unknown family kind");
}

std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g) {
    const auto n = g.order();
    if (n < 2) return std::nullopt;

    std::vector<int> color(n, -1);
    std::deque<std::size_t> queue{0};
    color[0] = 0;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (std::size_t v = 0; v < n; ++v) {
            if (!g.adjacent(u, v)) continue;
            if (color[v] < 0) {
                color[v] = 1 - color[u];
                ++reached;
                queue.push_back(v);
            } else if (color[v] == color[u]) {
                return std::nullopt;
            }
        }
    }
    if (reached != n) return std::nullopt;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.adjacent(i, j) != (color[i] != color[j])) return std::nullopt;

    const auto a = static_cast<std::size_t>(std::count(color.begin(), color.end(), 0));
    return std::pair{std::min(a, n - a), std::max(a, n - a)};
}

FamilyRecognition recognize_family(const Graph& g) {
    const auto n = g.order();
    const auto m = g.edge_count();
    FamilyRecognition r;
    r.is_empty = m == 0;
    r.is_complete = m == n * (n > 0 ? n - 1 : 0) / 2;
    r.complete_bipartite_parts = complete_bipartite_parts(g);
    r.union_of_two_cliques = complete_bipartite_parts(complement(g));
    return r;
}

}  // namespace ngrank
