#include "ngrank/graph6.hpp"

#include <cstdint>

namespace ngrank {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kPrefix = ">>graph6<<";

int sextet(std::string_view s, std::size_t pos) {
    const int c = static_cast<unsigned char>(s[pos]);
    if (c < kBias || c > 126)
        throw Graph6Error("byte " + std::to_string(c) + " outside [63, 126]", pos);
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    std::size_t offset = 0;
    if (line.starts_with(kPrefix)) offset = kPrefix.size();
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
        line.remove_suffix(1);
    const auto s = line.substr(std::min(offset, line.size()));
    if (s.empty()) throw Graph6Error("empty graph6 record", offset);

    std::size_t pos = 0;
    std::uint64_t n = 0;
    const auto need = [&](std::size_t count) {
        if (s.size() < pos + count) throw Graph6Error("truncated order header", offset + s.size());
    };
    if (s[0] != '~') {
        n = static_cast<std::uint64_t>(sextet(s, 0));
        pos = 1;
    } else if (s.size() >= 2 && s[1] == '~') {
        need(8);
        for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(s, k));
        pos = 8;
    } else {
        need(4);
        for (std::size_t k = 1; k < 4; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(s, k));
        pos = 4;
    }
    if (n > kMaxGraph6Order)
        throw Graph6Error("order " + std::to_string(n) + " exceeds supported maximum " +
                              std::to_string(kMaxGraph6Order),
                          offset);

    const std::uint64_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    const std::uint64_t body = (bits + 5) / 6;
    if (s.size() - pos != body)
        throw Graph6Error("expected " + std::to_string(body) + " body bytes for n = " + std::to_string(n) +
                              ", found " + std::to_string(s.size() - pos),
                          offset + pos);

    Graph g(static_cast<std::size_t>(n));
    std::uint64_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const auto at = pos + static_cast<std::size_t>(k / 6);
            if ((sextet(s, at) >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (k % 6 != 0) {
        const auto at = pos + static_cast<std::size_t>(k / 6);
        const int pad_mask = (1 << (6 - k % 6)) - 1;
        if (sextet(s, at) & pad_mask) throw Graph6Error("nonzero padding bits", offset + at);
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

}  // namespace ngrank
