#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ngrank/graph.hpp"

namespace ngrank {

/// Largest order accepted when parsing (dense bit rows are allocated up front).
inline constexpr std::size_t kMaxGraph6Order = std::size_t{1} << 15;

/// Malformed graph6 input. position() is the 0-based character offset of the
/// offending byte within the record.
class Graph6Error : public std::invalid_argument {
public:
    Graph6Error(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses one graph6 record. An optional ">>graph6<<" prefix and trailing
/// whitespace are ignored. Every data byte must lie in [63, 126], the body
/// must have exactly ceil(n(n-1)/12) bytes and the padding bits must be zero.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 text for this labeled graph (shortest header form).
std::string emit_graph6(const Graph& g);

}  // namespace ngrank
