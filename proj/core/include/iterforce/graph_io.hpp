#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iterforce/graph.hpp"

namespace iterforce {

/// Parse failure carrying the byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// graph6: one graph per line, optional ">>graph6<<" header, identity vertex order.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Edge list: "n m" header followed by m "u v" pairs, whitespace-delimited.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Reads every graph from a stream. A first non-blank token that parses as a
/// number selects the edge-list format (a single graph); otherwise each
/// non-blank line is taken as graph6.
std::vector<Graph> read_graphs(std::istream& in);
std::vector<Graph> read_graph_file(const std::string& path);

/// Accepts a shorthand name (see named_graph) or a graph6 string.
Graph graph_from_spec(const std::string& spec);

}  // namespace iterforce
