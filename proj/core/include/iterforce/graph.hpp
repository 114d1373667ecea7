#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iterforce/vertex_set.hpp"

namespace iterforce {

/// Raised on malformed construction input (bad endpoints, self-loops, bad shorthands).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one contiguous block of n rows, each row
/// words_per_row() 64-bit words wide. Kernels read rows through row().
class Graph {
public:
    Graph() = default;

    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    /// Builds from adjacency rows; rows must be symmetric and irreflexive.
    static Graph from_rows(std::vector<VertexSet> rows);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_; }
    std::size_t words_per_row() const noexcept { return stride_; }

    std::span<const Word> row(Vertex v) const noexcept { return {bits_.data() + v * stride_, stride_}; }
    bool adjacent(Vertex u, Vertex v) const noexcept {
        return ((bits_[u * stride_ + v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
    }
    std::size_t degree(Vertex v) const noexcept;
    std::size_t min_degree() const noexcept;
    std::size_t max_degree() const noexcept;

    /// N(v).
    VertexSet neighborhood(Vertex v) const;
    /// N[v] = N(v) plus v.
    VertexSet closed_neighborhood(Vertex v) const;
    /// AN[v] = V minus N[v].
    VertexSet anti_neighborhood(Vertex v) const;
    /// Number of neighbours of v inside s.
    std::size_t degree_into(Vertex v, const VertexSet& s) const noexcept;

    std::vector<Edge> edges() const;
    Graph induced(const VertexSet& keep) const;
    bool connected() const;

    /// BFS distances from src; unreachable vertices get order().
    std::vector<std::size_t> distances_from(Vertex src) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::size_t edges_ = 0;
    std::vector<Word> bits_;
};

/// Shorthand graphs: "k<n>" complete, "p<n>" path, "c<n>" cycle (n >= 3), "star<k>", "empty<n>".
Graph named_graph(const std::string& name);

}  // namespace iterforce
