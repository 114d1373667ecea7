#include "iterforce/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <deque>
#include <limits>

namespace iterforce {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    if (n > std::numeric_limits<Vertex>::max()) throw GraphError("vertex count too large");
    Graph g;
    g.n_ = n;
    g.stride_ = words_for(n);
    g.bits_.assign(n * g.stride_, 0);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has endpoint >= n=" +
                             std::to_string(n));
        }
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (g.adjacent(u, v)) continue;
        g.bits_[u * g.stride_ + v / kWordBits] |= Word{1} << (v % kWordBits);
        g.bits_[v * g.stride_ + u / kWordBits] |= Word{1} << (u % kWordBits);
        ++g.edges_;
    }
    return g;
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
    Graph g;
    g.n_ = rows.size();
    g.stride_ = words_for(g.n_);
    g.bits_.assign(g.n_ * g.stride_, 0);
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.n_; ++v) {
        if (rows[v].universe() != g.n_) throw GraphError("row universe mismatch at vertex " + std::to_string(v));
        if (rows[v].contains(v)) throw GraphError("self-loop at vertex " + std::to_string(v));
        std::copy(rows[v].words().begin(), rows[v].words().end(), g.bits_.begin() + v * g.stride_);
        degree_sum += rows[v].count();
    }
    for (Vertex v = 0; v < g.n_; ++v) {
        rows[v].for_each([&](Vertex u) {
            if (!rows[u].contains(v)) {
                throw GraphError("asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(u));
            }
        });
    }
    g.edges_ = degree_sum / 2;
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n_) + ")");
}

std::size_t Graph::degree(Vertex v) const noexcept {
    std::size_t d = 0;
    for (Word w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::size_t Graph::min_degree() const noexcept {
    std::size_t best = n_ == 0 ? 0 : std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

VertexSet Graph::neighborhood(Vertex v) const {
    check_vertex(v);
    return VertexSet::from_words(n_, row(v));
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
    VertexSet s = neighborhood(v);
    s.insert(v);
    return s;
}

VertexSet Graph::anti_neighborhood(Vertex v) const { return closed_neighborhood(v).complement(); }

std::size_t Graph::degree_into(Vertex v, const VertexSet& s) const noexcept {
    std::size_t d = 0;
    const auto r = row(v);
    const auto sw = s.words();
    for (std::size_t i = 0; i < stride_ && i < sw.size(); ++i) d += static_cast<std::size_t>(std::popcount(r[i] & sw[i]));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < n_; ++u) {
        VertexSet::from_words(n_, row(u)).for_each([&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    }
    return out;
}

Graph Graph::induced(const VertexSet& keep) const {
    std::vector<Vertex> index(n_, std::numeric_limits<Vertex>::max());
    const auto members = keep.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<Vertex>(i);
    std::vector<Edge> sub;
    for (const auto& [u, v] : edges()) {
        if (keep.contains(u) && keep.contains(v)) sub.emplace_back(index[u], index[v]);
    }
    return from_edges(members.size(), sub);
}

std::vector<std::size_t> Graph::distances_from(Vertex src) const {
    check_vertex(src);
    std::vector<std::size_t> dist(n_, n_);
    std::deque<Vertex> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        VertexSet::from_words(n_, row(u)).for_each([&](Vertex w) {
            if (dist[w] == n_) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        });
    }
    return dist;
}

bool Graph::connected() const {
    if (n_ == 0) return true;
    const auto d = distances_from(0);
    return std::none_of(d.begin(), d.end(), [&](std::size_t x) { return x == n_; });
}

Graph named_graph(const std::string& name) {
    std::string key;
    for (char c : name) key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

    auto parse_count = [&](std::size_t prefix_len) -> std::size_t {
        std::size_t value = 0;
        const char* first = key.data() + prefix_len;
        const char* last = key.data() + key.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (first == last || ec != std::errc{} || ptr != last) throw GraphError("unknown graph name '" + name + "'");
        return value;
    };

    std::vector<Edge> edges;
    if (key.rfind("empty", 0) == 0) {
        return Graph::from_edges(parse_count(5), edges);
    }
    if (key.rfind("star", 0) == 0) {
        const std::size_t leaves = parse_count(4);
        for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
        return Graph::from_edges(leaves + 1, edges);
    }
    if (key.size() < 2) throw GraphError("unknown graph name '" + name + "'");
    const std::size_t n = parse_count(1);
    switch (key[0]) {
        case 'k':
            if (n == 0) break;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return Graph::from_edges(n, edges);
        case 'p':
            if (n == 0) break;
            for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            return Graph::from_edges(n, edges);
        case 'c':
            if (n < 3) break;
            for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
            return Graph::from_edges(n, edges);
        default:
            break;
    }
    throw GraphError("unknown graph name '" + name + "'");
}

}  // namespace iterforce
