#include "iterforce/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace iterforce {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::size_t read_size_field(std::string_view s, std::size_t& pos) {
    auto byte = [&](std::size_t at) -> std::size_t {
        if (at >= s.size()) throw ParseError("graph6: truncated size field", at);
        const int c = static_cast<unsigned char>(s[at]);
        if (c < kBias || c > 126) throw ParseError("graph6: byte outside printable range 63..126", at);
        return static_cast<std::size_t>(c - kBias);
    };
    if (pos >= s.size()) throw ParseError("graph6: empty input", pos);
    if (static_cast<unsigned char>(s[pos]) != 126) {
        return byte(pos++);
    }
    std::size_t width = 3;
    ++pos;
    if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126) {
        width = 6;
        ++pos;
    }
    std::size_t n = 0;
    for (std::size_t i = 0; i < width; ++i) {
        const std::size_t v = byte(pos);
        if (v > 63) throw ParseError("graph6: size byte out of range", pos);
        n = (n << 6) | v;
        ++pos;
    }
    return n;
}

void write_size_field(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    while (text.size() > pos && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    const std::size_t n = read_size_field(text, pos);
    const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (text.size() - pos != byte_count) {
        throw ParseError("graph6: expected " + std::to_string(byte_count) + " adjacency bytes for n=" +
                             std::to_string(n) + ", found " + std::to_string(text.size() - pos),
                         text.size() < pos + byte_count ? text.size() : pos + byte_count);
    }

    std::vector<Edge> edges;
    std::size_t bit = 0;
    // Column-major upper triangle: bits enumerate (i,j), i<j, j ascending.
    Vertex row_i = 0;
    Vertex col_j = 1;
    for (std::size_t b = 0; b < byte_count; ++b) {
        const std::size_t at = pos + b;
        const int c = static_cast<unsigned char>(text[at]);
        if (c < kBias || c > 126) throw ParseError("graph6: byte outside printable range 63..126", at);
        const int value = c - kBias;
        for (int k = 5; k >= 0; --k, ++bit) {
            const bool set = ((value >> k) & 1) != 0;
            if (bit >= bit_count) {
                if (set) throw ParseError("graph6: nonzero padding bit", at);
                continue;
            }
            if (set) edges.emplace_back(row_i, col_j);
            if (++row_i == col_j) {
                row_i = 0;
                ++col_j;
            }
        }
    }
    return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    write_size_field(out, n);
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
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

Graph parse_edge_list(std::string_view text) {
    std::size_t pos = 0;
    auto next_number = [&](const char* what) -> std::size_t {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) throw ParseError(std::string("edge list: missing ") + what, pos);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{}) throw ParseError(std::string("edge list: expected integer for ") + what, pos);
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    };
    const std::size_t n = next_number("vertex count");
    const std::size_t m = next_number("edge count");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t e = 0; e < m; ++e) {
        const std::size_t at = pos;
        const std::size_t u = next_number("edge endpoint");
        const std::size_t v = next_number("edge endpoint");
        if (u >= n || v >= n) throw ParseError("edge list: endpoint out of range", at);
        if (u == v) throw ParseError("edge list: self-loop", at);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw ParseError("edge list: trailing data after " + std::to_string(m) + " edges", pos);
    return Graph::from_edges(n, edges);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<Graph> read_graphs(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const std::string_view body = trim(text);
    std::vector<Graph> out;
    if (body.empty()) return out;
    if (std::isdigit(static_cast<unsigned char>(body.front()))) {
        out.push_back(parse_edge_list(body));
        return out;
    }
    std::size_t line_start = 0;
    while (line_start < text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string::npos) line_end = text.size();
        const std::string_view line = trim(std::string_view(text).substr(line_start, line_end - line_start));
        if (!line.empty()) {
            try {
                out.push_back(parse_graph6(line));
            } catch (const ParseError& e) {
                throw ParseError(std::string(e.what()) + " in line starting at", line_start);
            }
        }
        line_start = line_end + 1;
    }
    return out;
}

std::vector<Graph> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    return read_graphs(in);
}

Graph graph_from_spec(const std::string& spec) {
    try {
        return named_graph(spec);
    } catch (const GraphError&) {
        return parse_graph6(spec);
    }
}

}  // namespace iterforce
