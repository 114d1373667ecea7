#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "iterforce/graph.hpp"

namespace iterforce {

class PlanError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class PlanMode { ilt, ilat, ilm, iim };

std::string_view to_string(PlanMode mode);
PlanMode parse_plan_mode(std::string_view text);

/// Per-step clone/anticlone choices. levels()[t-1][j] is true when vertex j is
/// anticloned at step t, false when it is cloned.
class CloningPlan {
public:
    CloningPlan() = default;
    CloningPlan(std::size_t base_n, std::vector<std::vector<bool>> levels);

    static CloningPlan ilt(std::size_t base_n, std::size_t steps);
    static CloningPlan ilat(std::size_t base_n, std::size_t steps);
    /// One mode per step; per_step[t-1] true means anticlone everything at step t.
    static CloningPlan ilm(std::size_t base_n, const std::vector<bool>& per_step);

    std::size_t base_n() const noexcept { return base_n_; }
    std::size_t steps() const noexcept { return levels_.size(); }
    const std::vector<std::vector<bool>>& levels() const noexcept { return levels_; }

    /// Most specific tag: ILT and ILAT before ILM before IIM. Zero steps reads as ILT.
    PlanMode mode() const noexcept;
    bool any_anticlone() const noexcept;
    bool step_has_anticlone(std::size_t step) const;
    CloningPlan truncated(std::size_t steps) const;
    CloningPlan with_step(std::vector<bool> choices) const;

    /// One line per step over {c,a}.
    std::string to_text() const;

    friend bool operator==(const CloningPlan&, const CloningPlan&) = default;

private:
    std::size_t base_n_ = 0;
    std::vector<std::vector<bool>> levels_;
};

/// Parses the plan file format: explicit lines over {c,a}, or one shorthand
/// line "ILT <l>", "ILAT <l>", or "ILM <string over c,a>". Blank lines and
/// '#' comments are ignored.
CloningPlan parse_plan(std::string_view text, std::size_t base_n);

/// Builds a plan from a mode name and step count (ilt, ilat); ilm/iim need explicit text.
CloningPlan plan_from_mode(PlanMode mode, std::size_t base_n, std::size_t steps);

enum class VertexKind : std::uint8_t { base, clone, anticlone };

std::string_view to_string(VertexKind kind);

struct Lineage {
    std::vector<std::uint32_t> level;
    std::vector<std::optional<Vertex>> parent;
    std::vector<VertexKind> kind;
};

/// Graph grown from a base by a cloning plan, with lineage for every vertex.
///
/// Vertex numbering: the child created for vertex j at step t has index
/// n_{t-1} + j, where n_{t-1} = base_n * 2^(t-1) is the order before step t.
class IteratedGraph {
public:
    explicit IteratedGraph(Graph base);

    static IteratedGraph build(const Graph& base, const CloningPlan& plan);

    /// Applies one step; choices[j] true anticlones vertex j.
    IteratedGraph step(const std::vector<bool>& choices) const;

    const Graph& graph() const noexcept { return graph_; }
    const Lineage& lineage() const noexcept { return lineage_; }
    const CloningPlan& plan() const noexcept { return plan_; }
    std::size_t base_n() const noexcept { return plan_.base_n(); }
    std::size_t steps() const noexcept { return plan_.steps(); }
    std::size_t order() const noexcept { return graph_.order(); }

    std::uint32_t level(Vertex v) const { return lineage_.level.at(v); }
    std::optional<Vertex> parent(Vertex v) const { return lineage_.parent.at(v); }
    VertexKind kind(Vertex v) const { return lineage_.kind.at(v); }

    /// Order of the graph after `step` steps.
    std::size_t order_after(std::size_t step) const noexcept { return base_n() << step; }
    /// Vertices added at `lvl` (level 0 is the base).
    VertexSet level_set(std::size_t lvl) const;
    /// The vertex created for v at step t (t >= 1, v < order_after(t-1)).
    Vertex child(Vertex v, std::size_t t) const;

    VertexSet descendants(Vertex v) const;
    VertexSet descendants(const VertexSet& roots) const;
    /// Number of proper ancestors of x at levels >= level(y); 0 when x == y.
    std::size_t clone_distance(Vertex x, Vertex y) const;

    /// "index level parent kind" per vertex; parent is -1 for base vertices.
    std::string lineage_text() const;

private:
    IteratedGraph() = default;
    void check_vertex(Vertex v) const;

    Graph graph_;
    Lineage lineage_;
    CloningPlan plan_;
};

/// Exhaustive, duplicate-free plan stream in lexicographic order (clone < anticlone,
/// step 1 first, vertex 0 first). Indexable so workers can split by index range.
class PlanEnumerator {
public:
    static constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 24;

    PlanEnumerator(std::size_t base_n, std::size_t steps, PlanMode mode, std::uint64_t cap = kDefaultCap);

    std::uint64_t size() const noexcept { return size_; }
    CloningPlan at(std::uint64_t index) const;
    void for_each(const std::function<void(const CloningPlan&)>& fn) const;

private:
    std::size_t base_n_;
    std::size_t steps_;
    PlanMode mode_;
    std::uint64_t size_ = 0;
};

}  // namespace iterforce
