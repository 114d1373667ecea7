#include "iterforce/iterated.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace iterforce {

std::string_view to_string(PlanMode mode) {
    switch (mode) {
        case PlanMode::ilt: return "ilt";
        case PlanMode::ilat: return "ilat";
        case PlanMode::ilm: return "ilm";
        case PlanMode::iim: return "iim";
    }
    return "?";
}

PlanMode parse_plan_mode(std::string_view text) {
    std::string key;
    for (char c : text) key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (key == "ilt") return PlanMode::ilt;
    if (key == "ilat") return PlanMode::ilat;
    if (key == "ilm") return PlanMode::ilm;
    if (key == "iim") return PlanMode::iim;
    throw PlanError("unknown plan mode '" + std::string(text) + "'");
}

std::string_view to_string(VertexKind kind) {
    switch (kind) {
        case VertexKind::base: return "base";
        case VertexKind::clone: return "clone";
        case VertexKind::anticlone: return "anticlone";
    }
    return "?";
}

// ---------------------------------------------------------------- CloningPlan

CloningPlan::CloningPlan(std::size_t base_n, std::vector<std::vector<bool>> levels)
    : base_n_(base_n), levels_(std::move(levels)) {
    for (std::size_t t = 0; t < levels_.size(); ++t) {
        const std::size_t expected = base_n_ << t;
        if (levels_[t].size() != expected) {
            throw PlanError("plan step " + std::to_string(t + 1) + " has width " + std::to_string(levels_[t].size()) +
                            ", expected " + std::to_string(expected));
        }
    }
}

CloningPlan CloningPlan::ilt(std::size_t base_n, std::size_t steps) {
    return ilm(base_n, std::vector<bool>(steps, false));
}

CloningPlan CloningPlan::ilat(std::size_t base_n, std::size_t steps) {
    return ilm(base_n, std::vector<bool>(steps, true));
}

CloningPlan CloningPlan::ilm(std::size_t base_n, const std::vector<bool>& per_step) {
    std::vector<std::vector<bool>> levels;
    for (std::size_t t = 0; t < per_step.size(); ++t) levels.emplace_back(base_n << t, per_step[t]);
    return CloningPlan(base_n, std::move(levels));
}

PlanMode CloningPlan::mode() const noexcept {
    bool all_clone = true;
    bool all_anti = true;
    bool constant_steps = true;
    for (const auto& step : levels_) {
        const bool any_a = std::find(step.begin(), step.end(), true) != step.end();
        const bool any_c = std::find(step.begin(), step.end(), false) != step.end();
        all_clone = all_clone && !any_a;
        all_anti = all_anti && !any_c;
        constant_steps = constant_steps && !(any_a && any_c);
    }
    if (all_clone) return PlanMode::ilt;
    if (all_anti) return PlanMode::ilat;
    if (constant_steps) return PlanMode::ilm;
    return PlanMode::iim;
}

bool CloningPlan::any_anticlone() const noexcept {
    return std::any_of(levels_.begin(), levels_.end(),
                       [](const auto& step) { return std::find(step.begin(), step.end(), true) != step.end(); });
}

bool CloningPlan::step_has_anticlone(std::size_t step) const {
    if (step == 0 || step > levels_.size()) throw PlanError("no plan step " + std::to_string(step));
    const auto& s = levels_[step - 1];
    return std::find(s.begin(), s.end(), true) != s.end();
}

CloningPlan CloningPlan::truncated(std::size_t steps) const {
    if (steps > levels_.size()) throw PlanError("cannot truncate plan to more steps than it has");
    return CloningPlan(base_n_, std::vector<std::vector<bool>>(levels_.begin(), levels_.begin() + steps));
}

CloningPlan CloningPlan::with_step(std::vector<bool> choices) const {
    auto levels = levels_;
    levels.push_back(std::move(choices));
    return CloningPlan(base_n_, std::move(levels));
}

std::string CloningPlan::to_text() const {
    std::string out;
    for (const auto& step : levels_) {
        for (bool a : step) out += a ? 'a' : 'c';
        out += '\n';
    }
    return out;
}

CloningPlan plan_from_mode(PlanMode mode, std::size_t base_n, std::size_t steps) {
    switch (mode) {
        case PlanMode::ilt: return CloningPlan::ilt(base_n, steps);
        case PlanMode::ilat: return CloningPlan::ilat(base_n, steps);
        default: break;
    }
    throw PlanError("mode '" + std::string(to_string(mode)) + "' needs an explicit plan");
}

CloningPlan parse_plan(std::string_view text, std::size_t base_n) {
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string trimmed;
        std::istringstream tokens(line);
        std::string tok;
        std::vector<std::string> parts;
        while (tokens >> tok) parts.push_back(tok);
        if (parts.empty()) continue;
        for (std::size_t i = 0; i < parts.size(); ++i) trimmed += (i ? " " : "") + parts[i];
        lines.push_back(trimmed);
    }
    if (lines.size() == 1 && lines[0].find(' ') != std::string::npos) {
        std::istringstream header(lines[0]);
        std::string kind;
        std::string arg;
        header >> kind >> arg;
        std::string rest;
        if (header >> rest) throw PlanError("plan header has trailing tokens: '" + lines[0] + "'");
        const PlanMode mode = parse_plan_mode(kind);
        if (mode == PlanMode::ilm) {
            std::vector<bool> per_step;
            for (char c : arg) {
                if (c != 'c' && c != 'a') throw PlanError("ILM pattern must be over {c,a}: '" + arg + "'");
                per_step.push_back(c == 'a');
            }
            return CloningPlan::ilm(base_n, per_step);
        }
        std::size_t steps = 0;
        auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), steps);
        if (ec != std::errc{} || ptr != arg.data() + arg.size()) throw PlanError("bad step count '" + arg + "'");
        return plan_from_mode(mode, base_n, steps);
    }
    std::vector<std::vector<bool>> levels;
    for (const auto& line : lines) {
        std::vector<bool> step;
        for (char c : line) {
            if (c != 'c' && c != 'a') {
                throw PlanError("plan step " + std::to_string(levels.size() + 1) + " contains '" + std::string(1, c) +
                                "', expected only 'c' or 'a'");
            }
            step.push_back(c == 'a');
        }
        levels.push_back(std::move(step));
    }
    return CloningPlan(base_n, std::move(levels));
}

// -------------------------------------------------------------- IteratedGraph

IteratedGraph::IteratedGraph(Graph base) : graph_(std::move(base)), plan_(graph_.order(), {}) {
    const std::size_t n = graph_.order();
    lineage_.level.assign(n, 0);
    lineage_.parent.assign(n, std::nullopt);
    lineage_.kind.assign(n, VertexKind::base);
}

IteratedGraph IteratedGraph::step(const std::vector<bool>& choices) const {
    const std::size_t n = graph_.order();
    if (choices.size() != n) {
        throw PlanError("step choices have length " + std::to_string(choices.size()) + ", graph has " +
                        std::to_string(n) + " vertices");
    }
    const std::size_t m = 2 * n;
    std::vector<VertexSet> rows(m, VertexSet(m));
    for (Vertex v = 0; v < n; ++v) {
        graph_.neighborhood(v).for_each([&](Vertex u) { rows[v].insert(u); });
    }
    for (Vertex j = 0; j < n; ++j) {
        const Vertex c = static_cast<Vertex>(n + j);
        const VertexSet attach = choices[j] ? graph_.anti_neighborhood(j) : graph_.closed_neighborhood(j);
        attach.for_each([&](Vertex x) {
            rows[c].insert(x);
            rows[x].insert(c);
        });
    }

    IteratedGraph next;
    next.graph_ = Graph::from_rows(std::move(rows));
    next.lineage_ = lineage_;
    next.plan_ = plan_.with_step(choices);
    const auto new_level = static_cast<std::uint32_t>(plan_.steps() + 1);
    for (Vertex j = 0; j < n; ++j) {
        next.lineage_.level.push_back(new_level);
        next.lineage_.parent.emplace_back(j);
        next.lineage_.kind.push_back(choices[j] ? VertexKind::anticlone : VertexKind::clone);
    }
    return next;
}

IteratedGraph IteratedGraph::build(const Graph& base, const CloningPlan& plan) {
    if (plan.base_n() != base.order()) {
        throw PlanError("plan is for a base of order " + std::to_string(plan.base_n()) + ", base has " +
                        std::to_string(base.order()));
    }
    IteratedGraph ig(base);
    for (const auto& choices : plan.levels()) ig = ig.step(choices);
    return ig;
}

void IteratedGraph::check_vertex(Vertex v) const {
    if (v >= order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(order()) + ")");
}

VertexSet IteratedGraph::level_set(std::size_t lvl) const {
    if (lvl > steps()) throw std::out_of_range("no level " + std::to_string(lvl));
    VertexSet s(order());
    const std::size_t lo = lvl == 0 ? 0 : order_after(lvl - 1);
    const std::size_t hi = order_after(lvl);
    for (std::size_t v = lo; v < hi; ++v) s.insert(static_cast<Vertex>(v));
    return s;
}

Vertex IteratedGraph::child(Vertex v, std::size_t t) const {
    if (t == 0 || t > steps()) throw std::out_of_range("no step " + std::to_string(t));
    if (v >= order_after(t - 1)) {
        throw std::out_of_range("vertex " + std::to_string(v) + " does not exist before step " + std::to_string(t));
    }
    return static_cast<Vertex>(order_after(t - 1) + v);
}

VertexSet IteratedGraph::descendants(Vertex v) const {
    check_vertex(v);
    VertexSet roots(order());
    roots.insert(v);
    return descendants(roots);
}

VertexSet IteratedGraph::descendants(const VertexSet& roots) const {
    VertexSet out(order());
    // parent(u) < u, so one ascending pass sees every chain in order.
    for (Vertex u = 0; u < order(); ++u) {
        const auto p = lineage_.parent[u];
        if (p && (roots.contains(*p) || out.contains(*p))) out.insert(u);
    }
    return out;
}

std::size_t IteratedGraph::clone_distance(Vertex x, Vertex y) const {
    check_vertex(x);
    check_vertex(y);
    std::size_t hops = 0;
    Vertex cur = x;
    while (cur != y) {
        const auto p = lineage_.parent[cur];
        if (!p || *p < y) {
            throw std::invalid_argument("vertex " + std::to_string(x) + " is not a descendant of " + std::to_string(y));
        }
        cur = *p;
        ++hops;
    }
    return hops;
}

std::string IteratedGraph::lineage_text() const {
    std::ostringstream out;
    for (Vertex v = 0; v < order(); ++v) {
        const auto p = lineage_.parent[v];
        out << v << ' ' << lineage_.level[v] << ' ' << (p ? static_cast<long long>(*p) : -1LL) << ' '
            << to_string(lineage_.kind[v]) << '\n';
    }
    return out.str();
}

// ------------------------------------------------------------- PlanEnumerator

PlanEnumerator::PlanEnumerator(std::size_t base_n, std::size_t steps, PlanMode mode, std::uint64_t cap)
    : base_n_(base_n), steps_(steps), mode_(mode) {
    std::size_t bits = 0;
    switch (mode) {
        case PlanMode::ilt:
        case PlanMode::ilat: bits = 0; break;
        case PlanMode::ilm: bits = steps; break;
        case PlanMode::iim: bits = base_n * ((std::size_t{1} << steps) - 1); break;
    }
    if (bits >= 63 || (std::uint64_t{1} << bits) > cap) {
        throw PlanError("plan stream of 2^" + std::to_string(bits) + " plans exceeds the cap of " + std::to_string(cap));
    }
    size_ = std::uint64_t{1} << bits;
}

CloningPlan PlanEnumerator::at(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("plan index " + std::to_string(index) + " out of range");
    switch (mode_) {
        case PlanMode::ilt: return CloningPlan::ilt(base_n_, steps_);
        case PlanMode::ilat: return CloningPlan::ilat(base_n_, steps_);
        case PlanMode::ilm: {
            std::vector<bool> per_step(steps_);
            for (std::size_t t = 0; t < steps_; ++t) per_step[t] = ((index >> (steps_ - 1 - t)) & 1U) != 0;
            return CloningPlan::ilm(base_n_, per_step);
        }
        case PlanMode::iim: break;
    }
    const std::size_t total = base_n_ * ((std::size_t{1} << steps_) - 1);
    std::vector<std::vector<bool>> levels;
    std::size_t k = 0;
    for (std::size_t t = 0; t < steps_; ++t) {
        std::vector<bool> step(base_n_ << t);
        for (std::size_t j = 0; j < step.size(); ++j, ++k) step[j] = ((index >> (total - 1 - k)) & 1U) != 0;
        levels.push_back(std::move(step));
    }
    return CloningPlan(base_n_, std::move(levels));
}

void PlanEnumerator::for_each(const std::function<void(const CloningPlan&)>& fn) const {
    for (std::uint64_t i = 0; i < size_; ++i) fn(at(i));
}

}  // namespace iterforce
