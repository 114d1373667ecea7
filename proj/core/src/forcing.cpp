#include "iterforce/forcing.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace iterforce {

namespace {

std::size_t unforced_neighbours(std::span<const Word> row, std::span<const Word> forced, Vertex* only) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        const Word w = row[i] & ~forced[i];
        if (w != 0) {
            count += static_cast<std::size_t>(std::popcount(w));
            if (only != nullptr && count == 1) *only = static_cast<Vertex>(i * kWordBits + std::countr_zero(w));
        }
    }
    return count;
}

}  // namespace

ClosureResult closure(const Graph& g, const VertexSet& start) {
    ClosureResult result{start, {}, 0};
    VertexSet& forced = result.forced;
    while (true) {
        const VertexSet snapshot = forced;
        std::vector<Force> round_forces;
        snapshot.for_each([&](Vertex u) {
            Vertex target = 0;
            if (unforced_neighbours(g.row(u), snapshot.words(), &target) != 1) return;
            if (forced.contains(target)) return;
            forced.insert(target);
            round_forces.push_back({result.rounds + 1, u, target});
        });
        if (round_forces.empty()) break;
        ++result.rounds;
        result.chronology.insert(result.chronology.end(), round_forces.begin(), round_forces.end());
    }
    return result;
}

VertexSet closure_set(const Graph& g, const VertexSet& start) {
    ForcingKernel kernel(g);
    kernel.forces_all(start.words());
    return VertexSet::from_words(g.order(), kernel.last_closure());
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& start) {
    ForcingKernel kernel(g);
    return kernel.forces_all(start.words());
}

VertexSet loop_closure(const Graph& g, const VertexSet& start) {
    VertexSet forced = start;
    bool changed = true;
    while (changed) {
        changed = false;
        const VertexSet snapshot = forced;
        for (Vertex v = 0; v < g.order(); ++v) {
            Vertex target = 0;
            const std::size_t open = unforced_neighbours(g.row(v), snapshot.words(), &target);
            if (snapshot.contains(v)) {
                if (open == 1 && !forced.contains(target)) {
                    forced.insert(target);
                    changed = true;
                }
            } else if (open == 0 && !forced.contains(v)) {
                forced.insert(v);
                changed = true;
            }
        }
    }
    return forced;
}

bool is_fort(const Graph& g, const VertexSet& candidate) {
    if (candidate.empty()) return false;
    const std::size_t words = g.words_per_row();
    std::vector<Word> once(words, 0);
    std::vector<Word> twice(words, 0);
    candidate.for_each([&](Vertex f) {
        const auto r = g.row(f);
        for (std::size_t i = 0; i < words; ++i) {
            twice[i] |= once[i] & r[i];
            once[i] |= r[i];
        }
    });
    const auto fw = candidate.words();
    for (std::size_t i = 0; i < words; ++i) {
        if ((once[i] & ~twice[i] & ~fw[i]) != 0) return false;
    }
    return true;
}

ReplayResult replay_schedule(const Graph& g, const VertexSet& start, std::span<const Force> schedule) {
    VertexSet forced = start;
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        const Force& f = schedule[i];
        auto fail = [&](const std::string& why) {
            return ReplayResult{false, i,
                                "step " + std::to_string(i) + " (" + std::to_string(f.forcer) + "->" +
                                    std::to_string(f.target) + "): " + why};
        };
        if (f.forcer >= g.order() || f.target >= g.order()) return fail("vertex out of range");
        if (!forced.contains(f.forcer)) return fail("forcer not yet forced");
        if (forced.contains(f.target)) return fail("target already forced");
        if (!g.adjacent(f.forcer, f.target)) return fail("target is not a neighbour of the forcer");
        const std::size_t open = unforced_neighbours(g.row(f.forcer), forced.words(), nullptr);
        if (open != 1) return fail("forcer has " + std::to_string(open) + " unforced neighbours");
        forced.insert(f.target);
    }
    const std::size_t left = g.order() - forced.count();
    if (left != 0) {
        return ReplayResult{false, schedule.size(), "schedule ends with " + std::to_string(left) + " vertices unforced"};
    }
    return ReplayResult{true, schedule.size(), {}};
}

std::string chronology_text(std::span<const Force> chronology) {
    std::ostringstream out;
    for (const auto& f : chronology) out << f.round << ' ' << f.forcer << ' ' << f.target << '\n';
    return out.str();
}

Chronology parse_chronology(std::string_view text) {
    Chronology out;
    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        std::istringstream fields(line);
        Force f;
        if (!(fields >> f.round)) continue;
        if (!(fields >> f.forcer >> f.target)) {
            throw std::invalid_argument("chronology line " + std::to_string(line_no) + ": expected 'round forcer target'");
        }
        out.push_back(f);
    }
    return out;
}

// -------------------------------------------------------------- ForcingKernel

ForcingKernel::ForcingKernel(const Graph& g)
    : g_(&g),
      forced_(g.words_per_row(), 0),
      unforced_count_(g.order(), 0),
      queue_(),
      scratch_(g.words_per_row(), 0) {
    queue_.reserve(g.order());
}

bool ForcingKernel::forces_all(std::span<const Vertex> start) {
    std::fill(scratch_.begin(), scratch_.end(), 0);
    for (Vertex v : start) scratch_[v / kWordBits] |= Word{1} << (v % kWordBits);
    return forces_all(std::span<const Word>(scratch_));
}

bool ForcingKernel::forces_all(std::span<const Word> start) {
    const Graph& g = *g_;
    const std::size_t n = g.order();
    const std::size_t words = forced_.size();
    std::copy(start.begin(), start.end(), forced_.begin());
    std::size_t forced_count = 0;
    for (Word w : forced_) forced_count += static_cast<std::size_t>(std::popcount(w));

    queue_.clear();
    for (std::size_t wi = 0; wi < words; ++wi) {
        Word bits = forced_[wi];
        while (bits != 0) {
            const auto u = static_cast<Vertex>(wi * kWordBits + std::countr_zero(bits));
            bits &= bits - 1;
            const auto c = static_cast<std::uint32_t>(unforced_neighbours(g.row(u), forced_, nullptr));
            unforced_count_[u] = c;
            if (c == 1) queue_.push_back(u);
        }
    }

    auto mark_forced = [&](Vertex t) {
        forced_[t / kWordBits] |= Word{1} << (t % kWordBits);
        ++forced_count;
        const auto c = static_cast<std::uint32_t>(unforced_neighbours(g.row(t), forced_, nullptr));
        unforced_count_[t] = c;
        if (c == 1) queue_.push_back(t);
        const auto r = g.row(t);
        for (std::size_t wi = 0; wi < words; ++wi) {
            Word bits = r[wi] & forced_[wi];
            while (bits != 0) {
                const auto w = static_cast<Vertex>(wi * kWordBits + std::countr_zero(bits));
                bits &= bits - 1;
                if (w == t) continue;
                if (--unforced_count_[w] == 1) queue_.push_back(w);
            }
        }
    };

    std::size_t head = 0;
    while (head < queue_.size() && forced_count < n) {
        const Vertex u = queue_[head++];
        if (unforced_count_[u] != 1) continue;
        Vertex target = 0;
        unforced_neighbours(g.row(u), forced_, &target);
        mark_forced(target);
    }
    return forced_count == n;
}

}  // namespace iterforce
