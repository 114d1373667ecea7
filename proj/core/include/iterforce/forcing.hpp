#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iterforce/graph.hpp"

namespace iterforce {

struct Force {
    std::size_t round = 0;
    Vertex forcer = 0;
    Vertex target = 0;

    friend bool operator==(const Force&, const Force&) = default;
};

/// Ordered force records; each target appears at most once.
using Chronology = std::vector<Force>;

struct ClosureResult {
    VertexSet forced;
    Chronology chronology;
    std::size_t rounds = 0;
};

/// Round-synchronous zero forcing from `start`. Every force in a round is
/// decided against the round-start state; forcers are taken in ascending
/// index and a target claimed by a lower forcer is not recorded twice.
ClosureResult closure(const Graph& g, const VertexSet& start);

/// Closure without the chronology. Same fixed point, cheaper.
VertexSet closure_set(const Graph& g, const VertexSet& start);

bool is_zero_forcing_set(const Graph& g, const VertexSet& start);

/// Zero forcing plus the loop rule: an unforced vertex whose neighbours are
/// all forced becomes forced.
VertexSet loop_closure(const Graph& g, const VertexSet& start);

/// Nonempty F such that no vertex outside F has exactly one neighbour in F.
bool is_fort(const Graph& g, const VertexSet& candidate);

struct ReplayResult {
    bool ok = false;
    /// Index into the schedule of the first illegal force, or schedule.size()
    /// when every force was legal but some vertex stayed unforced.
    std::size_t failed_step = 0;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
};

/// Executes the forces one at a time from `start` and checks each is legal:
/// forcer already forced, target unforced, target the forcer's only unforced
/// neighbour. Succeeds when every force is legal and V ends fully forced.
ReplayResult replay_schedule(const Graph& g, const VertexSet& start, std::span<const Force> schedule);

/// "round forcer target" per line.
std::string chronology_text(std::span<const Force> chronology);
Chronology parse_chronology(std::string_view text);

/// Allocation-free closure test for search loops. One instance per thread.
class ForcingKernel {
public:
    explicit ForcingKernel(const Graph& g);

    /// True when the closure of `start` is all of V. `start` is a word array of
    /// g.words_per_row() words.
    bool forces_all(std::span<const Word> start);
    bool forces_all(std::span<const Vertex> start);

    /// Forced set left by the last forces_all call.
    std::span<const Word> last_closure() const noexcept { return forced_; }

private:
    const Graph* g_;
    std::vector<Word> forced_;
    std::vector<std::uint32_t> unforced_count_;
    std::vector<Vertex> queue_;
    std::vector<Word> scratch_;
};

}  // namespace iterforce
