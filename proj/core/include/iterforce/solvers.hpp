#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iterforce/graph.hpp"
#include "iterforce/search.hpp"

namespace iterforce {

enum class Parameter { zero_forcing, failed_zero_forcing, min_fort, burning, superfluous_burning };

std::string_view to_string(Parameter p);

struct Bounds {
    std::size_t lower = 0;
    std::size_t upper = 0;

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Raised when a solver's precondition does not hold (e.g. burning a disconnected graph).
class SolverError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Value plus certificate for one exact parameter computation.
///
/// When the budget runs out, `value` is empty and `bounds` holds the best
/// bracket established; the report never carries an unproven exact value.
struct SolverReport {
    Parameter parameter = Parameter::zero_forcing;
    std::optional<std::size_t> value;
    /// Z: a minimum zero forcing set. FZ: the maximum failed set V \ fort.
    /// min_fort: the fort itself.
    VertexSet witness;
    /// FZ and min_fort: the minimum fort found.
    std::optional<VertexSet> fort;
    /// Burning: sources x_1..x_t (x_i burns with radius t - i).
    std::vector<Vertex> sources;
    /// Burning: index into `sources` of the first ball covering each vertex.
    std::vector<std::size_t> covered_by;
    /// Deterministic count: every candidate of each exhausted size, plus the
    /// witness's lexicographic rank + 1 at the final size.
    std::uint64_t explored = 0;
    /// Bounds known before the search (or the final bracket when exhausted).
    Bounds bounds;
    bool budget_exhausted = false;
    /// min_fort only: false when no fort of size <= cap exists.
    bool found = true;
};

/// Z(G): minimum zero forcing set, lexicographically least at that size.
SolverReport zero_forcing_number(const Graph& g, const Budget& budget = {});

/// FZ(G) = n - (minimum fort size); witness is V \ F for the least minimum fort F.
SolverReport failed_zero_forcing_number(const Graph& g, const Budget& budget = {});

/// Smallest fort of size <= cap, lexicographically least at that size.
SolverReport min_fort(const Graph& g, std::size_t cap, const Budget& budget = {});

/// b(G) for connected G: fewest rounds t with sources whose radius-(t-i) balls cover V.
SolverReport burning_number(const Graph& g, const Budget& budget = {});

/// b*(G): fewest rounds t whose first t-1 sources already cover V by round t.
SolverReport superfluous_burning_number(const Graph& g, const Budget& budget = {});

struct ZfBoundsReport {
    std::size_t min_degree = 0;
    /// Informational only: the "average degree bounds Z" remark does not hold in
    /// general (P_3 has average degree 4/3 and Z = 1).
    double average_degree = 0.0;
    /// What the solver prunes with: max(1, min_degree) when n >= 1.
    std::size_t asserted_lower = 0;
};

ZfBoundsReport zf_lower_bounds(const Graph& g);

/// Checks that `sources` burn all of g within sources.size() rounds (or
/// sources.size() + 1 rounds when `superfluous` is set, with the last
/// source omitted).
bool verify_burning(const Graph& g, const std::vector<Vertex>& sources, bool superfluous = false);

}  // namespace iterforce
