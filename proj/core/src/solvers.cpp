#include "iterforce/solvers.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "iterforce/forcing.hpp"

namespace iterforce {

std::string_view to_string(Parameter p) {
    switch (p) {
        case Parameter::zero_forcing: return "Z";
        case Parameter::failed_zero_forcing: return "FZ";
        case Parameter::min_fort: return "min_fort";
        case Parameter::burning: return "b";
        case Parameter::superfluous_burning: return "b_star";
    }
    return "?";
}

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

/// Checks fort-ness of a candidate given as word bits, with per-thread scratch.
class FortTester {
public:
    explicit FortTester(const Graph& g) : g_(&g), once_(g.words_per_row()), twice_(g.words_per_row()) {}

    bool operator()(std::span<const Vertex> members, std::span<const Word> bits) {
        std::fill(once_.begin(), once_.end(), 0);
        std::fill(twice_.begin(), twice_.end(), 0);
        const std::size_t words = once_.size();
        for (Vertex f : members) {
            const auto r = g_->row(f);
            for (std::size_t i = 0; i < words; ++i) {
                twice_[i] |= once_[i] & r[i];
                once_[i] |= r[i];
            }
        }
        for (std::size_t i = 0; i < words; ++i) {
            if ((once_[i] & ~twice_[i] & ~bits[i]) != 0) return false;
        }
        return !members.empty();
    }

private:
    const Graph* g_;
    std::vector<Word> once_;
    std::vector<Word> twice_;
};

struct LevelSearch {
    std::optional<SubsetHit> hit;
    std::size_t size = 0;
    std::uint64_t explored = 0;
    bool exhausted = false;
    /// Every size below this was searched completely without a hit.
    std::size_t cleared_below = 0;
};

/// Ascends subset size from `from` to `to` and stops at the first size with an
/// accepted subset.
template <typename MakePredicate>
LevelSearch ascend_sizes(std::size_t n, std::size_t from, std::size_t to, const Budget& budget,
                         MakePredicate&& make_predicate) {
    LevelSearch out;
    out.cleared_below = from;
    const Deadline deadline = deadline_after(budget.wall_seconds);
    for (std::size_t k = from; k <= to; ++k) {
        const std::uint64_t total = binomial(n, k);
        const std::uint64_t remaining =
            budget.max_candidates > out.explored ? budget.max_candidates - out.explored : 0;
        const std::uint64_t limit = std::min(total, remaining);
        const SubsetScan scan = find_least_subset(n, k, limit, budget.workers, deadline, make_predicate);
        if (scan.hit) {
            out.hit = scan.hit;
            out.size = k;
            out.explored = saturating_add(out.explored, scan.hit->rank + 1);
            return out;
        }
        if (scan.timed_out || limit < total) {
            out.exhausted = true;
            out.explored = saturating_add(out.explored, limit);
            return out;
        }
        out.explored = saturating_add(out.explored, total);
        out.cleared_below = k + 1;
    }
    return out;
}

}  // namespace

ZfBoundsReport zf_lower_bounds(const Graph& g) {
    ZfBoundsReport r;
    const std::size_t n = g.order();
    r.min_degree = g.min_degree();
    r.average_degree = n == 0 ? 0.0 : 2.0 * static_cast<double>(g.size()) / static_cast<double>(n);
    r.asserted_lower = n == 0 ? 0 : std::max<std::size_t>(1, r.min_degree);
    return r;
}

SolverReport zero_forcing_number(const Graph& g, const Budget& budget) {
    const std::size_t n = g.order();
    if (n == 0) throw SolverError("zero forcing number needs at least one vertex");
    SolverReport report;
    report.parameter = Parameter::zero_forcing;
    report.bounds = {zf_lower_bounds(g).asserted_lower, g.size() > 0 ? n - 1 : n};

    const LevelSearch found = ascend_sizes(n, report.bounds.lower, report.bounds.upper, budget,
                                           [&] {
                                               return [kernel = ForcingKernel(g)](std::span<const Vertex>,
                                                                                  std::span<const Word> bits) mutable {
                                                   return kernel.forces_all(bits);
                                               };
                                           });
    report.explored = found.explored;
    if (found.hit) {
        report.value = found.size;
        report.witness = VertexSet::from_indices(n, found.hit->members);
    } else {
        report.budget_exhausted = true;
        report.bounds.lower = std::max(report.bounds.lower, found.cleared_below);
        report.witness = VertexSet::full(n);
    }
    return report;
}

SolverReport min_fort(const Graph& g, std::size_t cap, const Budget& budget) {
    const std::size_t n = g.order();
    if (cap > n) throw SolverError("fort size cap " + std::to_string(cap) + " exceeds n=" + std::to_string(n));
    SolverReport report;
    report.parameter = Parameter::min_fort;
    report.bounds = {1, n};
    const LevelSearch found =
        ascend_sizes(n, 1, cap, budget, [&] { return FortTester(g); });
    report.explored = found.explored;
    if (found.hit) {
        report.value = found.size;
        report.witness = VertexSet::from_indices(n, found.hit->members);
        report.fort = report.witness;
    } else if (found.exhausted) {
        report.budget_exhausted = true;
        report.bounds.lower = std::max<std::size_t>(1, found.cleared_below);
        report.found = false;
        report.witness = VertexSet(n);
    } else {
        report.found = false;
        report.bounds.lower = cap + 1;
        report.witness = VertexSet(n);
    }
    return report;
}

SolverReport failed_zero_forcing_number(const Graph& g, const Budget& budget) {
    const std::size_t n = g.order();
    if (n == 0) throw SolverError("failed zero forcing number needs at least one vertex");
    SolverReport fort = min_fort(g, n, budget);
    SolverReport report;
    report.parameter = Parameter::failed_zero_forcing;
    report.explored = fort.explored;
    if (fort.value) {
        report.value = n - *fort.value;
        report.fort = fort.witness;
        report.witness = fort.witness.complement();
        report.bounds = {0, n - 1};
    } else {
        report.budget_exhausted = true;
        // Forts of size < lower are ruled out; V itself is always a fort.
        report.bounds = {0, n - fort.bounds.lower};
        report.witness = VertexSet(n);
    }
    return report;
}

// --------------------------------------------------------------------- burning

namespace {

class BurningSearch {
public:
    BurningSearch(const Graph& g, const Budget& budget) : g_(g), n_(g.order()), words_(words_for(g.order())) {
        dist_.reserve(n_);
        for (Vertex v = 0; v < n_; ++v) dist_.push_back(g.distances_from(v));
        max_candidates_ = budget.max_candidates;
        deadline_ = deadline_after(budget.wall_seconds);
    }

    std::size_t radius() const {
        std::size_t best = n_;
        for (const auto& row : dist_) best = std::min(best, *std::max_element(row.begin(), row.end()));
        return best;
    }

    Vertex center() const {
        std::size_t best = n_ + 1;
        Vertex arg = 0;
        for (Vertex v = 0; v < n_; ++v) {
            const std::size_t ecc = *std::max_element(dist_[v].begin(), dist_[v].end());
            if (ecc < best) {
                best = ecc;
                arg = v;
            }
        }
        return arg;
    }

    /// Sum of the largest balls over the given radii bounds how much t sources can cover.
    std::size_t coverage_bound(const std::vector<std::size_t>& radii) const {
        std::size_t total = 0;
        for (std::size_t r : radii) {
            std::size_t best = 0;
            for (Vertex c = 0; c < n_; ++c) {
                best = std::max<std::size_t>(best, std::count_if(dist_[c].begin(), dist_[c].end(),
                                                                 [&](std::size_t d) { return d <= r; }));
            }
            total += best;
        }
        return total;
    }

    enum class Outcome { found, infeasible, exhausted };

    /// Tries to cover V with one ball of each radius in `radii` (descending).
    Outcome solve(const std::vector<std::size_t>& radii) {
        radii_ = radii;
        const std::size_t m = radii.size();
        balls_.assign(m * n_ * words_, 0);
        max_ball_.assign(m, 0);
        for (std::size_t ri = 0; ri < m; ++ri) {
            for (Vertex c = 0; c < n_; ++c) {
                Word* ball = &balls_[(ri * n_ + c) * words_];
                std::size_t size = 0;
                for (Vertex v = 0; v < n_; ++v) {
                    if (dist_[c][v] <= radii[ri]) {
                        ball[v / kWordBits] |= Word{1} << (v % kWordBits);
                        ++size;
                    }
                }
                max_ball_[ri] = std::max(max_ball_[ri], size);
            }
        }
        choice_.assign(m, n_);
        std::vector<Word> covered(words_, 0);
        try {
            return dfs(covered, 0) ? Outcome::found : Outcome::infeasible;
        } catch (const OutOfBudget&) {
            return Outcome::exhausted;
        }
    }

    /// Centre chosen per radius slot; unused slots get vertex 0.
    std::vector<Vertex> choices() const {
        std::vector<Vertex> out;
        for (std::size_t c : choice_) out.push_back(c == n_ ? 0 : static_cast<Vertex>(c));
        return out;
    }

    std::uint64_t explored() const noexcept { return explored_; }
    const std::vector<std::vector<std::size_t>>& distances() const noexcept { return dist_; }

private:
    struct OutOfBudget {};

    const Word* ball(std::size_t ri, Vertex c) const { return &balls_[(ri * n_ + c) * words_]; }

    bool dfs(std::vector<Word>& covered, std::uint32_t used) {
        if (++explored_ > max_candidates_) throw OutOfBudget{};
        if ((explored_ & 0x3FF) == 0 && deadline_ != Deadline::max() && std::chrono::steady_clock::now() > deadline_) {
            throw OutOfBudget{};
        }
        std::size_t uncovered = n_;
        Vertex first = static_cast<Vertex>(n_);
        for (std::size_t i = 0; i < words_; ++i) {
            uncovered -= static_cast<std::size_t>(std::popcount(covered[i]));
            const Word open = ~covered[i] & (i + 1 == words_ && n_ % kWordBits ? (Word{1} << (n_ % kWordBits)) - 1 : ~Word{0});
            if (first == n_ && open != 0) first = static_cast<Vertex>(i * kWordBits + std::countr_zero(open));
        }
        if (uncovered == 0) return true;
        std::size_t capacity = 0;
        for (std::size_t ri = 0; ri < radii_.size(); ++ri) {
            if ((used & (1U << ri)) == 0) capacity += max_ball_[ri];
        }
        if (capacity < uncovered) return false;

        for (std::size_t ri = 0; ri < radii_.size(); ++ri) {
            if ((used & (1U << ri)) != 0) continue;
            // Centres able to cover the first uncovered vertex with this radius.
            std::vector<Vertex> centres;
            for (Vertex c = 0; c < n_; ++c) {
                if (dist_[first][c] <= radii_[ri]) centres.push_back(c);
            }
            // Drop centres whose fresh coverage is contained in another's.
            std::vector<std::vector<Word>> fresh(centres.size(), std::vector<Word>(words_));
            for (std::size_t i = 0; i < centres.size(); ++i) {
                const Word* b = ball(ri, centres[i]);
                for (std::size_t w = 0; w < words_; ++w) fresh[i][w] = b[w] & ~covered[w];
            }
            for (std::size_t i = 0; i < centres.size(); ++i) {
                bool dominated = false;
                for (std::size_t j = 0; j < centres.size() && !dominated; ++j) {
                    if (i == j) continue;
                    bool subset = true;
                    bool equal = true;
                    for (std::size_t w = 0; w < words_; ++w) {
                        if ((fresh[i][w] & ~fresh[j][w]) != 0) subset = false;
                        if (fresh[i][w] != fresh[j][w]) equal = false;
                    }
                    dominated = subset && (!equal || j < i);
                }
                if (dominated) continue;
                std::vector<Word> next(covered);
                for (std::size_t w = 0; w < words_; ++w) next[w] |= fresh[i][w];
                choice_[ri] = centres[i];
                if (dfs(next, used | (1U << ri))) return true;
                choice_[ri] = n_;
            }
        }
        return false;
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t words_;
    std::vector<std::vector<std::size_t>> dist_;
    std::vector<std::size_t> radii_;
    std::vector<Word> balls_;
    std::vector<std::size_t> max_ball_;
    std::vector<std::size_t> choice_;
    std::uint64_t explored_ = 0;
    std::uint64_t max_candidates_ = 0;
    Deadline deadline_;
};

std::vector<std::size_t> covering_sources(const std::vector<std::vector<std::size_t>>& dist,
                                          const std::vector<Vertex>& sources, std::size_t t) {
    const std::size_t n = dist.size();
    std::vector<std::size_t> covered_by(n, sources.size());
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t i = 0; i < sources.size(); ++i) {
            if (dist[sources[i]][v] <= t - (i + 1)) {
                covered_by[v] = i;
                break;
            }
        }
    }
    return covered_by;
}

SolverReport burn(const Graph& g, const Budget& budget, bool superfluous) {
    const std::size_t n = g.order();
    if (n == 0) throw SolverError("burning needs at least one vertex");
    if (!g.connected()) throw SolverError("burning is only defined here for connected graphs");
    if (n > 31 * 64) throw SolverError("graph too large for the burning search");

    SolverReport report;
    report.parameter = superfluous ? Parameter::superfluous_burning : Parameter::burning;
    BurningSearch search(g, budget);
    const std::size_t rad = search.radius();
    const std::size_t upper = superfluous ? std::max<std::size_t>(rad + 1, 2) : rad + 1;

    auto radii_for = [&](std::size_t t) {
        std::vector<std::size_t> radii;
        const std::size_t last = superfluous ? 1 : 0;
        for (std::size_t r = t; r-- > last;) radii.push_back(r);
        return radii;
    };
    std::size_t lower = superfluous ? 2 : 1;
    while (lower < upper && search.coverage_bound(radii_for(lower)) < n) ++lower;
    report.bounds = {lower, upper};

    for (std::size_t t = lower; t <= upper; ++t) {
        const auto radii = radii_for(t);
        if (radii.size() > 31) break;
        const auto outcome = search.solve(radii);
        if (outcome == BurningSearch::Outcome::found) {
            report.value = t;
            report.sources = search.choices();
            report.covered_by = covering_sources(search.distances(), report.sources, t);
            report.witness = VertexSet::from_indices(n, report.sources);
            report.explored = search.explored();
            return report;
        }
        if (outcome == BurningSearch::Outcome::exhausted) {
            report.budget_exhausted = true;
            report.bounds.lower = t;
            report.explored = search.explored();
            return report;
        }
    }
    // The centre alone burns everything within rad + 1 rounds.
    const std::size_t t = upper;
    report.value = t;
    report.sources.assign(superfluous ? t - 1 : t, search.center());
    report.covered_by = covering_sources(search.distances(), report.sources, t);
    report.witness = VertexSet::from_indices(n, report.sources);
    report.explored = search.explored();
    return report;
}

}  // namespace

SolverReport burning_number(const Graph& g, const Budget& budget) { return burn(g, budget, false); }

SolverReport superfluous_burning_number(const Graph& g, const Budget& budget) { return burn(g, budget, true); }

bool verify_burning(const Graph& g, const std::vector<Vertex>& sources, bool superfluous) {
    const std::size_t n = g.order();
    const std::size_t t = sources.size() + (superfluous ? 1 : 0);
    VertexSet covered(n);
    for (std::size_t i = 0; i < sources.size(); ++i) {
        if (sources[i] >= n) return false;
        const auto d = g.distances_from(sources[i]);
        for (Vertex v = 0; v < n; ++v) {
            if (d[v] <= t - (i + 1)) covered.insert(v);
        }
    }
    return covered.count() == n;
}

}  // namespace iterforce
