#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iterforce/forcing.hpp"
#include "iterforce/graph.hpp"
#include "iterforce/iterated.hpp"
#include "iterforce/search.hpp"

namespace iterforce {

enum class Verdict { verified, violated, skipped };

std::string_view to_string(Verdict v);

/// What a certificate asserts about the instance graph. Every kind except
/// the *_absent ones is checked without search.
enum class CertificateKind {
    fort,                    // `set` is a fort
    not_fort,                // `set` is not a fort
    both_two,                // every a has >= 2 of `set` in N[a] and >= 2 in AN[a]
    zero_forcing_set,        // closure(`set`) = V
    failed_set,              // closure(`set`) != V
    forces_within_rounds,    // closure(`set`) = V within `bound` rounds
    slow_or_failed,          // closure(`set`) is not V within `bound` rounds
    schedule,                // `schedule` replays legally from `set` and forces V
    burning,                 // `sources` burn V in sources.size() rounds
    superfluous_burning,     // `sources` burn V in sources.size() + 1 rounds
    fort_absent,             // no fort of size <= `bound` (bounded search)
    burning_absent,          // no burning in `bound` rounds (search)
    zero_forcing_absent,     // no zero forcing set of size `bound` (search)
};

std::string_view to_string(CertificateKind k);

struct Certificate {
    CertificateKind kind = CertificateKind::fort;
    std::string label;
    VertexSet set;
    Chronology schedule;
    std::vector<Vertex> sources;
    std::size_t bound = 0;
};

/// Re-checks one certificate against g; the *_absent kinds rerun a bounded search.
bool recheck(const Graph& g, const Certificate& c);

struct InstanceResult {
    Graph base;
    CloningPlan plan;
    std::size_t order = 0;
    Verdict verdict = Verdict::skipped;
    std::string note;
    /// True when a skip came from budget exhaustion rather than a precondition.
    bool undecided = false;
    std::map<std::string, std::int64_t> values;
    std::vector<Certificate> certificates;
};

/// Rebuilds the instance graph and rechecks every certificate.
bool recheck(const InstanceResult& r);

struct TheoremReport {
    std::string claim_id;
    std::string statement;
    std::vector<std::string> notes;
    std::vector<InstanceResult> instances;

    std::size_t count(Verdict v) const;
    std::size_t undecided() const;
    bool any_violated() const { return count(Verdict::violated) > 0; }
};

/// Thrown when a check's precondition on its inputs fails (e.g. l too small).
class HarnessError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// ------------------------------------------------------------------- claims

/// ILAT_l(base), l >= 5: the six-vertex set built from each base vertex u
/// (v = u'_1, w = v'_2, then successive anticlones of v and w at levels 3..5)
/// sees every vertex at least twice in N[a] and twice in AN[a], and is a
/// fort; min-fort search through size 6 then confirms FZ >= n - 6.
TheoremReport check_fzf_ilat_lower(const Graph& base, std::size_t l, const Budget& budget = {});

/// The six-vertex set for base vertex u inside an ILAT graph with >= 5 steps.
VertexSet ilat_lower_witness(const IteratedGraph& ig, Vertex u);

struct TwinConditions {
    bool closed_twins = false;
    bool isolated_plus_dominator = false;
    bool single_vertex = false;
    bool any() const { return closed_twins || isolated_plus_dominator || single_vertex; }
};

TwinConditions twin_conditions(const Graph& base);

/// FZ(ILAT_l(base)) = n - 2 exactly when one of the twin conditions holds.
TheoremReport classify_fzf_minus2(const Graph& base, std::size_t l, const Budget& budget = {});

/// ILAT_l(base), l >= 4: FZ != n - 3, i.e. a size-3 minimum fort never occurs.
TheoremReport check_fzf_not_minus3(const Graph& base, std::size_t l, const Budget& budget = {});

/// Non-adjacent u, v with N(u) = N(v) = V \ {u, v}: {u, v, u'_1, v'_1} is a
/// minimum fort of ILAT_l(base), so FZ = n - 4.
TheoremReport check_fzf_minus4_family(const Graph& base, Vertex u, Vertex v, std::size_t l, const Budget& budget = {});

/// First (u, v) pair satisfying the hypothesis above, if any.
std::optional<std::pair<Vertex, Vertex>> minus4_pair(const Graph& base);

/// U plus all its descendants, for an all-clone plan and U inside level 0.
VertexSet ilt_descendant_lift(const IteratedGraph& ig, const VertexSet& base_set);

struct LiftedSchedule {
    Chronology forces;
    /// Per force: 1 or 2.
    std::vector<std::uint8_t> stage;
    /// Per force: index of the mirrored base force.
    std::vector<std::size_t> base_force;
    /// Per force: clone distance of the target from the base target.
    std::vector<std::size_t> clone_distance;
};

/// Mirrors each base force u -> v by a two-stage schedule in ILT_l: first v and
/// its descendants in levels 1..l-1, forced by level-l descendants of u; then
/// v's level-l descendants, forced by descendants of u in levels 0..l-1; each
/// stage in increasing clone distance.
LiftedSchedule ilt_forcing_schedule(const IteratedGraph& ig, const VertexSet& base_set,
                                    const Chronology& base_chronology);

/// Lift of a minimum base ZF set forces ILT_l, the schedule replays with the
/// stage / clone-distance structure, and Z(ILT_l) <= 2^l Z(base).
TheoremReport check_ilt_lift(const Graph& base, std::size_t l, const Budget& budget = {});

/// Z(ILT_l(base)) equals the lift bound 2^l Z(base) (exact search).
TheoremReport check_ilt_zf_tight(const Graph& base, std::size_t l, const Budget& budget = {});

/// V minus (level l-2 and its level-l anticlones): the explicit ZF set for ILAT_l.
VertexSet ilat_upper_set(const IteratedGraph& ig);

/// ILAT_l(base), l >= 2: the explicit set forces V within two rounds and
/// n/2 - 1 <= Z <= 3n/4.
TheoremReport check_ilat_zf_bounds(const Graph& base, std::size_t l, const Budget& budget = {});

/// W fails loop forcing on base => W plus levels 1..l fails forcing on ILT_l(base).
TheoremReport check_loop_lift(const Graph& base, const VertexSet& w, std::size_t l, const Budget& budget = {});

/// Largest loop-failed set of base (lexicographically least at that size).
std::optional<VertexSet> max_loop_failed_set(const Graph& base);

/// Over every plan of `mode` with l steps: connected H with an anticlone has
/// b(H) <= 4; an anticlone in the final level gives b*(H) <= 4 via sources
/// {u, u'_l}; all-clone plans satisfy b(H) = b(base) (+1 when b* > b).
TheoremReport check_burning_bound(const Graph& base, std::size_t l, PlanMode mode, const Budget& budget = {});

// -------------------------------------------------------------------- suite

struct ClaimSpec {
    std::string claim;
    std::string base_text;
    Graph base;
    std::size_t l_min = 0;
    std::size_t l_max = 0;
    PlanMode mode = PlanMode::ilat;
    Budget budget;
    std::size_t line = 0;
};

/// Config: one family per line, "claim base l-range mode budget", where budget
/// is "<seconds>" or "<seconds>:<max candidates>". '#' starts a comment.
std::vector<ClaimSpec> parse_verify_config(std::string_view text);

/// Claim ids accepted by the config.
const std::vector<std::string>& known_claims();

/// Runs one config line over its l range and merges the per-l reports.
TheoremReport run_claim(const ClaimSpec& spec);

/// JSON document for a suite of reports.
std::string reports_json(const std::vector<TheoremReport>& reports);
/// Fixed-width summary table, one row per claim.
std::string reports_table(const std::vector<TheoremReport>& reports);

}  // namespace iterforce
