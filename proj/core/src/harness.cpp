#include "iterforce/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "iterforce/graph_io.hpp"
#include "iterforce/solvers.hpp"

namespace iterforce {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::violated: return "violated";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

std::string_view to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::fort: return "fort";
        case CertificateKind::not_fort: return "not_fort";
        case CertificateKind::both_two: return "both_two";
        case CertificateKind::zero_forcing_set: return "zero_forcing_set";
        case CertificateKind::failed_set: return "failed_set";
        case CertificateKind::forces_within_rounds: return "forces_within_rounds";
        case CertificateKind::slow_or_failed: return "slow_or_failed";
        case CertificateKind::schedule: return "schedule";
        case CertificateKind::burning: return "burning";
        case CertificateKind::superfluous_burning: return "superfluous_burning";
        case CertificateKind::fort_absent: return "fort_absent";
        case CertificateKind::burning_absent: return "burning_absent";
        case CertificateKind::zero_forcing_absent: return "zero_forcing_absent";
    }
    return "?";
}

namespace {

bool both_two(const Graph& g, const VertexSet& set) {
    const std::size_t total = set.count();
    for (Vertex a = 0; a < g.order(); ++a) {
        const std::size_t inside = (g.closed_neighborhood(a) & set).count();
        if (inside < 2 || total - inside < 2) return false;
    }
    return true;
}

bool forces_within(const Graph& g, const VertexSet& set, std::size_t rounds) {
    const ClosureResult c = closure(g, set);
    return c.forced.count() == g.order() && c.rounds <= rounds;
}

Certificate make_cert(CertificateKind kind, std::string label, VertexSet set = {}, std::size_t bound = 0) {
    Certificate c;
    c.kind = kind;
    c.label = std::move(label);
    c.set = std::move(set);
    c.bound = bound;
    return c;
}

Certificate burning_cert(bool superfluous, std::string label, std::vector<Vertex> sources) {
    Certificate c;
    c.kind = superfluous ? CertificateKind::superfluous_burning : CertificateKind::burning;
    c.label = std::move(label);
    c.sources = std::move(sources);
    return c;
}

InstanceResult make_instance(const Graph& base, const IteratedGraph& ig) {
    InstanceResult r;
    r.base = base;
    r.plan = ig.plan();
    r.order = ig.order();
    return r;
}

std::int64_t as_value(std::size_t v) { return static_cast<std::int64_t>(v); }

Budget single_worker(Budget b) {
    b.workers = 1;
    return b;
}

/// Runs fn(i) for i in [0, count) on up to `workers` threads; results keep index order.
template <typename Fn>
std::vector<InstanceResult> map_instances(std::size_t count, unsigned workers, Fn&& fn) {
    std::vector<InstanceResult> out(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1U, workers), count));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

void require_ilt(const IteratedGraph& ig) {
    if (ig.plan().any_anticlone()) throw HarnessError("plan is not pure ILT (it anticlones)");
}

/// Records min_fort(cap) as value entries and certificates. Returns the report.
SolverReport record_min_fort(InstanceResult& r, const Graph& g, std::size_t cap, const Budget& budget) {
    const SolverReport m = min_fort(g, std::min(cap, g.order()), budget);
    r.values["fort_search_cap"] = as_value(cap);
    r.values["explored"] = static_cast<std::int64_t>(m.explored);
    if (m.value) {
        r.values["min_fort"] = as_value(*m.value);
        r.values["FZ"] = as_value(g.order() - *m.value);
        r.certificates.push_back(make_cert(CertificateKind::fort, "minimum fort", *m.fort));
        if (*m.value > 1) {
            r.certificates.push_back(
                make_cert(CertificateKind::fort_absent, "no smaller fort", {}, *m.value - 1));
        }
    } else if (!m.budget_exhausted) {
        r.values["FZ_at_most"] = as_value(g.order() - cap - 1);
        r.certificates.push_back(make_cert(CertificateKind::fort_absent, "no fort within cap", {}, cap));
    }
    return m;
}

void mark_undecided(InstanceResult& r, std::string why) {
    r.verdict = Verdict::skipped;
    r.undecided = true;
    r.note = std::move(why);
}

}  // namespace

bool recheck(const Graph& g, const Certificate& c) {
    const std::size_t n = g.order();
    switch (c.kind) {
        case CertificateKind::fort: return c.set.universe() == n && is_fort(g, c.set);
        case CertificateKind::not_fort: return c.set.universe() == n && !is_fort(g, c.set);
        case CertificateKind::both_two: return c.set.universe() == n && both_two(g, c.set);
        case CertificateKind::zero_forcing_set: return c.set.universe() == n && is_zero_forcing_set(g, c.set);
        case CertificateKind::failed_set: return c.set.universe() == n && !is_zero_forcing_set(g, c.set);
        case CertificateKind::forces_within_rounds: return c.set.universe() == n && forces_within(g, c.set, c.bound);
        case CertificateKind::slow_or_failed: return c.set.universe() == n && !forces_within(g, c.set, c.bound);
        case CertificateKind::schedule:
            return c.set.universe() == n && replay_schedule(g, c.set, c.schedule).ok;
        case CertificateKind::burning: return verify_burning(g, c.sources, false);
        case CertificateKind::superfluous_burning: return verify_burning(g, c.sources, true);
        case CertificateKind::fort_absent: {
            if (c.bound == 0) return true;
            const SolverReport m = min_fort(g, std::min(c.bound, n));
            return !m.found && !m.budget_exhausted;
        }
        case CertificateKind::burning_absent: {
            if (!g.connected()) return false;
            const SolverReport b = burning_number(g);
            return b.value && *b.value > c.bound;
        }
        case CertificateKind::zero_forcing_absent: {
            const SolverReport z = zero_forcing_number(g);
            return z.value && *z.value > c.bound;
        }
    }
    return false;
}

bool recheck(const InstanceResult& r) {
    if (r.certificates.empty()) return true;
    const IteratedGraph ig = IteratedGraph::build(r.base, r.plan);
    return std::all_of(r.certificates.begin(), r.certificates.end(),
                       [&](const Certificate& c) { return recheck(ig.graph(), c); });
}

std::size_t TheoremReport::count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(instances.begin(), instances.end(), [&](const InstanceResult& r) { return r.verdict == v; }));
}

std::size_t TheoremReport::undecided() const {
    return static_cast<std::size_t>(
        std::count_if(instances.begin(), instances.end(), [](const InstanceResult& r) { return r.undecided; }));
}

// ------------------------------------------------------------ six-vertex fort

VertexSet ilat_lower_witness(const IteratedGraph& ig, Vertex u) {
    if (ig.steps() < 5) throw HarnessError("the six-vertex construction needs at least 5 steps");
    if (u >= ig.base_n()) throw HarnessError("u must be a base vertex");
    const Vertex v = ig.child(u, 1);
    const Vertex w = ig.child(v, 2);
    const Vertex v3 = ig.child(v, 3);
    const Vertex w3 = ig.child(w, 3);
    const Vertex v4 = ig.child(v3, 4);
    const Vertex w4 = ig.child(w3, 4);
    return VertexSet(ig.order(), {v3, w3, v4, w4, ig.child(v4, 5), ig.child(w4, 5)});
}

TheoremReport check_fzf_ilat_lower(const Graph& base, std::size_t l, const Budget& budget) {
    if (l < 5) throw HarnessError("fz-ilat-lower needs l >= 5, got " + std::to_string(l));
    if (base.order() == 0) throw HarnessError("base graph is empty");
    TheoremReport report;
    report.claim_id = "fz-ilat-lower";
    report.statement = "FZ(ILAT_l(G)) >= n - 6 for l >= 5, via an explicit six-vertex fort";

    const IteratedGraph ig = IteratedGraph::build(base, CloningPlan::ilat(base.order(), l));
    const Graph& h = ig.graph();
    InstanceResult r = make_instance(base, ig);

    std::vector<Vertex> failing;
    std::optional<Vertex> first_good;
    for (Vertex u = 0; u < base.order(); ++u) {
        const VertexSet set = ilat_lower_witness(ig, u);
        const bool two = both_two(h, set);
        const bool fort = is_fort(h, set);
        if (two && fort) {
            if (!first_good) first_good = u;
            r.certificates.push_back(make_cert(CertificateKind::both_two, "six-vertex set from u=" + std::to_string(u), set));
            r.certificates.push_back(make_cert(CertificateKind::fort, "six-vertex set from u=" + std::to_string(u), set));
        } else {
            failing.push_back(u);
        }
    }
    r.values["construction_ok"] = as_value(base.order() - failing.size());
    r.values["construction_tried"] = as_value(base.order());

    if (!first_good) {
        r.verdict = Verdict::violated;
        r.note = "the six-vertex set is not a fort for any base vertex";
        r.certificates.clear();
        r.certificates.push_back(make_cert(CertificateKind::not_fort, "six-vertex set from u=0", ilat_lower_witness(ig, 0)));
        report.instances.push_back(std::move(r));
        return report;
    }
    if (!failing.empty()) {
        report.notes.push_back("warning: the construction failed for some base vertices; accepted because one succeeded");
    }

    const SolverReport m = record_min_fort(r, h, 6, budget);
    if (m.value) {
        r.verdict = Verdict::verified;
    } else if (m.budget_exhausted) {
        // The explicit fort alone already proves the bound.
        r.verdict = Verdict::verified;
        r.note = "fort search ran out of budget; bound rests on the explicit fort";
    } else {
        r.verdict = Verdict::violated;
        r.note = "no fort of size <= 6 found although the explicit set checked as a fort";
    }
    report.instances.push_back(std::move(r));
    return report;
}

// --------------------------------------------------------- n - 2 classifier

TwinConditions twin_conditions(const Graph& base) {
    TwinConditions c;
    const std::size_t n = base.order();
    c.single_vertex = n == 1;
    for (Vertex a = 0; a < n && !c.closed_twins; ++a) {
        for (Vertex b = a + 1; b < n && !c.closed_twins; ++b) {
            c.closed_twins = base.closed_neighborhood(a) == base.closed_neighborhood(b);
        }
    }
    for (Vertex x = 0; x < n && !c.isolated_plus_dominator; ++x) {
        if (base.degree(x) != 0) continue;
        for (Vertex y = 0; y < n; ++y) {
            if (y == x) continue;
            VertexSet rest = VertexSet::full(n);
            rest.erase(x);
            rest.erase(y);
            if (base.neighborhood(y) == rest) {
                c.isolated_plus_dominator = true;
                break;
            }
        }
    }
    return c;
}

TheoremReport classify_fzf_minus2(const Graph& base, std::size_t l, const Budget& budget) {
    if (base.order() == 0) throw HarnessError("base graph is empty");
    TheoremReport report;
    report.claim_id = "fz-ilat-twin-classification";
    report.statement =
        "FZ(ILAT_l(G)) = n - 2 iff G has closed twins, or an isolated vertex plus a dominator of the rest, or G = K_1";

    const IteratedGraph ig = IteratedGraph::build(base, CloningPlan::ilat(base.order(), l));
    const Graph& h = ig.graph();
    InstanceResult r = make_instance(base, ig);
    const TwinConditions cond = twin_conditions(base);
    r.values["closed_twins"] = cond.closed_twins;
    r.values["isolated_plus_dominator"] = cond.isolated_plus_dominator;
    r.values["single_vertex"] = cond.single_vertex;

    const SolverReport m = record_min_fort(r, h, 2, budget);
    if (m.budget_exhausted) {
        mark_undecided(r, "fort search through size 2 ran out of budget");
    } else {
        const bool minus2 = m.value && *m.value == 2;
        r.values["FZ_is_n_minus_2"] = minus2;
        if (minus2 == cond.any()) {
            r.verdict = Verdict::verified;
        } else {
            r.verdict = Verdict::violated;
            if (minus2) {
                r.note = "FZ = n - 2 but no condition holds";
            } else if (m.value) {
                r.note = "a condition holds but the minimum fort has size 1, so FZ = n - 1";
            } else {
                r.note = "a condition holds but there is no fort of size <= 2, so FZ <= n - 3";
            }
        }
    }
    report.instances.push_back(std::move(r));
    return report;
}

TheoremReport check_fzf_not_minus3(const Graph& base, std::size_t l, const Budget& budget) {
    if (l < 4) throw HarnessError("fz-ilat-no-size3-fort needs l >= 4, got " + std::to_string(l));
    if (base.order() == 0) throw HarnessError("base graph is empty");
    TheoremReport report;
    report.claim_id = "fz-ilat-no-size3-fort";
    report.statement = "FZ(ILAT_l(G)) != n - 3 for l >= 4 (no minimum fort of size 3)";

    const IteratedGraph ig = IteratedGraph::build(base, CloningPlan::ilat(base.order(), l));
    InstanceResult r = make_instance(base, ig);
    const SolverReport m = record_min_fort(r, ig.graph(), 3, budget);
    if (m.budget_exhausted) {
        mark_undecided(r, "fort search through size 3 ran out of budget");
    } else if (m.value && *m.value == 3) {
        r.verdict = Verdict::violated;
        r.note = "minimum fort has size 3, so FZ = n - 3";
    } else {
        r.verdict = Verdict::verified;
    }
    report.instances.push_back(std::move(r));
    return report;
}

// ------------------------------------------------------------ pair fort

namespace {

bool minus4_hypothesis(const Graph& base, Vertex u, Vertex v) {
    const std::size_t n = base.order();
    if (u >= n || v >= n || u == v || base.adjacent(u, v)) return false;
    VertexSet rest = VertexSet::full(n);
    rest.erase(u);
    rest.erase(v);
    return base.neighborhood(u) == rest && base.neighborhood(v) == rest;
}

}  // namespace

std::optional<std::pair<Vertex, Vertex>> minus4_pair(const Graph& base) {
    for (Vertex u = 0; u < base.order(); ++u) {
        for (Vertex v = u + 1; v < base.order(); ++v) {
            if (minus4_hypothesis(base, u, v)) return std::pair{u, v};
        }
    }
    return std::nullopt;
}

TheoremReport check_fzf_minus4_family(const Graph& base, Vertex u, Vertex v, std::size_t l, const Budget& budget) {
    if (l < 1) throw HarnessError("fz-ilat-pair-fort needs l >= 1");
    if (!minus4_hypothesis(base, u, v)) {
        throw HarnessError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                           " do not satisfy N(u) = N(v) = V \\ {u, v} with u, v non-adjacent");
    }
    TheoremReport report;
    report.claim_id = "fz-ilat-pair-fort";
    report.statement = "N(u) = N(v) = V \\ {u,v}: {u, v, u'_1, v'_1} is a minimum fort, so FZ(ILAT_l(G)) = n - 4";

    const IteratedGraph ig = IteratedGraph::build(base, CloningPlan::ilat(base.order(), l));
    const Graph& h = ig.graph();
    InstanceResult r = make_instance(base, ig);
    r.values["u"] = u;
    r.values["v"] = v;
    const VertexSet fort(h.order(), {u, v, ig.child(u, 1), ig.child(v, 1)});
    const bool is_f = is_fort(h, fort);
    const bool fails = !is_zero_forcing_set(h, fort.complement());

    if (!is_f) {
        r.verdict = Verdict::violated;
        r.note = "the four-vertex set is not a fort";
        r.certificates.push_back(make_cert(CertificateKind::not_fort, "{u, v, u'_1, v'_1}", fort));
        report.instances.push_back(std::move(r));
        return report;
    }
    r.certificates.push_back(make_cert(CertificateKind::fort, "{u, v, u'_1, v'_1}", fort));
    if (fails) r.certificates.push_back(make_cert(CertificateKind::failed_set, "complement of the fort", fort.complement()));

    const SolverReport m = min_fort(h, std::min<std::size_t>(3, h.order()), budget);
    r.values["explored"] = static_cast<std::int64_t>(m.explored);
    if (m.budget_exhausted) {
        mark_undecided(r, "fort search through size 3 ran out of budget");
    } else if (m.value) {
        r.verdict = Verdict::violated;
        r.values["min_fort"] = as_value(*m.value);
        r.values["FZ"] = as_value(h.order() - *m.value);
        r.note = "a fort smaller than 4 exists, so FZ = n - " + std::to_string(*m.value);
        r.certificates.push_back(make_cert(CertificateKind::fort, "smaller fort", *m.fort));
    } else {
        r.verdict = fails ? Verdict::verified : Verdict::violated;
        r.values["min_fort"] = 4;
        r.values["FZ"] = as_value(h.order() - 4);
        r.certificates.push_back(make_cert(CertificateKind::fort_absent, "no fort of size <= 3", {}, 3));
    }
    report.instances.push_back(std::move(r));
    return report;
}

// ------------------------------------------------------------ ILT lift

VertexSet ilt_descendant_lift(const IteratedGraph& ig, const VertexSet& base_set) {
    require_ilt(ig);
    const std::size_t n0 = ig.base_n();
    VertexSet roots(ig.order());
    if (base_set.universe() != n0 && base_set.universe() != ig.order()) {
        throw HarnessError("set universe matches neither the base nor the iterated graph");
    }
    base_set.for_each([&](Vertex x) {
        if (x >= n0) throw HarnessError("vertex " + std::to_string(x) + " is not in the base level");
        roots.insert(x);
    });
    return roots | ig.descendants(roots);
}

LiftedSchedule ilt_forcing_schedule(const IteratedGraph& ig, const VertexSet& base_set,
                                    const Chronology& base_chronology) {
    require_ilt(ig);
    const std::size_t n0 = ig.base_n();
    const std::size_t l = ig.steps();
    if (l >= 31) throw HarnessError("too many steps for the schedule construction");
    const Graph base = ig.graph().induced(ig.level_set(0));
    VertexSet start(n0);
    base_set.for_each([&](Vertex x) {
        if (x >= n0) throw HarnessError("vertex " + std::to_string(x) + " is not in the base level");
        start.insert(x);
    });
    const ReplayResult base_replay = replay_schedule(base, start, base_chronology);
    if (!base_replay) {
        throw HarnessError("base chronology is not a valid forcing chronology: step " +
                           std::to_string(base_replay.failed_step) + ": " + base_replay.reason);
    }

    // In ILT the vertex b + n0 * mask descends from base vertex b through the
    // steps whose bits are set in mask.
    const std::uint32_t full = (std::uint32_t{1} << l) - 1;
    auto at = [&](Vertex b, std::uint32_t mask) { return static_cast<Vertex>(b + n0 * mask); };
    auto order_masks = [](std::vector<std::uint32_t>& masks) {
        std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
            const int pa = std::popcount(a);
            const int pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
    };

    std::vector<std::uint32_t> stage1;
    std::vector<std::uint32_t> stage2;
    if (l == 0) {
        stage1.push_back(0);
    } else {
        const std::uint32_t top = std::uint32_t{1} << (l - 1);
        for (std::uint32_t m = 0; m < top; ++m) stage1.push_back(m);
        for (std::uint32_t m = 0; m < top; ++m) stage2.push_back(m | top);
    }
    order_masks(stage1);
    order_masks(stage2);

    // For a base edge uv, (u, y) ~ (v, q) exactly when y & q == 0, so the
    // forcer (u, full & ~m) sees only the subsets of m in v's fibre. Taking
    // targets by popcount means every other such neighbour is already forced.
    // The forcer sits in level l iff m lacks the top step, which splits the
    // targets into the two stages.
    LiftedSchedule out;
    for (std::size_t i = 0; i < base_chronology.size(); ++i) {
        const Vertex u = base_chronology[i].forcer;
        const Vertex v = base_chronology[i].target;
        for (int stage = 1; stage <= 2; ++stage) {
            for (std::uint32_t m : stage == 1 ? stage1 : stage2) {
                out.forces.push_back({out.forces.size() + 1, at(u, full & ~m), at(v, m)});
                out.stage.push_back(static_cast<std::uint8_t>(stage));
                out.base_force.push_back(i);
                out.clone_distance.push_back(static_cast<std::size_t>(std::popcount(m)));
            }
        }
    }
    return out;
}

namespace {

/// Stage / level / clone-distance structure of a lifted schedule; empty when fine.
std::string schedule_structure_problem(const IteratedGraph& ig, const LiftedSchedule& s) {
    const std::size_t l = ig.steps();
    for (std::size_t i = 0; i < s.forces.size(); ++i) {
        const Force& f = s.forces[i];
        const std::size_t lvl = ig.level(f.forcer);
        if (s.stage[i] == 1 && l > 0 && lvl != l) {
            return "stage-1 forcer " + std::to_string(f.forcer) + " is not in level " + std::to_string(l);
        }
        if (s.stage[i] == 2 && lvl >= l) {
            return "stage-2 forcer " + std::to_string(f.forcer) + " is in level " + std::to_string(lvl);
        }
        if (i > 0 && s.base_force[i] == s.base_force[i - 1] && s.stage[i] == s.stage[i - 1] &&
            s.clone_distance[i] < s.clone_distance[i - 1]) {
            return "clone distance decreases at force " + std::to_string(i);
        }
    }
    return {};
}

}  // namespace

TheoremReport check_ilt_lift(const Graph& base, std::size_t l, const Budget& budget) {
    if (base.order() == 0) throw HarnessError("base graph is empty");
    TheoremReport report;
    report.claim_id = "zf-ilt-lift";
    report.statement = "a base zero forcing set plus its descendants forces ILT_l(G), so Z(ILT_l(G)) <= 2^l Z(G)";

    const IteratedGraph ig = IteratedGraph::build(base, CloningPlan::ilt(base.order(), l));
    const Graph& h = ig.graph();
    InstanceResult r = make_instance(base, ig);

    const SolverReport zb = zero_forcing_number(base, budget);
    if (!zb.value) {
        mark_undecided(r, "base zero forcing search ran out of budget");
        report.instances.push_back(std::move(r));
        return report;
    }
    const ClosureResult base_closure = closure(base, zb.witness);
    const VertexSet lift = ilt_descendant_lift(ig, zb.witness);
    const LiftedSchedule schedule = ilt_forcing_schedule(ig, zb.witness, base_closure.chronology);
    const ReplayResult replay = replay_schedule(h, lift, schedule.forces);
    const std::string structure = schedule_structure_problem(ig, schedule);

    r.values["Z_base"] = as_value(*zb.value);
    r.values["lift_size"] = as_value(lift.count());
    r.values["schedule_forces"] = as_value(schedule.forces.size());
    r.values["Z_upper"] = as_value(*zb.value << l);

    if (!is_zero_forcing_set(h, lift)) {
        r.verdict = Verdict::violated;
        r.note = "the descendant lift does not force the iterated graph";
        r.certificates.push_back(make_cert(CertificateKind::failed_set, "descendant lift", lift));
    } else if (!replay) {
        r.verdict = Verdict::violated;
        r.note = "lifted schedule fails replay at step " + std::to_string(replay.failed_step) + ": " + replay.reason;
        r.certificates.push_back(make_cert(CertificateKind::zero_forcing_set, "descendant lift", lift));
    } else if (!structure.empty()) {
        r.verdict = Verdict::violated;
        r.note = structure;
    } else {
        r.verdict = Verdict::verified;
        r.certificates.push_back(make_cert(CertificateKind::zero_forcing_set, "descendant lift", lift));
        Certificate sched = make_cert(CertificateKind::schedule, "two-stage lifted schedule", lift);
        sched.schedule = schedule.forces;
        r.certificates.push_back(std::move(sched));
    }
    report.instances.push_back(std::move(r));
    return report;
}

TheoremReport check_ilt_zf_tight(const Graph& base, std::size_t l, const Budget& budget) {
    if (base.order() == 0) throw HarnessError("base graph is empty");
    TheoremReport report;
    report.claim_id = "zf-ilt-lift-tight";
    report.statement = "Z(ILT_l(G)) = 2^l Z(G): the descendant lift is optimal";

    const IteratedGraph ig = IteratedGraph::build(base, CloningPlan::ilt(base.order(), l));
    InstanceResult r = make_instance(base, ig);
    const SolverReport zb = zero_forcing_number(base, budget);
    const SolverReport zh = zero_forcing_number(ig.graph(), budget);
    r.values["explored"] = static_cast<std::int64_t>(zh.explored);
    if (!zb.value || !zh.value) {
        r.values["Z_lower"] = as_value(zh.bounds.lower);
        r.values["Z_upper"] = as_value(zh.bounds.upper);
        mark_undecided(r, "zero forcing search ran out of budget");
        report.instances.push_back(std::move(r));
        return report;
    }
    const std::size_t expected = *zb.value << l;
    r.values["Z_base"] = as_value(*zb.value);
    r.values["Z"] = as_value(*zh.value);
    r.values["expected"] = as_value(expected);
    r.certificates.push_back(make_cert(CertificateKind::zero_forcing_set, "least minimum zero forcing set", zh.witness));
    if (*zh.value > 0) {
        r.certificates.push_back(
            make_cert(CertificateKind::zero_forcing_absent, "no smaller zero forcing set", {}, *zh.value - 1));
    }
    r.verdict = *zh.value == expected ? Verdict::verified : Verdict::violated;
    if (r.verdict == Verdict::violated) r.note = "Z differs from the lift bound";
    report.instances.push_back(std::move(r));
    return report;
}

// ------------------------------------------------------------ ILAT Z bounds

VertexSet ilat_upper_set(const IteratedGraph& ig) {
    const std::size_t l = ig.steps();
    if (l < 2) throw HarnessError("the two-round set needs l >= 2");
    // Drop level l-2 and the level-l anticlones of its vertices.
    VertexSet set = VertexSet::full(ig.order());
    ig.level_set(l - 2).for_each([&](Vertex v) {
        set.erase(v);
        set.erase(ig.child(v, l));
    });
    return set;
}

TheoremReport check_ilat_zf_bounds(const Graph& base, std::size_t l, const Budget& budget) {
    if (l < 2) throw HarnessError("zf-ilat-bounds needs l >= 2, got " + std::to_string(l));
    if (base.order() == 0) throw HarnessError("base graph is empty");
    TheoremReport report;
    report.claim_id = "zf-ilat-bounds";
    report.statement = "n/2 - 1 <= Z(ILAT_l(G)) <= 3n/4, the upper bound by a set that forces in two rounds";

    const IteratedGraph ig = IteratedGraph::build(base, CloningPlan::ilat(base.order(), l));
    const Graph& h = ig.graph();
    const std::size_t n = h.order();
    InstanceResult r = make_instance(base, ig);
    const std::size_t lower = n / 2 - 1;
    const std::size_t upper = 3 * n / 4;
    r.values["bound_lower"] = as_value(lower);
    r.values["bound_upper"] = as_value(upper);

    const VertexSet set = ilat_upper_set(ig);
    const ClosureResult c = closure(h, set);
    const bool construction_ok = c.forced.count() == n && c.rounds <= 2;
    r.values["construction_size"] = as_value(set.count());
    r.values["construction_rounds"] = as_value(c.rounds);
    r.values["construction_forces_all"] = c.forced.count() == n;

    std::vector<std::string> problems;
    if (construction_ok) {
        r.certificates.push_back(make_cert(CertificateKind::forces_within_rounds, "two-round set", set, 2));
    } else {
        problems.push_back("the explicit set does not force everything within two rounds");
        r.certificates.push_back(make_cert(CertificateKind::slow_or_failed, "two-round set", set, 2));
    }

    const SolverReport z = zero_forcing_number(h, budget);
    r.values["explored"] = static_cast<std::int64_t>(z.explored);
    if (z.value) {
        r.values["Z"] = as_value(*z.value);
        if (*z.value < lower) {
            problems.push_back("Z = " + std::to_string(*z.value) + " is below n/2 - 1 = " + std::to_string(lower));
            r.certificates.push_back(make_cert(CertificateKind::zero_forcing_set, "zero forcing set below the lower bound", z.witness));
        } else if (*z.value > upper) {
            problems.push_back("Z = " + std::to_string(*z.value) + " exceeds 3n/4 = " + std::to_string(upper));
            r.certificates.push_back(make_cert(CertificateKind::zero_forcing_absent, "no zero forcing set at 3n/4", {}, upper));
        } else {
            r.certificates.push_back(make_cert(CertificateKind::zero_forcing_set, "least minimum zero forcing set", z.witness));
        }
    }

    if (!problems.empty()) {
        r.verdict = Verdict::violated;
        for (std::size_t i = 0; i < problems.size(); ++i) r.note += (i ? "; " : "") + problems[i];
    } else if (z.value) {
        r.verdict = Verdict::verified;
    } else {
        const std::size_t hi = std::min(z.bounds.upper, set.count());
        r.values["Z_lower"] = as_value(z.bounds.lower);
        r.values["Z_upper"] = as_value(hi);
        if (z.bounds.lower >= lower && hi <= upper) {
            r.verdict = Verdict::verified;
            r.note = "exact search ran out of budget; bracket lies inside the bounds";
        } else {
            mark_undecided(r, "exact search ran out of budget; bracket [" + std::to_string(z.bounds.lower) + ", " +
                                  std::to_string(hi) + "] does not settle the lower bound");
        }
    }
    report.instances.push_back(std::move(r));
    return report;
}

// ------------------------------------------------------------ loop lift

std::optional<VertexSet> max_loop_failed_set(const Graph& base) {
    const std::size_t n = base.order();
    if (n > 24) throw HarnessError("loop-failed set search is limited to 24 vertices");
    for (std::size_t k = n; k-- > 0;) {
        std::vector<Vertex> combo(k);
        for (std::size_t i = 0; i < k; ++i) combo[i] = static_cast<Vertex>(i);
        do {
            const VertexSet w = VertexSet::from_indices(n, combo);
            if (loop_closure(base, w).count() != n) return w;
        } while (next_combination(combo, n));
    }
    return std::nullopt;
}

TheoremReport check_loop_lift(const Graph& base, const VertexSet& w, std::size_t l, const Budget&) {
    if (w.universe() != base.order()) throw HarnessError("set universe does not match the base graph");
    TheoremReport report;
    report.claim_id = "loop-lift";
    report.statement = "W fails loop forcing on G => W plus all levels 1..l fails forcing on ILT_l(G)";

    const IteratedGraph ig = IteratedGraph::build(base, CloningPlan::ilt(base.order(), l));
    const Graph& h = ig.graph();
    InstanceResult r = make_instance(base, ig);
    r.values["W_size"] = as_value(w.count());
    if (loop_closure(base, w).count() == base.order()) {
        r.verdict = Verdict::skipped;
        r.note = "precondition: W loop-forces the base";
        report.instances.push_back(std::move(r));
        return report;
    }
    VertexSet lifted = VertexSet::full(h.order());
    for (Vertex v = 0; v < base.order(); ++v) {
        if (!w.contains(v)) lifted.erase(v);
    }
    if (is_zero_forcing_set(h, lifted)) {
        r.verdict = Verdict::violated;
        r.note = "lifted set forces the iterated graph";
        r.certificates.push_back(make_cert(CertificateKind::zero_forcing_set, "W plus levels 1..l", lifted));
    } else {
        r.verdict = Verdict::verified;
        r.certificates.push_back(make_cert(CertificateKind::failed_set, "W plus levels 1..l", lifted));
    }
    report.instances.push_back(std::move(r));
    return report;
}

// ------------------------------------------------------------ burning

namespace {

InstanceResult burning_instance(const Graph& base, const CloningPlan& plan, const Budget& budget,
                                const std::optional<std::pair<std::size_t, std::size_t>>& base_burning) {
    const IteratedGraph ig = IteratedGraph::build(base, plan);
    const Graph& h = ig.graph();
    InstanceResult r = make_instance(base, ig);
    const std::size_t l = plan.steps();
    if (!h.connected()) {
        r.verdict = Verdict::skipped;
        r.note = "disconnected";
        return r;
    }
    const SolverReport b = burning_number(h, budget);
    if (!b.value) {
        mark_undecided(r, "burning search ran out of budget");
        return r;
    }
    r.values["b"] = as_value(*b.value);
    r.certificates.push_back(burning_cert(false, "optimal burning sequence", b.sources));
    std::vector<std::string> problems;

    if (plan.any_anticlone()) {
        if (*b.value > 4) {
            problems.push_back("b(H) = " + std::to_string(*b.value) + " > 4");
            r.certificates.push_back(make_cert(CertificateKind::burning_absent, "no burning in 4 rounds", {}, 4));
        }
    } else if (base_burning) {
        const auto [bb, bs] = *base_burning;
        const std::size_t expected = bb == bs ? bb : bb + 1;
        r.values["b_base"] = as_value(bb);
        r.values["b_star_base"] = as_value(bs);
        r.values["b_expected"] = as_value(expected);
        if (*b.value != expected) {
            problems.push_back("b(H) = " + std::to_string(*b.value) + " but the case split predicts " +
                               std::to_string(expected));
        }
    }

    if (l >= 1 && plan.step_has_anticlone(l)) {
        const SolverReport bs = superfluous_burning_number(h, budget);
        if (!bs.value) {
            mark_undecided(r, "superfluous burning search ran out of budget");
            return r;
        }
        r.values["b_star"] = as_value(*bs.value);
        if (*bs.value > 4) {
            problems.push_back("b*(H) = " + std::to_string(*bs.value) + " > 4");
        }
        // Sources u (round 1) and u'_l (round 2) reach every vertex before step l by round 3.
        const std::size_t old = ig.order_after(l - 1);
        std::optional<Vertex> good;
        for (Vertex u = 0; u < old && !good; ++u) {
            if (!plan.levels()[l - 1][u]) continue;
            const Vertex anti = ig.child(u, l);
            const auto du = h.distances_from(u);
            const auto da = h.distances_from(anti);
            bool covers = true;
            for (Vertex x = 0; x < old && covers; ++x) covers = du[x] <= 2 || da[x] <= 1;
            if (covers) good = u;
        }
        if (good) {
            r.values["explicit_u"] = *good;
            r.certificates.push_back(
                burning_cert(true, "sources u, u'_l", {*good, ig.child(*good, l), *good}));
        } else {
            problems.push_back("no anticloned u with u, u'_l burning all earlier levels by round 3");
        }
    }

    if (problems.empty()) {
        r.verdict = Verdict::verified;
    } else {
        r.verdict = Verdict::violated;
        for (std::size_t i = 0; i < problems.size(); ++i) r.note += (i ? "; " : "") + problems[i];
    }
    return r;
}

}  // namespace

TheoremReport check_burning_bound(const Graph& base, std::size_t l, PlanMode mode, const Budget& budget) {
    if (base.order() == 0) throw HarnessError("base graph is empty");
    TheoremReport report;
    report.claim_id = "burning-bound";
    report.statement =
        "connected H with an anticlone has b(H) <= 4; an anticlone in the final level gives b*(H) <= 4; "
        "all-clone H has b(H) = b(G), or b(G) + 1 when b*(G) > b(G)";
    report.notes.push_back("bounds are tested on the iterated graph H; the printed conclusions name the base");

    std::optional<std::pair<std::size_t, std::size_t>> base_burning;
    if (base.connected()) {
        const SolverReport bb = burning_number(base, single_worker(budget));
        const SolverReport bs = superfluous_burning_number(base, single_worker(budget));
        if (bb.value && bs.value) base_burning = std::pair{*bb.value, *bs.value};
    }

    const PlanEnumerator plans(base.order(), l, mode);
    report.instances = map_instances(plans.size(), budget.workers, [&](std::size_t i) {
        return burning_instance(base, plans.at(i), single_worker(budget), base_burning);
    });
    return report;
}

// ------------------------------------------------------------ suite

const std::vector<std::string>& known_claims() {
    static const std::vector<std::string> claims = {
        "fz-ilat-lower",  "fz-ilat-twin-classification", "fz-ilat-no-size3-fort", "fz-ilat-pair-fort",
        "zf-ilt-lift",    "zf-ilt-lift-tight",           "zf-ilat-bounds",        "loop-lift",
        "burning-bound",
    };
    return claims;
}

namespace {

std::optional<PlanMode> required_mode(const std::string& claim) {
    if (claim == "burning-bound") return std::nullopt;
    if (claim == "zf-ilt-lift" || claim == "zf-ilt-lift-tight" || claim == "loop-lift") return PlanMode::ilt;
    return PlanMode::ilat;
}

std::size_t parse_count(std::string_view text, std::size_t line, const char* what) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw HarnessError("line " + std::to_string(line) + ": bad " + what + " '" + std::string(text) + "'");
    }
    return value;
}

Budget parse_budget(const std::string& text, std::size_t line) {
    Budget b;
    const auto colon = text.find(':');
    const std::string secs = text.substr(0, colon);
    if (secs != "inf") {
        std::size_t used = 0;
        double value = 0;
        try {
            value = std::stod(secs, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != secs.size() || !(value > 0)) {
            throw HarnessError("line " + std::to_string(line) + ": budget seconds must be positive, got '" + secs + "'");
        }
        b.wall_seconds = value;
    }
    if (colon != std::string::npos) {
        const std::size_t cands = parse_count(std::string_view(text).substr(colon + 1), line, "candidate budget");
        if (cands == 0) throw HarnessError("line " + std::to_string(line) + ": candidate budget must be positive");
        b.max_candidates = cands;
    }
    return b;
}

}  // namespace

std::vector<ClaimSpec> parse_verify_config(std::string_view text) {
    std::vector<ClaimSpec> specs;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream fields(raw);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() != 5) {
            throw HarnessError("line " + std::to_string(line_no) +
                               ": expected 'claim base l-range mode budget', got " + std::to_string(tok.size()) +
                               " fields");
        }
        ClaimSpec spec;
        spec.line = line_no;
        spec.claim = tok[0];
        const auto& claims = known_claims();
        if (std::find(claims.begin(), claims.end(), spec.claim) == claims.end()) {
            throw HarnessError("line " + std::to_string(line_no) + ": unknown claim '" + spec.claim + "'");
        }
        spec.base_text = tok[1];
        try {
            spec.base = graph_from_spec(tok[1]);
        } catch (const std::exception& e) {
            throw HarnessError("line " + std::to_string(line_no) + ": bad base graph '" + tok[1] + "': " + e.what());
        }
        const auto dash = tok[2].find('-');
        spec.l_min = parse_count(std::string_view(tok[2]).substr(0, dash), line_no, "level");
        spec.l_max = dash == std::string::npos ? spec.l_min
                                               : parse_count(std::string_view(tok[2]).substr(dash + 1), line_no, "level");
        if (spec.l_max < spec.l_min) throw HarnessError("line " + std::to_string(line_no) + ": empty level range");
        try {
            spec.mode = parse_plan_mode(tok[3]);
        } catch (const std::exception& e) {
            throw HarnessError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (const auto need = required_mode(spec.claim); need && *need != spec.mode) {
            throw HarnessError("line " + std::to_string(line_no) + ": claim '" + spec.claim + "' runs on " +
                               std::string(to_string(*need)) + ", not " + tok[3]);
        }
        spec.budget = parse_budget(tok[4], line_no);
        specs.push_back(std::move(spec));
    }
    return specs;
}

TheoremReport run_claim(const ClaimSpec& spec) {
    TheoremReport merged;
    merged.claim_id = spec.claim;
    for (std::size_t l = spec.l_min; l <= spec.l_max; ++l) {
        TheoremReport part;
        if (spec.claim == "fz-ilat-lower") {
            part = check_fzf_ilat_lower(spec.base, l, spec.budget);
        } else if (spec.claim == "fz-ilat-twin-classification") {
            part = classify_fzf_minus2(spec.base, l, spec.budget);
        } else if (spec.claim == "fz-ilat-no-size3-fort") {
            part = check_fzf_not_minus3(spec.base, l, spec.budget);
        } else if (spec.claim == "fz-ilat-pair-fort") {
            const auto pair = minus4_pair(spec.base);
            if (!pair) throw HarnessError("line " + std::to_string(spec.line) + ": base has no qualifying (u, v) pair");
            part = check_fzf_minus4_family(spec.base, pair->first, pair->second, l, spec.budget);
        } else if (spec.claim == "zf-ilt-lift") {
            part = check_ilt_lift(spec.base, l, spec.budget);
        } else if (spec.claim == "zf-ilt-lift-tight") {
            part = check_ilt_zf_tight(spec.base, l, spec.budget);
        } else if (spec.claim == "zf-ilat-bounds") {
            part = check_ilat_zf_bounds(spec.base, l, spec.budget);
        } else if (spec.claim == "loop-lift") {
            const auto w = max_loop_failed_set(spec.base);
            if (!w) throw HarnessError("line " + std::to_string(spec.line) + ": base has no loop-failed set");
            part = check_loop_lift(spec.base, *w, l, spec.budget);
        } else if (spec.claim == "burning-bound") {
            part = check_burning_bound(spec.base, l, spec.mode, spec.budget);
        } else {
            throw HarnessError("unknown claim '" + spec.claim + "'");
        }
        if (merged.statement.empty()) merged.statement = part.statement;
        for (auto& note : part.notes) {
            if (std::find(merged.notes.begin(), merged.notes.end(), note) == merged.notes.end()) {
                merged.notes.push_back(std::move(note));
            }
        }
        for (auto& inst : part.instances) merged.instances.push_back(std::move(inst));
    }
    return merged;
}

}  // namespace iterforce
