// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion 3   run one (repeatable)
//
// Every check is exact; the only tolerance is each criterion's wall-time limit.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "iterforce/forcing.hpp"
#include "iterforce/graph.hpp"
#include "iterforce/graph_io.hpp"
#include "iterforce/harness.hpp"
#include "iterforce/iterated.hpp"
#include "iterforce/solvers.hpp"
#include "naive.hpp"

using namespace iterforce;

namespace {

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> details;

    void fail(std::string why) {
        pass = false;
        if (details.size() < 12) details.push_back(std::move(why));
    }
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;
    std::function<Outcome()> run;
};

std::string describe(const InstanceResult& r) {
    std::ostringstream out;
    out << "base " << emit_graph6(r.base) << " (" << r.base.order() << " vertices), "
        << to_string(r.plan.mode()) << " l=" << r.plan.steps() << ", n=" << r.order << ": " << to_string(r.verdict);
    if (!r.note.empty()) out << " (" << r.note << ")";
    return out.str();
}

/// Folds a report into the outcome; a violated or undecided instance fails it.
void absorb(Outcome& o, const TheoremReport& rep, std::size_t& verified, std::size_t& instances) {
    for (const auto& inst : rep.instances) {
        ++instances;
        if (inst.verdict == Verdict::verified) ++verified;
        if (inst.verdict == Verdict::violated || inst.undecided) o.fail(describe(inst));
        if (inst.verdict == Verdict::violated && !recheck(inst)) o.fail("counterexample failed to re-verify: " + describe(inst));
    }
}

std::vector<Graph> corpus() {
    return read_graph_file(std::string(ITERFORCE_TEST_DATA_DIR) + "/connected_le7.g6");
}

std::vector<Graph> all_labeled(std::size_t n) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if ((mask >> i & 1U) != 0) edges.push_back(slots[i]);
        }
        out.push_back(Graph::from_edges(n, edges));
    }
    return out;
}

// 1: six-vertex fort in ILAT_5(K_1) and FZ >= 26.
Outcome c1() {
    Outcome o;
    const TheoremReport rep = check_fzf_ilat_lower(named_graph("k1"), 5);
    const InstanceResult& r = rep.instances.at(0);
    const IteratedGraph ig = IteratedGraph::build(named_graph("k1"), CloningPlan::ilat(1, 5));
    const VertexSet u = ilat_lower_witness(ig, 0);
    Certificate both;
    both.kind = CertificateKind::both_two;
    both.set = u;
    Certificate fort;
    fort.kind = CertificateKind::fort;
    fort.set = u;
    if (!recheck(ig.graph(), both)) o.fail("six-vertex set misses the two-in-N[a] / two-in-AN[a] property");
    if (!recheck(ig.graph(), fort)) o.fail("six-vertex set is not a fort");
    if (r.verdict != Verdict::verified) o.fail(describe(r));
    const auto fz = r.values.find("FZ");
    if (fz == r.values.end() || fz->second < 26) o.fail("exact search did not confirm FZ >= 26");
    o.summary = "U=" + u.to_string() + ", FZ=" + (fz == r.values.end() ? "?" : std::to_string(fz->second)) +
                " (n=32, min fort " + std::to_string(r.values.count("min_fort") ? r.values.at("min_fort") : -1) + ")";
    return o;
}

// 2: no minimum fort of size 3 for connected bases on <= 3 vertices at l = 4.
Outcome c2() {
    Outcome o;
    std::size_t verified = 0;
    std::size_t instances = 0;
    for (const Graph& g : corpus()) {
        if (g.order() > 3) continue;
        absorb(o, check_fzf_not_minus3(g, 4), verified, instances);
    }
    o.summary = std::to_string(verified) + "/" + std::to_string(instances) + " bases verified";
    return o;
}

// 3: FZ = n - 2 iff a twin condition holds; all labeled bases on <= 4 vertices, l in {1,2,3}.
Outcome c3() {
    Outcome o;
    std::size_t verified = 0;
    std::size_t instances = 0;
    std::size_t per_level[4] = {0, 0, 0, 0};
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const Graph& g : all_labeled(n)) {
            for (std::size_t l = 1; l <= 3; ++l) {
                const TheoremReport rep = classify_fzf_minus2(g, l);
                if (rep.any_violated()) ++per_level[l];
                absorb(o, rep, verified, instances);
            }
        }
    }
    o.summary = std::to_string(verified) + "/" + std::to_string(instances) + " verified; violations by l: " +
                std::to_string(per_level[1]) + ", " + std::to_string(per_level[2]) + ", " + std::to_string(per_level[3]);
    return o;
}

// 4: FZ(ILAT_l(C_4)) = 2^l * 4 - 4 with {u, v, u'_1, v'_1} a minimum fort.
Outcome c4() {
    Outcome o;
    std::string values;
    for (std::size_t l = 1; l <= 3; ++l) {
        const TheoremReport rep = check_fzf_minus4_family(named_graph("c4"), 0, 2, l);
        const InstanceResult& r = rep.instances.at(0);
        const std::int64_t expected = (std::int64_t{4} << l) - 4;
        const auto fz = r.values.find("FZ");
        const std::int64_t got = fz == r.values.end() ? -1 : fz->second;
        values += (values.empty() ? "" : ", ") + ("l=" + std::to_string(l) + ": FZ=" + std::to_string(got) +
                                                   " (expected " + std::to_string(expected) + ")");
        if (r.verdict != Verdict::verified || got != expected) o.fail(describe(r));
        if (!recheck(r)) o.fail("certificate failed to re-verify at l=" + std::to_string(l));
    }
    o.summary = values;
    return o;
}

// 5: descendant lift + two-stage schedule for K_2, P_3, P_4, C_4 and l in {1,2,3}.
Outcome c5() {
    Outcome o;
    std::size_t verified = 0;
    std::size_t instances = 0;
    for (const char* name : {"k2", "p3", "p4", "c4"}) {
        const Graph base = named_graph(name);
        for (std::size_t l = 1; l <= 3; ++l) {
            const TheoremReport rep = check_ilt_lift(base, l);
            absorb(o, rep, verified, instances);
            const InstanceResult& r = rep.instances.at(0);
            if (r.values.at("lift_size") != (r.values.at("Z_base") << l)) o.fail("lift size mismatch: " + describe(r));
            if (!recheck(r)) o.fail("certificate failed to re-verify: " + describe(r));
        }
    }
    o.summary = std::to_string(verified) + "/" + std::to_string(instances) + " lifts replayed";
    return o;
}

// 6: Z(ILT_l(K_2)) = 2^l for l in {1,2,3}.
Outcome c6() {
    Outcome o;
    std::string values;
    for (std::size_t l = 1; l <= 3; ++l) {
        const IteratedGraph ig = IteratedGraph::build(named_graph("k2"), CloningPlan::ilt(2, l));
        const SolverReport z = zero_forcing_number(ig.graph());
        const std::size_t got = z.value.value_or(0);
        values += (values.empty() ? "" : ", ") + ("Z(ILT_" + std::to_string(l) + ")=" + std::to_string(got));
        if (got != (std::size_t{1} << l)) o.fail("l=" + std::to_string(l) + ": Z=" + std::to_string(got));
        if (!is_zero_forcing_set(ig.graph(), z.witness)) o.fail("witness does not force at l=" + std::to_string(l));
    }
    o.summary = values;
    return o;
}

// 7: ILAT Z bounds and the two-round set, bases on <= 3 vertices, l in {2,3}.
Outcome c7() {
    Outcome o;
    std::size_t verified = 0;
    std::size_t instances = 0;
    std::size_t construction_failures = 0;
    std::size_t below_lower = 0;
    Budget budget;
    budget.wall_seconds = 120;
    budget.workers = std::max(1U, std::thread::hardware_concurrency());
    const char* bases[] = {"k1", "empty2", "k2", "empty3", "B_", "p3", "k3"};  // B_ = K_2 plus an isolated vertex
    for (const char* name : bases) {
        const Graph g = graph_from_spec(name);
        for (std::size_t l = 2; l <= 3; ++l) {
            const TheoremReport rep = check_ilat_zf_bounds(g, l, budget);
            const InstanceResult& r = rep.instances.at(0);
            if (r.values.at("construction_forces_all") == 0 || r.values.at("construction_rounds") > 2) {
                ++construction_failures;
            }
            const auto z = r.values.find("Z");
            if (z != r.values.end() && z->second < r.values.at("bound_lower")) ++below_lower;
            absorb(o, rep, verified, instances);
        }
    }
    o.summary = std::to_string(verified) + "/" + std::to_string(instances) + " verified; two-round set failed on " +
                std::to_string(construction_failures) + ", Z below n/2-1 on " + std::to_string(below_lower);
    return o;
}

// 8: burning bounds over every IIM plan of K_3 with l <= 2.
Outcome c8() {
    Outcome o;
    std::size_t verified = 0;
    std::size_t instances = 0;
    std::size_t disconnected = 0;
    for (std::size_t l = 1; l <= 2; ++l) {
        const TheoremReport rep = check_burning_bound(named_graph("k3"), l, PlanMode::iim);
        disconnected += rep.count(Verdict::skipped) - rep.undecided();
        absorb(o, rep, verified, instances);
    }
    o.summary = std::to_string(instances) + " plans: " + std::to_string(verified) + " verified, " +
                std::to_string(disconnected) + " disconnected";
    return o;
}

// 9: optimized solvers equal the naive oracles on every connected graph with <= 7 vertices.
Outcome c9() {
    Outcome o;
    std::size_t graphs = 0;
    for (const Graph& g : corpus()) {
        ++graphs;
        const naive::Adj a(g);
        const std::string tag = emit_graph6(g);
        const std::size_t n = g.order();
        const SolverReport z = zero_forcing_number(g);
        const SolverReport fz = failed_zero_forcing_number(g);
        const SolverReport mf = min_fort(g, n);
        const SolverReport b = burning_number(g);
        const SolverReport bs = superfluous_burning_number(g);
        if (static_cast<int>(z.value.value_or(0)) != naive::zero_forcing_number(a)) o.fail(tag + ": Z mismatch");
        if (static_cast<int>(fz.value.value_or(0)) != naive::failed_zero_forcing_number(a)) o.fail(tag + ": FZ mismatch");
        if (static_cast<int>(mf.value.value_or(0)) != naive::min_fort_size(a)) o.fail(tag + ": min fort mismatch");
        if (fz.value.value_or(0) + mf.value.value_or(0) != n) o.fail(tag + ": FZ + min_fort != n");
        if (static_cast<int>(b.value.value_or(0)) != naive::burning_number(a)) o.fail(tag + ": b mismatch");
        if (static_cast<int>(bs.value.value_or(0)) != naive::burning_number(a, true)) o.fail(tag + ": b* mismatch");
        if (bs.value < b.value || *bs.value > *b.value + 1) o.fail(tag + ": b <= b* <= b + 1 broken");
        if (!is_zero_forcing_set(g, z.witness) || !is_fort(g, *mf.fort) || !verify_burning(g, b.sources)) {
            o.fail(tag + ": certificate failed");
        }
    }
    o.summary = std::to_string(graphs) + " graphs checked (Z, FZ, min fort, b, b*)";
    return o;
}

// 10: engine invariants on 200 random (base, plan) instances.
Outcome c10() {
    Outcome o;
    std::mt19937_64 rng(20241019);
    const PlanMode modes[] = {PlanMode::ilt, PlanMode::ilat, PlanMode::ilm, PlanMode::iim};
    std::size_t checks = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t base_n = 1 + rng() % 5;
        std::vector<Edge> edges;
        for (Vertex u = 0; u < base_n; ++u) {
            for (Vertex v = u + 1; v < base_n; ++v) {
                if (rng() % 2 == 0) edges.emplace_back(u, v);
            }
        }
        const Graph base = Graph::from_edges(base_n, edges);
        const std::size_t steps = 1 + rng() % 4;
        const PlanMode mode = modes[trial % 4];
        std::vector<std::vector<bool>> levels;
        std::size_t width = base_n;
        for (std::size_t t = 0; t < steps; ++t, width *= 2) {
            const bool per_level = rng() % 2 == 0;
            std::vector<bool> row(width);
            for (std::size_t j = 0; j < width; ++j) {
                row[j] = mode == PlanMode::ilat || (mode == PlanMode::ilm && per_level) ||
                         (mode == PlanMode::iim && rng() % 2 == 0);
            }
            levels.push_back(std::move(row));
        }
        const IteratedGraph ig = IteratedGraph::build(base, CloningPlan(base_n, levels));
        const Graph& g = ig.graph();
        const std::size_t n = g.order();
        const std::string tag = "trial " + std::to_string(trial);

        VertexSet s(n);
        VertexSet t(n);
        for (Vertex v = 0; v < n; ++v) {
            const auto roll = rng() % 6;
            if (roll == 0) s.insert(v);
            if (roll <= 1) t.insert(v);
        }
        const ClosureResult cs = closure(g, s);
        const ClosureResult ct = closure(g, t);
        if (!cs.forced.is_subset_of(ct.forced)) o.fail(tag + ": closure not monotone");
        if (closure(g, cs.forced).forced != cs.forced) o.fail(tag + ": closure not idempotent");
        const ReplayResult rep = replay_schedule(g, s, cs.chronology);
        if (!(rep.ok || rep.failed_step == cs.chronology.size())) o.fail(tag + ": chronology replay failed");
        if (cs.forced.count() == n && !rep.ok) o.fail(tag + ": complete chronology rejected");
        const ClosureResult full_run = closure(g, ct.forced);
        if (!replay_schedule(g, ct.forced, full_run.chronology).ok && full_run.forced.count() == n) {
            o.fail(tag + ": replay of closure chronology failed");
        }
        if (!cs.forced.is_subset_of(loop_closure(g, s))) o.fail(tag + ": loop closure misses closure");

        const IteratedGraph ilat = IteratedGraph::build(base, CloningPlan::ilat(base_n, steps));
        const std::size_t m = ilat.order();
        for (Vertex v = 0; v < m; ++v) {
            const std::size_t d = ilat.graph().degree(v);
            if (ilat.level(v) < steps && d != m / 2 - 1) o.fail(tag + ": ILAT degree law (levels < l)");
            if (ilat.level(v) == steps && steps >= 2 && d < m / 4) o.fail(tag + ": ILAT degree law (level l)");
        }
        ++checks;
    }
    o.summary = std::to_string(checks) + " random instances";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> selected;
    app.add_option("--criterion", selected, "criterion number (repeatable)")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "six-vertex fort bounds FZ(ILAT_5(K_1)) >= 26", 60, c1},
        {2, "no size-3 minimum fort at l = 4 (connected bases, <= 3 vertices)", 30, c2},
        {3, "FZ = n - 2 iff twin conditions (bases <= 4 vertices, l = 1..3)", 300, c3},
        {4, "FZ(ILAT_l(C_4)) = 2^l*4 - 4 via the four-vertex fort (l = 1..3)", 60, c4},
        {5, "descendant lift and two-stage schedule (K_2, P_3, P_4, C_4; l = 1..3)", 120, c5},
        {6, "Z(ILT_l(K_2)) = 2^l (l = 1..3)", 10, c6},
        {7, "n/2 - 1 <= Z(ILAT_l) <= 3n/4 and two-round set (bases <= 3 vertices, l = 2, 3)", 600, c7},
        {8, "burning bounds over all IIM plans of K_3 (l <= 2)", 120, c8},
        {9, "solvers equal naive oracles on connected graphs <= 7 vertices", 900, c9},
        {10, "engine invariants on 200 random instances", 60, c10},
    };

    bool all = true;
    for (const auto& c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.time_limit_s) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s");
        all = all && o.pass;
        std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name << " -- " << o.summary
                  << " (" << std::fixed << std::setprecision(2) << secs << " s)\n";
        for (const auto& d : o.details) std::cout << "         " << d << "\n";
        std::cout.flush();
    }
    return all ? 0 : 1;
}
