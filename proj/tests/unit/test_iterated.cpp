#include <doctest.h>

#include <random>
#include <set>

#include "iterforce/graph.hpp"
#include "iterforce/iterated.hpp"
#include "test_support.hpp"

using namespace iterforce;

namespace {

std::vector<std::size_t> degrees(const Graph& g) {
    std::vector<std::size_t> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    return d;
}

VertexSet prefix(std::size_t universe, std::size_t count) {
    VertexSet s(universe);
    for (Vertex v = 0; v < count; ++v) s.insert(v);
    return s;
}

VertexSet embed(const VertexSet& set, std::size_t universe) {
    VertexSet s(universe);
    set.for_each([&](Vertex x) { s.insert(x); });
    return s;
}

}  // namespace

TEST_SUITE("iterated-models") {

TEST_CASE("single steps from tiny bases") {
    const IteratedGraph k2(named_graph("k2"));
    const IteratedGraph cloned = k2.step({false, false});
    CHECK(degrees(cloned.graph()) == std::vector<std::size_t>{3, 3, 2, 2});
    CHECK_FALSE(cloned.graph().adjacent(2, 3));

    const IteratedGraph k1(named_graph("k1"));
    const IteratedGraph anti1 = k1.step({true});
    CHECK(anti1.order() == 2);
    CHECK(anti1.graph().size() == 0);

    const IteratedGraph anti2 = k2.step({true, true});
    CHECK(anti2.graph().size() == 1);
    CHECK(anti2.graph().adjacent(0, 1));
    CHECK(anti2.graph().degree(2) == 0);
    CHECK(anti2.graph().degree(3) == 0);

    CHECK_THROWS_AS(k2.step({true}), PlanError);
}

TEST_CASE("build grows by doubling and respects prefixes") {
    const IteratedGraph ilt2 = IteratedGraph::build(named_graph("k2"), CloningPlan::ilt(2, 2));
    CHECK(ilt2.order() == 8);
    CHECK(ilt2.graph().induced(VertexSet(8, {0, 1, 2, 3})) ==
          IteratedGraph(named_graph("k2")).step({false, false}).graph());
    CHECK(IteratedGraph::build(named_graph("k1"), CloningPlan::ilat(1, 5)).order() == 32);

    const Graph c4 = named_graph("c4");
    const IteratedGraph ilat1 = IteratedGraph::build(c4, CloningPlan::ilat(4, 1));
    CHECK(ilat1.order() == 8);
    for (Vertex u = 0; u < 4; ++u) {
        const Vertex child = ilat1.child(u, 1);
        CHECK(ilat1.graph().degree(child) == 1);
        CHECK(ilat1.graph().neighborhood(child) == VertexSet(8, {static_cast<Vertex>((u + 2) % 4)}));
    }
}

TEST_CASE("plan width mismatch names the step") {
    try {
        CloningPlan(2, {{false, false}, {true, true, true}});
        FAIL("expected PlanError");
    } catch (const PlanError& e) {
        CHECK(std::string(e.what()).find("step 2") != std::string::npos);
    }
}

TEST_CASE("plan text parsing") {
    CHECK(parse_plan("ILT 3", 2) == CloningPlan::ilt(2, 3));
    CHECK(parse_plan("# comment\nILAT 2\n", 1) == CloningPlan::ilat(1, 2));
    CHECK(parse_plan("ILM cac", 1) == CloningPlan::ilm(1, {false, true, false}));
    const CloningPlan explicit_plan = parse_plan("ca\nccaa\n", 2);
    CHECK(explicit_plan.steps() == 2);
    CHECK(explicit_plan.levels()[0] == std::vector<bool>{false, true});
    CHECK(explicit_plan.mode() == PlanMode::iim);
    CHECK(parse_plan(explicit_plan.to_text(), 2) == explicit_plan);
    CHECK_THROWS_AS(parse_plan("cx", 2), PlanError);
    CHECK_THROWS_AS(parse_plan("ccc", 2), PlanError);
    CHECK_THROWS_AS(parse_plan("ILT x", 2), PlanError);
    CHECK(parse_plan("", 3).steps() == 0);
}

TEST_CASE("plan modes") {
    CHECK(CloningPlan::ilt(3, 2).mode() == PlanMode::ilt);
    CHECK(CloningPlan::ilat(3, 2).mode() == PlanMode::ilat);
    CHECK(CloningPlan::ilm(3, {true, false}).mode() == PlanMode::ilm);
    CHECK(CloningPlan::ilt(3, 0).mode() == PlanMode::ilt);
    CHECK(parse_plan_mode("ILAT") == PlanMode::ilat);
    CHECK_THROWS_AS(parse_plan_mode("xyz"), PlanError);
}

TEST_CASE("descendants") {
    const IteratedGraph l1 = IteratedGraph::build(named_graph("k2"), CloningPlan::ilt(2, 1));
    CHECK(l1.descendants(0) == VertexSet(4, {2}));
    const IteratedGraph l2 = IteratedGraph::build(named_graph("k2"), CloningPlan::ilt(2, 2));
    CHECK(l2.descendants(0) == VertexSet(8, {2, 4, 6}));
    for (Vertex v = 4; v < 8; ++v) CHECK(l2.descendants(v).empty());
    CHECK(l2.descendants(VertexSet(8, {0, 1})).count() == 6);
    CHECK_THROWS(l2.descendants(8));
}

TEST_CASE("clone distance counts ancestor hops") {
    const IteratedGraph ig = IteratedGraph::build(named_graph("k1"), CloningPlan::ilt(1, 3));
    // Vertex 0's children: 1 (step 1), 2 (step 2), 4 (step 3); 1's child at step 2 is 3.
    CHECK(ig.clone_distance(1, 0) == 1);
    CHECK(ig.clone_distance(3, 0) == 2);
    CHECK(ig.clone_distance(4, 0) == 1);
    CHECK(ig.clone_distance(7, 0) == 3);
    CHECK(ig.clone_distance(7, 3) == 1);
    CHECK(ig.clone_distance(5, 5) == 0);
    CHECK_THROWS(ig.clone_distance(2, 1));
}

TEST_CASE("plan enumeration") {
    CHECK(PlanEnumerator(1, 2, PlanMode::ilm).size() == 4);
    const PlanEnumerator iim(2, 1, PlanMode::iim);
    REQUIRE(iim.size() == 4);
    CHECK(iim.at(0).to_text() == "cc\n");
    CHECK(iim.at(1).to_text() == "ca\n");
    CHECK(iim.at(2).to_text() == "ac\n");
    CHECK(iim.at(3).to_text() == "aa\n");
    CHECK(PlanEnumerator(3, 1, PlanMode::ilat).size() == 1);
    CHECK(PlanEnumerator(3, 2, PlanMode::iim).size() == 512);
    CHECK_THROWS_AS(PlanEnumerator(4, 3, PlanMode::iim), PlanError);

    std::set<std::string> seen;
    PlanEnumerator(3, 2, PlanMode::iim).for_each([&](const CloningPlan& p) { seen.insert(p.to_text()); });
    CHECK(seen.size() == 512);
}

TEST_CASE("lineage text") {
    const IteratedGraph ig = IteratedGraph::build(named_graph("k1"), parse_plan("a\nca\n", 1));
    CHECK(ig.lineage_text() == "0 0 -1 base\n1 1 0 anticlone\n2 2 0 clone\n3 2 1 anticlone\n");
}

TEST_CASE("structural invariants over random plans") {
    std::mt19937_64 rng(99);
    const PlanMode modes[] = {PlanMode::ilt, PlanMode::ilat, PlanMode::ilm, PlanMode::iim};
    for (int trial = 0; trial < 60; ++trial) {
        const Graph base = test_support::random_graph(rng, 1 + rng() % 5, 0.5);
        const std::size_t steps = rng() % 4;
        const CloningPlan plan = test_support::random_plan(rng, base.order(), steps, modes[trial % 4]);
        const IteratedGraph ig = IteratedGraph::build(base, plan);
        const Graph& g = ig.graph();
        REQUIRE(g.order() == base.order() << steps);
        CHECK(g.induced(ig.level_set(0)) == base);

        for (std::size_t t = 1; t <= steps; ++t) {
            const VertexSet level = ig.level_set(t);
            CHECK(g.induced(level).size() == 0);
            // Each child sees exactly N[parent] or AN[parent] among earlier vertices.
            const IteratedGraph before = IteratedGraph::build(base, plan.truncated(t - 1));
            const IteratedGraph after = IteratedGraph::build(base, plan.truncated(t));
            CHECK(after.graph() == g.induced(prefix(g.order(), after.order())));
            level.for_each([&](Vertex v) {
                const Vertex p = *ig.parent(v);
                CHECK(p < before.order());
                const VertexSet expected = ig.kind(v) == VertexKind::clone ? before.graph().closed_neighborhood(p)
                                                                           : before.graph().anti_neighborhood(p);
                CHECK(after.graph().neighborhood(v) == embed(expected, after.order()));
            });
        }
        for (Vertex v = 0; v < g.order(); ++v) {
            CHECK(ig.parent(v).has_value() == (ig.level(v) != 0));
            if (v > 0) CHECK(ig.level(v - 1) <= ig.level(v));
        }
    }
}

TEST_CASE("ILAT degree law") {
    for (const char* name : {"k1", "k2", "p3", "c4", "empty3"}) {
        for (std::size_t l = 1; l <= 4; ++l) {
            const IteratedGraph ig = IteratedGraph::build(named_graph(name), CloningPlan::ilat(named_graph(name).order(), l));
            const std::size_t n = ig.order();
            for (Vertex v = 0; v < n; ++v) {
                if (ig.level(v) < l) {
                    CHECK(ig.graph().degree(v) == n / 2 - 1);
                } else if (l >= 2) {
                    CHECK(ig.graph().degree(v) >= n / 4);
                }
            }
        }
    }
}

}  // TEST_SUITE
