#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "iterforce/graph_io.hpp"
#include "iterforce/iterated.hpp"
#include "iterforce/report.hpp"
#include "iterforce/solvers.hpp"

using namespace iterforce;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / "iterforce_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string read(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen writes graph6 and the lineage sidecar") {
    const fs::path g = scratch() / "g.g6";
    const Run r = run({"gen", "--base", "k1", "--mode", "ilat", "--levels", "5", "--out", g.string()});
    REQUIRE(r.code == cli::kOk);
    const Graph parsed = parse_graph6(read(g).substr(0, read(g).find('\n')));
    CHECK(parsed.order() == 32);
    CHECK(parsed == IteratedGraph::build(named_graph("k1"), CloningPlan::ilat(1, 5)).graph());
    const std::string lineage = read(g.string() + ".lineage");
    CHECK(lineage.rfind("0 0 -1 base\n1 1 0 anticlone\n", 0) == 0);
}

TEST_CASE("fzf with a fort cap reports FZ = n - min fort") {
    const fs::path g = scratch() / "fz.g6";
    REQUIRE(run({"gen", "--base", "k1", "--mode", "ilat", "--levels", "5", "--out", g.string()}).code == 0);
    const Run r = run({"fzf", "--in", g.string(), "--fort-cap", "6"});
    REQUIRE(r.code == cli::kOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("parameter") == "FZ");
    CHECK(doc.at("value").get<int>() == 32 - static_cast<int>(doc.at("fort").size()));
    CHECK(doc.at("value").get<int>() >= 26);
}

TEST_CASE("file pipeline matches the in-process pipeline") {
    const fs::path g = scratch() / "pipe.g6";
    REQUIRE(run({"gen", "--base", "p3", "--mode", "ilat", "--levels", "2", "--out", g.string()}).code == 0);
    const Graph h = IteratedGraph::build(named_graph("p3"), CloningPlan::ilat(3, 2)).graph();
    CHECK(run({"zf", "--in", g.string()}).out == solver_report_json(zero_forcing_number(h), h.order()));
    CHECK(run({"fzf", "--in", g.string()}).out == solver_report_json(failed_zero_forcing_number(h), h.order()));
    CHECK(run({"zf", "--base", "p3", "--mode", "ilat", "--levels", "2"}).out == run({"zf", "--in", g.string()}).out);
}

TEST_CASE("plan files") {
    const fs::path plan = scratch() / "plan.txt";
    write(plan, "# two steps\nca\ncaac\n");
    const Run r = run({"gen", "--base", "k2", "--plan", plan.string()});
    REQUIRE(r.code == 0);
    CHECK(parse_graph6(r.out.substr(0, r.out.find('\n'))) ==
          IteratedGraph::build(named_graph("k2"), parse_plan("ca\ncaac\n", 2)).graph());
    write(plan, "cx\n");
    const Run bad = run({"gen", "--base", "k2", "--plan", plan.string()});
    CHECK(bad.code == cli::kUsage);
    CHECK(bad.err.find("malformed plan") != std::string::npos);
}

TEST_CASE("usage errors exit 2 with distinct diagnostics") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"zf", "--base", "k3", "--workers", "0"}).code == cli::kUsage);
    CHECK(run({"zf", "--base", "k3", "--budget-secs", "-1"}).code == cli::kUsage);

    const Run missing = run({"zf", "--in", (scratch() / "nope.g6").string()});
    CHECK(missing.code == cli::kUsage);
    CHECK(missing.err.find("cannot read") != std::string::npos);

    const fs::path junk = scratch() / "junk.g6";
    write(junk, "A`\n");
    const Run malformed = run({"zf", "--in", junk.string()});
    CHECK(malformed.code == cli::kUsage);
    CHECK(malformed.err.find("malformed graph") != std::string::npos);

    const Run disconnected = run({"burn", "--base", "empty2"});
    CHECK(disconnected.code == cli::kUsage);
    CHECK(disconnected.err.find("connected") != std::string::npos);

    const Run both = run({"zf", "--base", "k3", "--in", junk.string()});
    CHECK(both.code == cli::kUsage);
}

TEST_CASE("budget exhaustion exits 3 and keeps the bracket") {
    const Run r = run({"zf", "--base", "p3", "--mode", "ilat", "--levels", "3", "--max-candidates", "5"});
    CHECK(r.code == cli::kBudgetExhausted);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("budget_exhausted") == true);
    CHECK(doc.at("value").is_null());
}

TEST_CASE("environment budget override is validated") {
    ::setenv(cli::kBudgetEnv, "abc", 1);
    CHECK(run({"zf", "--base", "k3"}).code == cli::kUsage);
    ::setenv(cli::kBudgetEnv, "100", 1);
    CHECK(run({"zf", "--base", "k3"}).code == cli::kOk);
    ::unsetenv(cli::kBudgetEnv);
}

TEST_CASE("output is byte-identical across worker counts") {
    for (const char* cmd : {"zf", "fzf"}) {
        const Run one = run({cmd, "--base", "c4", "--mode", "ilat", "--levels", "2", "--workers", "1"});
        const Run four = run({cmd, "--base", "c4", "--mode", "ilat", "--levels", "2", "--workers", "4"});
        CHECK(one.code == 0);
        CHECK(one.out == four.out);
    }
    const fs::path cfg = scratch() / "det.cfg";
    write(cfg, "burning-bound k3 1-2 iim 60\n");
    const Run a = run({"verify", "--config", cfg.string(), "--json", "--workers", "1"});
    const Run b = run({"verify", "--config", cfg.string(), "--json", "--workers", "3"});
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
}

TEST_CASE("verify exit codes follow the verdicts") {
    const fs::path ok = scratch() / "ok.cfg";
    write(ok, "zf-ilt-lift p3 1-2 ilt 60\nloop-lift p3 1 ilt 60\n");
    const fs::path json = scratch() / "ok.json";
    const Run good = run({"verify", "--config", ok.string(), "--out", json.string()});
    CHECK(good.code == cli::kOk);
    CHECK(good.out.find("zf-ilt-lift") != std::string::npos);
    CHECK(nlohmann::json::parse(read(json)).at("reports").size() == 2);

    const fs::path bad = scratch() / "bad.cfg";
    write(bad, "fz-ilat-twin-classification k1 1 ilat 60\n");
    CHECK(run({"verify", "--config", bad.string()}).code == cli::kViolated);

    const fs::path slow = scratch() / "slow.cfg";
    write(slow, "zf-ilt-lift-tight p4 3 ilt 60:10\n");
    CHECK(run({"verify", "--config", slow.string()}).code == cli::kBudgetExhausted);

    const fs::path broken = scratch() / "broken.cfg";
    write(broken, "fz-ilat-lower k1\n");
    const Run br = run({"verify", "--config", broken.string()});
    CHECK(br.code == cli::kUsage);
    CHECK(br.err.find("line 1") != std::string::npos);
}

TEST_CASE("bench runs") {
    const Run r = run({"bench", "--base", "c5", "--samples", "50"});
    CHECK(r.code == 0);
    CHECK(r.out.find("kernel_closures_per_s") != std::string::npos);
}

}  // TEST_SUITE
