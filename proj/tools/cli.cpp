#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "iterforce/forcing.hpp"
#include "iterforce/graph_io.hpp"
#include "iterforce/harness.hpp"
#include "iterforce/iterated.hpp"
#include "iterforce/report.hpp"
#include "iterforce/solvers.hpp"

namespace iterforce::cli {

namespace {

/// Bad flags, unreadable files, malformed input: everything that maps to exit 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GraphSource {
    std::string in;
    std::string base;
    std::string mode;
    std::size_t levels = 0;
    std::string plan_path;
};

struct BudgetOptions {
    double seconds = 0;
    std::uint64_t max_candidates = 0;
    unsigned workers = 1;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

std::vector<Graph> read_input(const std::string& path) {
    const std::string text = slurp(path);
    std::istringstream in(text);
    try {
        auto graphs = read_graphs(in);
        if (graphs.empty()) throw UsageError("'" + path + "' holds no graphs");
        return graphs;
    } catch (const ParseError& e) {
        throw UsageError("malformed graph in '" + path + "': " + e.what());
    }
}

std::optional<double> env_budget() {
    const char* raw = std::getenv(kBudgetEnv);
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(v > 0)) {
        throw UsageError(std::string(kBudgetEnv) + " must be a positive number of seconds, got '" + raw + "'");
    }
    return v;
}

/// Flag beats environment beats `fallback`.
Budget make_budget(const BudgetOptions& opts, double fallback = std::numeric_limits<double>::infinity()) {
    Budget b;
    b.workers = opts.workers;
    if (opts.seconds > 0) {
        b.wall_seconds = opts.seconds;
    } else if (const auto env = env_budget()) {
        b.wall_seconds = *env;
    } else {
        b.wall_seconds = fallback;
    }
    if (opts.max_candidates > 0) b.max_candidates = opts.max_candidates;
    return b;
}

CloningPlan resolve_plan(const GraphSource& src, std::size_t base_n) {
    if (!src.plan_path.empty()) {
        if (!src.mode.empty()) throw UsageError("give either --plan or --mode, not both");
        try {
            return parse_plan(slurp(src.plan_path), base_n);
        } catch (const PlanError& e) {
            throw UsageError("malformed plan '" + src.plan_path + "': " + e.what());
        }
    }
    if (src.mode.empty()) return CloningPlan::ilt(base_n, 0);
    try {
        return plan_from_mode(parse_plan_mode(src.mode), base_n, src.levels);
    } catch (const PlanError& e) {
        throw UsageError(e.what());
    }
}

/// Graphs named by --in / --base, each grown by the plan when one is given.
std::vector<IteratedGraph> load(const GraphSource& src) {
    if (src.in.empty() == src.base.empty()) throw UsageError("give exactly one of --in and --base");
    std::vector<Graph> bases;
    if (!src.in.empty()) {
        bases = read_input(src.in);
    } else {
        try {
            bases.push_back(graph_from_spec(src.base));
        } catch (const ParseError& e) {
            throw UsageError("malformed base '" + src.base + "': " + e.what());
        }
    }
    std::vector<IteratedGraph> out;
    out.reserve(bases.size());
    for (const Graph& g : bases) out.push_back(IteratedGraph::build(g, resolve_plan(src, g.order())));
    return out;
}

void add_source_options(CLI::App* cmd, GraphSource& src, bool allow_plan) {
    cmd->add_option("--in", src.in, "graph6 lines or an edge list ('-' for stdin)");
    cmd->add_option("--base", src.base, "named base (k1, p4, c5, star3, empty2, ...) or a graph6 string");
    if (allow_plan) {
        cmd->add_option("--mode", src.mode, "ilt or ilat (ilm/iim need --plan)");
        cmd->add_option("--levels", src.levels, "number of cloning steps")->check(CLI::NonNegativeNumber);
        cmd->add_option("--plan", src.plan_path, "plan file: lines over {c,a} or 'ILT l' / 'ILAT l' / 'ILM cac'");
    }
}

void add_budget_options(CLI::App* cmd, BudgetOptions& b) {
    cmd->add_option("--budget-secs", b.seconds, "wall-clock budget per search")->check(CLI::PositiveNumber);
    cmd->add_option("--max-candidates", b.max_candidates, "candidate budget per search")->check(CLI::PositiveNumber);
    cmd->add_option("--workers", b.workers, "worker threads (results do not depend on this)")
        ->check(CLI::Range(1U, 256U));
}

std::string join_json(const std::vector<std::string>& docs) {
    if (docs.size() == 1) return docs.front();
    std::string out = "[\n";
    for (std::size_t i = 0; i < docs.size(); ++i) {
        std::string d = docs[i];
        while (!d.empty() && d.back() == '\n') d.pop_back();
        out += d + (i + 1 < docs.size() ? ",\n" : "\n");
    }
    return out + "]\n";
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_file(path, text);
    }
}

// ------------------------------------------------------------------ commands

struct GenArgs {
    GraphSource src;
    std::string out;
    std::string lineage;
    std::string format = "g6";
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    const auto graphs = load(a.src);
    if (graphs.size() != 1) throw UsageError("gen takes exactly one base graph");
    const IteratedGraph& ig = graphs.front();
    const std::string text = a.format == "edges" ? emit_edge_list(ig.graph()) : emit_graph6(ig.graph()) + "\n";
    emit(a.out, text, out);
    std::string lineage = a.lineage;
    if (lineage.empty() && !a.out.empty() && a.out != "-") lineage = a.out + ".lineage";
    if (!lineage.empty()) write_file(lineage, ig.lineage_text());
    return kOk;
}

struct SolveArgs {
    GraphSource src;
    BudgetOptions budget;
    std::string out;
    std::size_t fort_cap = 0;
    bool superfluous = false;
};

int cmd_zf(const SolveArgs& a, std::ostream& out) {
    const Budget budget = make_budget(a.budget);
    std::vector<std::string> docs;
    bool exhausted = false;
    for (const auto& ig : load(a.src)) {
        const SolverReport r = zero_forcing_number(ig.graph(), budget);
        exhausted |= r.budget_exhausted;
        docs.push_back(solver_report_json(r, ig.order()));
    }
    emit(a.out, join_json(docs), out);
    return exhausted ? kBudgetExhausted : kOk;
}

int cmd_fzf(const SolveArgs& a, std::ostream& out) {
    const Budget budget = make_budget(a.budget);
    std::vector<std::string> docs;
    bool exhausted = false;
    for (const auto& ig : load(a.src)) {
        const Graph& g = ig.graph();
        const std::size_t n = g.order();
        SolverReport r;
        if (a.fort_cap == 0) {
            r = failed_zero_forcing_number(g, budget);
        } else {
            if (a.fort_cap > n) {
                throw UsageError("--fort-cap " + std::to_string(a.fort_cap) + " exceeds n=" + std::to_string(n));
            }
            const SolverReport m = min_fort(g, a.fort_cap, budget);
            r.parameter = Parameter::failed_zero_forcing;
            r.explored = m.explored;
            r.budget_exhausted = m.budget_exhausted;
            if (m.value) {
                r.value = n - *m.value;
                r.fort = m.fort;
                r.witness = m.fort->complement();
                r.bounds = {0, n - 1};
            } else {
                // Forts below the cleared size are ruled out; FZ is bracketed only.
                r.bounds = {0, n - m.bounds.lower};
                r.witness = VertexSet(n);
            }
        }
        exhausted |= r.budget_exhausted;
        docs.push_back(solver_report_json(r, n));
    }
    emit(a.out, join_json(docs), out);
    return exhausted ? kBudgetExhausted : kOk;
}

int cmd_burn(const SolveArgs& a, std::ostream& out) {
    const Budget budget = make_budget(a.budget);
    std::vector<std::string> docs;
    bool exhausted = false;
    for (const auto& ig : load(a.src)) {
        if (!ig.graph().connected()) throw UsageError("burning needs a connected graph");
        const SolverReport r =
            a.superfluous ? superfluous_burning_number(ig.graph(), budget) : burning_number(ig.graph(), budget);
        exhausted |= r.budget_exhausted;
        docs.push_back(solver_report_json(r, ig.order()));
    }
    emit(a.out, join_json(docs), out);
    return exhausted ? kBudgetExhausted : kOk;
}

struct VerifyArgs {
    std::string config;
    std::string out;
    bool json = false;
    BudgetOptions budget;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    std::vector<ClaimSpec> specs;
    try {
        specs = parse_verify_config(slurp(a.config));
    } catch (const HarnessError& e) {
        throw UsageError("config '" + a.config + "': " + e.what());
    }
    std::vector<TheoremReport> reports;
    for (auto& spec : specs) {
        Budget b = make_budget(a.budget, spec.budget.wall_seconds);
        if (a.budget.max_candidates == 0) b.max_candidates = spec.budget.max_candidates;
        spec.budget = b;
        reports.push_back(run_claim(spec));
    }
    const std::string json = reports_json(reports);
    if (!a.out.empty()) write_file(a.out, json);
    out << (a.json ? json : reports_table(reports));

    const bool violated = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.any_violated(); });
    const bool undecided = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.undecided() > 0; });
    if (violated) return kViolated;
    return undecided ? kBudgetExhausted : kOk;
}

struct BenchArgs {
    GraphSource src;
    std::size_t samples = 2000;
    BudgetOptions budget;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    using clock = std::chrono::steady_clock;
    const auto graphs = load(a.src);
    out << "index  n  kernel_closures_per_s  round_closures_per_s  Z  Z_seconds\n";
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi].graph();
        const std::size_t n = g.order();
        std::mt19937_64 rng(12345);
        std::vector<VertexSet> starts;
        starts.reserve(a.samples);
        for (std::size_t i = 0; i < a.samples; ++i) {
            VertexSet s(n);
            for (Vertex v = 0; v < n; ++v) {
                if (rng() % 2 == 0) s.insert(v);
            }
            starts.push_back(std::move(s));
        }
        auto rate = [&](auto&& fn) {
            const auto t0 = clock::now();
            std::size_t sink = 0;
            for (const auto& s : starts) sink += fn(s) ? 1 : 0;
            const double secs = std::chrono::duration<double>(clock::now() - t0).count();
            static_cast<void>(sink);
            return secs > 0 ? static_cast<double>(starts.size()) / secs : 0.0;
        };
        ForcingKernel kernel(g);
        const double kernel_rate = rate([&](const VertexSet& s) { return kernel.forces_all(s.words()); });
        const double round_rate = rate([&](const VertexSet& s) { return closure(g, s).forced.count() == n; });
        const auto t0 = clock::now();
        const SolverReport z = zero_forcing_number(g, make_budget(a.budget));
        const double zsecs = std::chrono::duration<double>(clock::now() - t0).count();
        out << gi << "  " << n << "  " << static_cast<std::uint64_t>(kernel_rate) << "  "
            << static_cast<std::uint64_t>(round_rate) << "  "
            << (z.value ? std::to_string(*z.value)
                        : "[" + std::to_string(z.bounds.lower) + "," + std::to_string(z.bounds.upper) + "]")
            << "  " << zsecs << "\n";
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zero forcing, forts and burning on iterated local graph models", "iterforce"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "iterforce 0.1.0");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "grow an iterated graph from a base and plan");
    add_source_options(gen_cmd, gen.src, true);
    gen_cmd->add_option("--out", gen.out, "output path ('-' or omitted for stdout)");
    gen_cmd->add_option("--lineage", gen.lineage, "lineage sidecar path (default <out>.lineage)");
    gen_cmd->add_option("--format", gen.format, "g6 or edges")->check(CLI::IsMember({"g6", "edges"}));

    SolveArgs zf;
    auto* zf_cmd = app.add_subcommand("zf", "exact zero forcing number");
    add_source_options(zf_cmd, zf.src, true);
    add_budget_options(zf_cmd, zf.budget);
    zf_cmd->add_option("--out", zf.out, "JSON report path");

    SolveArgs fzf;
    auto* fzf_cmd = app.add_subcommand("fzf", "exact failed zero forcing number via minimum forts");
    add_source_options(fzf_cmd, fzf.src, true);
    add_budget_options(fzf_cmd, fzf.budget);
    fzf_cmd->add_option("--out", fzf.out, "JSON report path");
    fzf_cmd->add_option("--fort-cap", fzf.fort_cap, "only search forts up to this size")->check(CLI::PositiveNumber);

    SolveArgs burn;
    auto* burn_cmd = app.add_subcommand("burn", "exact burning number");
    add_source_options(burn_cmd, burn.src, true);
    add_budget_options(burn_cmd, burn.budget);
    burn_cmd->add_option("--out", burn.out, "JSON report path");
    burn_cmd->add_flag("--superfluous", burn.superfluous, "compute b* (last source unused)");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification config");
    verify_cmd->add_option("--config", verify.config, "config file")->required();
    verify_cmd->add_option("--out", verify.out, "JSON report path");
    verify_cmd->add_flag("--json", verify.json, "print the JSON report instead of the summary table");
    add_budget_options(verify_cmd, verify.budget);

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "time the forcing kernels and the Z search");
    add_source_options(bench_cmd, bench.src, true);
    add_budget_options(bench_cmd, bench.budget);
    bench_cmd->add_option("--samples", bench.samples, "random start sets per kernel")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, out);
        if (*zf_cmd) return cmd_zf(zf, out);
        if (*fzf_cmd) return cmd_fzf(fzf, out);
        if (*burn_cmd) return cmd_burn(burn, out);
        if (*verify_cmd) return cmd_verify(verify, out);
        if (*bench_cmd) return cmd_bench(bench, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return kUsage;
    } catch (const PlanError& e) {
        err << "error: bad plan: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace iterforce::cli
