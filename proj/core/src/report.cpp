#include "iterforce/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "iterforce/graph_io.hpp"
#include "iterforce/harness.hpp"

namespace iterforce {

namespace {

using nlohmann::ordered_json;

ordered_json members(const VertexSet& s) { return s.to_vector(); }

ordered_json plan_json(const CloningPlan& plan) {
    ordered_json steps = ordered_json::array();
    std::istringstream in(plan.to_text());
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) steps.push_back(line);
    }
    return {{"mode", std::string(to_string(plan.mode()))}, {"steps", plan.steps()}, {"choices", steps}};
}

ordered_json certificate_json(const Certificate& c) {
    ordered_json j = {{"kind", std::string(to_string(c.kind))}, {"label", c.label}};
    if (c.set.universe() != 0) j["set"] = members(c.set);
    if (!c.schedule.empty()) {
        ordered_json forces = ordered_json::array();
        for (const Force& f : c.schedule) forces.push_back({f.round, f.forcer, f.target});
        j["schedule"] = forces;
    }
    if (!c.sources.empty()) j["sources"] = c.sources;
    if (c.bound != 0) j["bound"] = c.bound;
    return j;
}

ordered_json instance_json(const InstanceResult& r) {
    ordered_json j = {
        {"base", emit_graph6(r.base)},
        {"plan", plan_json(r.plan)},
        {"n", r.order},
        {"verdict", std::string(to_string(r.verdict))},
    };
    if (r.undecided) j["undecided"] = true;
    if (!r.note.empty()) j["note"] = r.note;
    ordered_json values = ordered_json::object();
    for (const auto& [k, v] : r.values) values[k] = v;
    j["values"] = values;
    ordered_json certs = ordered_json::array();
    for (const auto& c : r.certificates) certs.push_back(certificate_json(c));
    j["certificates"] = certs;
    return j;
}

}  // namespace

std::string solver_report_json(const SolverReport& report, std::size_t order) {
    ordered_json j;
    j["parameter"] = std::string(to_string(report.parameter));
    j["value"] = report.value ? ordered_json(*report.value) : ordered_json(nullptr);
    const bool burning =
        report.parameter == Parameter::burning || report.parameter == Parameter::superfluous_burning;
    if (burning) {
        j["witness"] = report.sources;
    } else {
        j["witness"] = members(report.witness);
    }
    j["explored"] = report.explored;
    j["bounds"] = {report.bounds.lower, report.bounds.upper};
    j["budget_exhausted"] = report.budget_exhausted;
    j["n"] = order;
    if (report.fort) j["fort"] = members(*report.fort);
    if (report.parameter == Parameter::min_fort) j["found"] = report.found;
    if (burning && report.value) j["covered_by"] = report.covered_by;
    return j.dump(2) + "\n";
}

std::string reports_json(const std::vector<TheoremReport>& reports) {
    ordered_json out = ordered_json::array();
    for (const auto& rep : reports) {
        ordered_json instances = ordered_json::array();
        for (const auto& inst : rep.instances) instances.push_back(instance_json(inst));
        out.push_back({
            {"claim_id", rep.claim_id},
            {"statement", rep.statement},
            {"notes", rep.notes},
            {"summary",
             {{"instances", rep.instances.size()},
              {"verified", rep.count(Verdict::verified)},
              {"violated", rep.count(Verdict::violated)},
              {"skipped", rep.count(Verdict::skipped)},
              {"undecided", rep.undecided()}}},
            {"instances", instances},
        });
    }
    return ordered_json{{"reports", out}}.dump(2) + "\n";
}

std::string reports_table(const std::vector<TheoremReport>& reports) {
    std::ostringstream out;
    out << std::left << std::setw(30) << "claim" << std::setw(10) << "base" << std::right << std::setw(10)
        << "instances" << std::setw(10) << "verified" << std::setw(10) << "violated" << std::setw(10) << "skipped"
        << std::setw(11) << "undecided" << "\n";
    std::vector<const InstanceResult*> flagged;
    for (const auto& rep : reports) {
        const std::string base = rep.instances.empty() ? "-" : emit_graph6(rep.instances.front().base);
        out << std::left << std::setw(30) << rep.claim_id << std::setw(10) << base << std::right << std::setw(10)
            << rep.instances.size() << std::setw(10) << rep.count(Verdict::verified) << std::setw(10)
            << rep.count(Verdict::violated) << std::setw(10) << rep.count(Verdict::skipped) << std::setw(11)
            << rep.undecided() << "\n";
        for (const auto& inst : rep.instances) {
            if (inst.verdict == Verdict::violated || inst.undecided) flagged.push_back(&inst);
        }
    }
    // Violations and budget stops are the interesting rows; list them with their notes.
    for (const InstanceResult* inst : flagged) {
        out << "  " << (inst->undecided ? "undecided" : "violated") << ": base " << emit_graph6(inst->base) << " "
            << to_string(inst->plan.mode()) << " l=" << inst->plan.steps() << " (n=" << inst->order << ")";
        if (!inst->note.empty()) out << ": " << inst->note;
        out << "\n";
    }
    return out.str();
}

}  // namespace iterforce
