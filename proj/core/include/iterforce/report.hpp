#pragma once

#include <string>

#include "iterforce/solvers.hpp"

namespace iterforce {

/// JSON object with keys parameter, value, witness, explored, bounds and
/// budget_exhausted, plus fort / sources / covered_by when present.
/// `value` is null when the budget ran out.
std::string solver_report_json(const SolverReport& report, std::size_t order);

}  // namespace iterforce
