#pragma once

#include <string>

#include "domivar/analysis.hpp"
#include "domivar/behavioral.hpp"
#include "domivar/io.hpp"
#include "domivar/solver.hpp"

namespace domivar {

/// Report builders. Every report is an ordered_json object with a fixed key
/// layout and no wall-clock content, so identical inputs produce byte-identical
/// dumps (schema, digest, command, effective tolerances, then the payload).

ordered_json report_header(const LoadedInstance& loaded, const std::string& command);

ordered_json validate_report(const LoadedInstance& loaded);
ordered_json classify_report(const LoadedInstance& loaded);
ordered_json solve_report(const LoadedInstance& loaded, const SolverResult& result);
ordered_json trap_report(const LoadedInstance& loaded, const TrapCertificate& cert);
ordered_json scalarize_report(const LoadedInstance& loaded, const Vec& point);

ordered_json solver_result_json(const ProblemInstance& inst, const SolverResult& result);
ordered_json assumption_report_json(const AssumptionReport& rep);

/// CSV conversion of a prior JSON report: classification rows or a solver
/// trace. Throws std::invalid_argument for report kinds without row content.
std::string report_to_csv(const ordered_json& report);

std::string dump_report(const ordered_json& report);

}  // namespace domivar
