#pragma once

#include <string>
#include <vector>

#include "nodal/nodecount.hpp"
#include "nodal/polytope.hpp"

namespace nodal {

/// A parsed input file: an optional display name and the support set.
struct InputDocument {
  std::string name;
  SupportSet support;
  std::vector<std::string> notes;
};

/// Parses {"name": ..., "points": [[...], ...]}; integers may be JSON
/// numbers or decimal strings.  Throws input_error with a reason.
InputDocument parse_input(const std::string& json_text);

/// Parses {"name": ..., "polytopes": [[[...]]]} for mixed volume queries.
std::pair<std::string, PolytopeTuple> parse_bodies(const std::string& json_text);

/// Human-readable report with the per-facet table and all counts.
std::string render_text(const AnalysisReport& rep, const std::string& formula = "all");

/**
 * Machine-readable report, schema "1".  Integers that fit in 53 bits are
 * emitted as JSON numbers, larger ones as decimal strings, so a reader
 * recovers every value exactly.
 */
std::string render_json(const AnalysisReport& rep);

std::string render_fiber_text(const FiberPolygon& p);

std::string render_assumptions_text(const AssumptionReport& rep);

}  // namespace nodal
