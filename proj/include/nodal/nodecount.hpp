#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nodal/fiber.hpp"
#include "nodal/lattice.hpp"
#include "nodal/polytope.hpp"
#include "nodal/singular.hpp"

namespace nodal {

/**
 * Verdicts of the geometric preconditions the node-count formulas rest on.
 * Offender lists carry facet ids into the hull's facet order.
 */
struct AssumptionReport {
  bool contains_origin = false;
  bool vertical_index_one = false;
  bool primitive_ok = true;           // projected facet normals primitive
  std::vector<int> primitive_offenders;
  bool horizontal_lattice_ok = true;  // horizontal facets project to saturated lattices
  std::vector<int> horizontal_lattice_offenders;
  bool horizontal_depth_ok = true;    // points at lattice distance 1 below each horizontal facet
  std::vector<int> horizontal_depth_offenders;
  bool developed = false;             // no horizontal facets at all

  bool all_ok() const {
    return vertical_index_one && primitive_ok && horizontal_lattice_ok && horizontal_depth_ok;
  }
};

/// Per-facet line of the analysis: everything needed to re-derive the count.
struct FacetReport {
  IntVector normal;
  Int offset;
  bool horizontal = false;
  Int volume;             // facet lattice volume
  Int multiplier;         // 0 for horizontal facets
  IndexSequence sequence; // shifted sequence for horizontal facets
  Int excess;             // sum of (index - 1) over the sequence
  Int edge_contribution;  // multiplier * volume (0 for horizontal facets)
};

struct AnalysisReport {
  std::string name;
  int n = 0;
  Int volume;      // normalized volume of the Newton polytope
  Int fiber_area;  // normalized area of the fiber polygon
  std::vector<FacetReport> facets;
  AssumptionReport assumptions;
  Int d_closure;
  std::optional<Int> d_punctured;   // absent when an assumption blocks it
  std::optional<Int> d_conjecture;  // conjectural formula; absent when blocked
  Int chi_curve;
  FiberPolygon polygon;
  std::vector<std::string> notes;
};

AssumptionReport check_assumptions(const SupportSet& a);

/**
 * Reduces the vertical index to 1 by a coordinate change on the base
 * directions (identity when the index is already 1); errors on vertically
 * degenerate sets whose index is infinite.
 */
SupportSet normalize_vertical(const SupportSet& a);

/// Node count of the closure of the projected curve.  Requires vertical index 1.
Int delta_sum_closure(const SupportSet& a);

/**
 * Node count of the projection of the punctured curve (the part inside the
 * torus).  Requires vertical index 1, saturated horizontal facet lattices
 * and points at lattice distance 1 below every horizontal facet.
 */
Int delta_sum_punctured(const SupportSet& a);

/**
 * Conjectural closed form of the punctured count that drops the distance-1
 * requirement.  Requires vertical index 1 and saturated horizontal lattices.
 */
Int delta_sum_conjecture(const SupportSet& a);

/// Full pipeline: normalization, checks, facet data, fiber polygon, counts.
AnalysisReport analyze(const SupportSet& a, const std::string& name = "");

}  // namespace nodal
