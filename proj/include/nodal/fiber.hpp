#pragma once

#include <utility>
#include <vector>

#include "nodal/lattice.hpp"
#include "nodal/numeric.hpp"
#include "nodal/polytope.hpp"
#include "nodal/singular.hpp"

namespace nodal {

/// Edge material contributed by one non-horizontal facet of the Newton polytope.
struct FacetContribution {
  int facet_id = 0;
  IntVector gamma;     // primitive projected normal (outer normal of the edge)
  Int multiplier = 0;  // projected normal = multiplier * gamma
  Int contribution = 0;  // multiplier * facet lattice volume
};

/**
 * The fiber polygon of the projection: the plane polytope whose support
 * function integrates the polytope's fibers.  Each edge's outer normal is a
 * primitive gamma, and its lattice length collects the contributions of all
 * facets projecting onto that normal.  Vertices chain counterclockwise from
 * the lexicographically smallest vertex, anchored at the origin.
 */
struct FiberPolygon {
  std::vector<std::pair<IntVector, Int>> edges;  // (outer normal gamma, lattice length)
  std::vector<IntVector> vertices;
  Int norm_area = 0;  // 2 x Euclidean area (normalized lattice area)
};

std::vector<FacetContribution> fiber_contributions(const LatticePolytope& hull, int n);

FiberPolygon fiber_polygon(const SupportSet& a);
FiberPolygon fiber_polygon(const LatticePolytope& hull, int n);

/**
 * Both sides of the defining mixed-volume identity of the fiber polygon:
 * first the plane mixed volume of the polygon with the segment [0, u],
 * then the ambient mixed volume of n+1 copies of the Newton polytope with
 * the segment [0, u] embedded in the fiber plane.  They must agree.
 */
std::pair<Int, Int> mixed_volume_identity(const SupportSet& a, const FiberPolygon& p,
                                          const IntVector& u);

}  // namespace nodal
