#pragma once

#include <vector>

#include "nodal/lattice.hpp"
#include "nodal/numeric.hpp"
#include "nodal/polytope.hpp"

namespace nodal {

/**
 * A facet of the Newton polytope together with the data of its projection to
 * the plane: a facet is horizontal when its normal vanishes on the two fiber
 * coordinates; otherwise the projected normal is m times a primitive gamma.
 */
struct FacetClass {
  int facet_id = 0;
  bool horizontal = false;
  IntVector projected_normal;  // last two coordinates of the facet normal
  IntVector gamma;             // primitive part (empty when horizontal)
  Int multiplier = 0;          // 0 when horizontal
};

/**
 * Sequence of vertical indices of the level sets accumulated inward from a
 * facet, stored up to and including its first 1 (or its stabilization).
 * For horizontal facets the leading run of infinities is dropped and its
 * length recorded in shift_r.
 */
struct IndexSequence {
  std::vector<ExtendedNat> values;
  Int shift_r = 0;

  bool has_infinite() const;
  /// sum of (value - 1); throws internal_error when a value is infinite
  Int excess() const;
};

std::vector<FacetClass> classify_facets(const LatticePolytope& hull, int n);

/// Boundary-based horizontality test: the facet projects into the boundary
/// of the projection of the whole polytope (forgetting fiber coordinates).
bool facet_projects_to_boundary(const LatticePolytope& hull, int facet_id, int n);

/// Index sequence of a non-horizontal facet; infinite entries are an error here.
IndexSequence facet_index_sequence(const SupportSet& a, const Facet& facet);

/// Index sequence of a horizontal facet, shifted past its infinite prefix.
IndexSequence horizontal_index_sequence(const SupportSet& a, const Facet& facet);

/**
 * Nested partition tree of i_1 branches into boxes of sizes i_1, i_2, ...;
 * the address of an element lists, level by level, the position of its box
 * within the parent box.
 */
struct BoxTree {
  std::vector<Int> sizes;  // divisor chain ending in 1

  Int element_count() const { return sizes.empty() ? Int(0) : sizes[0]; }
  std::vector<Int> address(const Int& element) const;
};

BoxTree nested_boxes(const std::vector<Int>& sizes);

/// First position (1-based) where the two elements' addresses differ.
Int depth_kappa(const BoxTree& tree, const Int& a, const Int& b);

struct FpsInvariants {
  Int nodes = 0;  // delta invariant: nodes after perturbing the branches
  Int chi = 0;    // Euler characteristic of the Milnor fiber in the torus
  Int delta = 0;
};

/// Invariants of the forking-paths singularity with the given index sequence.
FpsInvariants forking_paths_invariants(const std::vector<Int>& sizes);

}  // namespace nodal
