#pragma once

#include <vector>

#include "nodal/numeric.hpp"

namespace nodal {

/**
 * Supporting hyperplane of a full-dimensional lattice polytope:
 * normal . x <= offset for every point, with equality on the facet.
 * The normal is primitive and outward; norm_volume is the lattice volume
 * of the facet inside its own hyperplane (unit (d-1)-simplex = 1).
 */
struct Facet {
  IntVector normal;
  Int offset;
  std::vector<int> vertex_ids;  // indices into LatticePolytope::vertices
  Int norm_volume;
};

struct LatticePolytope {
  int dim = 0;
  std::vector<IntVector> vertices;  // extreme points, sorted lexicographically
  std::vector<Facet> facets;        // sorted lexicographically by (normal, offset)
};

/**
 * Exact convex hull of a finite point set spanning R^d.
 * Throws input_error("degenerate support set") when the affine span is not
 * full-dimensional.  Desk scale: brute force over supporting hyperplanes.
 */
LatticePolytope convex_hull(const std::vector<IntVector>& points);

/// Lattice volume normalized so the unit simplex has volume 1 (d! x Euclidean).
Int normalized_volume(const LatticePolytope& p);

/// Lattice volume of a facet within its own hyperplane lattice.
Int facet_normalized_volume(const LatticePolytope& p, const Facet& f);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

/**
 * Tuple of polytopes in a common ambient space, kept as vertex lists so that
 * lower-dimensional members (segments, points) are representable; mixed
 * volume summands degenerate to volume zero in that case.
 */
struct PolytopeTuple {
  int dim = 0;
  std::vector<std::vector<IntVector>> bodies;

  PolytopeTuple() = default;
  PolytopeTuple(int d, std::vector<std::vector<IntVector>> b);
};

/**
 * Mixed volume normalized so that the diagonal reproduces normalized_volume;
 * the tuple must contain exactly dim bodies.  Computed by inclusion-exclusion
 * over volumes of Minkowski sums of sub-tuples.
 */
Int normalized_mixed_volume(const PolytopeTuple& t);

/**
 * Euler characteristic of a generic complete intersection in the torus whose
 * equations have the tuple's members as Newton polytopes (k <= dim bodies).
 * Expands prod_i B_i (1 + B_i)^(-1), keeps degree-dim monomials, and maps
 * them to mixed volumes with repetitions.
 */
Int euler_characteristic(const PolytopeTuple& t);

/// Dilation by an integer factor >= 0 (vertex-wise scaling).
std::vector<IntVector> scale_points(const std::vector<IntVector>& pts, const Int& k);

/// Pairwise sums of two point sets (support of the Minkowski sum).
std::vector<IntVector> sum_point_sets(const std::vector<IntVector>& a,
                                      const std::vector<IntVector>& b);

/// Affine dimension of a point set.
int affine_dim(const std::vector<IntVector>& pts);

/**
 * Normalized volume of the hull of an arbitrary point set; zero when the set
 * is lower-dimensional.  The workhorse behind mixed volumes.
 */
Int point_set_volume(const std::vector<IntVector>& pts, int dim);

}  // namespace nodal
