#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nodal/numeric.hpp"

namespace nodal {

/**
 * Natural number extended by a single infinite element.  Lattice indices of
 * sublattices of deficient rank are infinite, and the index sequences of
 * horizontal facets legitimately pass through such values.
 */
class ExtendedNat {
 public:
  static ExtendedNat finite(Int v);
  static ExtendedNat infinity();

  bool is_infinite() const { return infinite_; }
  const Int& value() const;  // throws internal_error when infinite

  bool operator==(const ExtendedNat& o) const;
  bool operator!=(const ExtendedNat& o) const { return !(*this == o); }
  bool operator==(const Int& v) const { return !infinite_ && value_ == v; }
  bool operator==(long long v) const { return !infinite_ && value_ == v; }

  std::string to_string() const;

 private:
  bool infinite_ = false;
  Int value_ = 0;
};

/**
 * Finite set of lattice points in Z^(n+2) describing the supports of a
 * complete intersection curve; the last two coordinates are the coordinates
 * of the projection plane (the fiber coordinates).
 */
struct SupportSet {
  std::vector<IntVector> points;
  int n = 0;  // dim = n + 2

  SupportSet() = default;
  SupportSet(std::vector<IntVector> pts, int n_dims);

  int dim() const { return n + 2; }
};

struct SmithResult {
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix d;  // diagonal, nonnegative, divisibility chain
  IntMatrix v;  // unimodular, cols x cols

  std::vector<Int> divisors() const;  // nonzero diagonal entries, in order
};

/// U * M * V = D with U, V unimodular and d_1 | d_2 | ... | d_r >= 1.
SmithResult smith_normal_form(const IntMatrix& m);

/**
 * Index in Z^ambient_rank of the sublattice generated by the given vectors;
 * infinite when the generators do not span full rank.
 */
ExtendedNat lattice_index(const std::vector<IntVector>& generators, int ambient_rank);

/**
 * Vertical index: the index of the lattice generated by pairwise differences
 * of the points, projected to Z^n by forgetting the two fiber coordinates.
 */
ExtendedNat vertical_index(const std::vector<IntVector>& points, int n);

/// v divided by the gcd of its entries; throws input_error on the zero vector.
IntVector primitive_part(const IntVector& v);

/// gcd of the entries of v (0 for the zero vector).
Int content(const IntVector& v);

/// Multiplies the two fiber coordinates of every point by N >= 1.
SupportSet fiber_scale(const SupportSet& a, const Int& n_factor);

}  // namespace nodal
