#pragma once

#include <vector>

#include "nodal/numeric.hpp"

namespace nodal {

/**
 * A finite tuple of finite point sets in a common Z^m, the combinatorial
 * shadow of a square polynomial system with those supports.
 */
struct Collection {
  int m = 0;
  std::vector<std::vector<IntVector>> sets;

  Collection() = default;
  Collection(int ambient, std::vector<std::vector<IntVector>> s);

  int size() const { return static_cast<int>(sets.size()); }
};

struct QuotientResult {
  std::vector<std::vector<IntVector>> sets;  // images of the unselected sets
  Int sublattice_index = 1;                  // |saturation / difference lattice|
  int quotient_rank = 0;
};

struct MultiplicityResult {
  std::vector<int> essential_indices;
  Int codim = 0;
  Int sublattice_index = 1;
  std::vector<std::vector<IntVector>> quotient_sets;
  Int d = 1;  // generic number of isolated components in a root fiber
};

/// size of the collection minus the dimension of the Minkowski sum (can be <= 0).
Int collection_codim(const Collection& c);

/**
 * Indices (sorted) of the unique subcollection whose codimension strictly
 * exceeds that of each of its proper subcollections and is maximal among all
 * subcollections; the empty collection (codimension 0) is a valid answer.
 */
std::vector<int> essential_subcollection(const Collection& c);

/**
 * Projects the unselected sets along the difference lattice L of the selected
 * ones: images live in Z^m / saturation(L), coordinates fixed by Smith form.
 */
QuotientResult quotient_collection(const Collection& c, const std::vector<int>& selected);

/**
 * Multiplicity of the collection: |L'/L| times the normalized mixed volume of
 * the quotient images of the unselected sets (1 for an empty quotient).
 * Requires the collection to be weakly essential: its codimension must be
 * maximal among all of its subcollections.
 */
MultiplicityResult multiplicity(const Collection& c);

}  // namespace nodal
