#include "nodal/collections.hpp"

#include <algorithm>

#include "nodal/errors.hpp"
#include "nodal/lattice.hpp"
#include "nodal/polytope.hpp"

namespace nodal {

Collection::Collection(int ambient, std::vector<std::vector<IntVector>> s)
    : m(ambient), sets(std::move(s)) {
  if (m < 0) throw input_error("collection: negative ambient dimension");
  for (const auto& set : sets) {
    if (set.empty()) throw input_error("collection: empty member set");
    for (const auto& p : set)
      if (static_cast<int>(p.size()) != m)
        throw input_error("collection: point dimension mismatch");
  }
}

namespace {

// Within-set differences of the chosen members; they span the direction
// space of the Minkowski sum of those members.
std::vector<IntVector> difference_generators(const Collection& c, const std::vector<int>& which) {
  std::vector<IntVector> gens;
  for (int i : which) {
    const auto& set = c.sets[i];
    for (size_t j = 1; j < set.size(); ++j) {
      IntVector d = vec_sub(set[j], set[0]);
      if (!is_zero(d)) gens.push_back(std::move(d));
    }
  }
  return gens;
}

Int codim_of(const Collection& c, const std::vector<int>& which) {
  std::vector<IntVector> gens = difference_generators(c, which);
  int dim = gens.empty() ? 0 : matrix_rank(IntMatrix::from_rows(gens));
  return Int(static_cast<int>(which.size())) - dim;
}

std::vector<int> mask_to_indices(unsigned mask, int count) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

}  // namespace

Int collection_codim(const Collection& c) {
  std::vector<int> all(c.size());
  for (int i = 0; i < c.size(); ++i) all[i] = i;
  return codim_of(c, all);
}

std::vector<int> essential_subcollection(const Collection& c) {
  const int count = c.size();
  if (count > 24) throw input_error("essential_subcollection: collection too large");
  const unsigned total = 1u << count;
  std::vector<Int> codim(total);
  for (unsigned mask = 0; mask < total; ++mask)
    codim[mask] = codim_of(c, mask_to_indices(mask, count));

  Int best = codim[0];  // empty subcollection, codimension 0
  for (unsigned mask = 1; mask < total; ++mask) best = std::max(best, codim[mask]);

  std::vector<int> found;
  bool have = false;
  for (unsigned mask = 0; mask < total; ++mask) {
    if (codim[mask] != best) continue;
    // essential: every proper subcollection has strictly smaller codimension
    bool essential = true;
    for (unsigned sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
      if (codim[sub] >= codim[mask]) {
        essential = false;
        break;
      }
      if (sub == 0) break;
    }
    if (mask == 0) essential = true;
    if (essential) {
      if (have) throw internal_error("essential subcollection is not unique");
      found = mask_to_indices(mask, count);
      have = true;
    }
  }
  if (!have) throw internal_error("no essential subcollection found");
  return found;
}

QuotientResult quotient_collection(const Collection& c, const std::vector<int>& selected) {
  for (int i : selected)
    if (i < 0 || i >= c.size()) throw input_error("quotient_collection: index out of range");

  std::vector<IntVector> gens = difference_generators(c, selected);
  QuotientResult out;

  IntMatrix u;
  int rank = 0;
  if (gens.empty()) {
    u = IntMatrix::identity(c.m);
    out.sublattice_index = 1;
  } else {
    // Columns of the generator matrix span L; after the unimodular row map U,
    // L becomes diag(d_1..d_r) Z^r x 0, so L' = Z^r x 0 and |L'/L| = prod d_i.
    SmithResult s = smith_normal_form(IntMatrix::from_rows(gens).transposed());
    u = s.u;
    std::vector<Int> div = s.divisors();
    rank = static_cast<int>(div.size());
    out.sublattice_index = 1;
    for (const Int& e : div) out.sublattice_index *= e;
  }
  out.quotient_rank = c.m - rank;

  std::vector<bool> is_selected(c.size(), false);
  for (int i : selected) is_selected[i] = true;
  for (int i = 0; i < c.size(); ++i) {
    if (is_selected[i]) continue;
    std::vector<IntVector> image;
    for (const auto& p : c.sets[i]) {
      IntVector y = mat_vec(u, p);
      image.emplace_back(y.begin() + rank, y.end());
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    out.sets.push_back(std::move(image));
  }
  return out;
}

MultiplicityResult multiplicity(const Collection& c) {
  std::vector<int> ess = essential_subcollection(c);
  Int whole = collection_codim(c);
  Int best = codim_of(c, ess);
  if (whole != best)
    throw input_error("multiplicity: collection is not weakly essential");

  MultiplicityResult out;
  out.essential_indices = ess;
  out.codim = whole;

  QuotientResult q = quotient_collection(c, ess);
  out.sublattice_index = q.sublattice_index;
  out.quotient_sets = q.sets;

  const int remaining = static_cast<int>(q.sets.size());
  Int mv = 1;
  if (remaining > 0) {
    // The images span a sublattice of rank = #remaining inside the quotient;
    // flatten onto its saturation so the mixed volume is taken in the right
    // lattice normalization.
    std::vector<IntVector> dirs;
    for (const auto& set : q.sets)
      for (size_t j = 1; j < set.size(); ++j) {
        IntVector d = vec_sub(set[j], set[0]);
        if (!is_zero(d)) dirs.push_back(std::move(d));
      }
    int span = dirs.empty() ? 0 : matrix_rank(IntMatrix::from_rows(dirs));
    if (span != remaining)
      throw internal_error("multiplicity: quotient images have wrong rank");
    SmithResult s = smith_normal_form(IntMatrix::from_rows(dirs).transposed());
    std::vector<std::vector<IntVector>> flat;
    for (const auto& set : q.sets) {
      std::vector<IntVector> body;
      for (const auto& p : set) {
        IntVector y = mat_vec(s.u, vec_sub(p, set[0]));
        for (int j = span; j < q.quotient_rank; ++j)
          if (y[j] != 0) throw internal_error("multiplicity: image off its span");
        body.emplace_back(y.begin(), y.begin() + span);
      }
      flat.push_back(std::move(body));
    }
    mv = normalized_mixed_volume(PolytopeTuple(remaining, flat));
  }
  out.d = out.sublattice_index * mv;
  if (out.d < 1) throw internal_error("multiplicity: nonpositive result");
  return out;
}

}  // namespace nodal
