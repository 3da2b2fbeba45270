#pragma once

// Independent re-computations used to cross-check the library: a dilation
// counting path for volumes, subgroup enumeration for lattice indices, and a
// block-arithmetic path for forking depths.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "nodal/numeric.hpp"
#include "nodal/polytope.hpp"

namespace oracles {

using nodal::Int;
using nodal::IntVector;

/**
 * Normalized volume via lattice point counts of dilates: the d-th finite
 * difference of k -> #(kP cap Z^d) is d! times the leading Ehrhart
 * coefficient, i.e. the normalized volume.  Shares only the facet
 * inequalities with the library; the volume arithmetic is disjoint.
 */
inline Int ehrhart_volume(const std::vector<IntVector>& points) {
  int d = static_cast<int>(points[0].size());
  std::vector<IntVector> pts = points;
  IntVector base = *std::min_element(pts.begin(), pts.end());
  for (auto& p : pts)
    for (int i = 0; i < d; ++i) p[i] -= base[i];
  nodal::LatticePolytope hull = nodal::convex_hull(pts);

  auto count_dilate = [&](long long k) {
    std::vector<long long> lo(d, 0), hi(d, 0);
    for (const auto& v : hull.vertices)
      for (int i = 0; i < d; ++i) {
        long long c = v[i].convert_to<long long>() * k;
        lo[i] = std::min(lo[i], c);
        hi[i] = std::max(hi[i], c);
      }
    Int count = 0;
    std::vector<long long> q(d, 0);
    for (int i = 0; i < d; ++i) q[i] = lo[i];
    while (true) {
      bool inside = true;
      for (const auto& f : hull.facets) {
        Int lhs = 0;
        for (int i = 0; i < d; ++i) lhs += f.normal[i] * q[i];
        if (lhs > f.offset * k) {
          inside = false;
          break;
        }
      }
      if (inside) ++count;
      int axis = 0;
      while (axis < d && q[axis] == hi[axis]) q[axis] = lo[axis], ++axis;
      if (axis == d) break;
      ++q[axis];
    }
    return count;
  };

  Int vol = 0;
  Int binom = 1;
  for (long long j = 0; j <= d; ++j) {
    Int term = binom * count_dilate(j);
    vol += ((d - j) % 2 == 0) ? term : -term;
    binom = binom * (d - j) / (j + 1);
  }
  return vol;
}

/**
 * Index of the sublattice spanned by `gens` in Z^rank by explicit coset
 * counting: pick a nonzero maximal minor d0 (so d0*Z^rank lies inside the
 * sublattice), enumerate the subgroup generated modulo d0, and divide.
 * Returns nothing when no maximal minor is invertible (infinite index).
 */
inline std::optional<long long> coset_index(const std::vector<IntVector>& gens, int rank) {
  if (rank == 0) return 1;
  std::vector<std::vector<long long>> g;
  for (const auto& v : gens) {
    std::vector<long long> row;
    for (const auto& x : v) row.push_back(x.convert_to<long long>());
    g.push_back(row);
  }

  auto det_of = [&](const std::vector<int>& idx) {
    std::vector<std::vector<long long>> m;
    for (int i : idx) m.push_back(g[i]);
    if (rank == 1) return m[0][0];
    if (rank == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };

  long long d0 = 0;
  int count = static_cast<int>(g.size());
  std::vector<int> idx(rank);
  std::function<void(int, int)> pick = [&](int from, int depth) {
    if (d0 != 0) return;
    if (depth == rank) {
      long long det = det_of(idx);
      if (det != 0) d0 = det < 0 ? -det : det;
      return;
    }
    for (int i = from; i < count; ++i) {
      idx[depth] = i;
      pick(i + 1, depth + 1);
    }
  };
  pick(0, 0);
  if (d0 == 0) return std::nullopt;

  long long box = 1;
  for (int i = 0; i < rank; ++i) box *= d0;
  std::vector<char> seen(box, 0);
  auto encode = [&](const std::vector<long long>& p) {
    long long code = 0;
    for (int i = 0; i < rank; ++i) code = code * d0 + p[i];
    return code;
  };
  std::vector<std::vector<long long>> queue = {std::vector<long long>(rank, 0)};
  seen[0] = 1;
  long long members = 0;
  while (!queue.empty()) {
    auto p = queue.back();
    queue.pop_back();
    ++members;
    for (const auto& gen : g) {
      std::vector<long long> q(rank);
      for (int i = 0; i < rank; ++i) q[i] = ((p[i] + gen[i]) % d0 + d0) % d0;
      long long code = encode(q);
      if (!seen[code]) {
        seen[code] = 1;
        queue.push_back(q);
      }
    }
  }
  return box / members;
}

/// Forking depth straight from block arithmetic: the first level whose
/// equal-size blocks separate the two elements.
inline long long kappa_by_blocks(const std::vector<long long>& sizes, long long a, long long b) {
  for (size_t k = 1; k < sizes.size(); ++k)
    if (a / sizes[k] != b / sizes[k]) return static_cast<long long>(k) + 1;
  return static_cast<long long>(sizes.size());  // unreachable for a != b (last size is 1)
}

/// Random divisor chain i_1 | i_2 | ... | 1 with i_1 bounded.
inline std::vector<Int> random_chain(std::mt19937& rng, long long max_first) {
  std::uniform_int_distribution<int> factor(1, 4);
  std::vector<long long> rev = {1};
  while (true) {
    long long next = rev.back() * factor(rng);
    if (next > max_first || rev.size() > 6) break;
    rev.push_back(next);
  }
  std::vector<Int> chain(rev.rbegin(), rev.rend());
  return chain;
}

/// Random point set in [0, span]^dim.
inline std::vector<IntVector> random_points(std::mt19937& rng, int dim, int count, int span) {
  std::uniform_int_distribution<int> coord(0, span);
  std::vector<IntVector> pts;
  for (int i = 0; i < count; ++i) {
    IntVector p(dim);
    for (int j = 0; j < dim; ++j) p[j] = coord(rng);
    pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace oracles
