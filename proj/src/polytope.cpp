#include "nodal/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "nodal/errors.hpp"
#include "nodal/lattice.hpp"

namespace nodal {

namespace {

std::vector<IntVector> dedupe_sorted(std::vector<IntVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

/**
 * Conservative hull-preserving thinning: repeatedly discards points that are
 * midpoints of two other retained points.  Minkowski sums of lattice bodies
 * are full of such points, and dropping them keeps the brute-force facet
 * search tractable.  Extreme points are never midpoints, so the hull of the
 * result equals the hull of the input.
 */
std::vector<IntVector> midpoint_thin(std::vector<IntVector> pts) {
  std::set<IntVector> alive(pts.begin(), pts.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = alive.begin(); it != alive.end();) {
      const IntVector p = *it;
      bool removable = false;
      for (const IntVector& q : alive) {
        if (q == p) continue;
        IntVector r(p.size());
        for (size_t j = 0; j < p.size(); ++j) r[j] = 2 * p[j] - q[j];
        if (r != p && alive.count(r)) {
          removable = true;
          break;
        }
      }
      if (removable) {
        it = alive.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return {alive.begin(), alive.end()};
}

// Integer normal of the hyperplane spanned by d-1 difference vectors in R^d,
// via cofactor expansion; zero vector when the span is deficient.
IntVector cross_normal(const std::vector<IntVector>& diffs, int d) {
  IntVector normal(d, 0);
  for (int j = 0; j < d; ++j) {
    IntMatrix minor(d - 1, d - 1);
    for (int i = 0; i < d - 1; ++i) {
      int mc = 0;
      for (int c = 0; c < d; ++c) {
        if (c == j) continue;
        minor.at(i, mc++) = diffs[i][c];
      }
    }
    Int det = determinant(minor);
    normal[j] = (j % 2 == 0) ? det : -det;
  }
  return normal;
}

Int facet_volume_from_points(const std::vector<IntVector>& facet_points, const IntVector& normal);

LatticePolytope hull_1d(const std::vector<IntVector>& pts) {
  LatticePolytope p;
  p.dim = 1;
  Int lo = pts[0][0], hi = pts[0][0];
  for (const auto& q : pts) {
    lo = std::min(lo, q[0]);
    hi = std::max(hi, q[0]);
  }
  if (lo == hi) throw input_error("degenerate support set");
  p.vertices = {IntVector{lo}, IntVector{hi}};
  Facet left;
  left.normal = IntVector{Int(-1)};
  left.offset = -lo;
  left.vertex_ids = {0};
  left.norm_volume = 1;
  Facet right;
  right.normal = IntVector{Int(1)};
  right.offset = hi;
  right.vertex_ids = {1};
  right.norm_volume = 1;
  p.facets = {left, right};
  return p;
}

}  // namespace

int affine_dim(const std::vector<IntVector>& pts) {
  if (pts.empty()) return -1;
  std::vector<IntVector> diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec_sub(pts[i], pts[0]));
  if (diffs.empty()) return 0;
  return matrix_rank(IntMatrix::from_rows(diffs));
}

LatticePolytope convex_hull(const std::vector<IntVector>& points) {
  if (points.empty()) throw input_error("convex hull of an empty set");
  const int d = static_cast<int>(points[0].size());
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != d) throw input_error("convex hull: mixed dimensions");
  std::vector<IntVector> pts = dedupe_sorted(points);
  if (affine_dim(pts) != d) throw input_error("degenerate support set");
  if (d == 1) return hull_1d(pts);

  const std::vector<IntVector> cand = midpoint_thin(pts);
  const int m = static_cast<int>(cand.size());

  // Every supporting hyperplane spanned by d affinely independent points.
  std::set<std::pair<IntVector, Int>> planes;
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    std::vector<IntVector> diffs;
    for (int i = 1; i < d; ++i) diffs.push_back(vec_sub(cand[idx[i]], cand[idx[0]]));
    IntVector normal = cross_normal(diffs, d);
    if (!is_zero(normal)) {
      normal = primitive_part(normal);
      Int c = dot(normal, cand[idx[0]]);
      bool above = false, below = false;
      for (const auto& q : cand) {
        Int s = dot(normal, q);
        if (s > c) above = true;
        if (s < c) below = true;
        if (above && below) break;
      }
      if (!above)
        planes.emplace(normal, c);
      else if (!below)
        planes.emplace(vec_neg(normal), -c);
    }
    // next d-combination of {0..m-1}
    int k = d - 1;
    while (k >= 0 && idx[k] == m - d + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int i = k + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
  }
  if (planes.empty()) throw internal_error("convex hull: no supporting hyperplanes found");

  // A point of the polytope is extreme iff its active constraints span R^d.
  std::vector<IntVector> vertices;
  for (const auto& p : cand) {
    std::vector<IntVector> active;
    for (const auto& [normal, off] : planes)
      if (dot(normal, p) == off) active.push_back(normal);
    if (!active.empty() && matrix_rank(IntMatrix::from_rows(active)) == d)
      vertices.push_back(p);
  }
  std::sort(vertices.begin(), vertices.end());

  LatticePolytope hull;
  hull.dim = d;
  hull.vertices = vertices;
  for (const auto& [normal, off] : planes) {
    Facet f;
    f.normal = normal;
    f.offset = off;
    std::vector<IntVector> on_facet;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
      if (dot(normal, vertices[i]) == off) {
        f.vertex_ids.push_back(i);
        on_facet.push_back(vertices[i]);
      }
    if (affine_dim(on_facet) != d - 1)
      throw internal_error("convex hull: facet does not span its hyperplane");
    f.norm_volume = facet_volume_from_points(on_facet, normal);
    hull.facets.push_back(std::move(f));
  }
  std::sort(hull.facets.begin(), hull.facets.end(), [](const Facet& a, const Facet& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
  });
  return hull;
}

namespace {

/**
 * Lattice volume of a polytope spanning the hyperplane normal.x = const,
 * measured in the lattice of that hyperplane.  A unimodular change of
 * coordinates moving the hyperplane onto a coordinate one comes from the
 * Smith form of the normal.
 */
Int facet_volume_from_points(const std::vector<IntVector>& facet_points, const IntVector& normal) {
  const int d = static_cast<int>(normal.size());
  if (d == 1) return 1;  // 0-dimensional facet of a segment
  SmithResult s = smith_normal_form(IntMatrix::from_rows({normal}));
  IntMatrix w = inverse_unimodular(s.v);
  const IntVector& base = facet_points[0];
  std::vector<IntVector> flat;
  for (const auto& p : facet_points) {
    IntVector y = mat_vec(w, vec_sub(p, base));
    if (y[0] != 0) throw internal_error("facet flattening: point off the hyperplane");
    flat.emplace_back(y.begin() + 1, y.end());
  }
  return normalized_volume(convex_hull(flat));
}

}  // namespace

Int normalized_volume(const LatticePolytope& p) {
  if (p.dim == 1) return p.vertices[1][0] - p.vertices[0][0];
  // Pyramid decomposition over the facets not containing a fixed vertex:
  // lattice height times facet lattice volume, summed.
  const IntVector& apex = p.vertices[0];
  Int total = 0;
  for (const Facet& f : p.facets) {
    Int h = f.offset - dot(f.normal, apex);
    if (h < 0) throw internal_error("normalized_volume: apex outside a facet");
    total += h * f.norm_volume;
  }
  return total;
}

Int facet_normalized_volume(const LatticePolytope& p, const Facet& f) {
  std::vector<IntVector> on_facet;
  for (int id : f.vertex_ids) on_facet.push_back(p.vertices[id]);
  return facet_volume_from_points(on_facet, f.normal);
}

std::vector<IntVector> scale_points(const std::vector<IntVector>& pts, const Int& k) {
  if (k < 0) throw input_error("scale_points: negative factor");
  std::vector<IntVector> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    IntVector q(p.size());
    for (size_t j = 0; j < p.size(); ++j) q[j] = k * p[j];
    out.push_back(std::move(q));
  }
  return dedupe_sorted(std::move(out));
}

std::vector<IntVector> sum_point_sets(const std::vector<IntVector>& a,
                                      const std::vector<IntVector>& b) {
  std::vector<IntVector> out;
  out.reserve(a.size() * b.size());
  for (const auto& p : a)
    for (const auto& q : b) out.push_back(vec_add(p, q));
  return dedupe_sorted(std::move(out));
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim != q.dim) throw input_error("minkowski_sum: dimension mismatch");
  return convex_hull(sum_point_sets(p.vertices, q.vertices));
}

Int point_set_volume(const std::vector<IntVector>& pts, int dim) {
  if (pts.empty()) throw input_error("point_set_volume: empty set");
  if (static_cast<int>(pts[0].size()) != dim)
    throw internal_error("point_set_volume: dimension mismatch");
  if (affine_dim(pts) < dim) return 0;
  return normalized_volume(convex_hull(pts));
}

PolytopeTuple::PolytopeTuple(int d, std::vector<std::vector<IntVector>> b)
    : dim(d), bodies(std::move(b)) {
  if (dim < 1) throw input_error("polytope tuple: dimension must be >= 1");
  if (bodies.empty()) throw input_error("polytope tuple: no bodies");
  for (const auto& body : bodies) {
    if (body.empty()) throw input_error("polytope tuple: empty body");
    for (const auto& p : body)
      if (static_cast<int>(p.size()) != dim)
        throw input_error("polytope tuple: point dimension mismatch");
  }
}

namespace {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
  return r;
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/**
 * d! times the Euclidean mixed volume of the multiset that repeats
 * distinct body j counts[j] times (total = d), by inclusion-exclusion:
 * the selections of a sub-multiset b contribute prod_j C(counts[j], b[j])
 * identical summands vol(sum_j b[j] * B_j).
 */
Int mixed_volume_of_counts(const std::vector<std::vector<IntVector>>& distinct, int dim,
                           const std::vector<int>& counts,
                           std::map<std::vector<int>, Int>& vol_memo) {
  const int k = static_cast<int>(distinct.size());
  std::vector<int> b(k, 0);
  Int total = 0;
  for (;;) {
    // advance b through the box prod [0, counts[j]]
    int i = 0;
    while (i < k && b[i] == counts[i]) b[i++] = 0;
    if (i == k) break;
    ++b[i];
    int picked = 0;
    for (int v : b) picked += v;
    Int vol;
    auto it = vol_memo.find(b);
    if (it != vol_memo.end()) {
      vol = it->second;
    } else {
      std::vector<IntVector> sum{IntVector(dim, 0)};
      for (int j = 0; j < k; ++j) {
        if (b[j] == 0) continue;
        sum = midpoint_thin(sum_point_sets(sum, scale_points(distinct[j], b[j])));
      }
      vol = point_set_volume(sum, dim);
      vol_memo.emplace(b, vol);
    }
    Int ways = 1;
    for (int j = 0; j < k; ++j) ways *= binomial(counts[j], b[j]);
    total += ((dim - picked) % 2 == 0 ? ways : -ways) * vol;
  }
  Int mv = exact_div(total, factorial(dim));
  if (mv < 0) throw internal_error("mixed volume came out negative");
  return mv;
}

// Groups equal bodies (as canonical point sets) and returns per-position ids.
void group_bodies(const std::vector<std::vector<IntVector>>& bodies,
                  std::vector<std::vector<IntVector>>& distinct, std::vector<int>& position_group) {
  std::map<std::vector<IntVector>, int> seen;
  for (const auto& body : bodies) {
    std::vector<IntVector> canon = dedupe_sorted(body);
    auto [it, fresh] = seen.emplace(canon, static_cast<int>(distinct.size()));
    if (fresh) distinct.push_back(canon);
    position_group.push_back(it->second);
  }
}

}  // namespace

Int normalized_mixed_volume(const PolytopeTuple& t) {
  if (static_cast<int>(t.bodies.size()) != t.dim)
    throw input_error("normalized_mixed_volume: need exactly dim bodies");
  std::vector<std::vector<IntVector>> distinct;
  std::vector<int> pos;
  group_bodies(t.bodies, distinct, pos);
  std::vector<int> counts(distinct.size(), 0);
  for (int g : pos) ++counts[g];
  std::map<std::vector<int>, Int> memo;
  return mixed_volume_of_counts(distinct, t.dim, counts, memo);
}

Int euler_characteristic(const PolytopeTuple& t) {
  const int k = static_cast<int>(t.bodies.size());
  const int m = t.dim;
  if (k > m) throw input_error("euler_characteristic: overdetermined tuple");
  std::vector<std::vector<IntVector>> distinct;
  std::vector<int> pos;
  group_bodies(t.bodies, distinct, pos);
  std::map<std::vector<int>, Int> memo;

  // chi = (-1)^(m-k) * sum over compositions m = a_1 + ... + a_k (a_i >= 1)
  // of the mixed volume repeating body i a_i times: the degree-m part of the
  // series prod_i B_i (1 + B_i)^(-1) has all coefficients of one sign.
  Int sum = 0;
  std::vector<int> a(k, 1);
  std::vector<int> counts(distinct.size());
  for (;;) {
    int total = 0;
    for (int v : a) total += v;
    if (total == m) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int i = 0; i < k; ++i) counts[pos[i]] += a[i];
      sum += mixed_volume_of_counts(distinct, m, counts, memo);
    }
    // advance composition candidate through [1, m-k+1]^k
    int i = 0;
    while (i < k && a[i] == m - k + 1) a[i++] = 1;
    if (i == k) break;
    ++a[i];
  }
  return (m - k) % 2 == 0 ? sum : -sum;
}

}  // namespace nodal
