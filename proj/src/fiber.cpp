#include "nodal/fiber.hpp"

#include <algorithm>
#include <map>

#include "nodal/errors.hpp"

namespace nodal {

namespace {

// Counterclockwise order of plane vectors starting just above direction (1,0):
// upper half-plane (including positive x-axis) first, then lower.
int angle_half(const IntVector& v) {
  if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
  return 1;
}

Int cross(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

bool angle_less(const IntVector& a, const IntVector& b) {
  int ha = angle_half(a), hb = angle_half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

IntVector rotate90(const IntVector& g) { return IntVector{-g[1], g[0]}; }

}  // namespace

std::vector<FacetContribution> fiber_contributions(const LatticePolytope& hull, int n) {
  std::vector<FacetContribution> out;
  for (const FacetClass& fc : classify_facets(hull, n)) {
    if (fc.horizontal) continue;
    FacetContribution c;
    c.facet_id = fc.facet_id;
    c.gamma = fc.gamma;
    c.multiplier = fc.multiplier;
    c.contribution = fc.multiplier * hull.facets[fc.facet_id].norm_volume;
    out.push_back(std::move(c));
  }
  return out;
}

FiberPolygon fiber_polygon(const LatticePolytope& hull, int n) {
  std::vector<FacetContribution> contributions = fiber_contributions(hull, n);
  if (contributions.empty()) throw input_error("fiber polygon: projection degenerate");

  std::map<IntVector, Int> length;  // per primitive outer normal
  for (const auto& c : contributions) length[c.gamma] += c.contribution;

  std::vector<std::pair<IntVector, Int>> edges(length.begin(), length.end());
  // Order edges by the angle of their direction vectors (rotate90 of the
  // normals), which traces the boundary counterclockwise.
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return angle_less(rotate90(a.first), rotate90(b.first));
  });

  std::vector<IntVector> chain{IntVector{Int(0), Int(0)}};
  for (const auto& [gamma, len] : edges) {
    IntVector step = rotate90(gamma);
    chain.push_back(
        IntVector{chain.back()[0] + len * step[0], chain.back()[1] + len * step[1]});
  }
  if (chain.back() != chain.front())
    throw internal_error("fiber polygon: edge vectors do not close up");
  chain.pop_back();

  // Anchor the lexicographically smallest vertex at the origin and start
  // the chain there.
  size_t anchor = 0;
  for (size_t i = 1; i < chain.size(); ++i)
    if (chain[i] < chain[anchor]) anchor = i;
  IntVector base = chain[anchor];

  FiberPolygon p;
  for (size_t i = 0; i < chain.size(); ++i) {
    const IntVector& v = chain[(anchor + i) % chain.size()];
    p.vertices.push_back(IntVector{v[0] - base[0], v[1] - base[1]});
    p.edges.push_back(edges[(anchor + i) % edges.size()]);
  }

  for (size_t i = 0; i < p.vertices.size(); ++i) {
    const IntVector& v = p.vertices[i];
    const IntVector& w = p.vertices[(i + 1) % p.vertices.size()];
    p.norm_area += cross(v, w);
  }
  if (p.norm_area <= 0) throw internal_error("fiber polygon: nonpositive area");
  return p;
}

FiberPolygon fiber_polygon(const SupportSet& a) {
  return fiber_polygon(convex_hull(a.points), a.n);
}

std::pair<Int, Int> mixed_volume_identity(const SupportSet& a, const FiberPolygon& p,
                                          const IntVector& u) {
  if (u.size() != 2 || is_zero(u)) throw input_error("mixed_volume_identity: bad direction");

  std::vector<IntVector> segment{IntVector{Int(0), Int(0)}, u};
  PolytopeTuple plane(2, {p.vertices, segment});
  Int lhs = normalized_mixed_volume(plane);

  IntVector lifted(a.dim(), 0);
  lifted[a.n] = u[0];
  lifted[a.n + 1] = u[1];
  std::vector<std::vector<IntVector>> bodies(a.n + 1, a.points);
  bodies.push_back({IntVector(a.dim(), 0), lifted});
  Int rhs = normalized_mixed_volume(PolytopeTuple(a.dim(), bodies));

  return {lhs, rhs};
}

}  // namespace nodal
