#include "nodal/singular.hpp"

#include <algorithm>
#include <set>

#include "nodal/errors.hpp"

namespace nodal {

bool IndexSequence::has_infinite() const {
  for (const auto& v : values)
    if (v.is_infinite()) return true;
  return false;
}

Int IndexSequence::excess() const {
  Int e = 0;
  for (const auto& v : values) e += v.value() - 1;
  return e;
}

std::vector<FacetClass> classify_facets(const LatticePolytope& hull, int n) {
  if (hull.dim != n + 2) throw internal_error("classify_facets: dimension mismatch");
  std::vector<FacetClass> out;
  for (int id = 0; id < static_cast<int>(hull.facets.size()); ++id) {
    const Facet& f = hull.facets[id];
    FacetClass fc;
    fc.facet_id = id;
    fc.projected_normal = {f.normal[n], f.normal[n + 1]};
    fc.horizontal = is_zero(fc.projected_normal);
    if (!fc.horizontal) {
      fc.multiplier = content(fc.projected_normal);
      fc.gamma = primitive_part(fc.projected_normal);
    }
    out.push_back(std::move(fc));
  }
  return out;
}

bool facet_projects_to_boundary(const LatticePolytope& hull, int facet_id, int n) {
  const Facet& f = hull.facets[facet_id];
  std::vector<IntVector> shadow;  // projection of the whole polytope
  for (const auto& v : hull.vertices) shadow.emplace_back(v.begin(), v.begin() + n);
  std::vector<IntVector> facet_shadow;
  for (int id : f.vertex_ids)
    facet_shadow.emplace_back(hull.vertices[id].begin(), hull.vertices[id].begin() + n);

  if (n == 1) {
    Int lo = shadow[0][0], hi = shadow[0][0];
    for (const auto& p : shadow) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    for (const auto& p : facet_shadow)
      if (p != facet_shadow[0]) return false;
    return facet_shadow[0][0] == lo || facet_shadow[0][0] == hi;
  }
  // A convex subset of the boundary lies inside a single facet of the shadow.
  LatticePolytope q = convex_hull(shadow);
  for (const Facet& qf : q.facets) {
    bool on = true;
    for (const auto& p : facet_shadow)
      if (dot(qf.normal, p) != qf.offset) {
        on = false;
        break;
      }
    if (on) return true;
  }
  return false;
}

namespace {

/**
 * Accumulates the level sets of the facet's supporting function inward,
 * one lattice level per step, recording the vertical index after each step.
 * Values are recorded from step `skip` on and stop at the first 1 (the
 * sequence stabilizes at the vertical index of the whole set otherwise).
 */
std::vector<ExtendedNat> level_indices(const SupportSet& a, const Facet& facet, const Int& skip) {
  std::set<IntVector> accumulated;
  for (const auto& p : a.points)
    if (dot(facet.normal, p) == facet.offset) accumulated.insert(p);
  if (accumulated.empty()) throw internal_error("index sequence: facet carries no points");

  Int lowest = facet.offset;
  for (const auto& p : a.points) lowest = std::min(lowest, dot(facet.normal, p));

  std::vector<ExtendedNat> out;
  Int step = 0;
  for (;;) {
    if (step >= skip) {
      std::vector<IntVector> pts(accumulated.begin(), accumulated.end());
      ExtendedNat idx = vertical_index(pts, a.n);
      out.push_back(idx);
      if (idx == 1) break;
    }
    ++step;
    Int level = facet.offset - step;
    if (level < lowest) break;  // stabilized without reaching 1
    for (const auto& p : a.points)
      if (dot(facet.normal, p) == level) accumulated.insert(p);
  }
  return out;
}

}  // namespace

IndexSequence facet_index_sequence(const SupportSet& a, const Facet& facet) {
  IndexSequence seq;
  seq.shift_r = 0;
  seq.values = level_indices(a, facet, 0);
  if (seq.has_infinite())
    throw input_error("index sequence: infinite vertical index on a non-horizontal facet");
  return seq;
}

IndexSequence horizontal_index_sequence(const SupportSet& a, const Facet& facet) {
  // R = number of empty levels directly below the facet plus one; equivalently
  // the first step at which the accumulated set grows.
  Int lowest = facet.offset;
  for (const auto& p : a.points) lowest = std::min(lowest, dot(facet.normal, p));
  Int r = 0;
  for (const auto& p : a.points) {
    Int level = dot(facet.normal, p);
    if (level < facet.offset) r = std::max(r, Int(level - lowest));
  }
  r = facet.offset - lowest - r;  // distance from the facet to the nearest level
  if (r < 1) throw internal_error("horizontal sequence: no points below the facet");

  IndexSequence seq;
  seq.shift_r = r;
  seq.values = level_indices(a, facet, r);
  return seq;
}

BoxTree nested_boxes(const std::vector<Int>& sizes) {
  if (sizes.empty()) throw input_error("nested_boxes: empty size sequence");
  for (size_t i = 0; i + 1 < sizes.size(); ++i) {
    if (sizes[i] < 1 || sizes[i + 1] < 1) throw input_error("nested_boxes: sizes must be >= 1");
    if (sizes[i] % sizes[i + 1] != 0)
      throw input_error("nested_boxes: sizes must form a divisor chain");
  }
  if (sizes.back() != 1) throw input_error("nested_boxes: size sequence must end in 1");
  BoxTree t;
  t.sizes = sizes;
  return t;
}

std::vector<Int> BoxTree::address(const Int& element) const {
  if (element < 0 || element >= element_count())
    throw input_error("box address: element out of range");
  std::vector<Int> addr;
  addr.reserve(sizes.size());
  addr.push_back(1);  // a single box at the top level
  for (size_t k = 1; k < sizes.size(); ++k) {
    Int within_parent = (element / sizes[k]) % (sizes[k - 1] / sizes[k]);
    addr.push_back(within_parent + 1);
  }
  return addr;
}

Int depth_kappa(const BoxTree& tree, const Int& a, const Int& b) {
  if (a == b) throw input_error("depth_kappa: elements must be distinct");
  std::vector<Int> aa = tree.address(a), bb = tree.address(b);
  for (size_t k = 0; k < aa.size(); ++k)
    if (aa[k] != bb[k]) return Int(k + 1);
  throw internal_error("depth_kappa: distinct elements share every box");
}

FpsInvariants forking_paths_invariants(const std::vector<Int>& sizes) {
  BoxTree tree = nested_boxes(sizes);  // validates the divisor chain
  FpsInvariants inv;
  const Int& branches = tree.sizes[0];
  Int excess_sum = 0;
  for (const Int& s : tree.sizes) excess_sum += s - 1;
  inv.nodes = exact_div(branches * excess_sum, 2);
  inv.chi = branches - 2 * inv.nodes;
  inv.delta = inv.nodes;
  return inv;
}

}  // namespace nodal
