#include "nodal/nodecount.hpp"

#include <algorithm>
#include <sstream>

#include "nodal/errors.hpp"

namespace nodal {

namespace {

bool contains_origin_point(const SupportSet& a) {
  for (const auto& p : a.points)
    if (is_zero(p)) return true;
  return false;
}

// Projections of the points of a to the base Z^n (forgetting fiber coordinates).
std::vector<IntVector> base_projections(const std::vector<IntVector>& pts, int n) {
  std::vector<IntVector> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.emplace_back(p.begin(), p.begin() + n);
  return out;
}

std::vector<IntVector> points_on_facet(const SupportSet& a, const Facet& f) {
  std::vector<IntVector> out;
  for (const auto& p : a.points)
    if (dot(f.normal, p) == f.offset) out.push_back(p);
  return out;
}

// The projected difference lattice of the points is saturated when all its
// Smith divisors are 1 (checked within its own rank).
bool projected_lattice_saturated(const std::vector<IntVector>& pts, int n) {
  std::vector<IntVector> proj = base_projections(pts, n);
  std::vector<IntVector> gens;
  for (size_t i = 1; i < proj.size(); ++i) {
    IntVector d = vec_sub(proj[i], proj[0]);
    if (!is_zero(d)) gens.push_back(std::move(d));
  }
  if (gens.empty()) return true;
  for (const Int& d : smith_normal_form(IntMatrix::from_rows(gens)).divisors())
    if (d != 1) return false;
  return true;
}

AssumptionReport check_with_hull(const SupportSet& a, const LatticePolytope& hull) {
  AssumptionReport rep;
  rep.contains_origin = contains_origin_point(a);
  rep.vertical_index_one = vertical_index(a.points, a.n) == 1;
  rep.developed = true;
  for (const FacetClass& fc : classify_facets(hull, a.n)) {
    const Facet& f = hull.facets[fc.facet_id];
    if (fc.horizontal) {
      rep.developed = false;
      if (!projected_lattice_saturated(points_on_facet(a, f), a.n)) {
        rep.horizontal_lattice_ok = false;
        rep.horizontal_lattice_offenders.push_back(fc.facet_id);
      }
      bool depth_one = false;
      for (const auto& p : a.points)
        if (dot(f.normal, p) == f.offset - 1) {
          depth_one = true;
          break;
        }
      if (!depth_one) {
        rep.horizontal_depth_ok = false;
        rep.horizontal_depth_offenders.push_back(fc.facet_id);
      }
    } else if (fc.multiplier != 1) {
      rep.primitive_ok = false;
      rep.primitive_offenders.push_back(fc.facet_id);
    }
  }
  return rep;
}

void require_vertical_index_one(const SupportSet& a) {
  ExtendedNat idx = vertical_index(a.points, a.n);
  if (idx == 1) return;
  throw assumption_error("vertical index is " + idx.to_string() +
                         "; normalize_vertical must be applied first");
}

enum class HorizontalTerm { closure, punctured, conjecture };

/**
 * Core of the three node-count formulas.  All share
 *   2D = Area(P) - (n+1) Vol(Delta) + (horizontal term) - (excess term);
 * they differ in whether horizontal facets contribute their volume or the
 * conjectural 2 i_1 - i_1^2 weight, and whether their shifted index
 * sequences enter the excess sum.
 */
Int delta_sum(const SupportSet& a, HorizontalTerm mode) {
  require_vertical_index_one(a);
  LatticePolytope hull = convex_hull(a.points);
  FiberPolygon p = fiber_polygon(hull, a.n);

  Int twice = p.norm_area - Int(a.n + 1) * normalized_volume(hull);
  for (const FacetClass& fc : classify_facets(hull, a.n)) {
    const Facet& f = hull.facets[fc.facet_id];
    if (fc.horizontal) {
      IndexSequence seq = horizontal_index_sequence(a, f);
      switch (mode) {
        case HorizontalTerm::closure:
          twice += f.norm_volume;
          break;
        case HorizontalTerm::punctured:
          twice += f.norm_volume - f.norm_volume * seq.excess();
          break;
        case HorizontalTerm::conjecture: {
          if (seq.values.empty() || seq.values[0].is_infinite())
            throw assumption_error("conjecture formula: infinite leading index below a horizontal facet");
          const Int& i1 = seq.values[0].value();
          twice += f.norm_volume * (2 * i1 - i1 * i1) - f.norm_volume * seq.excess();
          break;
        }
      }
    } else {
      IndexSequence seq = facet_index_sequence(a, f);
      twice -= f.norm_volume * seq.excess();
    }
  }
  if (twice < 0 || twice % 2 != 0)
    throw internal_error("node count formula produced a non-natural value");
  return twice / 2;
}

void require_assumption(bool ok, const std::string& what) {
  if (!ok) throw assumption_error(what);
}

}  // namespace

AssumptionReport check_assumptions(const SupportSet& a) {
  return check_with_hull(a, convex_hull(a.points));
}

SupportSet normalize_vertical(const SupportSet& a) {
  ExtendedNat idx = vertical_index(a.points, a.n);
  if (idx.is_infinite())
    throw input_error("normalize_vertical: vertically degenerate support (infinite index)");
  if (idx == 1) return a;

  // Smith form of the projected difference lattice: after the unimodular map
  // U the lattice is diag(d_1..d_n) Z^n, so dividing coordinate i by d_i is a
  // bijection of the support onto a set of vertical index 1.
  std::vector<IntVector> proj = base_projections(a.points, a.n);
  std::vector<IntVector> gens;
  for (size_t i = 1; i < proj.size(); ++i) {
    IntVector d = vec_sub(proj[i], proj[0]);
    if (!is_zero(d)) gens.push_back(std::move(d));
  }
  SmithResult s = smith_normal_form(IntMatrix::from_rows(gens).transposed());
  std::vector<Int> div = s.divisors();
  if (static_cast<int>(div.size()) != a.n)
    throw internal_error("normalize_vertical: rank drop after finite index");

  std::vector<IntVector> out;
  out.reserve(a.points.size());
  for (const auto& p : a.points) {
    IntVector base(p.begin(), p.begin() + a.n);
    IntVector shifted = vec_sub(base, proj[0]);
    IntVector mapped = mat_vec(s.u, shifted);
    IntVector q(a.dim());
    for (int j = 0; j < a.n; ++j) q[j] = exact_div(mapped[j], div[j]);
    q[a.n] = p[a.n];
    q[a.n + 1] = p[a.n + 1];
    out.push_back(std::move(q));
  }
  return SupportSet(std::move(out), a.n);
}

Int delta_sum_closure(const SupportSet& a) { return delta_sum(a, HorizontalTerm::closure); }

Int delta_sum_punctured(const SupportSet& a) {
  AssumptionReport rep = check_assumptions(a);
  require_assumption(rep.vertical_index_one, "punctured count: vertical index must be 1");
  require_assumption(rep.horizontal_lattice_ok,
                     "punctured count: a horizontal facet has a non-saturated lattice");
  require_assumption(rep.horizontal_depth_ok,
                     "punctured count: no point at lattice distance 1 below a horizontal facet");
  return delta_sum(a, HorizontalTerm::punctured);
}

Int delta_sum_conjecture(const SupportSet& a) {
  AssumptionReport rep = check_assumptions(a);
  require_assumption(rep.vertical_index_one, "conjectural count: vertical index must be 1");
  require_assumption(rep.horizontal_lattice_ok,
                     "conjectural count: a horizontal facet has a non-saturated lattice");
  return delta_sum(a, HorizontalTerm::conjecture);
}

AnalysisReport analyze(const SupportSet& input, const std::string& name) {
  AnalysisReport rep;
  rep.name = name;
  rep.n = input.n;
  rep.assumptions = check_assumptions(input);

  SupportSet a = input;
  if (!rep.assumptions.vertical_index_one) {
    a = normalize_vertical(input);
    rep.notes.push_back("vertical index " + vertical_index(input.points, input.n).to_string() +
                        " normalized away by a base coordinate change; all values below refer "
                        "to the normalized support");
  }
  if (!rep.assumptions.contains_origin)
    rep.notes.push_back("support does not contain the origin; counts are translation invariant");

  LatticePolytope hull = convex_hull(a.points);
  rep.volume = normalized_volume(hull);
  rep.polygon = fiber_polygon(hull, a.n);
  rep.fiber_area = rep.polygon.norm_area;

  for (const FacetClass& fc : classify_facets(hull, a.n)) {
    const Facet& f = hull.facets[fc.facet_id];
    FacetReport fr;
    fr.normal = f.normal;
    fr.offset = f.offset;
    fr.horizontal = fc.horizontal;
    fr.volume = f.norm_volume;
    fr.multiplier = fc.multiplier;
    fr.sequence = fc.horizontal ? horizontal_index_sequence(a, f) : facet_index_sequence(a, f);
    fr.excess = fr.sequence.has_infinite() ? Int(0) : fr.sequence.excess();
    if (fr.sequence.has_infinite())
      rep.notes.push_back("facet " + vec_to_string(f.normal) +
                          " has an infinite index in its sequence");
    fr.edge_contribution = fc.horizontal ? Int(0) : fc.multiplier * f.norm_volume;
    rep.facets.push_back(std::move(fr));
  }

  auto reason = [](const assumption_error& e, const std::string& prefix) {
    std::string what = e.what();
    if (what.rfind(prefix, 0) == 0) what.erase(0, prefix.size());
    return what;
  };
  rep.d_closure = delta_sum_closure(a);
  try {
    rep.d_punctured = delta_sum_punctured(a);
  } catch (const assumption_error& e) {
    rep.notes.push_back("punctured count blocked: " + reason(e, "punctured count: "));
  }
  try {
    rep.d_conjecture = delta_sum_conjecture(a);
    rep.notes.push_back("the conjecture value rests on an unproven formula (CONJECTURAL)");
  } catch (const assumption_error& e) {
    rep.notes.push_back("conjectural count blocked: " + reason(e, "conjectural count: "));
  }

  PolytopeTuple curve(a.dim(), std::vector<std::vector<IntVector>>(a.n + 1, a.points));
  rep.chi_curve = euler_characteristic(curve);
  return rep;
}

}  // namespace nodal
