#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "nodal/errors.hpp"
#include "nodal/lattice.hpp"
#include "nodal/polytope.hpp"
#include "oracles.hpp"

using namespace nodal;

namespace {

std::vector<IntVector> unit_cube3() {
  std::vector<IntVector> pts;
  for (long long x = 0; x <= 1; ++x)
    for (long long y = 0; y <= 1; ++y)
      for (long long t = 0; t <= 1; ++t) pts.push_back(make_vec({x, y, t}));
  return pts;
}

bool has_facet_normal(const LatticePolytope& p, const IntVector& normal) {
  return std::any_of(p.facets.begin(), p.facets.end(),
                     [&](const Facet& f) { return f.normal == normal; });
}

}  // namespace

TEST_CASE("hull of the dilated simplex point set") {
  LatticePolytope p = convex_hull(corpus::simplex_points(2).points);
  CHECK(p.vertices.size() == 4);
  CHECK(p.facets.size() == 4);
  CHECK(has_facet_normal(p, make_vec({-1, 0, 0})));
  CHECK(has_facet_normal(p, make_vec({0, -1, 0})));
  CHECK(has_facet_normal(p, make_vec({0, 0, -1})));
  CHECK(has_facet_normal(p, make_vec({1, 1, 1})));
}

TEST_CASE("hull discards interior points") {
  std::vector<IntVector> pts = {make_vec({0, 0}), make_vec({2, 0}), make_vec({0, 2}),
                                make_vec({2, 2}), make_vec({1, 1})};
  LatticePolytope p = convex_hull(pts);
  CHECK(p.vertices.size() == 4);
  CHECK(p.facets.size() == 4);
}

TEST_CASE("hull of the quadrilateral-section tetrahedron") {
  LatticePolytope p = convex_hull(corpus::quad_section().points);
  CHECK(p.vertices.size() == 4);
  REQUIRE(p.facets.size() == 4);
  CHECK(has_facet_normal(p, make_vec({0, 0, -1})));
  CHECK(has_facet_normal(p, make_vec({0, -1, 0})));
  CHECK(has_facet_normal(p, make_vec({-1, 1, 0})));
  CHECK(has_facet_normal(p, make_vec({1, 1, 2})));
  // (1,0,0) lies on the hull boundary but is not extreme.
  for (const auto& v : p.vertices) CHECK(v != make_vec({1, 0, 0}));
}

TEST_CASE("hull rejects degenerate input") {
  std::vector<IntVector> collinear = {make_vec({0, 0, 0}), make_vec({1, 1, 0}),
                                      make_vec({2, 2, 0})};
  CHECK_THROWS_WITH_AS(convex_hull(collinear), "degenerate support set", input_error);
}

TEST_CASE("hull facets support all points") {
  std::mt19937 rng(23);
  for (int iter = 0; iter < 20; ++iter) {
    int dim = 2 + iter % 3;
    auto pts = oracles::random_points(rng, dim, dim + 3 + iter % 4, 4);
    if (affine_dim(pts) < dim) continue;
    LatticePolytope p = convex_hull(pts);
    for (const auto& f : p.facets) {
      CHECK(content(f.normal) == 1);
      for (const auto& q : pts) CHECK(dot(f.normal, q) <= f.offset);
    }
  }
}

TEST_CASE("normalized volumes of reference bodies") {
  CHECK(normalized_volume(convex_hull(unit_cube3())) == 6);
  CHECK(normalized_volume(convex_hull(corpus::simplex_points(2).points)) == 8);
  CHECK(normalized_volume(convex_hull(corpus::quad_section().points)) == 2);
}

TEST_CASE("volume agrees with the dilation-counting oracle") {
  std::mt19937 rng(29);
  for (const auto& item : corpus::full_corpus()) {
    CHECK(normalized_volume(convex_hull(item.a.points)) == oracles::ehrhart_volume(item.a.points));
  }
  for (int iter = 0; iter < 12; ++iter) {
    int dim = 2 + iter % 2;
    auto pts = oracles::random_points(rng, dim, dim + 3, 4);
    if (affine_dim(pts) < dim) continue;
    CHECK(normalized_volume(convex_hull(pts)) == oracles::ehrhart_volume(pts));
  }
}

TEST_CASE("volume is invariant under unimodular maps") {
  std::mt19937 rng(31);
  auto base = corpus::quad_section().points;
  for (int iter = 0; iter < 10; ++iter) {
    IntMatrix m = corpus::random_unimodular(3, rng);
    std::vector<IntVector> image;
    for (const auto& p : base) image.push_back(mat_vec(m, p));
    CHECK(normalized_volume(convex_hull(image)) == 2);
  }
}

TEST_CASE("facet volumes of reference bodies") {
  LatticePolytope simplex2 = convex_hull(corpus::simplex_points(2).points);
  for (const auto& f : simplex2.facets) CHECK(f.norm_volume == 4);

  LatticePolytope stacked = convex_hull(corpus::stacked_a().points);
  for (const auto& f : stacked.facets) {
    if (f.normal == make_vec({1, 3, 3})) CHECK(f.norm_volume == 1);
    if (f.normal == make_vec({-1, 0, 0})) CHECK(f.norm_volume == 1);
    if (f.normal == make_vec({0, -1, 0})) CHECK(f.norm_volume == 3);
  }

  LatticePolytope cube = convex_hull(unit_cube3());
  for (const auto& f : cube.facets) CHECK(f.norm_volume == 2);
}

TEST_CASE("minkowski sum of square and triangle is a pentagon") {
  LatticePolytope square = convex_hull(
      {make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1}), make_vec({1, 1})});
  LatticePolytope triangle =
      convex_hull({make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1})});
  LatticePolytope sum = minkowski_sum(square, triangle);
  std::vector<IntVector> expected = {make_vec({0, 0}), make_vec({0, 2}), make_vec({1, 2}),
                                     make_vec({2, 0}), make_vec({2, 1})};
  CHECK(sum.vertices == expected);
  CHECK(normalized_volume(sum) == 7);
}

TEST_CASE("minkowski sum with a point translates") {
  LatticePolytope tri = convex_hull({make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1})});
  LatticePolytope shifted = convex_hull({make_vec({3, 4}), make_vec({4, 4}), make_vec({3, 5})});
  // P + P equals the dilation by 2.
  LatticePolytope doubled = minkowski_sum(tri, tri);
  CHECK(normalized_volume(doubled) == 4 * normalized_volume(tri));
  CHECK(normalized_volume(shifted) == normalized_volume(tri));
}

TEST_CASE("mixed volume reference values") {
  std::vector<IntVector> seg_x = {make_vec({0, 0}), make_vec({1, 0})};
  std::vector<IntVector> seg_y = {make_vec({0, 0}), make_vec({0, 1})};
  CHECK(normalized_mixed_volume(PolytopeTuple(2, {seg_x, seg_y})) == 1);

  std::vector<IntVector> square = {make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1}),
                                   make_vec({1, 1})};
  std::vector<IntVector> triangle = {make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1})};
  CHECK(normalized_mixed_volume(PolytopeTuple(2, {square, triangle})) == 2);

  // Diagonal reproduces the volume.
  auto tetra = corpus::quad_section().points;
  CHECK(normalized_mixed_volume(PolytopeTuple(3, {tetra, tetra, tetra})) == 2);

  CHECK_THROWS_AS(normalized_mixed_volume(PolytopeTuple(2, {square})), input_error);
}

TEST_CASE("mixed volume symmetry and multilinearity on random polygons") {
  std::mt19937 rng(37);
  for (int iter = 0; iter < 25; ++iter) {
    auto p = oracles::random_points(rng, 2, 3 + iter % 3, 4);
    auto q = oracles::random_points(rng, 2, 3 + (iter / 3) % 3, 4);
    auto r = oracles::random_points(rng, 2, 3, 4);
    if (p.empty() || q.empty() || r.empty()) continue;

    Int pq = normalized_mixed_volume(PolytopeTuple(2, {p, q}));
    Int qp = normalized_mixed_volume(PolytopeTuple(2, {q, p}));
    CHECK(pq == qp);
    CHECK(pq >= 0);

    auto pr = sum_point_sets(p, r);
    Int left = normalized_mixed_volume(PolytopeTuple(2, {pr, q}));
    Int right = pq + normalized_mixed_volume(PolytopeTuple(2, {r, q}));
    CHECK(left == right);
  }
}

TEST_CASE("euler characteristic closed forms") {
  auto tetra = corpus::quad_section().points;
  CHECK(euler_characteristic(PolytopeTuple(3, {tetra})) == 2);       // (-1)^2 * 2
  CHECK(euler_characteristic(PolytopeTuple(3, {tetra, tetra})) == -4);  // -2 * Vol

  std::vector<IntVector> square = {make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1}),
                                   make_vec({1, 1})};
  CHECK(euler_characteristic(PolytopeTuple(2, {square})) == -2);  // (-1)^1 * 2

  CHECK_THROWS_WITH_AS(euler_characteristic(PolytopeTuple(2, {square, square, square})),
                       "euler_characteristic: overdetermined tuple", input_error);
}

TEST_CASE("euler characteristic reproduces both closed forms on random tuples") {
  std::mt19937 rng(41);
  int done = 0;
  for (int iter = 0; done < 20 && iter < 200; ++iter) {
    int m = 2 + iter % 3;
    auto single = oracles::random_points(rng, m, m + 2, 3);
    if (static_cast<int>(single.size()) < 2) continue;
    ++done;

    Int vol = point_set_volume(single, m);
    Int chi1 = euler_characteristic(PolytopeTuple(m, {single}));
    CHECK(chi1 == ((m - 1) % 2 == 0 ? vol : -vol));

    // m-1 bodies: chi equals minus the mixed volume with the total sum appended.
    int span = m == 4 ? 1 : 2;
    int count = m == 4 ? 2 : 3;
    std::vector<std::vector<IntVector>> bodies;
    for (int i = 0; i + 1 < m; ++i) bodies.push_back(oracles::random_points(rng, m, count, span));
    bool ok = std::all_of(bodies.begin(), bodies.end(),
                          [](const auto& b) { return !b.empty(); });
    if (!ok) continue;
    std::vector<IntVector> total = bodies[0];
    for (size_t i = 1; i < bodies.size(); ++i) total = sum_point_sets(total, bodies[i]);
    auto with_sum = bodies;
    with_sum.push_back(total);
    Int chi2 = euler_characteristic(PolytopeTuple(m, bodies));
    CHECK(chi2 == -normalized_mixed_volume(PolytopeTuple(m, with_sum)));
  }
  CHECK(done == 20);
}
