#include "nodal/lattice.hpp"

#include <algorithm>
#include <set>

#include "nodal/errors.hpp"

namespace nodal {

ExtendedNat ExtendedNat::finite(Int v) {
  if (v < 0) throw internal_error("ExtendedNat: negative value");
  ExtendedNat e;
  e.infinite_ = false;
  e.value_ = std::move(v);
  return e;
}

ExtendedNat ExtendedNat::infinity() {
  ExtendedNat e;
  e.infinite_ = true;
  return e;
}

const Int& ExtendedNat::value() const {
  if (infinite_) throw internal_error("ExtendedNat: value() of infinity");
  return value_;
}

bool ExtendedNat::operator==(const ExtendedNat& o) const {
  if (infinite_ || o.infinite_) return infinite_ == o.infinite_;
  return value_ == o.value_;
}

std::string ExtendedNat::to_string() const {
  return infinite_ ? "inf" : value_.str();
}

SupportSet::SupportSet(std::vector<IntVector> pts, int n_dims) : points(std::move(pts)), n(n_dims) {
  if (n < 1) throw input_error("support set: need n >= 1 (points of dimension >= 3)");
  if (points.empty()) throw input_error("support set: no points");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != n + 2)
      throw input_error("support set: point dimension mismatch");
  std::set<IntVector> seen(points.begin(), points.end());
  if (seen.size() != points.size()) throw input_error("support set: duplicate points");
}

std::vector<Int> SmithResult::divisors() const {
  std::vector<Int> out;
  const int k = std::min(d.row_count(), d.col_count());
  for (int i = 0; i < k; ++i)
    if (d.at(i, i) != 0) out.push_back(d.at(i, i));
  return out;
}

namespace {

struct SnfWorker {
  IntMatrix d, u, v;

  void row_swap(int i, int j) {
    std::swap(d.rows[i], d.rows[j]);
    std::swap(u.rows[i], u.rows[j]);
  }
  void col_swap(int i, int j) {
    for (auto& row : d.rows) std::swap(row[i], row[j]);
    for (auto& row : v.rows) std::swap(row[i], row[j]);
  }
  void row_addmul(int dst, int src, const Int& k) {
    for (int j = 0; j < d.col_count(); ++j) d.at(dst, j) += k * d.at(src, j);
    for (int j = 0; j < u.col_count(); ++j) u.at(dst, j) += k * u.at(src, j);
  }
  void col_addmul(int dst, int src, const Int& k) {
    for (auto& row : d.rows) row[dst] += k * row[src];
    for (auto& row : v.rows) row[dst] += k * row[src];
  }
  void row_negate(int i) {
    for (auto& e : d.rows[i]) e = -e;
    for (auto& e : u.rows[i]) e = -e;
  }

  // Moves the entry of smallest nonzero absolute value in the trailing
  // submatrix to (t, t); returns false when the submatrix is zero.
  bool place_pivot(int t) {
    int bi = -1, bj = -1;
    Int best = 0;
    for (int i = t; i < d.row_count(); ++i)
      for (int j = t; j < d.col_count(); ++j) {
        if (d.at(i, j) == 0) continue;
        Int a = abs(d.at(i, j));
        if (bi < 0 || a < best) {
          best = a;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) return false;
    if (bi != t) row_swap(t, bi);
    if (bj != t) col_swap(t, bj);
    return true;
  }

  bool reduce_once(int t) {
    bool dirty = false;
    for (int i = t + 1; i < d.row_count(); ++i) {
      if (d.at(i, t) == 0) continue;
      Int q = d.at(i, t) / d.at(t, t);
      if (q != 0) row_addmul(i, t, -q);
      if (d.at(i, t) != 0) {  // nonzero remainder becomes the smaller pivot
        row_swap(t, i);
        dirty = true;
      }
    }
    for (int j = t + 1; j < d.col_count(); ++j) {
      if (d.at(t, j) == 0) continue;
      Int q = d.at(t, j) / d.at(t, t);
      if (q != 0) col_addmul(j, t, -q);
      if (d.at(t, j) != 0) {
        col_swap(t, j);
        dirty = true;
      }
    }
    return dirty;
  }

  bool row_col_clear(int t) const {
    for (int i = t + 1; i < d.row_count(); ++i)
      if (d.at(i, t) != 0) return false;
    for (int j = t + 1; j < d.col_count(); ++j)
      if (d.at(t, j) != 0) return false;
    return true;
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SnfWorker w;
  w.d = m;
  w.u = IntMatrix::identity(m.row_count());
  w.v = IntMatrix::identity(m.col_count());

  const int steps = std::min(m.row_count(), m.col_count());
  for (int t = 0; t < steps; ++t) {
    if (!w.place_pivot(t)) break;
    for (;;) {
      while (w.reduce_once(t)) {
      }
      if (!w.row_col_clear(t)) continue;
      // Enforce the divisibility chain: the pivot must divide the rest.
      bool fixed = true;
      for (int i = t + 1; i < w.d.row_count() && fixed; ++i)
        for (int j = t + 1; j < w.d.col_count() && fixed; ++j)
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            w.row_addmul(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (w.d.at(t, t) < 0) w.row_negate(t);
  }

  SmithResult r;
  r.u = std::move(w.u);
  r.d = std::move(w.d);
  r.v = std::move(w.v);
  return r;
}

ExtendedNat lattice_index(const std::vector<IntVector>& generators, int ambient_rank) {
  if (ambient_rank < 0) throw internal_error("lattice_index: negative rank");
  if (ambient_rank == 0) return ExtendedNat::finite(1);
  if (generators.empty()) return ExtendedNat::infinity();
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != ambient_rank)
      throw internal_error("lattice_index: generator dimension mismatch");
  SmithResult s = smith_normal_form(IntMatrix::from_rows(generators));
  std::vector<Int> div = s.divisors();
  if (static_cast<int>(div.size()) < ambient_rank) return ExtendedNat::infinity();
  Int idx = 1;
  for (const Int& e : div) idx *= e;
  return ExtendedNat::finite(idx);
}

ExtendedNat vertical_index(const std::vector<IntVector>& points, int n) {
  if (points.empty()) throw input_error("vertical_index: empty point set");
  std::vector<IntVector> gens;
  const IntVector& base = points[0];
  for (size_t i = 1; i < points.size(); ++i) {
    IntVector diff(n);
    for (int j = 0; j < n; ++j) diff[j] = points[i][j] - base[j];
    if (!is_zero(diff)) gens.push_back(std::move(diff));
  }
  return lattice_index(gens, n);
}

Int content(const IntVector& v) {
  Int g = 0;
  for (const Int& e : v) g = gcd(g, abs(e));
  return g;
}

IntVector primitive_part(const IntVector& v) {
  Int g = content(v);
  if (g == 0) throw input_error("primitive_part: zero vector");
  IntVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

SupportSet fiber_scale(const SupportSet& a, const Int& n_factor) {
  if (n_factor < 1) throw input_error("fiber_scale: factor must be >= 1");
  std::vector<IntVector> pts = a.points;
  for (auto& p : pts) {
    p[a.n] *= n_factor;
    p[a.n + 1] *= n_factor;
  }
  return SupportSet(std::move(pts), a.n);
}

}  // namespace nodal
