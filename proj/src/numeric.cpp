#include "nodal/numeric.hpp"

#include <sstream>

#include "nodal/errors.hpp"

namespace nodal {

IntVector make_vec(std::initializer_list<long long> entries) {
  IntVector v;
  v.reserve(entries.size());
  for (long long e : entries) v.emplace_back(e);
  return v;
}

IntVector vec_add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw internal_error("vec_add: size mismatch");
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector vec_sub(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw internal_error("vec_sub: size mismatch");
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector vec_neg(const IntVector& a) {
  IntVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw internal_error("dot: size mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVector& a) {
  for (const Int& e : a)
    if (e != 0) return false;
  return true;
}

std::string vec_to_string(const IntVector& a) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw internal_error("exact_div: division by zero");
  if (a % b != 0) throw internal_error("exact_div: inexact division");
  return a / b;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& r) {
  IntMatrix m;
  m.rows = r;
  for (const auto& row : r)
    if (row.size() != r[0].size()) throw internal_error("from_rows: ragged rows");
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(col_count(), row_count());
  for (int i = 0; i < row_count(); ++i)
    for (int j = 0; j < col_count(); ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.col_count() != b.row_count()) throw internal_error("mat_mul: shape mismatch");
  IntMatrix r(a.row_count(), b.col_count());
  for (int i = 0; i < a.row_count(); ++i)
    for (int k = 0; k < a.col_count(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.col_count(); ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

IntVector mat_vec(const IntMatrix& a, const IntVector& x) {
  if (a.col_count() != static_cast<int>(x.size()))
    throw internal_error("mat_vec: shape mismatch");
  IntVector r(a.row_count(), 0);
  for (int i = 0; i < a.row_count(); ++i)
    for (int j = 0; j < a.col_count(); ++j) r[i] += a.at(i, j) * x[j];
  return r;
}

// Bareiss elimination: every division below is exact.
Int determinant(const IntMatrix& m) {
  const int n = m.row_count();
  if (n != m.col_count()) throw internal_error("determinant: not square");
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(a.rows[k], a.rows[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = exact_div(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

int matrix_rank(const IntMatrix& m) {
  IntMatrix a = m;
  const int r = a.row_count(), c = a.col_count();
  int rank = 0;
  for (int col = 0; col < c && rank < r; ++col) {
    int p = -1;
    for (int i = rank; i < r; ++i)
      if (a.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a.rows[rank], a.rows[p]);
    for (int i = rank + 1; i < r; ++i) {
      if (a.at(i, col) == 0) continue;
      Int f1 = a.at(rank, col), f2 = a.at(i, col);
      for (int j = col; j < c; ++j) a.at(i, j) = a.at(i, j) * f1 - a.at(rank, j) * f2;
    }
    ++rank;
  }
  return rank;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const int n = m.row_count();
  if (n != m.col_count()) throw internal_error("inverse_unimodular: not square");
  Int det = determinant(m);
  if (det != 1 && det != -1) throw internal_error("inverse_unimodular: determinant not a unit");
  // Adjugate via cofactors; matrices here are small (ambient dimension sized).
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mr, mc) = m.at(r, c);
          ++mc;
        }
        ++mr;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      inv.at(j, i) = cof * det;  // det is +-1, so this divides by det exactly
    }
  return inv;
}

}  // namespace nodal
