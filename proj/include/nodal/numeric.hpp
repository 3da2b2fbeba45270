#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace nodal {

// All arithmetic in this library is exact; Int never overflows.
using Int = boost::multiprecision::cpp_int;

using IntVector = std::vector<Int>;

IntVector make_vec(std::initializer_list<long long> entries);

IntVector vec_add(const IntVector& a, const IntVector& b);
IntVector vec_sub(const IntVector& a, const IntVector& b);
IntVector vec_neg(const IntVector& a);
Int dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& a);
std::string vec_to_string(const IntVector& a);

/// Exact quotient; throws internal_error when b does not divide a.
Int exact_div(const Int& a, const Int& b);

/**
 * Dense integer matrix, row major.  Only the handful of operations the
 * lattice algorithms need; sizes stay small (points x coordinates).
 */
struct IntMatrix {
  std::vector<IntVector> rows;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r, IntVector(c, 0)) {}

  int row_count() const { return static_cast<int>(rows.size()); }
  int col_count() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }

  Int& at(int i, int j) { return rows[i][j]; }
  const Int& at(int i, int j) const { return rows[i][j]; }

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVector>& r);

  IntMatrix transposed() const;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntVector mat_vec(const IntMatrix& a, const IntVector& x);

/// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const IntMatrix& m);

/// Rank over the rationals, computed by fraction-free elimination.
int matrix_rank(const IntMatrix& m);

/// Inverse of a matrix with determinant +-1; throws otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

}  // namespace nodal
