#pragma once

#include <vector>

#include "bra/errors.hpp"
#include "bra/rational.hpp"

namespace bra {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

inline RationalMatrix identity_matrix(int n) {
  RationalMatrix m(n, RationalVector(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  int n = static_cast<int>(a.size());
  int p = static_cast<int>(b.size());
  if (p == 0 || static_cast<int>(a[0].size()) != p)
    throw DimensionError("matrix product dimension mismatch");
  int m = static_cast<int>(b[0].size());
  RationalMatrix c(n, RationalVector(m, 0));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < p; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

inline RationalVector multiply(const RationalMatrix& a, const RationalVector& x) {
  int n = static_cast<int>(a.size());
  RationalVector y(n, 0);
  for (int i = 0; i < n; ++i) {
    if (a[i].size() != x.size()) throw DimensionError("matrix-vector dimension mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

// Gauss-Jordan inverse with exact rationals. Pivot choice (first nonzero row)
// is deterministic; any nonzero pivot is exact.
inline RationalMatrix inverse(const RationalMatrix& a) {
  int n = static_cast<int>(a.size());
  RationalMatrix work(n, RationalVector(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n) throw DimensionError("inverse requires a square matrix");
    for (int j = 0; j < n; ++j) work[i][j] = a[i][j];
    work[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (work[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SingularError("matrix is singular");
    std::swap(work[col], work[pivot]);
    Rational inv = work[col][col];
    for (int j = 0; j < 2 * n; ++j) work[col][j] /= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || work[r][col] == 0) continue;
      Rational f = work[r][col];
      for (int j = 0; j < 2 * n; ++j) work[r][j] -= f * work[col][j];
    }
  }
  RationalMatrix out(n, RationalVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = work[i][n + j];
  return out;
}

inline RationalVector solve(const RationalMatrix& a, const RationalVector& b) {
  return multiply(inverse(a), b);
}

}  // namespace bra
