#pragma once

#include "hqf/rational.hpp"

#include <optional>
#include <vector>

namespace hqf {

/// Reduced row echelon form with deterministic pivoting: columns are
/// scanned left to right, the first nonzero entry below the current row is
/// the pivot. Callers order their columns graded-lexicographically, which
/// makes every derived basis reproducible across runs.
struct Rref {
  MatX m;
  std::vector<int> pivot_cols;
};

inline Rref rref(MatX a) {
  Rref out;
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Rational inv = 1 / a(r, c);
    a.row(r) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      a.row(i) -= f * a.row(r);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(a);
  return out;
}

inline int rank(const MatX& a) {
  return static_cast<int>(rref(a).pivot_cols.size());
}

/// Canonical kernel basis: one column per free variable, in column order,
/// with the free variable set to 1.
inline MatX nullspace(const MatX& a) {
  const Rref r = rref(a);
  const int cols = static_cast<int>(a.cols());
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int c : r.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

  const int dim = cols - static_cast<int>(r.pivot_cols.size());
  MatX basis = MatX::Zero(cols, dim);
  int j = 0;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    basis(free_col, j) = 1;
    for (size_t pi = 0; pi < r.pivot_cols.size(); ++pi)
      basis(r.pivot_cols[pi], j) = -r.m(static_cast<int>(pi), free_col);
    ++j;
  }
  return basis;
}

/// Particular solution of A x = b with all free variables set to 0;
/// nullopt if the system is inconsistent.
inline std::optional<VecX> solve_particular(const MatX& a, const VecX& b) {
  MatX aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const Rref r = rref(std::move(aug));
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == static_cast<int>(a.cols()))
    return std::nullopt;
  VecX x = VecX::Zero(a.cols());
  for (size_t pi = 0; pi < r.pivot_cols.size(); ++pi)
    x(r.pivot_cols[pi]) = r.m(static_cast<int>(pi), static_cast<int>(a.cols()));
  return x;
}

/// Minimum-norm solution of A x = b: x = A^T y for any y with (A A^T) y = b.
/// The product A^T y does not depend on the choice of y, so the result is
/// canonical. nullopt if A x = b has no solution.
inline std::optional<VecX> solve_min_norm(const MatX& a, const VecX& b) {
  const MatX gram = a * a.transpose();
  auto y = solve_particular(gram, b);
  if (!y) return std::nullopt;
  VecX x = a.transpose() * *y;
  if (a * x != b) return std::nullopt;
  return x;
}

}  // namespace hqf
