#pragma once

// Rank-revealing elimination and everything built on it.
//
// Pivot rule (identical over every field): rows are visited top-down; a row that
// is nonzero after elimination by the earlier pivots contributes a pivot at its
// leftmost nonzero column, and that column is then cleared from all later rows.
// The pivot rows and pivot columns therefore index a nonsingular minor, and the
// first r pivots index a nonsingular r x r minor.
//
// Over Q the work is done on integer rows (denominators cleared, each row kept
// primitive) so no fractions appear during elimination; determinants use
// Bareiss' fraction-free scheme. Over F_p the elimination runs on raw residues.

#include <algorithm>
#include <vector>

#include "rankwb/matrix.hpp"

namespace rankwb {

struct Pivot {
  Index row;
  Index col;
  friend bool operator==(const Pivot&, const Pivot&) = default;
};

std::vector<Pivot> pivots(const Matrix<Rational>& m);
std::vector<Pivot> pivots(const Matrix<Zp>& m);
Rational determinant(const Matrix<Rational>& m);
Zp determinant(const Matrix<Zp>& m);

template <class S>
std::vector<Pivot> pivots(const Matrix<S>& m) {
  const Index rows = m.rows(), cols = m.cols();
  std::vector<std::vector<S>> a(static_cast<std::size_t>(rows));
  for (Index i = 0; i < rows; ++i) {
    auto& row = a[static_cast<std::size_t>(i)];
    row.reserve(static_cast<std::size_t>(cols));
    for (Index j = 0; j < cols; ++j) row.push_back(m(i, j));
  }
  std::vector<Pivot> out;
  for (Index i = 0; i < rows; ++i) {
    auto& ri = a[static_cast<std::size_t>(i)];
    Index c = 0;
    while (c < cols && ri[static_cast<std::size_t>(c)].is_zero()) ++c;
    if (c == cols) continue;
    out.push_back({i, c});
    const S inv = ri[static_cast<std::size_t>(c)].inverse();
    for (Index k = c; k < cols; ++k) ri[static_cast<std::size_t>(k)] *= inv;
    for (Index j = i + 1; j < rows; ++j) {
      auto& rj = a[static_cast<std::size_t>(j)];
      const S f = rj[static_cast<std::size_t>(c)];
      if (f.is_zero()) continue;
      for (Index k = c; k < cols; ++k) {
        const S& x = ri[static_cast<std::size_t>(k)];
        if (!x.is_zero()) rj[static_cast<std::size_t>(k)] -= f * x;
      }
    }
  }
  return out;
}

template <class S>
Index rank(const Matrix<S>& m) {
  return static_cast<Index>(pivots(m).size());
}

/// rank / n for a square n x n matrix (0 for the empty matrix).
template <class S>
Rational normalized_rank(const Matrix<S>& m) {
  require_square(m, "normalized_rank");
  if (m.rows() == 0) return Rational(0);
  return Rational(BigInt(static_cast<long>(rank(m))), BigInt(static_cast<long>(m.rows())));
}

/// d_rk(a, b) = rho(a - b).
template <class S>
Rational rank_distance(const Matrix<S>& a, const Matrix<S>& b) {
  require_square(a, "rank_distance");
  require_same_shape(a, b, "rank_distance");
  require_same_field(a, b);
  return normalized_rank(Matrix<S>(a - b));
}

template <class S>
S determinant(const Matrix<S>& m) {
  require_square(m, "determinant");
  const Index n = m.rows();
  Matrix<S> a = m;
  S det(1);
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return S(0) * a(0, 0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    const S inv = a(c, c).inverse();
    for (Index r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const S f = a(r, c) * inv;
      for (Index k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

template <class S>
bool is_invertible(const Matrix<S>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Reduced row echelon form; returns the pivot columns (standard column-major pivoting).
template <class S>
std::vector<Index> rref_in_place(Matrix<S>& a) {
  std::vector<Index> pivot_cols;
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const S inv = a(r, c).inverse();
    for (Index k = c; k < a.cols(); ++k) a(r, k) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const S f = a(i, c);
      for (Index k = c; k < a.cols(); ++k)
        if (!a(r, k).is_zero()) a(i, k) -= f * a(r, k);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

/// Basis of the right null space, one vector per free column of the RREF.
template <class S>
std::vector<Vector<S>> kernel_basis(const Matrix<S>& m) {
  Matrix<S> a = m;
  const auto pivot_cols = rref_in_place(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vector<S>> basis;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector<S> v(m.cols());
    v(f) = S(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      const S& x = a(static_cast<Index>(r), f);
      if (!x.is_zero()) v(pivot_cols[r]) = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Inverse by Gauss-Jordan; throws InputError when singular.
template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  require_square(m, "inverse");
  const Index n = m.rows();
  Matrix<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  for (Index i = 0; i < n; ++i) aug(i, n + i) = S(1);
  const auto pivot_cols = rref_in_place(aug);
  if (static_cast<Index>(pivot_cols.size()) < n || (n > 0 && pivot_cols[static_cast<std::size_t>(n - 1)] != n - 1))
    throw InputError("inverse: matrix is singular");
  return aug.rightCols(n);
}

template <class S>
struct Minor {
  std::vector<Index> rows;
  std::vector<Index> cols;
  S det;
};

/// r x r minor with nonzero determinant taken from the first r pivots.
template <class S>
Minor<S> find_full_rank_minor(const Matrix<S>& m, Index r) {
  const auto pv = pivots(m);
  if (r < 0 || r > static_cast<Index>(pv.size()))
    throw InputError("find_full_rank_minor: requested size exceeds the rank");
  Minor<S> out;
  for (Index k = 0; k < r; ++k) {
    out.rows.push_back(pv[static_cast<std::size_t>(k)].row);
    out.cols.push_back(pv[static_cast<std::size_t>(k)].col);
  }
  std::sort(out.rows.begin(), out.rows.end());
  std::sort(out.cols.begin(), out.cols.end());
  Matrix<S> sub(r, r);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      sub(i, j) = m(out.rows[static_cast<std::size_t>(i)], out.cols[static_cast<std::size_t>(j)]);
  out.det = r == 0 ? S(1) : determinant(sub);
  return out;
}

/// Invertible matrix at rank distance exactly 1 - rho(m) from m: every non-pivot
/// row is replaced by a unit row supported on a non-pivot column.
template <class S>
Matrix<S> invertible_completion(const Matrix<S>& m) {
  require_square(m, "invertible_completion");
  const Index n = m.rows();
  const auto pv = pivots(m);
  std::vector<bool> row_used(static_cast<std::size_t>(n), false), col_used(static_cast<std::size_t>(n), false);
  for (const auto& p : pv) {
    row_used[static_cast<std::size_t>(p.row)] = true;
    col_used[static_cast<std::size_t>(p.col)] = true;
  }
  std::vector<Index> free_rows, free_cols;
  for (Index i = 0; i < n; ++i) {
    if (!row_used[static_cast<std::size_t>(i)]) free_rows.push_back(i);
    if (!col_used[static_cast<std::size_t>(i)]) free_cols.push_back(i);
  }
  Matrix<S> out = m;
  for (std::size_t t = 0; t < free_rows.size(); ++t) {
    const Index i = free_rows[t];
    for (Index j = 0; j < n; ++j) out(i, j) = S(0) * m(i, j);
    out(i, free_cols[t]) = S(1) + S(0) * m(i, free_cols[t]);
  }
  return out;
}

}  // namespace rankwb
