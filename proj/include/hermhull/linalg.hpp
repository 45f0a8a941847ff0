#pragma once

// Exact linear algebra over finite fields on Eigen dense types.

#include <Eigen/Core>

#include <vector>

#include "hermhull/gf.hpp"

namespace hermhull {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class Scalar>
using RowVec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using MatrixGF = Mat<Gf>;
using RowVectorGF = RowVec<Gf>;
using Index = Eigen::Index;

template <class Scalar>
struct Rref {
  Mat<Scalar> matrix;  // nonzero rows only
  std::vector<Index> pivots;
};

/// Reduced row echelon form; zero rows are dropped.
template <class Derived>
Rref<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  Mat<S> a = m;
  const Index rows = a.rows(), cols = a.cols();
  std::vector<Index> piv;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index sel = -1;
    for (Index i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r) a.row(sel).swap(a.row(r));
    const S inv = a(r, c).inverse();
    for (Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const S f = a(i, c);
      for (Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return {a.topRows(r), std::move(piv)};
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

/// Basis (as rows) of { y : m * y^T = 0 }.
template <class Derived>
Mat<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& m, const FieldContext& f) {
  using S = typename Derived::Scalar;
  const auto red = rref(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (Index p : red.pivots) is_pivot[p] = true;
  Mat<S> out(cols - static_cast<Index>(red.pivots.size()), cols);
  out.setConstant(f.zero());
  Index row = 0;
  for (Index c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    out(row, c) = f.one();
    for (std::size_t i = 0; i < red.pivots.size(); ++i) out(row, red.pivots[i]) = -red.matrix(static_cast<Index>(i), c);
    ++row;
  }
  return out;
}

/// Entrywise q-th power, as an Eigen expression.
template <class Derived>
auto conj_q(const Eigen::MatrixBase<Derived>& m) {
  return m.unaryExpr([](Gf x) { return frobenius_q(x); });
}

/// Conjugate transpose with respect to x -> x^q.
template <class Derived>
auto adjoint_q(const Eigen::MatrixBase<Derived>& m) {
  return conj_q(m).transpose();
}

/// Matrix with every entry in field f (replaces field-free literals).
MatrixGF attach(const MatrixGF& m, const FieldContext& f);

}  // namespace hermhull
