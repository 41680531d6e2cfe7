#pragma once

#include <cstdlib>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace bott {

template <typename Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Smith normal form: left * input * right == diagonal with left, right
/// unimodular, nonnegative diagonal entries and d_i | d_{i+1}.
template <typename Scalar>
struct SmithDecomposition {
  IntMatrix<Scalar> left;
  IntMatrix<Scalar> right;
  IntMatrix<Scalar> diagonal;

  /// The min(rows, cols) diagonal entries d_1 | d_2 | ...
  std::vector<Scalar> invariant_factors() const {
    std::vector<Scalar> d;
    auto const k = std::min(diagonal.rows(), diagonal.cols());
    for (Eigen::Index i = 0; i < k; ++i) d.push_back(diagonal(i, i));
    return d;
  }
};

namespace detail {

template <typename Scalar>
Scalar abs_value(Scalar v) {
  return v < 0 ? -v : v;
}

}  // namespace detail

/// Exact integer Smith normal form by elementary row/column operations.
/// Pivot choice: the smallest nonzero absolute value in the remaining block.
template <typename Scalar>
SmithDecomposition<Scalar> smith_normal_form(IntMatrix<Scalar> const& input) {
  using detail::abs_value;
  Eigen::Index const rows = input.rows();
  Eigen::Index const cols = input.cols();

  IntMatrix<Scalar> d = input;
  IntMatrix<Scalar> left = IntMatrix<Scalar>::Identity(rows, rows);
  IntMatrix<Scalar> right = IntMatrix<Scalar>::Identity(cols, cols);

  auto swap_rows = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    d.row(a).swap(d.row(b));
    left.row(a).swap(left.row(b));
  };
  auto swap_cols = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    d.col(a).swap(d.col(b));
    right.col(a).swap(right.col(b));
  };
  // row a -= q * row b
  auto sub_row = [&](Eigen::Index a, Eigen::Index b, Scalar q) {
    d.row(a) -= q * d.row(b);
    left.row(a) -= q * left.row(b);
  };
  auto sub_col = [&](Eigen::Index a, Eigen::Index b, Scalar q) {
    d.col(a) -= q * d.col(b);
    right.col(a) -= q * right.col(b);
  };

  Eigen::Index const steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block
      Eigen::Index pr = -1, pc = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (d(i, j) != 0 &&
              (pr < 0 || abs_value(d(i, j)) < abs_value(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) break;  // trailing block is zero
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i)
        if (d(i, t) != 0) {
          sub_row(i, t, d(i, t) / d(t, t));
          if (d(i, t) != 0) clean = false;
        }
      for (Eigen::Index j = t + 1; j < cols; ++j)
        if (d(t, j) != 0) {
          sub_col(j, t, d(t, j) / d(t, t));
          if (d(t, j) != 0) clean = false;
        }
      if (!clean) continue;

      // divisibility: pivot must divide the whole trailing block
      Eigen::Index bad_row = -1;
      for (Eigen::Index i = t + 1; i < rows && bad_row < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      // fold the offending row into the pivot row and retry
      d.row(t) += d.row(bad_row);
      left.row(t) += left.row(bad_row);
    }
    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      left.row(t) = -left.row(t);
    }
  }
  return {std::move(left), std::move(right), std::move(d)};
}

}  // namespace bott
