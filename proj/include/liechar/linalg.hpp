#pragma once

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

#include "liechar/types.hpp"

namespace liechar {

/// left * m * right == diagonal, with left and right unimodular and the
/// diagonal entries non-negative, each dividing the next.
struct SmithForm {
  IntMatrix left;
  IntMatrix right;
  IntMatrix diagonal;

  std::vector<std::int64_t> invariant_factors() const {
    std::vector<std::int64_t> out;
    for (Eigen::Index i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i)
      out.push_back(diagonal(i, i));
    return out;
  }
};

template <typename Derived>
SmithForm smith_normal_form(const Eigen::MatrixBase<Derived>& input) {
  IntMatrix a = input.template cast<std::int64_t>();
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  IntMatrix left = IntMatrix::Identity(rows, rows);
  IntMatrix right = IntMatrix::Identity(cols, cols);

  auto floor_div = [](std::int64_t x, std::int64_t y) {
    std::int64_t q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
  };

  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      Eigen::Index pr = -1, pc = -1;
      std::int64_t best = 0;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pr < 0 || std::llabs(a(i, j)) < best)) {
            best = std::llabs(a(i, j));
            pr = i;
            pc = j;
          }
      if (pr < 0) return SmithForm{left, right, a};
      if (pr != t) {
        a.row(pr).swap(a.row(t));
        left.row(pr).swap(left.row(t));
      }
      if (pc != t) {
        a.col(pc).swap(a.col(t));
        right.col(pc).swap(right.col(t));
      }

      bool clean = true;
      const std::int64_t pivot = a(t, t);
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const std::int64_t q = floor_div(a(i, t), pivot);
        a.row(i) -= q * a.row(t);
        left.row(i) -= q * left.row(t);
        if (a(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const std::int64_t q = floor_div(a(t, j), pivot);
        a.col(j) -= q * a.col(t);
        right.col(j) -= q * right.col(t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility chain: fold an offending row into the pivot row.
      bool divides = true;
      for (Eigen::Index i = t + 1; i < rows && divides; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (a(i, j) % pivot != 0) {
            a.row(t) += a.row(i);
            left.row(t) += left.row(i);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      a.row(t) *= -1;
      left.row(t) *= -1;
    }
  }
  return SmithForm{left, right, a};
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
template <typename Derived>
BigInt integer_determinant(const Eigen::MatrixBase<Derived>& input) {
  const Eigen::Index n = input.rows();
  if (n != input.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  if (n == 0) return BigInt(1);
  std::vector<BigInt> m(static_cast<std::size_t>(n * n));
  auto at = [&](Eigen::Index i, Eigen::Index j) -> BigInt& {
    return m[static_cast<std::size_t>(i * n + j)];
  };
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) at(i, j) = BigInt(input(i, j));

  BigInt sign = 1;
  BigInt prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return BigInt(0);
      for (Eigen::Index j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const BigInt& x) { return x == 0; }

/// Matrix product for exact scalar types. Eigen's operator* overload set
/// probes the scalar as a byte container and fails for multiprecision types.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> multiply(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& x,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& y) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(x.rows(), y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < y.cols(); ++j) {
      Scalar s(0);
      for (Eigen::Index k = 0; k < x.cols(); ++k)
        if (!is_zero(x(i, k))) s += x(i, k) * y(k, j);
      out(i, j) = s;
    }
  return out;
}

/// Reduced row echelon form over an exact field, in place. Returns pivot
/// columns. Scalar needs ==, -, *, / and an is_zero overload.
template <typename Scalar>
std::vector<Eigen::Index> row_reduce(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m,
                                     Eigen::Index column_limit = -1) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = column_limit < 0 ? m.cols() : column_limit;
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename Scalar>
Eigen::Index exact_rank(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
  return static_cast<Eigen::Index>(row_reduce(m).size());
}

template <typename Derived>
RatMatrix rational_inverse(const Eigen::MatrixBase<Derived>& input) {
  const Eigen::Index n = input.rows();
  RatMatrix aug(n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      aug(i, j) = Rational(input(i, j));
      aug(i, n + j) = Rational(i == j ? 1 : 0);
    }
  auto pivots = row_reduce(aug, n);
  if (static_cast<Eigen::Index>(pivots.size()) != n)
    throw Error(ErrorCode::InvalidArgument, "matrix is singular");
  return aug.rightCols(n);
}

/// Basis of {x : m * x == 0}, one column per basis vector.
inline RatMatrix right_nullspace(RatMatrix m) {
  const Eigen::Index cols = m.cols();
  auto pivots = row_reduce(m);
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0, k = 0; c < cols; ++c) {
    if (k < static_cast<Eigen::Index>(pivots.size()) && pivots[static_cast<std::size_t>(k)] == c)
      ++k;
    else
      free.push_back(c);
  }
  RatMatrix basis = RatMatrix::Zero(cols, static_cast<Eigen::Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(free[f], static_cast<Eigen::Index>(f)) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], static_cast<Eigen::Index>(f)) = -m(static_cast<Eigen::Index>(r), free[f]);
  }
  return basis;
}

/// Coefficients of det(I - t*m) as a polynomial in t, lowest degree first
/// (Faddeev-LeVerrier; exact integer divisions).
template <typename Derived>
std::vector<BigInt> reversed_characteristic_polynomial(const Eigen::MatrixBase<Derived>& input) {
  const Eigen::Index n = input.rows();
  using BigMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
  BigMatrix a = input.template cast<BigInt>();
  // char poly det(xI - a) = x^n + c_1 x^{n-1} + ... + c_n
  std::vector<BigInt> c(static_cast<std::size_t>(n + 1));
  c[0] = 1;
  BigMatrix mk = BigMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    BigMatrix next = multiply(a, mk);
    for (Eigen::Index i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(k - 1)];
    mk = next;
    BigMatrix am = multiply(a, mk);
    BigInt trace = 0;
    for (Eigen::Index i = 0; i < n; ++i) trace += am(i, i);
    c[static_cast<std::size_t>(k)] = -trace / k;
  }
  // det(I - t a) = sum_k c_k t^k
  return c;
}

}  // namespace liechar
