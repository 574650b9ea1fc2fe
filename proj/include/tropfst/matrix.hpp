// Copyright 2026 The tropfst Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Dense tropical vectors and matrices with min-plus and max-plus products.
//
// Conventions: A (+) B denotes the min-plus product
//   (A (+) B)[i][j] = min_k A[i][k] + B[k][j]
// and A (+)' B the max-plus product, where -inf plays the role of the null
// element. Matrices are row-major and immutable in practice: every operation
// below returns a fresh value.

#ifndef TROPFST_MATRIX_HPP_
#define TROPFST_MATRIX_HPP_

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropfst/errors.hpp"
#include "tropfst/weight.hpp"

namespace tropfst {

class TropVector {
 public:
  TropVector() = default;
  explicit TropVector(std::size_t dim, TropWeight fill = TropWeight::Zero())
      : entries_(dim, fill) {}
  TropVector(std::initializer_list<TropWeight> init) : entries_(init) {}
  explicit TropVector(std::vector<TropWeight> entries)
      : entries_(std::move(entries)) {}

  std::size_t dim() const { return entries_.size(); }
  TropWeight operator[](std::size_t i) const { return entries_[i]; }
  TropWeight &operator[](std::size_t i) { return entries_[i]; }

  std::span<const TropWeight> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool operator==(const TropVector &) const = default;

 private:
  std::vector<TropWeight> entries_;
};

class TropMatrix {
 public:
  TropMatrix() = default;
  TropMatrix(std::size_t rows, std::size_t cols,
             TropWeight fill = TropWeight::Zero())
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  // Row-wise initializer: {{0, 1}, {inf, 0}}. Rows must be equally long.
  TropMatrix(std::initializer_list<std::initializer_list<TropWeight>> rows)
      : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
      if (row.size() != cols_) throw ShapeError("ragged matrix initializer");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  // Multiplicative identity: 0 on the diagonal, +inf elsewhere.
  static TropMatrix Identity(std::size_t n) {
    TropMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = TropWeight::One();
    return m;
  }

  // Square matrix with `diag` on the diagonal and `off` elsewhere.
  static TropMatrix Diagonal(const TropVector &diag,
                             TropWeight off = TropWeight::Zero()) {
    TropMatrix m(diag.dim(), diag.dim(), off);
    for (std::size_t i = 0; i < diag.dim(); ++i) m(i, i) = diag[i];
    return m;
  }

  static TropMatrix Column(const TropVector &v) {
    TropMatrix m(v.dim(), 1);
    for (std::size_t i = 0; i < v.dim(); ++i) m(i, 0) = v[i];
    return m;
  }

  static TropMatrix Row(const TropVector &v) {
    TropMatrix m(1, v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) m(0, i) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  TropWeight operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  TropWeight &operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  std::span<const TropWeight> row(std::size_t i) const {
    return std::span<const TropWeight>(entries_).subspan(i * cols_, cols_);
  }
  std::span<const TropWeight> entries() const { return entries_; }

  TropVector ColumnVector(std::size_t j) const {
    TropVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool operator==(const TropMatrix &) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<TropWeight> entries_;
};

namespace internal {

inline void CheckInner(std::size_t a_cols, std::size_t b_rows,
                       const char *op) {
  if (a_cols != b_rows) {
    throw ShapeError(std::string(op) + ": inner dimensions " +
                     std::to_string(a_cols) + " and " +
                     std::to_string(b_rows) + " differ");
  }
}

}  // namespace internal

inline TropMatrix MinPlusMul(const TropMatrix &a, const TropMatrix &b) {
  internal::CheckInner(a.cols(), b.rows(), "MinPlusMul");
  TropMatrix c(a.rows(), b.cols(), TropWeight::PosInf());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const TropWeight aik = a(i, k);
      if (aik.is_pos_inf()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const TropWeight bkj = b(k, j);
        if (bkj.is_pos_inf()) continue;
        c(i, j) = Min(c(i, j), aik + bkj);
      }
    }
  }
  return c;
}

inline TropVector MinPlusMul(const TropMatrix &a, const TropVector &x) {
  internal::CheckInner(a.cols(), x.dim(), "MinPlusMul");
  TropVector y(a.rows(), TropWeight::PosInf());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_pos_inf() || x[k].is_pos_inf()) continue;
      y[i] = Min(y[i], a(i, k) + x[k]);
    }
  }
  return y;
}

// Max-plus product; -inf is the null element and absorbs in addition.
inline TropMatrix MaxPlusMul(const TropMatrix &a, const TropMatrix &b) {
  internal::CheckInner(a.cols(), b.rows(), "MaxPlusMul");
  TropMatrix c(a.rows(), b.cols(), TropWeight::NegInf());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const TropWeight aik = a(i, k);
      if (aik.is_neg_inf()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const TropWeight bkj = b(k, j);
        if (bkj.is_neg_inf()) continue;
        c(i, j) = Max(c(i, j), aik + bkj);
      }
    }
  }
  return c;
}

inline TropVector MaxPlusMul(const TropMatrix &a, const TropVector &x) {
  return MaxPlusMul(a, TropMatrix::Column(x)).ColumnVector(0);
}

inline TropMatrix PointwiseMin(const TropMatrix &a, const TropMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("PointwiseMin: shapes differ");
  TropMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = Min(a(i, j), b(i, j));
  return c;
}

inline TropVector PointwiseMin(const TropVector &a, const TropVector &b) {
  if (a.dim() != b.dim()) throw ShapeError("PointwiseMin: dims differ");
  TropVector c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c[i] = Min(a[i], b[i]);
  return c;
}

inline TropMatrix Transpose(const TropMatrix &a) {
  TropMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

// k-fold min-plus product of a square matrix with itself, k >= 1.
inline TropMatrix MatPower(const TropMatrix &a, std::size_t k) {
  if (!a.is_square()) throw ShapeError("MatPower: matrix is not square");
  if (k == 0) throw ShapeError("MatPower: exponent must be positive");
  TropMatrix result = a;
  TropMatrix base = a;
  bool have = false;
  // Binary exponentiation; the product is associative so the grouping does
  // not change the result.
  while (k > 0) {
    if (k & 1) {
      result = have ? MinPlusMul(result, base) : base;
      have = true;
    }
    k >>= 1;
    if (k > 0) base = MinPlusMul(base, base);
  }
  return result;
}

}  // namespace tropfst

#endif  // TROPFST_MATRIX_HPP_
