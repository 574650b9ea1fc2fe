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
// Tropical closures of a square matrix:
//   Gamma(A) = A ^ A^2 ^ A^3 ^ ...      (shortest nonempty paths)
//   Delta(A) = I ^ Gamma(A)             (shortest paths, empty path allowed)
// and the Cuninghame-Green conjugate X# = -X^T.
//
// Both closures are finite exactly when the arc graph of A has no cycle of
// negative weight; otherwise NegativeCycleError is thrown.

#ifndef TROPFST_CLOSURE_HPP_
#define TROPFST_CLOSURE_HPP_

#include <cstddef>

#include "tropfst/errors.hpp"
#include "tropfst/matrix.hpp"

namespace tropfst {

// A ^ A^2 ^ ... ^ A^k with no cycle checks. k >= 1.
inline TropMatrix PowerSum(const TropMatrix &a, std::size_t k) {
  if (!a.is_square()) throw ShapeError("PowerSum: matrix is not square");
  if (k == 0) throw ShapeError("PowerSum: need at least one term");
  TropMatrix power = a;
  TropMatrix sum = a;
  for (std::size_t t = 2; t <= k; ++t) {
    power = MinPlusMul(power, a);
    sum = PointwiseMin(sum, power);
  }
  return sum;
}

struct ClosureStats {
  // Number of powers accumulated before the partial sum stopped changing.
  std::size_t terms = 0;
};

// Accumulates powers of A until the partial sum is stable, or n powers have
// been added. A negative diagonal entry in any partial sum means a negative
// cycle; a cycle of negative weight always contains a simple one of length at
// most n, so checking up to A^n is sufficient.
inline TropMatrix Gamma(const TropMatrix &a, ClosureStats *stats = nullptr) {
  if (!a.is_square()) throw ShapeError("Gamma: matrix is not square");
  const std::size_t n = a.rows();
  auto check_diagonal = [n](const TropMatrix &m) {
    for (std::size_t i = 0; i < n; ++i)
      if (m(i, i) < TropWeight::One()) throw NegativeCycleError(i);
  };
  TropMatrix sum = a;
  TropMatrix power = a;
  check_diagonal(sum);
  std::size_t terms = n == 0 ? 0 : 1;
  for (std::size_t k = 2; k <= n; ++k) {
    power = MinPlusMul(power, a);
    TropMatrix next = PointwiseMin(sum, power);
    check_diagonal(next);
    if (next == sum) break;
    sum = std::move(next);
    terms = k;
  }
  if (stats != nullptr) stats->terms = terms;
  return sum;
}

inline TropMatrix Delta(const TropMatrix &a) {
  if (!a.is_square()) throw ShapeError("Delta: matrix is not square");
  return PointwiseMin(TropMatrix::Identity(a.rows()), Gamma(a));
}

// Transpose and negate; +inf maps to -inf.
inline TropMatrix CgConjugate(const TropMatrix &x) {
  TropMatrix t(x.cols(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) t(j, i) = -x(i, j);
  return t;
}

}  // namespace tropfst

#endif  // TROPFST_CLOSURE_HPP_
