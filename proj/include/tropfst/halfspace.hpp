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
// Tropical lines and affine tropical halfspaces.

#ifndef TROPFST_HALFSPACE_HPP_
#define TROPFST_HALFSPACE_HPP_

#include <cstddef>
#include <utility>

#include "tropfst/errors.hpp"
#include "tropfst/matrix.hpp"

namespace tropfst {

// y = min(alpha + x, beta).
inline TropWeight TropLineEval(TropWeight alpha, TropWeight beta,
                               TropWeight x) {
  if (alpha.is_pos_inf() || x.is_pos_inf()) return beta;
  return Min(alpha + x, beta);
}

// T(a, b) = { x in R_min^n : min(min_i a_i + x_i, a_{n+1})
//                         >= min(min_i b_i + x_i, b_{n+1}) }.
// The last coefficient of each vector is the affine term.
class Halfspace {
 public:
  Halfspace(TropVector a, TropVector b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.dim() != b_.dim())
      throw ShapeError("Halfspace: coefficient vectors differ in length");
    if (a_.dim() < 2)
      throw ShapeError("Halfspace: need at least one variable");
  }

  const TropVector &a() const { return a_; }
  const TropVector &b() const { return b_; }
  // Dimension of the ambient space, n.
  std::size_t dim() const { return a_.dim() - 1; }

  bool Contains(const TropVector &x) const {
    if (x.dim() != dim()) throw ShapeError("Halfspace: point has wrong dim");
    return Side(a_, x) >= Side(b_, x);
  }

 private:
  static TropWeight Side(const TropVector &c, const TropVector &x) {
    const std::size_t n = x.dim();
    TropWeight acc = c[n];
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i].is_pos_inf() || x[i].is_pos_inf()) continue;
      acc = Min(acc, c[i] + x[i]);
    }
    return acc;
  }

  TropVector a_;
  TropVector b_;
};

inline bool HalfspaceContains(const Halfspace &h, const TropVector &x) {
  return h.Contains(x);
}

}  // namespace tropfst

#endif  // TROPFST_HALFSPACE_HPP_
