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
// TropWeight: an extended real in R u {+inf}, used as a cost
// (negative log probability). -inf is representable so that the max-plus
// products of the pruning code have a null element, but it never appears in
// a min-plus context built from valid inputs.

#ifndef TROPFST_WEIGHT_HPP_
#define TROPFST_WEIGHT_HPP_

#include <charconv>
#include <cmath>
#include <compare>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>

#include "tropfst/errors.hpp"

namespace tropfst {

class TropWeight {
 public:
  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  constexpr TropWeight() = default;
  // Implicit so that literals read naturally in matrix initializers.
  TropWeight(double value) : value_(value) {  // NOLINT
    if (std::isnan(value)) throw DomainError("NaN is not a tropical weight");
  }

  static constexpr TropWeight Zero() { return TropWeight(Raw{}, kInfinity); }
  static constexpr TropWeight One() { return TropWeight(Raw{}, 0.0); }
  static constexpr TropWeight PosInf() { return Zero(); }
  static constexpr TropWeight NegInf() { return TropWeight(Raw{}, -kInfinity); }

  constexpr double value() const { return value_; }
  constexpr bool is_pos_inf() const { return value_ == kInfinity; }
  constexpr bool is_neg_inf() const { return value_ == -kInfinity; }
  constexpr bool is_finite() const { return !is_pos_inf() && !is_neg_inf(); }

  constexpr bool operator==(const TropWeight &) const = default;
  constexpr auto operator<=>(const TropWeight &o) const {
    return value_ <=> o.value_;
  }

 private:
  struct Raw {};
  constexpr TropWeight(Raw, double v) : value_(v) {}

  double value_ = kInfinity;
};

// Saturating addition: +inf and -inf absorb finite operands. Mixing the two
// infinities is rejected.
inline TropWeight operator+(TropWeight a, TropWeight b) {
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
    throw DomainError("+inf + -inf is undefined");
  return TropWeight(a.value() + b.value());
}

inline TropWeight operator-(TropWeight a) { return TropWeight(-a.value()); }

inline TropWeight operator-(TropWeight a, TropWeight b) { return a + (-b); }

// Tropical sum (the meet of the lattice).
inline TropWeight Min(TropWeight a, TropWeight b) { return b < a ? b : a; }
inline TropWeight Max(TropWeight a, TropWeight b) { return a < b ? b : a; }

// Shortest decimal form that reads back to the same double; "inf"/"-inf"
// for the infinities. -0 prints as 0.
inline std::string FormatWeight(TropWeight w) {
  if (w.is_pos_inf()) return "inf";
  if (w.is_neg_inf()) return "-inf";
  double v = w.value();
  if (v == 0.0) v = 0.0;
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Inverse of FormatWeight. Accepts "inf", "+inf", "-inf" and anything
// std::from_chars accepts in general format. Returns false on garbage.
inline bool ParseWeight(std::string_view text, TropWeight *out) {
  if (text == "inf" || text == "+inf" || text == "Infinity") {
    *out = TropWeight::PosInf();
    return true;
  }
  if (text == "-inf" || text == "-Infinity") {
    *out = TropWeight::NegInf();
    return true;
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) return false;
  if (std::isnan(v)) return false;
  *out = TropWeight(v);
  return true;
}

inline std::ostream &operator<<(std::ostream &os, TropWeight w) {
  return os << FormatWeight(w);
}

}  // namespace tropfst

#endif  // TROPFST_WEIGHT_HPP_
