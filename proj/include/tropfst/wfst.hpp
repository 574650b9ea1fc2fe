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
// The WFST data model. A machine with n states is described by
//   - arcs (src, dst, ilabel, olabel, weight), at most one per state pair,
//   - lambda, the initial-weight vector (+inf = not initial),
//   - rho, the final-weight vector (+inf = not final),
//   - input and output symbol tables, where label 0 is epsilon.
//
// BuildMatrices() turns a machine into the dense matrices the algebra in
// closure.hpp works on.

#ifndef TROPFST_WFST_HPP_
#define TROPFST_WFST_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropfst/errors.hpp"
#include "tropfst/matrix.hpp"

namespace tropfst {

using Label = std::int32_t;
using StateId = std::size_t;

inline constexpr Label kEpsilon = 0;
inline constexpr Label kNoLabel = -1;
inline constexpr std::string_view kEpsilonSymbol = "<eps>";

// Bidirectional Label <-> string map. Id 0 is always "<eps>"; further ids are
// handed out densely in insertion order.
class SymbolTable {
 public:
  SymbolTable() { AddSymbol(std::string(kEpsilonSymbol)); }

  Label AddSymbol(const std::string &symbol) {
    if (auto it = ids_.find(symbol); it != ids_.end()) return it->second;
    const auto id = static_cast<Label>(symbols_.size());
    symbols_.push_back(symbol);
    ids_.emplace(symbol, id);
    return id;
  }

  std::optional<Label> Find(std::string_view symbol) const {
    auto it = ids_.find(std::string(symbol));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  Label FindOrThrow(std::string_view symbol) const {
    if (auto id = Find(symbol)) return *id;
    throw SymbolError(std::string(symbol));
  }

  const std::string &Symbol(Label id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= symbols_.size())
      throw SymbolError("#" + std::to_string(id));
    return symbols_[static_cast<std::size_t>(id)];
  }

  std::size_t size() const { return symbols_.size(); }

  bool operator==(const SymbolTable &o) const { return symbols_ == o.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, Label> ids_;
};

struct Arc {
  StateId src = 0;
  StateId dst = 0;
  Label ilabel = kEpsilon;
  Label olabel = kEpsilon;
  TropWeight weight = TropWeight::One();

  bool is_epsilon() const {
    return ilabel == kEpsilon && olabel == kEpsilon;
  }
  bool operator==(const Arc &) const = default;
};

class Wfst {
 public:
  Wfst() = default;
  explicit Wfst(std::size_t num_states)
      : num_states_(num_states),
        lambda_(num_states, TropWeight::Zero()),
        rho_(num_states, TropWeight::Zero()) {}

  std::size_t num_states() const { return num_states_; }
  const std::vector<Arc> &arcs() const { return arcs_; }
  const TropVector &lambda() const { return lambda_; }
  const TropVector &rho() const { return rho_; }
  const SymbolTable &isyms() const { return isyms_; }
  const SymbolTable &osyms() const { return osyms_; }
  SymbolTable &mutable_isyms() { return isyms_; }
  SymbolTable &mutable_osyms() { return osyms_; }

  // Grows the machine so that `s` is a valid state.
  void EnsureState(StateId s) {
    if (s < num_states_) return;
    num_states_ = s + 1;
    Resize(lambda_);
    Resize(rho_);
  }

  void SetInitial(StateId s, TropWeight w) { EnsureState(s); lambda_[s] = w; }
  void SetFinal(StateId s, TropWeight w) { EnsureState(s); rho_[s] = w; }

  // Appends an arc. Indices are not range-checked here so that Validate()
  // can report bad input; the state count is not grown.
  void AddArc(const Arc &arc) { arcs_.push_back(arc); }

  // Convenience overload that interns symbols and grows the machine.
  void AddArc(StateId src, StateId dst, const std::string &isym,
              const std::string &osym, TropWeight weight) {
    EnsureState(std::max(src, dst));
    arcs_.push_back(
        Arc{src, dst, isyms_.AddSymbol(isym), osyms_.AddSymbol(osym), weight});
  }

  void SetArcs(std::vector<Arc> arcs) { arcs_ = std::move(arcs); }
  void SetLambda(TropVector v) { lambda_ = std::move(v); }
  void SetRho(TropVector v) { rho_ = std::move(v); }
  void SetSymbols(SymbolTable isyms, SymbolTable osyms) {
    isyms_ = std::move(isyms);
    osyms_ = std::move(osyms);
  }

  // Arcs ordered by (src, dst); the canonical order for output.
  std::vector<Arc> SortedArcs() const {
    std::vector<Arc> sorted = arcs_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Arc &a, const Arc &b) {
                       return std::pair(a.src, a.dst) <
                              std::pair(b.src, b.dst);
                     });
    return sorted;
  }

  std::size_t NumEpsilonArcs() const {
    return static_cast<std::size_t>(std::count_if(
        arcs_.begin(), arcs_.end(), [](const Arc &a) { return a.is_epsilon(); }));
  }

 private:
  void Resize(TropVector &v) const {
    std::vector<TropWeight> grown(v.begin(), v.end());
    grown.resize(num_states_, TropWeight::Zero());
    v = TropVector(std::move(grown));
  }

  std::size_t num_states_ = 0;
  std::vector<Arc> arcs_;
  TropVector lambda_;
  TropVector rho_;
  SymbolTable isyms_;
  SymbolTable osyms_;
};

// Structural problems found by Validate(). Empty means valid.
struct ValidationReport {
  enum class Kind {
    kDuplicateArc,
    kStateOutOfRange,
    kNonFiniteArcWeight,
    kNoInitialState,
    kNoFinalState,
    kBadVectorSize,
  };
  struct Violation {
    Kind kind;
    std::string message;
  };

  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool Has(Kind kind) const {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation &v) { return v.kind == kind; });
  }
};

inline ValidationReport Validate(const Wfst &m) {
  using Kind = ValidationReport::Kind;
  ValidationReport report;
  auto add = [&report](Kind kind, std::string msg) {
    report.violations.push_back({kind, std::move(msg)});
  };
  const std::size_t n = m.num_states();
  if (m.lambda().dim() != n || m.rho().dim() != n) {
    add(Kind::kBadVectorSize, "initial/final vectors do not match state count");
  }
  std::set<std::pair<StateId, StateId>> seen;
  for (const Arc &arc : m.arcs()) {
    const std::string where =
        "arc " + std::to_string(arc.src) + "->" + std::to_string(arc.dst);
    if (arc.src >= n || arc.dst >= n) {
      add(Kind::kStateOutOfRange,
          where + ": state index out of range (" + std::to_string(n) +
              " states)");
    }
    if (!arc.weight.is_finite()) {
      add(Kind::kNonFiniteArcWeight, where + ": weight is not finite");
    }
    if (!seen.emplace(arc.src, arc.dst).second) {
      add(Kind::kDuplicateArc, where + ": more than one arc for this pair");
    }
  }
  auto any_finite = [](const TropVector &v) {
    return std::any_of(v.begin(), v.end(),
                       [](TropWeight w) { return !w.is_pos_inf(); });
  };
  if (!any_finite(m.lambda())) add(Kind::kNoInitialState, "no initial state");
  if (!any_finite(m.rho())) add(Kind::kNoFinalState, "no final state");
  return report;
}

// Matrix of labels; kNoLabel where there is no arc.
class LabelMatrix {
 public:
  LabelMatrix() = default;
  explicit LabelMatrix(std::size_t n) : n_(n), labels_(n * n, kNoLabel) {}
  Label operator()(std::size_t i, std::size_t j) const {
    return labels_[i * n_ + j];
  }
  Label &operator()(std::size_t i, std::size_t j) { return labels_[i * n_ + j]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<Label> labels_;
};

// Dense view of a machine. a = PointwiseMin(a_eps, e) always holds: e keeps
// the arcs whose input and output labels are both epsilon, a_eps the others.
struct MatrixView {
  TropMatrix a;
  TropMatrix e;
  TropMatrix a_eps;
  LabelMatrix sigma_i;
  LabelMatrix sigma_o;
};

inline void CheckValid(const Wfst &m) {
  const ValidationReport report = Validate(m);
  if (report.ok()) return;
  std::string msg = "invalid machine";
  for (const auto &v : report.violations) msg += "; " + v.message;
  throw ValidationError(msg);
}

// Only the structural part of validation (indices, duplicates, weights).
// Transforms use it so that machines whose initial or final set became empty
// can still be processed.
inline void CheckWellFormed(const Wfst &m) {
  using Kind = ValidationReport::Kind;
  ValidationReport report = Validate(m);
  std::erase_if(report.violations, [](const auto &v) {
    return v.kind == Kind::kNoInitialState || v.kind == Kind::kNoFinalState;
  });
  if (report.ok()) return;
  std::string msg = "malformed machine";
  for (const auto &v : report.violations) msg += "; " + v.message;
  throw ValidationError(msg);
}

inline MatrixView BuildMatrices(const Wfst &m) {
  CheckWellFormed(m);
  const std::size_t n = m.num_states();
  MatrixView view{TropMatrix(n, n), TropMatrix(n, n), TropMatrix(n, n),
                  LabelMatrix(n), LabelMatrix(n)};
  for (const Arc &arc : m.arcs()) {
    view.a(arc.src, arc.dst) = arc.weight;
    (arc.is_epsilon() ? view.e : view.a_eps)(arc.src, arc.dst) = arc.weight;
    view.sigma_i(arc.src, arc.dst) = arc.ilabel;
    view.sigma_o(arc.src, arc.dst) = arc.olabel;
  }
  return view;
}

}  // namespace tropfst

#endif  // TROPFST_WFST_HPP_
