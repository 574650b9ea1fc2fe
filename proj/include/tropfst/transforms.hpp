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
// Weight pushing and epsilon removal written as closed-form matrix
// expressions over the min-plus algebra.
//
// Pushing. With potentials v = Delta(A) (+) rho, the pushed machine is
//   lambda' = diag(lambda) (+) v
//   rho'    = diag(rho) (+) (-v)
//   A'      = diag(-v) (+) A (+) diag(v)
// so lambda'_i = lambda_i + v_i, rho'_i = rho_i - v_i and
// A'_ij = -v_i + A_ij + v_j. Accepted paths keep their total weight.
//
// Epsilon removal. With A = A_eps ^ E split into non-epsilon and epsilon
// arcs,
//   A'   = Delta(E) (+) A_eps
//   rho' = Delta(E) (+) rho
// and lambda is unchanged.

#ifndef TROPFST_TRANSFORMS_HPP_
#define TROPFST_TRANSFORMS_HPP_

#include <cmath>
#include <cstddef>
#include <deque>
#include <utility>
#include <vector>

#include "tropfst/closure.hpp"
#include "tropfst/errors.hpp"
#include "tropfst/matrix.hpp"
#include "tropfst/wfst.hpp"

namespace tropfst {

struct Potentials {
  TropVector v;
  // Rounds of v <- v ^ (A (+) v), starting from rho, until v stopped changing.
  std::size_t iterations_to_fixpoint = 0;
};

// One round of the potential recursion: v ^ (A (+) v).
inline TropVector PotentialStep(const TropMatrix &a, const TropVector &v) {
  return PointwiseMin(v, MinPlusMul(a, v));
}

inline Potentials ComputePotentials(const Wfst &m) {
  const MatrixView view = BuildMatrices(m);
  Potentials result;
  result.v = MinPlusMul(Delta(view.a), m.rho());

  // Gamma() has already ruled out negative cycles, so the recursion settles
  // within num_states rounds.
  TropVector current = m.rho();
  for (std::size_t round = 0; round <= m.num_states(); ++round) {
    TropVector next = PotentialStep(view.a, current);
    if (next == current) break;
    current = std::move(next);
    result.iterations_to_fixpoint = round + 1;
  }
  return result;
}

inline Wfst PushWeights(const Wfst &m) {
  const MatrixView view = BuildMatrices(m);
  const std::size_t n = m.num_states();
  const TropVector v = MinPlusMul(Delta(view.a), m.rho());

  // States with v = +inf reach no final state. They take a placeholder
  // potential of 0 in the diagonal scalings and their arcs are dropped below.
  TropVector finite_v(n), neg_v(n);
  for (std::size_t i = 0; i < n; ++i) {
    finite_v[i] = v[i].is_pos_inf() ? TropWeight::One() : v[i];
    neg_v[i] = -finite_v[i];
  }

  const TropVector lambda = MinPlusMul(TropMatrix::Diagonal(m.lambda()), v);
  const TropVector rho = MinPlusMul(TropMatrix::Diagonal(m.rho()), neg_v);
  const TropMatrix a = MinPlusMul(
      MinPlusMul(TropMatrix::Diagonal(neg_v), view.a),
      TropMatrix::Diagonal(finite_v));

  std::vector<Arc> arcs;
  arcs.reserve(m.arcs().size());
  for (const Arc &arc : m.arcs()) {
    if (v[arc.src].is_pos_inf() || v[arc.dst].is_pos_inf()) continue;
    Arc pushed = arc;
    pushed.weight = a(arc.src, arc.dst);
    arcs.push_back(pushed);
  }

  Wfst out(n);
  out.SetSymbols(m.isyms(), m.osyms());
  out.SetArcs(std::move(arcs));
  out.SetLambda(lambda);
  out.SetRho(rho);
  return out;
}

// Gamma(E): shortest epsilon-only path of at least one arc between states.
inline TropMatrix EpsilonClosure(const MatrixView &view) {
  return Gamma(view.e);
}

// The label of a rewritten arc i->j comes from the non-epsilon arc k->j that
// attains the minimum of Delta(E)[i][k] + A_eps[k][j]. Among equal weights the
// smaller (ilabel, olabel) pair wins.
inline Wfst RemoveEpsilons(const Wfst &m) {
  const MatrixView view = BuildMatrices(m);
  const std::size_t n = m.num_states();
  const TropMatrix closure =
      PointwiseMin(TropMatrix::Identity(n), EpsilonClosure(view));

  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Arc best{i, j, kNoLabel, kNoLabel, TropWeight::Zero()};
      for (std::size_t k = 0; k < n; ++k) {
        const TropWeight d = closure(i, k);
        const TropWeight w = view.a_eps(k, j);
        if (d.is_pos_inf() || w.is_pos_inf()) continue;
        const TropWeight cost = d + w;
        const std::pair labels(view.sigma_i(k, j), view.sigma_o(k, j));
        if (cost < best.weight ||
            (cost == best.weight &&
             labels < std::pair(best.ilabel, best.olabel))) {
          best.weight = cost;
          best.ilabel = labels.first;
          best.olabel = labels.second;
        }
      }
      if (!best.weight.is_pos_inf()) arcs.push_back(best);
    }
  }

  Wfst out(n);
  out.SetSymbols(m.isyms(), m.osyms());
  out.SetArcs(std::move(arcs));
  out.SetLambda(m.lambda());
  out.SetRho(MinPlusMul(closure, m.rho()));
  return out;
}

// Drops states that are not on any path from an initial to a final state and
// renumbers the survivors in their original order.
inline Wfst Trim(const Wfst &m) {
  CheckWellFormed(m);
  const std::size_t n = m.num_states();
  std::vector<std::vector<StateId>> fwd(n), bwd(n);
  for (const Arc &arc : m.arcs()) {
    fwd[arc.src].push_back(arc.dst);
    bwd[arc.dst].push_back(arc.src);
  }
  auto reach = [n](const TropVector &seeds,
                   const std::vector<std::vector<StateId>> &adj) {
    std::vector<bool> seen(n, false);
    std::deque<StateId> queue;
    for (StateId s = 0; s < n; ++s) {
      if (!seeds[s].is_pos_inf()) {
        seen[s] = true;
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      const StateId s = queue.front();
      queue.pop_front();
      for (StateId t : adj[s]) {
        if (!seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
      }
    }
    return seen;
  };
  const auto accessible = reach(m.lambda(), fwd);
  const auto coaccessible = reach(m.rho(), bwd);

  constexpr StateId kDropped = static_cast<StateId>(-1);
  std::vector<StateId> remap(n, kDropped);
  std::size_t kept = 0;
  for (StateId s = 0; s < n; ++s)
    if (accessible[s] && coaccessible[s]) remap[s] = kept++;

  Wfst out(kept);
  out.SetSymbols(m.isyms(), m.osyms());
  std::vector<Arc> arcs;
  for (const Arc &arc : m.arcs()) {
    if (remap[arc.src] == kDropped || remap[arc.dst] == kDropped) continue;
    Arc moved = arc;
    moved.src = remap[arc.src];
    moved.dst = remap[arc.dst];
    arcs.push_back(moved);
  }
  out.SetArcs(std::move(arcs));
  for (StateId s = 0; s < n; ++s) {
    if (remap[s] == kDropped) continue;
    out.SetInitial(remap[s], m.lambda()[s]);
    out.SetFinal(remap[s], m.rho()[s]);
  }
  return out;
}

// True when min(rho_i, min_j A_ij) = 0 for every state i that can reach a
// final state, where j ranges over such states too. This is the fixed point
// that PushWeights() produces.
inline bool IsPushed(const Wfst &m, double tolerance = 0.0) {
  const MatrixView view = BuildMatrices(m);
  const TropVector v = MinPlusMul(Delta(view.a), m.rho());
  const std::size_t n = m.num_states();
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_pos_inf()) continue;
    TropWeight least = m.rho()[i];
    for (std::size_t j = 0; j < n; ++j)
      if (!v[j].is_pos_inf()) least = Min(least, view.a(i, j));
    if (std::abs(least.value()) > tolerance) return false;
  }
  return true;
}

}  // namespace tropfst

#endif  // TROPFST_TRANSFORMS_HPP_
