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
// Brute-force reference implementations. They use only the data types of the
// library (Wfst, TropMatrix as a container, ObservationModel), never the
// min-plus algebra in matrix.hpp/closure.hpp, so agreement between an oracle
// and the closed-form code is evidence and not a tautology. All of them are
// meant for small machines only.

#ifndef TROPFST_ORACLES_HPP_
#define TROPFST_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "tropfst/errors.hpp"
#include "tropfst/matrix.hpp"
#include "tropfst/observation.hpp"
#include "tropfst/wfst.hpp"

namespace tropfst {
namespace oracle {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct PathRecord {
  std::vector<StateId> states;
  std::vector<Label> ilabels;
  std::vector<Label> olabels;
  double total_cost = 0.0;  // lambda + arcs + rho
};

// Shortest cost from each state to termination, final weight included:
// Bellman-Ford on the reversed graph seeded with rho.
inline TropVector BellmanFordToFinal(const Wfst &m) {
  const std::size_t n = m.num_states();
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = m.rho()[i].value();
  for (std::size_t round = 0; round <= n; ++round) {
    bool changed = false;
    for (const Arc &arc : m.arcs()) {
      const double via = d[arc.dst] + arc.weight.value();
      if (via < d[arc.src]) {
        if (round == n) throw NegativeCycleError(arc.src);
        d[arc.src] = via;
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<TropWeight> out(d.begin(), d.end());
  return TropVector(std::move(out));
}

// All-pairs shortest nonempty paths. Starting from the adjacency matrix
// itself (no zero diagonal) makes d[i][i] the lightest cycle through i.
inline TropMatrix FloydWarshallNonempty(const TropMatrix &w) {
  if (!w.is_square()) throw ShapeError("FloydWarshall: matrix is not square");
  const std::size_t n = w.rows();
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = w(i, j).value();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d[k][j] == kInf) continue;
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (d[i][i] < 0) throw NegativeCycleError(i);
  }
  TropMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = d[i][j];
  return out;
}

// Shortest epsilon-only path of at least one arc, one Bellman-Ford run per
// source state over the subgraph of arcs labelled <eps>:<eps>.
inline TropMatrix EpsilonClosureBellmanFord(const Wfst &m) {
  const std::size_t n = m.num_states();
  std::vector<Arc> eps;
  for (const Arc &arc : m.arcs())
    if (arc.ilabel == kEpsilon && arc.olabel == kEpsilon) eps.push_back(arc);
  TropMatrix out(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<double> d(n, kInf);
    for (const Arc &arc : eps)
      if (arc.src == s && arc.weight.value() < d[arc.dst])
        d[arc.dst] = arc.weight.value();
    for (std::size_t round = 0; round <= n; ++round) {
      bool changed = false;
      for (const Arc &arc : eps) {
        if (d[arc.src] == kInf) continue;
        const double via = d[arc.src] + arc.weight.value();
        if (via < d[arc.dst]) {
          if (round == n) throw NegativeCycleError(arc.dst);
          d[arc.dst] = via;
          changed = true;
        }
      }
      if (!changed) break;
    }
    for (std::size_t j = 0; j < n; ++j) out(s, j) = d[j];
  }
  return out;
}

// Every accepting path with at most max_len arcs, found by depth-first
// search from each initial state in state order.
inline std::vector<PathRecord> EnumeratePaths(const Wfst &m,
                                              std::size_t max_len) {
  const std::size_t n = m.num_states();
  std::vector<std::vector<const Arc *>> out_arcs(n);
  for (const Arc &arc : m.arcs()) out_arcs[arc.src].push_back(&arc);

  std::vector<PathRecord> paths;
  PathRecord current;
  std::function<void(StateId, double)> walk = [&](StateId s, double cost) {
    const double final_weight = m.rho()[s].value();
    if (final_weight != kInf) {
      PathRecord done = current;
      done.total_cost = cost + final_weight;
      paths.push_back(std::move(done));
    }
    if (current.ilabels.size() == max_len) return;
    for (const Arc *arc : out_arcs[s]) {
      current.states.push_back(arc->dst);
      current.ilabels.push_back(arc->ilabel);
      current.olabels.push_back(arc->olabel);
      walk(arc->dst, cost + arc->weight.value());
      current.states.pop_back();
      current.ilabels.pop_back();
      current.olabels.pop_back();
    }
  };
  for (StateId s = 0; s < n; ++s) {
    const double initial = m.lambda()[s].value();
    if (initial == kInf) continue;
    current = PathRecord{{s}, {}, {}, 0.0};
    walk(s, initial);
  }
  return paths;
}

struct ViterbiOracleResult {
  double probability = 0.0;  // max-product score in the probability domain
  double cost = kInf;        // exact cost of `states`, summed in cost domain
  std::vector<StateId> states;
};

// Max-product Viterbi over probabilities w_ji = exp(-A_ji),
// b_i(s) = exp(-p_i(s)). Scores within a relative 1e-12 of each other count
// as tied and the smaller state index wins, mirroring the cost-domain
// decoder's tie-break.
inline ViterbiOracleResult ScalarViterbi(
    const Wfst &m, const ObservationModel &obs,
    const std::vector<std::string> &sequence) {
  constexpr double kRelTol = 1e-12;
  const std::size_t n = m.num_states();
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<double>> cost(n, std::vector<double>(n, kInf));
  for (const Arc &arc : m.arcs()) {
    w[arc.src][arc.dst] = std::exp(-arc.weight.value());
    cost[arc.src][arc.dst] = arc.weight.value();
  }
  auto prob = [](TropWeight c) { return std::exp(-c.value()); };
  auto beats = [](double cand, double best) {
    return cand > 0.0 && cand > best * (1.0 + kRelTol);
  };

  ViterbiOracleResult result;
  std::vector<std::vector<double>> q;
  std::vector<std::vector<StateId>> back;
  if (sequence.empty()) {
    q.emplace_back(n);
    for (std::size_t i = 0; i < n; ++i) q[0][i] = prob(m.lambda()[i]);
  } else {
    const TropVector &p0 = obs.Costs(sequence[0]);
    q.emplace_back(n);
    for (std::size_t i = 0; i < n; ++i)
      q[0][i] = prob(m.lambda()[i]) * prob(p0[i]);
  }
  back.emplace_back(n, static_cast<StateId>(-1));
  for (std::size_t t = 1; t < sequence.size(); ++t) {
    const TropVector &p = obs.Costs(sequence[t]);
    std::vector<double> next(n, 0.0);
    std::vector<StateId> arg(n, static_cast<StateId>(-1));
    for (std::size_t i = 0; i < n; ++i) {
      double best = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double cand = w[j][i] * q.back()[j];
        if (beats(cand, best)) {
          best = cand;
          arg[i] = j;
        }
      }
      next[i] = best * prob(p[i]);
    }
    q.push_back(std::move(next));
    back.push_back(std::move(arg));
  }
  StateId last = static_cast<StateId>(-1);
  for (std::size_t i = 0; i < n; ++i) {
    const double cand = q.back()[i] * prob(m.rho()[i]);
    if (beats(cand, result.probability)) {
      result.probability = cand;
      last = i;
    }
  }
  if (last == static_cast<StateId>(-1)) return result;
  std::vector<StateId> states{last};
  for (std::size_t t = q.size() - 1; t > 0; --t)
    states.insert(states.begin(), back[t][states.front()]);

  double total = m.lambda()[states[0]].value() + m.rho()[states.back()].value();
  for (std::size_t t = 0; t < sequence.size(); ++t)
    total += obs.Costs(sequence[t])[states[t]].value();
  for (std::size_t t = 1; t < states.size(); ++t)
    total += cost[states[t - 1]][states[t]];
  result.cost = total;
  result.states = std::move(states);
  return result;
}

struct ExhaustiveResult {
  double cost = kInf;
  std::vector<StateId> states;  // first minimiser in lexicographic order
};

// Minimum over all n^T state sequences of
//   lambda + sum of transitions + sum of emissions + rho.
inline ExhaustiveResult ExhaustiveViterbi(
    const Wfst &m, const ObservationModel &obs,
    const std::vector<std::string> &sequence) {
  const std::size_t n = m.num_states();
  const std::size_t len = std::max<std::size_t>(sequence.size(), 1);
  std::vector<std::vector<double>> cost(n, std::vector<double>(n, kInf));
  for (const Arc &arc : m.arcs()) cost[arc.src][arc.dst] = arc.weight.value();
  std::vector<const TropVector *> emissions;
  for (const auto &sym : sequence) emissions.push_back(&obs.Costs(sym));

  ExhaustiveResult best;
  if (n == 0) return best;
  std::vector<StateId> states(len, 0);
  while (true) {
    double total = m.lambda()[states[0]].value();
    for (std::size_t t = 0; t < len && total != kInf; ++t) {
      if (t > 0) total += cost[states[t - 1]][states[t]];
      if (t < emissions.size()) total += (*emissions[t])[states[t]].value();
    }
    total += m.rho()[states.back()].value();
    if (total < best.cost) {
      best.cost = total;
      best.states = states;
    }
    // Odometer increment; the last position varies fastest.
    std::size_t pos = len;
    while (pos > 0) {
      --pos;
      if (++states[pos] < n) break;
      states[pos] = 0;
      if (pos == 0) return best;
    }
  }
}

}  // namespace oracle
}  // namespace tropfst

#endif  // TROPFST_ORACLES_HPP_
