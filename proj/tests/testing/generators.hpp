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
// Random instance generators and comparison helpers shared by the unit and
// acceptance suites. Everything is seeded explicitly so runs are repeatable.

#ifndef TROPFST_TESTS_TESTING_GENERATORS_HPP_
#define TROPFST_TESTS_TESTING_GENERATORS_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tropfst/matrix.hpp"
#include "tropfst/observation.hpp"
#include "tropfst/oracles.hpp"
#include "tropfst/wfst.hpp"

namespace tropfst::testing {

using Rng = std::mt19937_64;

inline int UniformInt(Rng &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool Coin(Rng &rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

// Square integer matrix without negative cycles: arc weights are reduced
// costs w + phi_i - phi_j with w >= 0, so every cycle weighs sum w >= 0.
// Some arcs are negative.
inline TropMatrix RandomNoNegativeCycleMatrix(Rng &rng, std::size_t n,
                                              double density) {
  std::vector<int> phi(n);
  for (auto &p : phi) p = UniformInt(rng, -5, 5);
  TropMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (Coin(rng, density))
        m(i, j) = UniformInt(rng, 0, 9) + phi[i] - phi[j];
  return m;
}

inline TropMatrix RandomIntMatrix(Rng &rng, std::size_t rows, std::size_t cols,
                                  double inf_prob, int lo = -9, int hi = 9) {
  TropMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!Coin(rng, inf_prob)) m(i, j) = UniformInt(rng, lo, hi);
  return m;
}

inline TropMatrix RandomRealMatrix(Rng &rng, std::size_t rows,
                                   std::size_t cols, double inf_prob) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  TropMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!Coin(rng, inf_prob)) m(i, j) = u(rng);
  return m;
}

struct AcyclicOptions {
  std::size_t max_states = 8;
  std::size_t max_arcs = 12;
  double epsilon_prob = 0.3;
  int max_weight = 9;
};

// Random acyclic machine: arcs only go from lower to higher state index, at
// most one per pair, integer weights in [0, max_weight]. State 0 is always
// initial and the last state always final.
inline Wfst RandomAcyclicMachine(Rng &rng, const AcyclicOptions &opts = {}) {
  static const char *kIn[] = {"a", "b", "c"};
  static const char *kOut[] = {"A", "B", "C"};
  const auto n = static_cast<std::size_t>(
      UniformInt(rng, 1, static_cast<int>(opts.max_states)));
  Wfst m(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  const std::size_t num_arcs = std::min(
      pairs.size(), static_cast<std::size_t>(
                        UniformInt(rng, 0, static_cast<int>(opts.max_arcs))));
  pairs.resize(num_arcs);
  std::sort(pairs.begin(), pairs.end());
  for (const auto &[i, j] : pairs) {
    const int w = UniformInt(rng, 0, opts.max_weight);
    if (Coin(rng, opts.epsilon_prob)) {
      m.AddArc(i, j, "<eps>", "<eps>", w);
    } else {
      m.AddArc(i, j, kIn[UniformInt(rng, 0, 2)], kOut[UniformInt(rng, 0, 2)],
               w);
    }
  }
  m.SetInitial(0, UniformInt(rng, 0, opts.max_weight));
  if (n > 1 && Coin(rng, 0.3))
    m.SetInitial(static_cast<std::size_t>(UniformInt(rng, 1, static_cast<int>(n) - 1)),
                 UniformInt(rng, 0, opts.max_weight));
  for (std::size_t s = 0; s + 1 < n; ++s)
    if (Coin(rng, 0.35)) m.SetFinal(s, UniformInt(rng, 0, opts.max_weight));
  m.SetFinal(n - 1, UniformInt(rng, 0, opts.max_weight));
  return m;
}

// Random (possibly cyclic) decoding model with integer costs. Arc weights,
// initial/final weights and emissions are in [0, 9].
struct DecodingInstance {
  Wfst machine;
  ObservationModel obs;
  std::vector<std::string> sequence;
};

inline DecodingInstance RandomDecodingInstance(Rng &rng, std::size_t max_states,
                                               std::size_t max_len) {
  const auto n = static_cast<std::size_t>(
      UniformInt(rng, 1, static_cast<int>(max_states)));
  DecodingInstance inst{Wfst(n), ObservationModel(n), {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (Coin(rng, 0.6))
        inst.machine.AddArc(i, j, "t", "T", UniformInt(rng, 0, 9));
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || Coin(rng, 0.4))
      inst.machine.SetInitial(i, UniformInt(rng, 0, 9));
    if (i + 1 == n || Coin(rng, 0.5))
      inst.machine.SetFinal(i, UniformInt(rng, 0, 9));
  }
  for (const char *sym : {"x", "y", "z"}) {
    TropVector costs(n);
    for (std::size_t i = 0; i < n; ++i)
      costs[i] = Coin(rng, 0.1) ? TropWeight::Zero()
                                : TropWeight(UniformInt(rng, 0, 9));
    inst.obs.Add(sym, costs);
  }
  const int len = UniformInt(rng, 1, static_cast<int>(max_len));
  for (int t = 0; t < len; ++t)
    inst.sequence.push_back(std::string(1, "xyz"[UniformInt(rng, 0, 2)]));
  return inst;
}

// (input labels, output labels, cost) with epsilon labels dropped.
using WeightedString =
    std::tuple<std::vector<std::string>, std::vector<std::string>, double>;

inline std::vector<WeightedString> PathMultiset(const Wfst &m,
                                                std::size_t max_len) {
  std::vector<WeightedString> out;
  for (const auto &path : oracle::EnumeratePaths(m, max_len)) {
    WeightedString ws;
    for (Label l : path.ilabels)
      if (l != kEpsilon) std::get<0>(ws).push_back(m.isyms().Symbol(l));
    for (Label l : path.olabels)
      if (l != kEpsilon) std::get<1>(ws).push_back(m.osyms().Symbol(l));
    std::get<2>(ws) = path.total_cost;
    out.push_back(std::move(ws));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Minimal cost of each accepted (input string, output string) pair.
inline std::map<std::pair<std::vector<std::string>, std::vector<std::string>>,
                double>
MinCostMap(const Wfst &m, std::size_t max_len) {
  std::map<std::pair<std::vector<std::string>, std::vector<std::string>>,
           double>
      best;
  for (auto &[in, out, cost] : PathMultiset(m, max_len)) {
    auto key = std::pair(in, out);
    auto it = best.find(key);
    if (it == best.end() || cost < it->second) best[key] = cost;
  }
  return best;
}

// True when, for some state pair (i, j), the epsilon closure offers two
// non-epsilon arcs into j with different label pairs. Epsilon removal keeps a
// single arc per pair, so such machines lose strings; the semantic
// preservation property only holds without conflicts. Computed with the
// Bellman-Ford oracle, independently of the library's closure.
inline bool HasClosureLabelConflict(const Wfst &m) {
  const std::size_t n = m.num_states();
  const TropMatrix closure = oracle::EpsilonClosureBellmanFord(m);
  std::vector<std::vector<const Arc *>> into(n);
  for (const Arc &arc : m.arcs())
    if (!arc.is_epsilon()) into[arc.dst].push_back(&arc);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::set<std::pair<Label, Label>> labels;
      for (const Arc *arc : into[j]) {
        const bool reachable =
            arc->src == i || !closure(i, arc->src).is_pos_inf();
        if (reachable) labels.emplace(arc->ilabel, arc->olabel);
      }
      if (labels.size() > 1) return true;
    }
  }
  return false;
}

}  // namespace tropfst::testing

#endif  // TROPFST_TESTS_TESTING_GENERATORS_HPP_
