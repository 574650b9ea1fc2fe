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
// Viterbi decoding in the cost domain and beam pruning.
//
// One trellis step is
//   x(t) = P(s_t) (+) A^T (+) x(t-1)
// with P(s) = diag(p(s)), i.e. x_i(t) = p_i(s_t) + min_j (A_ji + x_j(t-1)).
// The trellis starts at x(0) = lambda + p(s_0) and the decoded cost is
// min_i x_i(T-1) + rho_i.
//
// Pruning with leniency theta keeps the entries of the indicator
//   ybar = X# (+)' eta,   X = diag(x),  eta = theta + (x^T (+) x) / 2
// that are non-negative; since (x^T (+) x) / 2 = min x this keeps exactly
// the entries with x_i <= min x + theta. Pruned entries become +inf so the
// trellis keeps its shape.

#ifndef TROPFST_DECODER_HPP_
#define TROPFST_DECODER_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tropfst/closure.hpp"
#include "tropfst/errors.hpp"
#include "tropfst/matrix.hpp"
#include "tropfst/observation.hpp"
#include "tropfst/wfst.hpp"

namespace tropfst {

inline constexpr StateId kNoState = static_cast<StateId>(-1);

// x(t) from x(t-1) in closed matrix form.
inline TropVector ViterbiStep(const TropVector &x_prev, const TropMatrix &a,
                              const TropVector &p) {
  if (!a.is_square() || a.rows() != x_prev.dim() || p.dim() != x_prev.dim())
    throw ShapeError("ViterbiStep: dimensions disagree");
  return MinPlusMul(TropMatrix::Diagonal(p),
                    MinPlusMul(Transpose(a), x_prev));
}

struct TrellisState {
  TropVector x;
  // backpointers[i] is the predecessor of state i, kNoState if x[i] = +inf
  // or at step 0.
  std::vector<StateId> backpointers;
  std::size_t step = 0;
};

namespace internal {

// Same recurrence as ViterbiStep() with the argmin kept. The smallest
// predecessor index wins ties.
inline TrellisState AdvanceTrellis(const TrellisState &prev,
                                   const TropMatrix &a, const TropVector &p) {
  const std::size_t n = prev.x.dim();
  TrellisState next{TropVector(n), std::vector<StateId>(n, kNoState),
                    prev.step + 1};
  for (std::size_t i = 0; i < n; ++i) {
    TropWeight best = TropWeight::Zero();
    StateId arg = kNoState;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(j, i).is_pos_inf() || prev.x[j].is_pos_inf()) continue;
      const TropWeight c = a(j, i) + prev.x[j];
      if (c < best) {
        best = c;
        arg = j;
      }
    }
    if (arg == kNoState || p[i].is_pos_inf()) continue;
    next.x[i] = p[i] + best;
    next.backpointers[i] = arg;
  }
  return next;
}

inline bool AllInfinite(const TropVector &x) {
  return std::all_of(x.begin(), x.end(),
                     [](TropWeight w) { return w.is_pos_inf(); });
}

}  // namespace internal

struct DecodeResult {
  // +inf when no accepting path consumes the sequence.
  TropWeight cost = TropWeight::Zero();
  std::vector<StateId> states;
  // Labels of the arcs between consecutive states; one fewer than states.
  std::vector<Label> ilabels;
  std::vector<Label> olabels;
};

struct PruneReport {
  TropWeight eta = TropWeight::Zero();
  TropVector ybar;
  std::vector<std::size_t> support;
  // eta - x_i on the support, +inf elsewhere.
  TropVector r;
  double nu = 0.0;
  double entropy = 0.0;
  bool degenerate = false;
};

inline PruneReport PruneIndicator(const TropVector &x, TropWeight theta) {
  if (theta < TropWeight::One()) throw DomainError("theta must be >= 0");
  if (internal::AllInfinite(x)) throw EmptyTrellisError();
  PruneReport report;
  const TropWeight quad =
      MinPlusMul(TropMatrix::Row(x), TropMatrix::Column(x))(0, 0);
  report.eta = theta + TropWeight(quad.value() / 2);
  const TropVector eta(x.dim(), report.eta);
  report.ybar =
      MaxPlusMul(CgConjugate(TropMatrix::Diagonal(x)), eta);
  report.r = TropVector(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (report.ybar[i] >= TropWeight::One()) {
      report.support.push_back(i);
      report.r[i] = report.ybar[i];
    }
  }
  return report;
}

inline TropVector PruneStep(const TropVector &x, TropWeight theta) {
  const PruneReport report = PruneIndicator(x, theta);
  TropVector z(x.dim());
  for (std::size_t i : report.support) z[i] = x[i];
  return z;
}

// Normalised volume -(1/|S|) sum_{i in S} log r_i / log max r, with
// r_i = eta - z_i. Survivors on the boundary (r_i = 0) are left out of S.
// Returns nullopt when the value is undefined: eta infinite, S empty, or
// max r <= 1.
inline std::optional<double> NormalizedVolume(const PruneReport &report,
                                              const TropVector &z) {
  if (!report.eta.is_finite()) return std::nullopt;
  std::vector<double> r;
  for (std::size_t i : report.support) {
    if (i >= z.dim() || !z[i].is_finite())
      throw ShapeError("survivor has no finite trellis value");
    const double ri = report.eta.value() - z[i].value();
    if (ri > 0.0) r.push_back(ri);
  }
  if (r.empty()) return std::nullopt;
  const double max_r = *std::max_element(r.begin(), r.end());
  if (max_r <= 1.0) return std::nullopt;
  const double denom = std::log(max_r);
  double sum = 0.0;
  for (double ri : r) sum += std::log(ri) / denom;
  return -sum / static_cast<double>(r.size());
}

inline double MetricNu(const PruneReport &report, const TropVector &z) {
  return NormalizedVolume(report, z).value_or(0.0);
}

// (1/|S|) sum_{i in S} z_i exp(-z_i).
inline double MetricEntropy(const PruneReport &report, const TropVector &z) {
  if (report.support.empty()) throw EmptyTrellisError();
  double sum = 0.0;
  for (std::size_t i : report.support) {
    if (i >= z.dim() || !z[i].is_finite())
      throw ShapeError("survivor has no finite trellis value");
    const double zi = z[i].value();
    sum += zi * std::exp(-zi);
  }
  return sum / static_cast<double>(report.support.size());
}

namespace internal {

inline DecodeResult Backtrace(const Wfst &m, const MatrixView &view,
                              const std::vector<TrellisState> &trellis) {
  DecodeResult result;
  const TrellisState &last = trellis.back();
  StateId best_state = kNoState;
  for (StateId i = 0; i < m.num_states(); ++i) {
    if (last.x[i].is_pos_inf() || m.rho()[i].is_pos_inf()) continue;
    const TropWeight c = last.x[i] + m.rho()[i];
    if (c < result.cost) {
      result.cost = c;
      best_state = i;
    }
  }
  if (best_state == kNoState) return result;
  std::vector<StateId> states{best_state};
  for (std::size_t t = trellis.size() - 1; t > 0; --t)
    states.push_back(trellis[t].backpointers[states.back()]);
  std::reverse(states.begin(), states.end());
  for (std::size_t t = 1; t < states.size(); ++t) {
    result.ilabels.push_back(view.sigma_i(states[t - 1], states[t]));
    result.olabels.push_back(view.sigma_o(states[t - 1], states[t]));
  }
  result.states = std::move(states);
  return result;
}

inline void CheckDecodable(const Wfst &m, const ObservationModel &obs,
                           const std::vector<std::string> &sequence) {
  if (obs.num_states() != m.num_states())
    throw ShapeError("observation model has " +
                     std::to_string(obs.num_states()) +
                     " states, machine has " + std::to_string(m.num_states()));
  for (const auto &sym : sequence) obs.Costs(sym);
}

inline TrellisState InitialTrellis(const Wfst &m, const TropVector &p) {
  TrellisState s;
  s.x = MinPlusMul(TropMatrix::Diagonal(p), m.lambda());
  s.backpointers.assign(m.num_states(), kNoState);
  return s;
}

}  // namespace internal

inline DecodeResult ViterbiDecode(const Wfst &m, const ObservationModel &obs,
                                  const std::vector<std::string> &sequence) {
  const MatrixView view = BuildMatrices(m);
  internal::CheckDecodable(m, obs, sequence);
  if (sequence.empty()) {
    TrellisState start;
    start.x = m.lambda();
    start.backpointers.assign(m.num_states(), kNoState);
    return internal::Backtrace(m, view, {start});
  }
  std::vector<TrellisState> trellis;
  trellis.push_back(internal::InitialTrellis(m, obs.Costs(sequence[0])));
  for (std::size_t t = 1; t < sequence.size(); ++t) {
    trellis.push_back(internal::AdvanceTrellis(trellis.back(), view.a,
                                               obs.Costs(sequence[t])));
  }
  return internal::Backtrace(m, view, trellis);
}

struct MetricsTrace {
  DecodeResult decode;
  std::vector<PruneReport> steps;
};

// Viterbi with pruning after every step, including step 0. Each report holds
// the indicator for the unpruned x(t) together with nu and the entropy of the
// survivors.
inline MetricsTrace DecodeWithMetrics(const Wfst &m,
                                      const ObservationModel &obs,
                                      const std::vector<std::string> &sequence,
                                      TropWeight theta) {
  if (theta < TropWeight::One()) throw DomainError("theta must be >= 0");
  const MatrixView view = BuildMatrices(m);
  internal::CheckDecodable(m, obs, sequence);
  MetricsTrace trace;
  if (sequence.empty()) {
    trace.decode = ViterbiDecode(m, obs, sequence);
    return trace;
  }
  std::vector<TrellisState> trellis;
  for (std::size_t t = 0; t < sequence.size(); ++t) {
    const TropVector &p = obs.Costs(sequence[t]);
    TrellisState state = t == 0
                             ? internal::InitialTrellis(m, p)
                             : internal::AdvanceTrellis(trellis.back(), view.a, p);
    if (internal::AllInfinite(state.x)) throw EmptyTrellisError(t);
    PruneReport report = PruneIndicator(state.x, theta);
    TropVector z(state.x.dim());
    for (std::size_t i : report.support) z[i] = state.x[i];
    const auto nu = NormalizedVolume(report, z);
    report.nu = nu.value_or(0.0);
    report.degenerate = !nu.has_value();
    report.entropy = MetricEntropy(report, z);
    for (std::size_t i = 0; i < z.dim(); ++i)
      if (z[i].is_pos_inf()) state.backpointers[i] = kNoState;
    state.x = std::move(z);
    trellis.push_back(std::move(state));
    trace.steps.push_back(std::move(report));
  }
  trace.decode = internal::Backtrace(m, view, trellis);
  return trace;
}

namespace internal {

inline std::string FormatSig9(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace internal

// CSV with header step,support,eta,nu,entropy,degenerate.
inline void WriteMetricsCsv(std::ostream &os,
                            const std::vector<PruneReport> &steps) {
  os << "step,support,eta,nu,entropy,degenerate\n";
  for (std::size_t t = 0; t < steps.size(); ++t) {
    const PruneReport &r = steps[t];
    os << t << ',' << r.support.size() << ','
       << internal::FormatSig9(r.eta.value()) << ','
       << internal::FormatSig9(r.nu) << ','
       << internal::FormatSig9(r.entropy) << ',' << (r.degenerate ? 1 : 0)
       << '\n';
  }
}

}  // namespace tropfst

#endif  // TROPFST_DECODER_HPP_
