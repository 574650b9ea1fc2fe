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
// Per-state emission costs for decoding. Each symbol s carries a cost vector
// p(s) of dimension n_states, p_i(s) = -log b_i(s).
//
// File format:
//   n_states n_symbols
//   <symbol> c_0 c_1 ... c_{n-1}      (one line per symbol; "inf" allowed)

#ifndef TROPFST_OBSERVATION_HPP_
#define TROPFST_OBSERVATION_HPP_

#include <cstddef>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropfst/errors.hpp"
#include "tropfst/matrix.hpp"

namespace tropfst {

class ObservationModel {
 public:
  explicit ObservationModel(std::size_t num_states = 0)
      : num_states_(num_states) {}

  std::size_t num_states() const { return num_states_; }
  std::size_t num_symbols() const { return costs_.size(); }

  void Add(const std::string &symbol, TropVector costs) {
    if (costs.dim() != num_states_)
      throw ShapeError("emission vector for '" + symbol + "' has dimension " +
                       std::to_string(costs.dim()) + ", expected " +
                       std::to_string(num_states_));
    for (TropWeight c : costs) {
      if (c < TropWeight::One())
        throw DomainError("emission cost for '" + symbol + "' is negative");
    }
    costs_.insert_or_assign(symbol, std::move(costs));
  }

  bool Contains(std::string_view symbol) const {
    return costs_.count(std::string(symbol)) > 0;
  }

  const TropVector &Costs(std::string_view symbol) const {
    auto it = costs_.find(std::string(symbol));
    if (it == costs_.end()) throw SymbolError(std::string(symbol));
    return it->second;
  }

 private:
  std::size_t num_states_;
  std::map<std::string, TropVector> costs_;
};

inline ObservationModel ParseObservationModel(std::istream &is) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() {
    while (std::getline(is, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(1, "missing 'n_states n_symbols' header");
  std::size_t num_states = 0, num_symbols = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> num_states >> num_symbols) || (header >> extra))
      throw ParseError(lineno, "expected 'n_states n_symbols'");
  }
  ObservationModel model(num_states);
  for (std::size_t s = 0; s < num_symbols; ++s) {
    if (!next_line()) throw ParseError(lineno + 1, "missing symbol line");
    std::istringstream fields(line);
    std::string symbol, tok;
    fields >> symbol;
    if (model.Contains(symbol))
      throw ParseError(lineno, "duplicate symbol '" + symbol + "'");
    std::vector<TropWeight> costs;
    while (fields >> tok) {
      TropWeight w;
      if (!ParseWeight(tok, &w))
        throw ParseError(lineno, "bad cost '" + tok + "'");
      if (w < TropWeight::One())
        throw ParseError(lineno, "negative cost '" + tok + "'");
      costs.push_back(w);
    }
    if (costs.size() != num_states)
      throw ParseError(lineno, "expected " + std::to_string(num_states) +
                                   " costs, got " +
                                   std::to_string(costs.size()));
    model.Add(symbol, TropVector(std::move(costs)));
  }
  if (next_line()) throw ParseError(lineno, "trailing content");
  return model;
}

// Whitespace-separated symbol strings.
inline std::vector<std::string> ParseSequence(std::istream &is) {
  std::vector<std::string> seq;
  std::string tok;
  while (is >> tok) seq.push_back(tok);
  return seq;
}

}  // namespace tropfst

#endif  // TROPFST_OBSERVATION_HPP_
