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
// Line-oriented text format for machines:
//
//   I <state> <weight>                           initial weight
//   <src> <dst> <ilabel> <olabel> <weight>       arc
//   F <state> <weight>                           final weight
//
// Labels are symbol strings; "<eps>" is epsilon. Fields are separated by a
// single space and lines end in '\n'. States without an I (F) line have
// initial (final) weight +inf. The number of states is one more than the
// largest state index mentioned.
//
// Canonical output lists I lines by state, then arcs by (src, dst), then
// F lines by state, with weights in shortest round-trip decimal form.

#ifndef TROPFST_TEXT_FORMAT_HPP_
#define TROPFST_TEXT_FORMAT_HPP_

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "tropfst/errors.hpp"
#include "tropfst/weight.hpp"
#include "tropfst/wfst.hpp"

namespace tropfst {

struct ParseOptions {
  // When set, symbols must already be present in these tables; otherwise
  // SymbolError is thrown. When null, tables are built from the input.
  const SymbolTable *isyms = nullptr;
  const SymbolTable *osyms = nullptr;
};

namespace internal {

inline std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

inline StateId ParseState(std::string_view tok, std::size_t lineno) {
  StateId s = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), s);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw ParseError(lineno, "bad state '" + std::string(tok) + "'");
  return s;
}

inline TropWeight ParseWeightField(std::string_view tok, std::size_t lineno) {
  TropWeight w;
  if (!ParseWeight(tok, &w))
    throw ParseError(lineno, "bad weight '" + std::string(tok) + "'");
  return w;
}

}  // namespace internal

inline Wfst ParseText(std::istream &is, const ParseOptions &opts = {}) {
  Wfst m;
  if (opts.isyms != nullptr && opts.osyms != nullptr)
    m.SetSymbols(*opts.isyms, *opts.osyms);
  std::vector<bool> has_initial, has_final;
  auto mark = [](std::vector<bool> &seen, StateId s) {
    if (seen.size() <= s) seen.resize(s + 1, false);
    const bool before = seen[s];
    seen[s] = true;
    return before;
  };
  auto intern = [](SymbolTable &table, const SymbolTable *fixed,
                   std::string_view sym) -> Label {
    if (fixed != nullptr) return fixed->FindOrThrow(sym);
    return table.AddSymbol(std::string(sym));
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = internal::SplitFields(line);
    if (fields.empty()) continue;
    if (fields[0] == "I" || fields[0] == "F") {
      if (fields.size() != 3)
        throw ParseError(lineno, "expected '" + std::string(fields[0]) +
                                     " <state> <weight>'");
      const StateId s = internal::ParseState(fields[1], lineno);
      const TropWeight w = internal::ParseWeightField(fields[2], lineno);
      if (fields[0] == "I") {
        if (mark(has_initial, s))
          throw ParseError(lineno, "duplicate initial weight");
        m.SetInitial(s, w);
      } else {
        if (mark(has_final, s)) throw ParseError(lineno, "duplicate final weight");
        m.SetFinal(s, w);
      }
      continue;
    }
    if (fields.size() != 5)
      throw ParseError(lineno,
                       "expected '<src> <dst> <ilabel> <olabel> <weight>'");
    Arc arc;
    arc.src = internal::ParseState(fields[0], lineno);
    arc.dst = internal::ParseState(fields[1], lineno);
    arc.ilabel = intern(m.mutable_isyms(), opts.isyms, fields[2]);
    arc.olabel = intern(m.mutable_osyms(), opts.osyms, fields[3]);
    arc.weight = internal::ParseWeightField(fields[4], lineno);
    m.EnsureState(std::max(arc.src, arc.dst));
    m.AddArc(arc);
  }
  return m;
}

inline Wfst ParseText(std::string_view text, const ParseOptions &opts = {}) {
  std::istringstream is{std::string(text)};
  return ParseText(is, opts);
}

inline void SerializeText(std::ostream &os, const Wfst &m) {
  for (StateId s = 0; s < m.num_states(); ++s) {
    if (!m.lambda()[s].is_pos_inf())
      os << "I " << s << ' ' << FormatWeight(m.lambda()[s]) << '\n';
  }
  for (const Arc &arc : m.SortedArcs()) {
    os << arc.src << ' ' << arc.dst << ' ' << m.isyms().Symbol(arc.ilabel)
       << ' ' << m.osyms().Symbol(arc.olabel) << ' '
       << FormatWeight(arc.weight) << '\n';
  }
  for (StateId s = 0; s < m.num_states(); ++s) {
    if (!m.rho()[s].is_pos_inf())
      os << "F " << s << ' ' << FormatWeight(m.rho()[s]) << '\n';
  }
}

inline std::string SerializeText(const Wfst &m) {
  std::ostringstream os;
  SerializeText(os, m);
  return os.str();
}

}  // namespace tropfst

#endif  // TROPFST_TEXT_FORMAT_HPP_
