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
// Plain-text matrix format used by debugging tools:
//
//   rows cols
//   a00 a01 ...
//   a10 a11 ...
//
// Entries are space-separated; "inf" is +inf and "-inf" is -inf.

#ifndef TROPFST_MATRIX_IO_HPP_
#define TROPFST_MATRIX_IO_HPP_

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "tropfst/errors.hpp"
#include "tropfst/matrix.hpp"

namespace tropfst {

inline void WriteMatrix(std::ostream &os, const TropMatrix &m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ' ';
      os << FormatWeight(m(i, j));
    }
    os << '\n';
  }
}

inline TropMatrix ReadMatrix(std::istream &is) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(is, line)) throw ParseError(1, "missing matrix header");
  ++lineno;
  std::istringstream header(line);
  std::size_t rows = 0, cols = 0;
  std::string extra;
  if (!(header >> rows >> cols) || (header >> extra))
    throw ParseError(lineno, "expected 'rows cols'");
  TropMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!std::getline(is, line))
      throw ParseError(lineno + 1, "missing matrix row");
    ++lineno;
    std::istringstream fields(line);
    std::string tok;
    std::size_t j = 0;
    while (fields >> tok) {
      if (j == cols) throw ParseError(lineno, "too many entries in row");
      TropWeight w;
      if (!ParseWeight(tok, &w)) throw ParseError(lineno, "bad entry '" + tok + "'");
      m(i, j++) = w;
    }
    if (j != cols) throw ParseError(lineno, "too few entries in row");
  }
  return m;
}

}  // namespace tropfst

#endif  // TROPFST_MATRIX_IO_HPP_
