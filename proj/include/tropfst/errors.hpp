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
// Exception types thrown by the library. Every error derives from
// tropfst::Error so callers can catch the whole family at once.

#ifndef TROPFST_ERRORS_HPP_
#define TROPFST_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropfst {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic that has no tropical meaning: NaN, or +inf + -inf.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Operand dimensions do not agree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A closure was requested for a graph with a cycle of negative total weight.
class NegativeCycleError : public Error {
 public:
  explicit NegativeCycleError(std::size_t state)
      : Error("negative-weight cycle through state " + std::to_string(state)),
        state_(state) {}
  std::size_t state() const { return state_; }

 private:
  std::size_t state_;
};

// Malformed text input. Line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A symbol is absent from the table it must be looked up in.
class SymbolError : public Error {
 public:
  explicit SymbolError(const std::string &symbol)
      : Error("unknown symbol '" + symbol + "'"), symbol_(symbol) {}
  const std::string &symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

// A machine fails structural validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Every trellis entry became +inf during decoding.
class EmptyTrellisError : public Error {
 public:
  EmptyTrellisError() : Error("trellis is empty"), step_(kNoStep) {}
  explicit EmptyTrellisError(std::size_t step)
      : Error("trellis is empty at step " + std::to_string(step)),
        step_(step) {}
  static constexpr std::size_t kNoStep = static_cast<std::size_t>(-1);
  // kNoStep when raised outside a decoding loop.
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

}  // namespace tropfst

#endif  // TROPFST_ERRORS_HPP_
