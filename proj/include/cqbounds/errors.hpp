// Copyright 2026 The cqbounds Authors
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

#ifndef CQBOUNDS_ERRORS_HPP_
#define CQBOUNDS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cqbounds {

// Base class for every error raised by the library. The CLI maps each
// subclass to a stable process exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands of incompatible dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation (epsilon not in
// (0,1), negative rate, non-normalized state, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A materialization or enumeration guard was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

// An operation that requires pairwise commuting operators received a
// non-commuting family.
class CommutativityError : public Error {
 public:
  CommutativityError(const std::string& what, double commutator_norm)
      : Error(what), commutator_norm_(commutator_norm) {}
  double commutator_norm() const { return commutator_norm_; }

 private:
  double commutator_norm_;
};

// Malformed input file. line/column are 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// An iterative numerical routine failed to converge.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace cqbounds

#endif  // CQBOUNDS_ERRORS_HPP_
