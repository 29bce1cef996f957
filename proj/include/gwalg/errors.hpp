/*
   Copyright 2026 The gwalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GWALG_ERRORS_HPP
#define GWALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gwalg {

enum class ErrorKind {
  DivisionByZero,
  TowerMismatch,
  RootNotComputable,
  ZeroInput,
  BothZero,
  PresentationMismatch,
  NotReflective,
  ZeroBeta,
  NotFiltered,
  NonCanonical,
  DegreeTooSmall,
  NotWeyl,
  InfiniteOrder,
  WrongDegree,
  DegenerateSplit,
  BadOrder,
  NotCyclicCase,
  NotSymmetric,
  HypothesisViolation,
  GroupNotClosed,
  NotEligible,
  NotPrime,
  InvalidArgument,
  ParseError,
  UnknownCommand,
  Internal
};

const char* error_kind_name(ErrorKind k);

/// Domain error carrying a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Grammar error with the offending character span.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t begin, std::size_t end)
      : Error(ErrorKind::ParseError, what), begin_(begin), end_(end) {}
  std::size_t begin() const { return begin_; }
  std::size_t end() const { return end_; }

 private:
  std::size_t begin_, end_;
};

}  // namespace gwalg

#endif
