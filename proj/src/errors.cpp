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

#include "gwalg/errors.hpp"

namespace gwalg {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::TowerMismatch: return "TowerMismatch";
    case ErrorKind::RootNotComputable: return "RootNotComputable";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::PresentationMismatch: return "PresentationMismatch";
    case ErrorKind::NotReflective: return "NotReflective";
    case ErrorKind::ZeroBeta: return "ZeroBeta";
    case ErrorKind::NotFiltered: return "NotFiltered";
    case ErrorKind::NonCanonical: return "NonCanonical";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::NotWeyl: return "NotWeyl";
    case ErrorKind::InfiniteOrder: return "InfiniteOrder";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::DegenerateSplit: return "DegenerateSplit";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::NotCyclicCase: return "NotCyclicCase";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::GroupNotClosed: return "GroupNotClosed";
    case ErrorKind::NotEligible: return "NotEligible";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace gwalg
