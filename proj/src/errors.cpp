// Copyright 2026 The emck Authors.
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

#include "emck/errors.hpp"

namespace emck {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDuplicateState: return "DuplicateState";
    case ErrorKind::kEmptyStateName: return "EmptyStateName";
    case ErrorKind::kTooManyStates: return "TooManyStates";
    case ErrorKind::kUnknownState: return "UnknownState";
    case ErrorKind::kInvalidAtoms: return "InvalidAtoms";
    case ErrorKind::kAlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::kNotMeasurable: return "NotMeasurable";
    case ErrorKind::kTooManyAtoms: return "TooManyAtoms";
    case ErrorKind::kInvalidValue: return "InvalidValue";
    case ErrorKind::kPriorNotNormalized: return "PriorNotNormalized";
    case ErrorKind::kConditioningOnNull: return "ConditioningOnNull";
    case ErrorKind::kNotInducible: return "NotInducible";
    case ErrorKind::kAssumptionViolated: return "AssumptionViolated";
    case ErrorKind::kIncompleteCapacity: return "IncompleteCapacity";
    case ErrorKind::kRationalOutOfRange: return "RationalOutOfRange";
    case ErrorKind::kUnknownAgent: return "UnknownAgent";
    case ErrorKind::kUnknownEvent: return "UnknownEvent";
    case ErrorKind::kDuplicateSection: return "DuplicateSection";
    case ErrorKind::kSyntax: return "SyntaxError";
    case ErrorKind::kResourceLimit: return "ResourceLimit";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kOverflow: return "Overflow";
    case ErrorKind::kIo: return "IoError";
  }
  return "Unknown";
}

ErrorCategory category_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDuplicateState:
    case ErrorKind::kEmptyStateName:
    case ErrorKind::kUnknownState:
    case ErrorKind::kPriorNotNormalized:
    case ErrorKind::kIncompleteCapacity:
    case ErrorKind::kRationalOutOfRange:
    case ErrorKind::kUnknownAgent:
    case ErrorKind::kUnknownEvent:
    case ErrorKind::kDuplicateSection:
    case ErrorKind::kSyntax:
      return ErrorCategory::kParse;
    case ErrorKind::kTooManyStates:
    case ErrorKind::kInvalidAtoms:
    case ErrorKind::kAlgebraMismatch:
    case ErrorKind::kNotMeasurable:
    case ErrorKind::kInvalidValue:
    case ErrorKind::kConditioningOnNull:
    case ErrorKind::kNotInducible:
      return ErrorCategory::kInvariant;
    case ErrorKind::kAssumptionViolated:
      return ErrorCategory::kHypothesis;
    case ErrorKind::kInvalidArgument:
      return ErrorCategory::kUsage;
    case ErrorKind::kTooManyAtoms:
    case ErrorKind::kResourceLimit:
    case ErrorKind::kOverflow:
      return ErrorCategory::kResource;
    case ErrorKind::kIo:
      return ErrorCategory::kInternal;
  }
  return ErrorCategory::kInternal;
}

namespace {

std::string compose(ErrorKind kind, const std::string& message, SourceLocation where) {
  std::string out;
  if (where.line > 0) {
    out += "line " + std::to_string(where.line);
    if (where.column > 0) out += ", column " + std::to_string(where.column);
    out += ": ";
  }
  out += to_string(kind);
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, SourceLocation where)
    : std::runtime_error(compose(kind, message, where)), kind_(kind), where_(where), detail_(message) {}

}  // namespace emck
