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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace emck {

enum class ErrorKind {
  kDuplicateState,
  kEmptyStateName,
  kTooManyStates,
  kUnknownState,
  kInvalidAtoms,
  kAlgebraMismatch,
  kNotMeasurable,
  kTooManyAtoms,
  kInvalidValue,
  kPriorNotNormalized,
  kConditioningOnNull,
  kNotInducible,
  kAssumptionViolated,
  kIncompleteCapacity,
  kRationalOutOfRange,
  kUnknownAgent,
  kUnknownEvent,
  kDuplicateSection,
  kSyntax,
  kResourceLimit,
  kInvalidArgument,
  kOverflow,
  kIo,
};

// Coarse grouping used for exit codes and C API status values.
enum class ErrorCategory { kParse, kInvariant, kHypothesis, kUsage, kResource, kInternal };

const char* to_string(ErrorKind kind);
ErrorCategory category_of(ErrorKind kind);

struct SourceLocation {
  int line = 0;    // 1-based; 0 when unknown
  int column = 0;  // 1-based; 0 when unknown
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, SourceLocation where = {});

  ErrorKind kind() const noexcept { return kind_; }
  ErrorCategory category() const noexcept { return category_of(kind_); }
  const SourceLocation& where() const noexcept { return where_; }
  // Message without the location prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  SourceLocation where_;
  std::string detail_;
};

}  // namespace emck
