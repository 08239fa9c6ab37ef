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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emck/events.hpp"
#include "emck/rational.hpp"

namespace emck {

/// One concrete violation: some subset of (threshold, event, state, other state).
struct Witness {
  std::optional<std::size_t> state;
  std::optional<std::size_t> other_state;
  std::optional<StateMask> event;
  std::optional<Rational> threshold;
  std::optional<Rational> value;  // attained value, when informative
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of one exhaustively decided axiom or condition.
struct CheckReport {
  std::string name;
  bool passed = true;
  std::vector<Witness> witnesses;  // nonempty iff !passed (first witness is lexicographically minimal)
  std::string scope;               // what was quantified over
  std::vector<CheckReport> parts;  // sub-checks of compound conditions

  void fail(Witness w) {
    passed = false;
    witnesses.push_back(std::move(w));
  }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

enum class ClaimKind { kIff, kImplication };
enum class ClaimStatus { kHolds, kFalsified, kHypothesisNotMet };

const char* to_string(ClaimStatus status);
const char* to_string(ClaimKind kind);

struct Hypothesis {
  std::string name;
  bool holds = false;

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

/// Result of evaluating both sides of a claim independently.
///
/// For kIff claims lhs and rhs are the two sides. For kImplication claims lhs
/// is "all hypotheses hold" and rhs is "the conclusion holds".
struct VerificationReport {
  std::string claim;
  ClaimKind kind = ClaimKind::kIff;
  bool lhs = false;
  bool rhs = false;
  ClaimStatus status = ClaimStatus::kHolds;
  std::vector<Hypothesis> hypotheses;
  std::vector<Witness> witnesses;
  std::vector<CheckReport> checks;
  std::vector<VerificationReport> parts;
  std::vector<std::pair<std::string, std::string>> notes;

  /// kIff: lhs == rhs. kImplication: !lhs || rhs.
  bool equivalent() const noexcept { return kind == ClaimKind::kIff ? lhs == rhs : (!lhs || rhs); }
  bool hypotheses_hold() const noexcept;
  /// Falsified here, or in a part of a report whose own hypotheses hold.
  bool falsified() const noexcept;
  /// The claimed statement holds on this model regardless of hypotheses:
  /// sides agree (kIff) or the conclusion holds (kImplication), recursively
  /// over parts whose own hypotheses hold.
  bool conclusion_holds() const noexcept;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Sets `status` from hypotheses, sides and parts. For kImplication reports
/// lhs is first set to hypotheses_hold(). When falsified, witnesses of the
/// failing checks are copied up so the report explains itself.
void settle(VerificationReport& report);

std::string to_json(const CheckReport& report, const StateSpace& space);
std::string to_json(const VerificationReport& report, const StateSpace& space);
std::string to_text(const CheckReport& report, const StateSpace& space);
std::string to_text(const VerificationReport& report, const StateSpace& space);

CheckReport check_report_from_json(std::string_view json, const StateSpace& space);
VerificationReport verification_report_from_json(std::string_view json, const StateSpace& space);

}  // namespace emck
