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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emck/errors.hpp"
#include "emck/multiagent.hpp"

namespace emck {

// The .emod format, line oriented, '#' starts a comment:
//
//   states: s1 s2 ...
//   sigma: powerset | atoms {s..} {s..} ...     (optional, default powerset)
//   prior: s1=p/q s2=p/q ...                     (unlisted states weigh 0)
//   agent NAME:
//     poss: s1 -> {s..}; s2 -> {s..}; ...
//     type: bayes | additive | capacity
//       s1: s=p/q ...                            (additive: per-state weights)
//       s1: {s..}=p/q {s..}=p/q ...              (capacity: every event of Sigma)
//   event NAME = {s..}

struct NamedEvent {
  std::string name;
  StateMask members = 0;
  friend bool operator==(const NamedEvent&, const NamedEvent&) = default;
};

/// One agent block as written; types are materialised at build time.
struct AgentSource {
  std::string name;
  SourceLocation at;
  std::optional<std::vector<StateMask>> poss;
  SourceLocation poss_at;
  std::optional<TypeSource> source;
  SourceLocation type_at;
  std::vector<std::vector<Rational>> weights;               // additive: [state][state]
  std::vector<std::vector<std::optional<Rational>>> table;  // capacity: [state][event]
  std::vector<SourceLocation> row_at;                       // per state, line of its first row
};

/// A syntactically valid document before any semantic model is built.
struct ModelSource {
  SigmaAlgebra sigma;
  std::vector<Rational> prior_weights;  // per state
  SourceLocation prior_at;
  std::vector<AgentSource> agents;
  std::vector<NamedEvent> events;
  std::map<std::string, SourceLocation> event_at;
};

/// A loaded document: the interactive model plus its named events.
struct ModelDoc {
  InteractiveModel model;
  std::vector<NamedEvent> events;
  std::map<std::string, SourceLocation> locations;  // "agent NAME", "event NAME", "prior"

  std::optional<StateMask> event(std::string_view name) const;
  friend bool operator==(const ModelDoc& a, const ModelDoc& b) noexcept {
    return a.model == b.model && a.events == b.events;
  }
};

/// Syntax and parse-level checks only. Every error carries a location.
ModelSource parse_source(std::string_view text);
/// Builds the model (Bayes types, measurability, assumptions); errors are
/// located at the offending section.
/// How build_model derives one side of each agent from the other.
enum class Completion {
  kNone,
  kBayesFromPoss,  // ignore stated types; derive mu( . | P) from the correspondence
  kPossFromType,   // ignore stated correspondences; induce P from the types
};

ModelDoc build_model(const ModelSource& source, ModelOptions options = {}, Completion completion = Completion::kNone);
ModelDoc parse_model(std::string_view text, ModelOptions options = {});

struct SerializeOptions {
  /// Emit Bayes agents as explicit additive tables.
  bool expand_types = false;
};

/// Canonical text: declaration order, reduced rationals, single spaces.
std::string serialize_model(const ModelDoc& doc, SerializeOptions options = {});
std::string serialize_model(const InteractiveModel& model, SerializeOptions options = {});

/// JSON mirror of the document structure.
std::string model_to_json(const ModelDoc& doc);

/// Operator expressions: ~ binds tighter than &, & tighter than |.
struct Expr {
  enum class Kind { kName, kLiteral, kNot, kAnd, kOr, kKnows, kBelieves, kCommon, kCommonP };
  Kind kind = Kind::kName;
  std::string name;                 // event name (kName) or agent (kKnows, kBelieves)
  std::vector<std::string> states;  // kLiteral
  Rational p;                       // kBelieves, kCommonP
  std::vector<std::shared_ptr<const Expr>> args;
  SourceLocation at;
};

Expr parse_expr(std::string_view text);
/// Resolves names against the document; UnknownEvent / UnknownAgent / UnknownState.
Event eval_expr(const ModelDoc& doc, const Expr& expr);
Event eval_expr(const ModelDoc& doc, std::string_view text);

}  // namespace emck
