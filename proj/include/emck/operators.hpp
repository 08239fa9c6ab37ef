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

#include <span>
#include <vector>

#include "emck/beliefs.hpp"
#include "emck/events.hpp"
#include "emck/report.hpp"

namespace emck {

/// P : Omega -> Sigma, one information set per state.
class Possibility {
 public:
  /// Each cell must be a member of Sigma (NotMeasurable otherwise).
  Possibility(SigmaAlgebra sigma, std::vector<StateMask> cells);

  const SigmaAlgebra& sigma() const noexcept { return sigma_; }
  StateMask cell(std::size_t state) const { return cells_.at(state); }
  const std::vector<StateMask>& cells() const noexcept { return cells_; }
  Event at(std::size_t state) const { return Event(sigma_, cells_.at(state)); }

  friend bool operator==(const Possibility& a, const Possibility& b) noexcept {
    return a.sigma_ == b.sigma_ && a.cells_ == b.cells_;
  }

 private:
  SigmaAlgebra sigma_;
  std::vector<StateMask> cells_;
};

/// {omega | P(omega) subset of E} in Sigma for every E in Sigma.
CheckReport poss_measurability_check(const Possibility& poss);

struct ModelOptions {
  /// Enforce mu(P(omega)) > 0 at every state. Relaxing it is an explicit choice.
  bool require_positive_cells = true;
};

/// <Omega, Sigma, mu, P, t> for a single agent.
class EpistemicModel {
 public:
  /// Validates shared algebra, measurability of P and t, and (unless relaxed)
  /// mu(P(.)) > 0. Throws NotMeasurable / AlgebraMismatch / AssumptionViolated.
  EpistemicModel(Prior prior, Possibility poss, TypeMapping types, ModelOptions options = {});

  const SigmaAlgebra& sigma() const noexcept { return prior_.sigma(); }
  const StateSpace& space() const noexcept { return sigma().space(); }
  std::size_t state_count() const noexcept { return sigma().state_count(); }
  std::size_t event_count() const noexcept { return types_.event_count(); }
  const Prior& prior() const noexcept { return prior_; }
  const Possibility& poss() const noexcept { return poss_; }
  const TypeMapping& types() const noexcept { return types_; }
  const ModelOptions& options() const noexcept { return options_; }

  /// mu(P(omega)) > 0 everywhere.
  bool positive_cells() const noexcept;
  /// Powerset algebra and mu({omega}) > 0 for every state.
  bool discrete() const noexcept;

  friend bool operator==(const EpistemicModel& a, const EpistemicModel& b) noexcept {
    return a.prior_ == b.prior_ && a.poss_ == b.poss_ && a.types_ == b.types_;
  }

 private:
  Prior prior_;
  Possibility poss_;
  TypeMapping types_;
  ModelOptions options_;
};

/// K(E) = {omega | P(omega) subset of E}.
Event qualitative_belief(const EpistemicModel& model, const Event& e);
/// B^p(E) = {omega | t(omega, E) >= p}; p must lie in [0,1].
Event p_belief(const EpistemicModel& model, const Rational& p, const Event& e);

// Mask-level forms used by the checkers. Arguments must be measurable.
StateMask knows_mask(const EpistemicModel& model, StateMask e) noexcept;
StateMask believes_mask(const EpistemicModel& model, const Rational& p, StateMask e) noexcept;

/// Sorted {0, 1} together with every attained t(omega, E). Each B^p(E) with
/// p in [0,1] equals B^v(E) for the least v in this list with v >= p, so a
/// statement quantified over all p is decided by these values alone.
std::vector<Rational> critical_thresholds(const EpistemicModel& model);
std::vector<Rational> critical_thresholds(const TypeMapping& types);

/// Recovers the unique P inducing a qualitative belief operator given as a
/// table indexed by EventIndex. Throws NotInducible when the table violates
/// Monotonicity, Conjunction or Necessitation.
Possibility poss_from_operator(const SigmaAlgebra& sigma, std::span<const StateMask> k_table);

}  // namespace emck
