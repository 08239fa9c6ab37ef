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

#include "emck/events.hpp"
#include "emck/rational.hpp"
#include "emck/report.hpp"

namespace emck {

/// Countably (here: finitely) additive probability measure, stored per atom.
class Prior {
 public:
  /// Weights must be nonnegative and sum to exactly 1 (PriorNotNormalized).
  static Prior from_atom_weights(const SigmaAlgebra& sigma, std::vector<Rational> weights);
  /// Per-state weights are summed into their atoms.
  static Prior from_state_weights(const SigmaAlgebra& sigma, const std::vector<Rational>& weights);

  const SigmaAlgebra& sigma() const noexcept { return sigma_; }
  const Rational& atom_weight(std::size_t j) const { return atom_weights_.at(j); }
  const std::vector<Rational>& atom_weights() const noexcept { return atom_weights_; }
  const Rational& measure(EventIndex e) const { return event_measure_[e]; }
  /// Precondition: `members` is measurable.
  const Rational& measure_mask(StateMask members) const { return event_measure_[sigma_.index_of(members)]; }
  /// Weight of the atom containing `state`.
  const Rational& state_atom_weight(std::size_t state) const { return atom_weights_[sigma_.atom_of(state)]; }
  /// Every atom has positive weight.
  bool full_support() const noexcept;

  friend bool operator==(const Prior& a, const Prior& b) noexcept {
    return a.sigma_ == b.sigma_ && a.atom_weights_ == b.atom_weights_;
  }

 private:
  Prior(SigmaAlgebra sigma, std::vector<Rational> weights);

  SigmaAlgebra sigma_;
  std::vector<Rational> atom_weights_;
  std::vector<Rational> event_measure_;
};

Rational measure_of(const Prior& prior, const Event& e);
/// mu(E | F) = mu(E & F) / mu(F). Throws ConditioningOnNull when mu(F) = 0.
Rational conditional(const Prior& prior, const Event& e, const Event& f);
/// mu(E \ F) == 0.
bool almost_contains(const Prior& prior, const Event& e, const Event& f);
/// mu(E ^ F) == 0.
bool almost_equal(const Prior& prior, const Event& e, const Event& f);
/// Integral of a per-state function; NotMeasurable unless constant on atoms.
Rational expectation(const Prior& prior, std::span<const Rational> per_state);

/// A general set function on a finite sigma-algebra, one value per event.
class SetFunction {
 public:
  /// `values` is indexed by EventIndex; every value must lie in [0,1].
  SetFunction(SigmaAlgebra sigma, std::vector<Rational> values);

  static SetFunction from_atom_weights(const SigmaAlgebra& sigma, const std::vector<Rational>& weights);
  static SetFunction from_prior(const Prior& prior);
  /// Dirac measure at `state`.
  static SetFunction point_mass(const SigmaAlgebra& sigma, std::size_t state);

  const SigmaAlgebra& sigma() const noexcept { return sigma_; }
  const Rational& operator()(EventIndex e) const { return values_.at(e); }
  const Rational& value(const Event& e) const;
  const std::vector<Rational>& values() const noexcept { return values_; }

  friend bool operator==(const SetFunction& a, const SetFunction& b) noexcept {
    return a.sigma_ == b.sigma_ && a.values_ == b.values_;
  }

 private:
  SigmaAlgebra sigma_;
  std::vector<Rational> values_;
};

struct Classification {
  bool normalized = false;  // t(empty) = 0 and t(Omega) = 1
  bool monotone = false;
  bool additive = false;
  bool convex = false;  // supermodular
  bool one_intersection = false;  // t(E) = t(F) = 1 implies t(E & F) = 1

  bool probability() const noexcept { return normalized && additive; }
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Decides every flag over all of Sigma. Uses the covering-pair forms of
/// monotonicity and supermodularity, which are equivalent on a Boolean lattice.
Classification classify(const SetFunction& fn);
Classification classify_values(const SigmaAlgebra& sigma, std::span<const Rational> values);

/// t : Omega x Sigma -> [0,1], stored row-major (state, event).
class TypeMapping {
 public:
  TypeMapping(SigmaAlgebra sigma, std::vector<Rational> table);
  explicit TypeMapping(const std::vector<SetFunction>& rows);

  const SigmaAlgebra& sigma() const noexcept { return sigma_; }
  std::size_t state_count() const noexcept { return sigma_.state_count(); }
  std::size_t event_count() const noexcept { return events_; }
  const Rational& operator()(std::size_t state, EventIndex e) const { return table_[state * events_ + e]; }
  std::span<const Rational> row(std::size_t state) const {
    return {table_.data() + state * events_, events_};
  }
  SetFunction at(std::size_t state) const;
  const std::vector<Rational>& table() const noexcept { return table_; }

  /// States whose type pointwise dominates the type at `state`.
  StateMask up_mask(std::size_t state) const { return up_[state]; }
  StateMask down_mask(std::size_t state) const { return down_[state]; }
  StateMask bracket_mask(std::size_t state) const { return up_[state] & down_[state]; }

  friend bool operator==(const TypeMapping& a, const TypeMapping& b) noexcept {
    return a.sigma_ == b.sigma_ && a.table_ == b.table_;
  }

 private:
  void index_order_sets();

  SigmaAlgebra sigma_;
  std::size_t events_ = 0;
  std::vector<Rational> table_;
  std::vector<StateMask> up_;
  std::vector<StateMask> down_;
};

/// Order sets reported as events; NotMeasurable if the set splits an atom.
Event up_set(const TypeMapping& t, std::size_t state);
Event down_set(const TypeMapping& t, std::size_t state);
Event bracket(const TypeMapping& t, std::size_t state);

/// t(., E) constant on atoms for every E, and every up/down set in Sigma.
CheckReport type_measurability_check(const TypeMapping& t);

}  // namespace emck
