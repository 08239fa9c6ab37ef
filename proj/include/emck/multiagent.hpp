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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emck/operators.hpp"
#include "emck/report.hpp"

namespace emck {

/// How an agent's types were given; kept so documents re-serialize as written.
enum class TypeSource { kBayes, kAdditive, kCapacity };

const char* to_string(TypeSource source);

/// <(Omega, Sigma, mu), (P_i, t_i)_{i in I}> with a finite, ordered agent set.
class InteractiveModel {
 public:
  /// At least one agent, unique nonempty names, one shared prior.
  /// `sources` defaults to kCapacity for every agent.
  InteractiveModel(std::vector<std::string> names, std::vector<EpistemicModel> models,
                   std::vector<TypeSource> sources = {});

  const SigmaAlgebra& sigma() const noexcept { return models_.front().sigma(); }
  const StateSpace& space() const noexcept { return sigma().space(); }
  const Prior& prior() const noexcept { return models_.front().prior(); }
  std::size_t agent_count() const noexcept { return models_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const EpistemicModel& agent(std::size_t i) const { return models_.at(i); }
  const std::vector<EpistemicModel>& agents() const noexcept { return models_; }
  TypeSource source(std::size_t i) const { return sources_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Every agent's model is regular.
  bool regular() const;
  bool discrete() const noexcept { return models_.front().discrete(); }

  friend bool operator==(const InteractiveModel& a, const InteractiveModel& b) noexcept {
    return a.names_ == b.names_ && a.models_ == b.models_ && a.sources_ == b.sources_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<EpistemicModel> models_;
  std::vector<TypeSource> sources_;
};

// Mask-level operators; arguments must be measurable.
StateMask mutual_knows_mask(const InteractiveModel& im, StateMask e) noexcept;
StateMask mutual_believes_mask(const InteractiveModel& im, const Rational& p, StateMask e) noexcept;
/// C(E) from the transitive closure of the union of the P_i.
StateMask common_knows_mask(const InteractiveModel& im, StateMask e);
/// C(E) as the intersection of the first |Omega| iterates of the mutual operator.
StateMask common_knows_iterative_mask(const InteractiveModel& im, StateMask e);
/// C^p(E): intersection of every iterate n >= 1 of the mutual p-belief
/// operator, found by running the iteration until an iterate repeats.
StateMask common_believes_mask(const InteractiveModel& im, const Rational& p, StateMask e);

Event mutual_qualitative(const InteractiveModel& im, const Event& e);
Event mutual_p_belief(const InteractiveModel& im, const Rational& p, const Event& e);
/// Computes the closure form and cross-checks it against the iterative form.
Event common_qualitative(const InteractiveModel& im, const Event& e);
Event common_p_belief(const InteractiveModel& im, const Rational& p, const Event& e);

/// Union of every agent's critical thresholds.
std::vector<Rational> critical_thresholds(const InteractiveModel& im);

/// Discrete regular interactive models: C = C^1 and C is S5.
VerificationReport verify_cor_ck(const InteractiveModel& im);

inline constexpr std::uint64_t kDefaultAgreementBudget = std::uint64_t{1} << 20;

/// For every attainable posterior vector r of E, with D the event where it is
/// realised: nonempty C^p(D) forces |r_i - r_j| <= 1 - p and nonempty C(D)
/// forces r_i = r_j. ResourceLimit when the vectors exceed `budget`.
CheckReport verify_agreement(const InteractiveModel& im, const Rational& p, const Event& e,
                             std::uint64_t budget = kDefaultAgreementBudget);

/// verify_agreement over every event and every critical threshold, for
/// regular models.
VerificationReport verify_prop3(const InteractiveModel& im, std::uint64_t budget = kDefaultAgreementBudget);

/// C and C^1 satisfy the Truth Axiom mu-a.s. and t_i(omega, .)-a.s.
VerificationReport verify_cor_ta_common(const InteractiveModel& im);

}  // namespace emck
