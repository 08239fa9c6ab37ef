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

#include "emck/axioms.hpp"
#include "emck/operators.hpp"
#include "emck/report.hpp"

namespace emck {

// Verifiers evaluate both sides of each claim independently and never use the
// claim itself as a shortcut. Reports carry every sub-check.

/// t(omega, E) = mu(E | P(omega)) for all (omega, E). Fails at null cells.
CheckReport check_bayes_identity(const EpistemicModel& model);
/// mu(E & P(omega)) = mu(P(omega)) t(omega, E) for all (omega, E).
CheckReport check_product_identity(const EpistemicModel& model);
/// P(omega) within [t(omega)].
CheckReport check_poss_within_bracket(const EpistemicModel& model);
/// mu([t(omega)] \ P(omega)) = 0 at every state.
CheckReport check_bracket_within_poss_as(const EpistemicModel& model);
/// P(omega) = [t(omega)] exactly.
CheckReport check_poss_is_bracket(const EpistemicModel& model);

/// Regularity against (i) Bayes identity, (ii) P within [t], (iii) [t] within
/// P mu-a.s. Throws AssumptionViolated when some mu(P(omega)) = 0.
VerificationReport verify_theorem_main(const EpistemicModel& model);
/// Same with (i) in product form; equivalence is asserted only when every
/// cell has positive prior mass.
VerificationReport verify_theorem_main_product(const EpistemicModel& model);

/// t(omega, .) = mu(. | P(omega)). Throws ConditioningOnNull on a null cell.
TypeMapping bayes_type_from_poss(const SigmaAlgebra& sigma, const Prior& prior, const Possibility& poss);
/// P(omega) = [t(omega)]. Throws NotMeasurable when the types are not.
Possibility poss_from_type(const SigmaAlgebra& sigma, const Prior& prior, const TypeMapping& types);

/// Two regular models on the same (Omega, Sigma, mu). With a shared P the
/// conclusion is t = t'; with shared types it is mu(P(omega) ^ P'(omega)) = 0
/// at every state. InvalidArgument when they share neither.
VerificationReport verify_cor_unique(const EpistemicModel& a, const EpistemicModel& b);

/// Discrete models: regular iff P = [t]; when regular K = B^1, K is S5,
/// B^1 is closed under finite conjunction and P(omega) is the support of t(omega).
VerificationReport verify_cor_main(const EpistemicModel& model);

/// not K(E) & not K(not K(E)) empty for every E.
CheckReport check_unawareness(const EpistemicModel& model);
/// Discrete regular models are unaware of nothing.
VerificationReport verify_cor_unaware(const EpistemicModel& model);

/// (a) partition, probability types, Invariance, Entailment, Self-Evidence
/// iff (b) P = [t] and t = mu(. | P), plus the two derived equivalences.
VerificationReport verify_cor_regular(const EpistemicModel& model);

/// B^1 and K satisfy the Truth Axiom mu-a.s. and t(omega, .)-a.s. In
/// type-only mode the hypotheses are Invariance, Certainty and
/// mu([t(omega)]) > 0, and only B^1 is checked.
VerificationReport verify_cor_ta(const EpistemicModel& model, bool type_only = false);

/// Monotone one-intersection types: Positive Certainty iff B^p within B^1 B^p;
/// if moreover t(., Omega) = 1, down-certainty iff not B^p within B^1 not B^p.
VerificationReport verify_prop1(const EpistemicModel& model);

/// Self-Evidence iff B^p within K B^p; P within down set iff not B^p within K not B^p.
VerificationReport verify_prop2(const EpistemicModel& model);

}  // namespace emck
