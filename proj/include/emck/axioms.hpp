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

#include "emck/operators.hpp"
#include "emck/report.hpp"

namespace emck {

// Single-agent consistency conditions. Every checker decides its condition by
// exhaustive enumeration (events of Sigma, states, critical thresholds) and
// reports the lexicographically least (p, E, state) witness on failure.

/// mu(E) equals the mu-expectation of t(., E), for every E.
CheckReport check_invariance(const EpistemicModel& model);
/// t(omega, P(omega)) = 1.
CheckReport check_entailment(const EpistemicModel& model);
/// P(omega) within the up set of omega (Self-Evidence of Beliefs).
CheckReport check_self_evidence(const EpistemicModel& model);
/// P(omega) within the down set of omega.
CheckReport check_down_containment(const EpistemicModel& model);

enum class CertaintyMode {
  kExact,         // t(omega, [t(omega)]) = 1 at every state
  kAlmostSurely,  // the failing states form a mu-null set
};

CheckReport check_certainty(const EpistemicModel& model, CertaintyMode mode = CertaintyMode::kExact);
CheckReport check_positive_certainty(const EpistemicModel& model);
CheckReport check_down_certainty(const EpistemicModel& model);

enum class Introspection {
  kBeliefToCertainBelief,        // B^p(E) within B^1(B^p(E))
  kDisbeliefToCertainDisbelief,  // not B^p(E) within B^1(not B^p(E))
  kBeliefToQualitative,          // B^p(E) within K(B^p(E))
  kDisbeliefToQualitative,       // not B^p(E) within K(not B^p(E))
};

const char* to_string(Introspection which);

/// One inclusion over all (p, E) with p in critical_thresholds.
CheckReport check_introspection(const EpistemicModel& model, Introspection which);
/// All four inclusions as parts.
CheckReport check_p_introspection(const EpistemicModel& model);

/// Every t(omega, .) is a probability measure.
CheckReport check_probability_types(const EpistemicModel& model);

/// Probability types, Invariance, Entailment and Self-Evidence.
CheckReport is_regular(const EpistemicModel& model);

struct KripkeReport {
  bool reflexive = false;
  bool transitive = false;
  bool euclidean = false;
  bool partition = false;
  // Operator-level counterparts, decided over Sigma independently.
  bool truth_axiom = false;
  bool positive_introspection = false;
  bool negative_introspection = false;
  CheckReport report;  // parts carry witnesses

  /// Relational and operator-level verdicts agree pairwise.
  bool consistent() const noexcept {
    return reflexive == truth_axiom && transitive == positive_introspection && euclidean == negative_introspection;
  }
};

KripkeReport kripke_properties(const EpistemicModel& model);

/// Operator-level inclusions used by several verifiers.
CheckReport check_truth_axiom(const EpistemicModel& model);
CheckReport check_positive_introspection(const EpistemicModel& model);
CheckReport check_negative_introspection(const EpistemicModel& model);

/// {P(omega)} partitions Omega.
bool poss_is_partition(const Possibility& poss);

}  // namespace emck
