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

// Fixture-level checks of the single-agent axioms and theorem verifiers.
// Expected values are derived by hand from the fixture definitions.

#include "doctest.h"
#include "emck/axioms.hpp"
#include "emck/fixtures.hpp"
#include "emck/theorems.hpp"
#include "test_support.hpp"

using namespace emck;
using emck::testing::mask;

namespace {

EpistemicModel agent0(std::string_view fixture, bool allow_null = false) {
  return fixtures::load(fixture, ModelOptions{!allow_null}).model.agent(0);
}

EpistemicModel with_types(const EpistemicModel& m, TypeMapping t) {
  return EpistemicModel(m.prior(), m.poss(), std::move(t), ModelOptions{false});
}

EpistemicModel with_poss(const EpistemicModel& m, std::vector<StateMask> cells) {
  return EpistemicModel(m.prior(), Possibility(m.sigma(), std::move(cells)), m.types(), ModelOptions{false});
}

// W1 with t(1, .) replaced by the point mass at state 2.
EpistemicModel w1_perturbed() {
  const auto w1 = agent0("w1");
  std::vector<SetFunction> rows{SetFunction::point_mass(w1.sigma(), 1), w1.types().at(1), w1.types().at(2)};
  return with_types(w1, TypeMapping(rows));
}

}  // namespace

TEST_CASE("W1 Bayes types") {
  const auto m = agent0("w1");
  const auto& s = m.sigma();
  CHECK(m.types()(1, s.index_of(mask({1}))) == Rational(1, 2));
  CHECK(m.types()(0, s.index_of(mask({0}))) == Rational(1));
  CHECK(m.types()(2, s.index_of(mask({1, 2}))) == Rational(1));
}

TEST_CASE("invariance") {
  CHECK(check_invariance(agent0("w1")).passed);
  CHECK(check_invariance(agent0("w2")).passed);
  const auto r = check_invariance(w1_perturbed());
  REQUIRE_FALSE(r.passed);
  CHECK(r.witnesses.front().event == mask({0}));
  CHECK(r.witnesses.front().value == Rational(0));
}

TEST_CASE("entailment") {
  CHECK(check_entailment(agent0("w1")).passed);
  CHECK(check_entailment(agent0("w2")).passed);
  const auto r = check_entailment(with_poss(agent0("w2"), {mask({0}), mask({1})}));
  REQUIRE_FALSE(r.passed);
  CHECK(r.witnesses.front().state == 1u);
}

TEST_CASE("self-evidence and down containment") {
  CHECK(check_self_evidence(agent0("w2")).passed);
  CHECK(check_down_containment(agent0("w2")).passed);
  const auto w4 = with_poss(agent0("w4"), {mask({0, 1}), mask({0, 1})});
  const auto r = check_self_evidence(w4);
  REQUIRE_FALSE(r.passed);
  CHECK(r.witnesses.front().state == 1u);
  CHECK(r.witnesses.front().other_state == 0u);
}

TEST_CASE("certainty variants on W4 and W1") {
  const auto w4 = agent0("w4");
  CHECK(check_positive_certainty(w4).passed);
  const auto c = check_certainty(w4);
  REQUIRE_FALSE(c.passed);
  CHECK(c.witnesses.front().state == 0u);
  CHECK(c.witnesses.front().value == Rational(0));
  const auto d = check_down_certainty(w4);
  REQUIRE_FALSE(d.passed);
  CHECK(d.witnesses.front().state == 0u);
  const auto w1 = agent0("w1");
  CHECK(check_certainty(w1).passed);
  CHECK(check_positive_certainty(w1).passed);
  CHECK(check_down_certainty(w1).passed);
  CHECK(check_certainty(w4, CertaintyMode::kAlmostSurely).passed == false);
}

TEST_CASE("p-introspection") {
  CHECK(check_p_introspection(agent0("w1")).passed);
  const auto w4 = agent0("w4");
  CHECK(check_introspection(w4, Introspection::kBeliefToCertainBelief).passed);
  const auto r = check_introspection(w4, Introspection::kDisbeliefToCertainDisbelief);
  REQUIRE_FALSE(r.passed);
  CHECK(r.witnesses.front().threshold == Rational(1));
  CHECK(r.witnesses.front().event == mask({1}));
  CHECK(r.witnesses.front().state == 0u);
}

TEST_CASE("regularity") {
  CHECK(is_regular(agent0("w1")).passed);
  CHECK(is_regular(agent0("w2")).passed);
  const auto r = is_regular(agent0("w4"));
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.parts.front().passed);
}

TEST_CASE("kripke properties") {
  const auto k1 = kripke_properties(agent0("w1"));
  CHECK(k1.partition);
  CHECK(k1.consistent());
  const auto k2 = kripke_properties(agent0("w2"));
  CHECK(k2.reflexive);
  CHECK(k2.transitive);
  CHECK_FALSE(k2.euclidean);
  CHECK_FALSE(k2.negative_introspection);
  CHECK(k2.consistent());
  REQUIRE_FALSE(k2.report.witnesses.empty());
  CHECK(k2.report.witnesses.front().state == 1u);
  CHECK(k2.report.witnesses.front().other_state == 0u);
  const auto ni = check_negative_introspection(agent0("w2"));
  CHECK(ni.witnesses.front().event == mask({0}));
  CHECK(ni.witnesses.front().state == 1u);
}

TEST_CASE("theorem main on fixtures") {
  auto r = verify_theorem_main(agent0("w1"));
  CHECK(r.lhs);
  CHECK(r.rhs);
  CHECK(r.status == ClaimStatus::kHolds);
  r = verify_theorem_main(agent0("w2"));
  CHECK(r.lhs);
  CHECK(r.rhs);
  const auto w2 = agent0("w2");
  CHECK(w2.types().bracket_mask(0) == mask({0, 1}));
  CHECK(w2.poss().cell(0) == mask({0}));
  r = verify_theorem_main(w1_perturbed());
  CHECK_FALSE(r.lhs);
  CHECK_FALSE(r.rhs);
  CHECK(r.status == ClaimStatus::kHolds);
  const auto& bayes = r.checks[1];
  REQUIRE_FALSE(bayes.passed);
  CHECK(bayes.witnesses.front().event == mask({0}));
  CHECK(bayes.witnesses.front().state == 0u);
}

TEST_CASE("theorem main refuses null cells, product form does not") {
  const auto w2 = agent0("w2");
  const auto null_cell = with_poss(w2, {mask({0}), mask({1})});
  CHECK_THROWS_AS(verify_theorem_main(null_cell), Error);
  CHECK(verify_theorem_main_product(w2).status == ClaimStatus::kHolds);
  CHECK(verify_theorem_main_product(agent0("w1")).status == ClaimStatus::kHolds);
}

TEST_CASE("bayes and bracket constructions") {
  const auto w1 = agent0("w1");
  const auto t = bayes_type_from_poss(w1.sigma(), w1.prior(), w1.poss());
  CHECK(t == w1.types());
  const auto p = poss_from_type(w1.sigma(), w1.prior(), w1.types());
  CHECK(p == w1.poss());
  const auto w2 = agent0("w2");
  const auto p2 = poss_from_type(w2.sigma(), w2.prior(), w2.types());
  CHECK(p2.cell(0) == mask({0, 1}));
  CHECK(p2.cell(1) == mask({0, 1}));
  const Possibility null_poss(w2.sigma(), {mask({1}), mask({1})});
  CHECK_THROWS_AS(bayes_type_from_poss(w2.sigma(), w2.prior(), null_poss), Error);
}

TEST_CASE("uniqueness corollary") {
  const auto w1 = agent0("w1");
  CHECK(verify_cor_unique(w1, w1).status == ClaimStatus::kHolds);
  CHECK(verify_cor_unique(w1, w1_perturbed()).status == ClaimStatus::kHypothesisNotMet);
  const auto w2 = agent0("w2");
  const auto w2b = with_poss(w2, {mask({0, 1}), mask({0, 1})});
  const auto r = verify_cor_unique(w2, w2b);
  CHECK(r.status == ClaimStatus::kHolds);
  CHECK(r.checks.front().name == "poss-equal-almost-surely");
}

TEST_CASE("discrete corollaries") {
  auto r = verify_cor_main(agent0("w1"));
  CHECK(r.status == ClaimStatus::kHolds);
  CHECK(r.parts.front().status == ClaimStatus::kHolds);
  CHECK(verify_cor_main(agent0("w2")).status == ClaimStatus::kHypothesisNotMet);
  const auto w1 = agent0("w1");
  r = verify_cor_main(with_poss(w1, {mask({0, 1, 2}), mask({1, 2}), mask({1, 2})}));
  CHECK_FALSE(r.lhs);
  CHECK_FALSE(r.rhs);
  CHECK(r.status == ClaimStatus::kHolds);

  CHECK(verify_cor_unaware(w1).status == ClaimStatus::kHolds);
  const auto u = verify_cor_unaware(agent0("w2"));
  CHECK(u.status == ClaimStatus::kHypothesisNotMet);
  REQUIRE_FALSE(u.rhs);
  CHECK(u.checks.front().witnesses.front().event == mask({0}));
  CHECK(u.checks.front().witnesses.front().state == 1u);
}

TEST_CASE("regular partition corollary") {
  auto r = verify_cor_regular(agent0("w1"));
  CHECK(r.lhs);
  CHECK(r.rhs);
  CHECK(r.status == ClaimStatus::kHolds);
  r = verify_cor_regular(agent0("w2"));
  CHECK_FALSE(r.lhs);
  CHECK_FALSE(r.rhs);
  CHECK(r.status == ClaimStatus::kHolds);
}

TEST_CASE("almost-sure truth") {
  CHECK(verify_cor_ta(agent0("w1")).status == ClaimStatus::kHolds);
  const auto w2 = agent0("w2");
  CHECK(verify_cor_ta(w2).status == ClaimStatus::kHolds);
  CHECK(believes_mask(w2, Rational(1), mask({0})) == mask({0, 1}));
  // Swapped point masses on a full-support prior.
  const auto w4 = agent0("w4");
  std::vector<SetFunction> rows{SetFunction::point_mass(w4.sigma(), 1), SetFunction::point_mass(w4.sigma(), 0)};
  const auto r = verify_cor_ta(with_types(w4, TypeMapping(rows)));
  CHECK(r.status == ClaimStatus::kHypothesisNotMet);
  CHECK_FALSE(r.rhs);
}

TEST_CASE("prop-1 verifier") {
  const auto r = verify_prop1(agent0("w4"));
  CHECK(r.status == ClaimStatus::kHolds);
  REQUIRE(r.parts.size() == 2);
  CHECK(r.parts[0].lhs);
  CHECK(r.parts[0].rhs);
  CHECK_FALSE(r.parts[1].lhs);
  CHECK_FALSE(r.parts[1].rhs);
  const auto& w = r.parts[1].checks[1].witnesses.front();
  CHECK(w.threshold == Rational(1));
  CHECK(w.event == mask({1}));
  CHECK(w.state == 0u);
  CHECK(r.parts[1].checks[0].witnesses.front().state == 0u);
  const auto w1 = verify_prop1(agent0("w1"));
  CHECK(w1.parts[0].lhs);
  CHECK(w1.parts[1].lhs);
  CHECK(w1.status == ClaimStatus::kHolds);
}

TEST_CASE("prop-1 verifier refuses non-monotone types") {
  const auto w4 = agent0("w4");
  const auto& s = w4.sigma();
  std::vector<Rational> table(w4.types().table());
  // t(a,{a}) = 1 above t(a,Omega) = 1/2.
  table[s.index_of(mask({0}))] = Rational(1);
  table[s.index_of(mask({0, 1}))] = Rational(1, 2);
  const auto r = verify_prop1(with_types(w4, TypeMapping(s, table)));
  CHECK(r.status == ClaimStatus::kHypothesisNotMet);
}

TEST_CASE("prop-2 verifier") {
  auto r = verify_prop2(agent0("w1"));
  CHECK(r.status == ClaimStatus::kHolds);
  CHECK(r.parts[0].lhs);
  CHECK(r.parts[1].lhs);
  const auto w4 = with_poss(agent0("w4"), {mask({0, 1}), mask({0, 1})});
  r = verify_prop2(w4);
  CHECK(r.status == ClaimStatus::kHolds);
  CHECK_FALSE(r.parts[0].lhs);
  CHECK_FALSE(r.parts[0].rhs);
  const auto& w = r.parts[0].checks[1].witnesses.front();
  CHECK(w.threshold == Rational(1));
  CHECK(w.event == mask({1}));
  r = verify_prop2(agent0("w2"));
  CHECK(r.parts[0].lhs);
  CHECK(r.parts[0].rhs);
  CHECK(r.parts[1].lhs);
  CHECK(r.parts[1].rhs);
}
