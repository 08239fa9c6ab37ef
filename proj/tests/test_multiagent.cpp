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

#include "doctest.h"
#include "emck/fixtures.hpp"
#include "emck/multiagent.hpp"
#include "test_support.hpp"

using namespace emck;
using emck::testing::mask;

namespace {

InteractiveModel single(std::string_view fixture) { return fixtures::load(fixture).model; }

// Bob's posterior of {1} at state 1 is mu({1} | {1,2}) = (1/2)/(3/4).
const Rational kBobAtOne(2, 3);

}  // namespace

TEST_CASE("IW1 posteriors") {
  const auto im = fixtures::load("iw1").model;
  const auto& s = im.sigma();
  CHECK(im.agent(1).types()(0, s.index_of(mask({0}))) == kBobAtOne);
  CHECK(im.agent(1).types()(2, s.index_of(mask({0}))) == Rational(0));
  CHECK(im.agent(0).types()(0, s.index_of(mask({0}))) == Rational(1));
}

TEST_CASE("mutual operators") {
  const auto im = fixtures::load("iw1").model;
  const Event e(im.sigma(), mask({1, 2}));
  CHECK(mutual_qualitative(im, e).members() == mask({2}));
  const auto one = single("w1");
  CHECK(mutual_qualitative(one, e) == qualitative_belief(one.agent(0), e));
  CHECK(mutual_p_belief(one, Rational(1, 2), e) == p_belief(one.agent(0), Rational(1, 2), e));
}

TEST_CASE("common qualitative belief") {
  const auto im = fixtures::load("iw1").model;
  CHECK(common_qualitative(im, Event(im.sigma(), mask({1, 2}))).is_empty());
  CHECK(common_qualitative(im, Event::full(im.sigma())).members() == im.sigma().all());
  const auto one = single("w1");
  for (const auto& e : enumerate_events(one.sigma())) {
    CHECK(common_qualitative(one, e) == qualitative_belief(one.agent(0), e));
  }
}

TEST_CASE("common p-belief") {
  const auto im = fixtures::load("iw1").model;
  for (const auto& e : enumerate_events(im.sigma())) {
    CHECK(common_p_belief(im, Rational(1), e) == common_qualitative(im, e));
  }
  CHECK(common_p_belief(im, Rational(1), Event::full(im.sigma())).members() == im.sigma().all());
  // At p = 2/3 the crossing cells still agree on {1}.
  CHECK(common_p_belief(im, kBobAtOne, Event(im.sigma(), mask({0}))).members() == mask({0}));
}

TEST_CASE("common p-belief with a constant type") {
  const auto w1 = single("w1").agent(0);
  std::vector<SetFunction> rows(3, SetFunction::from_prior(w1.prior()));
  const EpistemicModel m(w1.prior(), Possibility(w1.sigma(), {7, 7, 7}), TypeMapping(rows));
  const InteractiveModel im({"a"}, {m});
  for (const auto& e : enumerate_events(im.sigma())) {
    for (const auto& p : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
      const StateMask expected = measure_of(im.prior(), e) >= p ? im.sigma().all() : 0;
      CHECK(common_p_belief(im, p, e).members() == expected);
    }
  }
}

TEST_CASE("common knowledge corollary") {
  CHECK(verify_cor_ck(fixtures::load("iw1").model).status == ClaimStatus::kHolds);
  CHECK(verify_cor_ck(single("w1")).status == ClaimStatus::kHolds);
  // Bob's types no longer Bayes: regularity fails.
  const auto im = fixtures::load("iw1").model;
  const auto& bob = im.agent(1);
  std::vector<SetFunction> rows{SetFunction::point_mass(im.sigma(), 0), SetFunction::point_mass(im.sigma(), 0),
                                bob.types().at(2)};
  const EpistemicModel bent(bob.prior(), bob.poss(), TypeMapping(rows));
  const InteractiveModel broken({"alice", "bob"}, {im.agent(0), bent});
  CHECK(verify_cor_ck(broken).status == ClaimStatus::kHypothesisNotMet);
}

TEST_CASE("agreement on IW1") {
  const auto im = fixtures::load("iw1").model;
  const Event d(im.sigma(), mask({0}));
  const auto r = verify_agreement(im, Rational(1), d);
  CHECK(r.passed);
  // Mixed vectors never reach common certainty.
  CHECK(common_p_belief(im, Rational(1), d).is_empty());
  CHECK(verify_agreement(im, kBobAtOne, d).passed);
  CHECK(verify_agreement(im, Rational(0), d).passed);
  CHECK(verify_prop3(im).status == ClaimStatus::kHolds);
  CHECK(verify_prop3(single("w1")).status == ClaimStatus::kHolds);
  CHECK_THROWS_AS(verify_agreement(im, Rational(1), d, 1), Error);
}

TEST_CASE("almost-sure truth of common operators") {
  CHECK(verify_cor_ta_common(fixtures::load("iw1").model).status == ClaimStatus::kHolds);
  const auto w2 = single("w2").agent(0);
  const InteractiveModel twice({"x", "y"}, {w2, w2});
  CHECK(verify_cor_ta_common(twice).status == ClaimStatus::kHolds);
  CHECK(common_p_belief(twice, Rational(1), Event(twice.sigma(), mask({0}))).members() == mask({0, 1}));
}

TEST_CASE("interactive model validation") {
  const auto w1 = single("w1").agent(0);
  const auto w2 = single("w2").agent(0);
  CHECK_THROWS_AS(InteractiveModel({}, {}), Error);
  CHECK_THROWS_AS(InteractiveModel({"a", "a"}, {w1, w1}), Error);
  CHECK_THROWS_AS(InteractiveModel({"a", "b"}, {w1, w2}), Error);
}
