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

#include <doctest.h>

#include <random>

#include "emck/beliefs.hpp"
#include "emck/errors.hpp"
#include "emck/events.hpp"
#include "emck/fixtures.hpp"
#include "emck/operators.hpp"
#include "test_support.hpp"

using namespace emck;
using emck::testing::mask;

namespace {

// Pairwise definitions, quantified over every (E, F).
Classification classify_by_pairs(const std::vector<Rational>& v) {
  const std::size_t n = v.size();
  Classification c{v.front().is_zero() && v.back().is_one(), true, true, true, true};
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t f = 0; f < n; ++f) {
      if ((e & f) == e && v[e] > v[f]) c.monotone = false;
      if ((e & f) == 0 && v[e | f] != v[e] + v[f]) c.additive = false;
      if (v[e] + v[f] > v[e & f] + v[e | f]) c.convex = false;
      if (v[e].is_one() && v[f].is_one() && !v[e & f].is_one()) c.one_intersection = false;
    }
  }
  return c;
}

SigmaAlgebra powerset_of(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return SigmaAlgebra::powerset(StateSpace(names));
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3) == Rational(-1, 3));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(5, 6).str() == "5/6");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK_FALSE(Rational::parse("0.5").has_value());
  CHECK_FALSE(Rational::parse("1/0").has_value());
  CHECK_FALSE(Rational::parse("").has_value());
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational field laws on random values") {
  std::mt19937_64 rng(3);
  const auto draw = [&] { return Rational(static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 12) + 1); };
  for (int i = 0; i < 2000; ++i) {
    const auto a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rational::parse(a.str()) == a);
  }
}

TEST_CASE("state spaces and algebras") {
  CHECK_THROWS_AS(StateSpace({"a", "a"}), Error);
  CHECK_THROWS_AS(StateSpace({"a", ""}), Error);
  const StateSpace space({"a", "b", "c"});
  CHECK(space.format(mask({0, 2})) == "{a,c}");
  CHECK_THROWS_AS(SigmaAlgebra::from_atoms(space, {mask({0}), mask({0, 1})}), Error);
  CHECK_THROWS_AS(SigmaAlgebra::from_atoms(space, {mask({0})}), Error);
  const auto sigma = SigmaAlgebra::from_atoms(space, {mask({0}), mask({1, 2})});
  CHECK(sigma.event_count() == 4);
  CHECK(sigma.is_measurable(mask({1, 2})));
  CHECK_FALSE(sigma.is_measurable(mask({1})));
  CHECK(sigma.closure(mask({1})) == mask({1, 2}));
  for (EventIndex e = 0; e < sigma.event_count(); ++e) CHECK(sigma.index_of(sigma.mask_of(e)) == e);
  CHECK_THROWS_AS(Event(sigma, mask({1})), Error);
}

TEST_CASE("atom cap") {
  const int saved = max_atoms();
  set_max_atoms(3);
  CHECK_THROWS_AS(powerset_of(4).event_count(), Error);
  set_max_atoms(saved);
  CHECK(powerset_of(4).event_count() == 16);
}

TEST_CASE("prior measure, conditioning and almost sure containment") {
  const auto sigma = powerset_of(3);
  const auto mu = Prior::from_atom_weights(sigma, {Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  const Event e23(sigma, mask({1, 2}));
  CHECK(measure_of(mu, e23) == Rational(1, 2));
  CHECK(measure_of(mu, Event::full(sigma)) == Rational(1));
  CHECK(measure_of(mu, Event::empty(sigma)) == Rational(0));
  CHECK(conditional(mu, Event(sigma, mask({1})), e23) == Rational(1, 2));
  CHECK(conditional(mu, e23, e23) == Rational(1));
  CHECK_THROWS_AS(Prior::from_atom_weights(sigma, {Rational(1, 2), Rational(1, 3), Rational(0)}), Error);

  const auto two = powerset_of(2);
  const auto point = Prior::from_atom_weights(two, {Rational(1), Rational(0)});
  const Event ab = Event::full(two), a(two, mask({0})), b(two, mask({1}));
  CHECK(almost_contains(point, ab, a));
  CHECK(almost_equal(point, ab, a));
  try {
    conditional(point, a, b);
    FAIL("expected ConditioningOnNull");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::kConditioningOnNull);
  }
  const auto half = Prior::from_atom_weights(two, {Rational(1, 2), Rational(1, 2)});
  CHECK_FALSE(almost_contains(half, ab, a));
  CHECK(expectation(half, std::vector<Rational>{Rational(0), Rational(1)}) == Rational(1, 2));

  const auto coarse = SigmaAlgebra::from_atoms(StateSpace({"x", "y"}), {mask({0, 1})});
  const auto trivial = Prior::from_atom_weights(coarse, {Rational(1)});
  CHECK_THROWS_AS(expectation(trivial, std::vector<Rational>{Rational(0), Rational(1)}), Error);
}

TEST_CASE("expectation of an indicator is the measure") {
  const auto sigma = powerset_of(3);
  const auto mu = Prior::from_atom_weights(sigma, {Rational(1, 6), Rational(1, 3), Rational(1, 2)});
  for (const auto& e : enumerate_events(sigma)) {
    std::vector<Rational> f(3);
    for (std::size_t s = 0; s < 3; ++s) f[s] = ((e.members() >> s) & 1u) ? Rational(1) : Rational(0);
    CHECK(expectation(mu, f) == measure_of(mu, e));
  }
}

TEST_CASE("classification examples") {
  const auto two = powerset_of(2);
  const auto dirac = classify(SetFunction::point_mass(two, 0));
  CHECK(dirac == Classification{true, true, true, true, true});
  const SetFunction v(two, {Rational(0), Rational(0), Rational(0), Rational(1)});
  const auto cv = classify(v);
  CHECK(cv.normalized);
  CHECK(cv.monotone);
  CHECK(cv.convex);
  CHECK_FALSE(cv.additive);
  CHECK_FALSE(classify(SetFunction(two, {Rational(1, 2), Rational(1), Rational(1), Rational(1)})).normalized);
}

TEST_CASE("classification agrees with the pairwise definitions") {
  std::mt19937_64 rng(5);
  for (std::size_t atoms = 1; atoms <= 4; ++atoms) {
    const auto sigma = powerset_of(atoms);
    const std::size_t events = std::size_t{1} << atoms;
    for (int trial = 0; trial < 1500; ++trial) {
      std::vector<Rational> v(events);
      const int mode = trial % 3;
      for (std::size_t e = 0; e < events; ++e) {
        // Modes bias toward the interesting corners: additive rows, 0/1 rows, free rows.
        if (mode == 1) v[e] = Rational(static_cast<std::int64_t>(rng() % 2));
        else v[e] = Rational(static_cast<std::int64_t>(rng() % 3), 2);
      }
      if (mode == 0) {
        std::vector<Rational> w(atoms);
        std::int64_t left = 4;
        for (std::size_t j = 0; j + 1 < atoms; ++j) {
          const auto x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(left + 1));
          w[j] = Rational(x, 4);
          left -= x;
        }
        w[atoms - 1] = Rational(left, 4);
        v = SetFunction::from_atom_weights(sigma, w).values();
      }
      CHECK(classify_values(sigma, v) == classify_by_pairs(v));
    }
  }
}

TEST_CASE("priors classify as probabilities") {
  const auto sigma = powerset_of(3);
  for (std::int64_t a = 0; a <= 4; ++a) {
    for (std::int64_t b = 0; a + b <= 4; ++b) {
      const auto mu = Prior::from_atom_weights(sigma, {Rational(a, 4), Rational(b, 4), Rational(4 - a - b, 4)});
      CHECK(classify(SetFunction::from_prior(mu)) == Classification{true, true, true, true, true});
    }
  }
}

TEST_CASE("order sets on W4") {
  const auto doc = fixtures::load("w4");
  const auto& t = doc.model.agent(0).types();
  CHECK(t.up_mask(0) == mask({0, 1}));
  CHECK(t.up_mask(1) == mask({1}));
  CHECK(t.down_mask(0) == mask({0}));
  CHECK(t.bracket_mask(0) == mask({0}));
  CHECK(type_measurability_check(t).passed);
}

TEST_CASE("shared type gives the whole space") {
  const auto sigma = powerset_of(3);
  const auto row = SetFunction::point_mass(sigma, 1);
  const TypeMapping t(std::vector<SetFunction>{row, row, row});
  for (std::size_t s = 0; s < 3; ++s) {
    CHECK(t.up_mask(s) == sigma.all());
    CHECK(t.bracket_mask(s) == sigma.all());
  }
}

TEST_CASE("type measurability fails when an atom is split") {
  const StateSpace space({"1", "2"});
  const auto sigma = SigmaAlgebra::from_atoms(space, {mask({0, 1})});
  const TypeMapping t(sigma, {Rational(0), Rational(1), Rational(0), Rational(1, 2)});
  const auto r = type_measurability_check(t);
  REQUIRE_FALSE(r.passed);
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("bracket blocks partition the space and additive rows collapse the order sets") {
  std::mt19937_64 rng(9);
  const auto sigma = powerset_of(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<SetFunction> rows;
    const bool additive = trial % 2 == 0;
    for (std::size_t s = 0; s < 3; ++s) {
      if (additive) {
        rows.push_back(SetFunction::point_mass(sigma, rng() % 3));
      } else {
        std::vector<Rational> v(8);
        for (auto& x : v) x = Rational(static_cast<std::int64_t>(rng() % 2));
        rows.emplace_back(sigma, v);
      }
    }
    const TypeMapping t(rows);
    for (std::size_t s = 0; s < 3; ++s) {
      CHECK(((t.bracket_mask(s) >> s) & 1u) == 1u);
      for (std::size_t r = 0; r < 3; ++r) {
        const bool same = t.bracket_mask(s) == t.bracket_mask(r);
        const bool overlap = (t.bracket_mask(s) & t.bracket_mask(r)) != 0;
        CHECK(same == overlap);
      }
      if (additive) {
        CHECK(t.up_mask(s) == t.bracket_mask(s));
        CHECK(t.down_mask(s) == t.bracket_mask(s));
      }
    }
  }
}

TEST_CASE("operators on W1") {
  const auto doc = fixtures::load("w1");
  const auto& m = doc.model.agent(0);
  const Event e(m.sigma(), mask({1, 2}));
  CHECK(qualitative_belief(m, e).members() == mask({1, 2}));
  CHECK(p_belief(m, Rational(1), e).members() == mask({1, 2}));
  CHECK(p_belief(m, Rational(1), Event(m.sigma(), mask({1}))).members() == 0);
  CHECK(p_belief(m, Rational(1, 2), Event(m.sigma(), mask({1}))).members() == mask({1, 2}));
  CHECK(p_belief(m, Rational(0), Event::empty(m.sigma())).members() == m.sigma().all());
}

TEST_CASE("critical thresholds decide every p") {
  const auto doc = fixtures::load("w4");
  const auto& m = doc.model.agent(0);
  const auto v = critical_thresholds(m);
  for (std::int64_t num = 0; num <= 24; ++num) {
    const Rational p(num, 24);
    // The least threshold at or above p gives the same operator.
    const auto q = *std::lower_bound(v.begin(), v.end(), p);
    for (const auto& e : enumerate_events(m.sigma())) CHECK(p_belief(m, p, e) == p_belief(m, q, e));
  }
}

TEST_CASE("possibility recovered from the knowledge operator") {
  const auto doc = fixtures::load("iw1");
  const auto& m = doc.model.agent(1);
  std::vector<StateMask> k_table;
  for (const auto& e : enumerate_events(m.sigma())) k_table.push_back(qualitative_belief(m, e).members());
  CHECK(poss_from_operator(m.sigma(), k_table).cells() == m.poss().cells());
}
