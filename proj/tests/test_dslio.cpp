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

#include "emck/dslio.hpp"
#include "emck/errors.hpp"
#include "emck/fixtures.hpp"
#include "emck/modelgen.hpp"
#include "emck/operators.hpp"
#include "emck/theorems.hpp"
#include "test_support.hpp"

using namespace emck;
using emck::testing::mask;

namespace {

Error parse_error(std::string_view text) {
  try {
    parse_model(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a parse error");
  return Error(ErrorKind::kInvalidArgument, "unreachable");
}

Error expr_error(const ModelDoc& doc, std::string_view text) {
  try {
    eval_expr(doc, text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an expression error");
  return Error(ErrorKind::kInvalidArgument, "unreachable");
}

constexpr std::string_view kTwoStates = "states: s1 s2\nprior: s1=1/2 s2=1/2\n";

}  // namespace

TEST_CASE("fixtures are canonical and round trip") {
  for (const auto name : fixtures::names()) {
    CAPTURE(name);
    const auto doc = fixtures::load(name, ModelOptions{false});
    CHECK(serialize_model(doc) == fixtures::source(name));
    CHECK(parse_model(serialize_model(doc), ModelOptions{false}) == doc);
  }
}

TEST_CASE("W1 parses with derived Bayes types") {
  const auto doc = fixtures::load("w1");
  const auto& m = doc.model.agent(0);
  CHECK(m.types()(1, m.sigma().index_of(mask({1}))) == Rational(1, 2));
  CHECK(doc.event("E") == mask({1, 2}));
  CHECK_FALSE(doc.event("F").has_value());
}

TEST_CASE("generated models round trip") {
  GenParams p;
  p.max_states = 4;
  p.agents = 2;
  p.sigma_mode = SigmaMode::kRandomPartition;
  for (const auto types : {TypeMode::kAdditive, TypeMode::kCapacity, TypeMode::kBayes}) {
    p.type_mode = types;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const auto m = random_model(p, seed);
      const auto text = serialize_model(m);
      const auto back = parse_model(text, ModelOptions{false});
      CHECK(back.model == m);
      CHECK(serialize_model(back) == text);
    }
  }
}

TEST_CASE("expanded Bayes types equal the derived table") {
  const auto doc = fixtures::load("w1");
  const auto text = serialize_model(doc, SerializeOptions{true});
  CHECK(text.find("type: additive") != std::string::npos);
  const auto back = parse_model(text);
  const auto& m = doc.model.agent(0);
  CHECK(back.model.agent(0).types() == bayes_type_from_poss(m.sigma(), m.prior(), m.poss()));
}

TEST_CASE("prior that does not sum to one") {
  const auto e = parse_error("states: s1 s2\nprior: s1=1/2 s2=1/3\nagent a:\n  poss: s1 -> {s1}; s2 -> {s2}\n  type: bayes\n");
  CHECK(e.kind() == ErrorKind::kPriorNotNormalized);
  CHECK(e.where().line == 2);
  CHECK(e.detail().find("5/6") != std::string::npos);
}

TEST_CASE("capacity table missing an event") {
  const auto e = parse_error(std::string(kTwoStates) +
                             "agent a:\n  poss: s1 -> {s1}; s2 -> {s2}\n  type: capacity\n"
                             "  s1: {}=0 {s1}=1 {s2}=0\n  s2: {}=0 {s1}=0 {s2}=1 {s1 s2}=1\n");
  CHECK(e.kind() == ErrorKind::kIncompleteCapacity);
  CHECK(e.detail().find("{s1 s2}") != std::string::npos);
  CHECK(e.where().line > 0);
}

TEST_CASE("unknown state") {
  const auto e = parse_error("states: s1 s2\nprior: s1=1/2 s3=1/2\n");
  CHECK(e.kind() == ErrorKind::kUnknownState);
  CHECK(e.where().line == 2);
  CHECK(e.where().column > 0);
}

TEST_CASE("poss cell outside sigma") {
  const auto e = parse_error(
      "states: s1 s2 s3\nsigma: atoms {s1} {s2 s3}\nprior: s1=1/2 s2=1/2\n"
      "agent a:\n  poss: s1 -> {s1}; s2 -> {s2}; s3 -> {s2 s3}\n  type: bayes\n");
  CHECK(e.kind() == ErrorKind::kNotMeasurable);
  CHECK(e.where().line == 5);
}

TEST_CASE("duplicate sections") {
  CHECK(parse_error("states: s1\nstates: s1\n").kind() == ErrorKind::kDuplicateSection);
  const auto e = parse_error(std::string(kTwoStates) +
                             "agent a:\n  poss: s1 -> {s1}; s2 -> {s2}\n  type: bayes\n"
                             "agent a:\n  poss: s1 -> {s1}; s2 -> {s2}\n  type: bayes\n");
  CHECK(e.kind() == ErrorKind::kDuplicateSection);
  CHECK(e.where().line == 6);
}

TEST_CASE("decimals are rejected") {
  CHECK(parse_error("states: s1 s2\nprior: s1=0.5 s2=0.5\n").category() == ErrorCategory::kParse);
}

TEST_CASE("a document without agents is rejected") {
  CHECK(parse_error(kTwoStates).kind() == ErrorKind::kInvalidValue);
}

TEST_CASE("Bayes agent with a null cell fails loudly") {
  const auto e = parse_error("states: s1 s2\nprior: s1=1 s2=0\nagent a:\n  poss: s1 -> {s1}; s2 -> {s2}\n  type: bayes\n");
  CHECK(e.kind() == ErrorKind::kConditioningOnNull);
}

TEST_CASE("expression examples") {
  const auto w1 = fixtures::load("w1");
  CHECK(eval_expr(w1, "K[alice]({2 3})").members() == mask({1, 2}));
  CHECK(eval_expr(w1, "K[alice](E)").members() == mask({1, 2}));
  const auto iw1 = fixtures::load("iw1");
  const auto e = Event(iw1.model.sigma(), *iw1.event("E"));
  const auto lhs = eval_expr(iw1, "~B[alice,1/2](E) & Cp[1](E)");
  const auto rhs = ~p_belief(iw1.model.agent(0), Rational(1, 2), e) & common_p_belief(iw1.model, Rational(1), e);
  CHECK(lhs == rhs);
  CHECK(eval_expr(iw1, "D | E & ~D") == eval_expr(iw1, "D | (E & (~D))"));
  CHECK(eval_expr(iw1, "C(D)") == common_qualitative(iw1.model, Event(iw1.model.sigma(), *iw1.event("D"))));
}

TEST_CASE("expression errors") {
  const auto w1 = fixtures::load("w1");
  CHECK(expr_error(w1, "B[alice,3/2](E)").kind() == ErrorKind::kRationalOutOfRange);
  CHECK(expr_error(w1, "K[zed](E)").kind() == ErrorKind::kUnknownAgent);
  CHECK(expr_error(w1, "K[alice](F)").kind() == ErrorKind::kUnknownEvent);
  CHECK(expr_error(w1, "K[alice](E").kind() == ErrorKind::kSyntax);
  CHECK(expr_error(w1, "{2 9}").kind() == ErrorKind::kUnknownState);
  CHECK(expr_error(w1, std::string(1000, '~') + "E").kind() == ErrorKind::kSyntax);
}

TEST_CASE("K and B expressions agree with the operators on every event") {
  for (const auto name : fixtures::names()) {
    const auto doc = fixtures::load(name, ModelOptions{false});
    const auto& im = doc.model;
    for (const auto& e : enumerate_events(im.sigma())) {
      std::string lit = "{";
      for (std::size_t s = 0; s < im.space().size(); ++s) {
        if ((e.members() >> s) & 1u) lit += (lit.size() > 1 ? " " : "") + im.space().name(s);
      }
      lit += "}";
      for (std::size_t a = 0; a < im.agent_count(); ++a) {
        const auto& agent = im.name(a);
        CHECK(eval_expr(doc, "K[" + agent + "](" + lit + ")") == qualitative_belief(im.agent(a), e));
        for (const auto& p : critical_thresholds(im)) {
          CHECK(eval_expr(doc, "B[" + agent + "," + p.str() + "](" + lit + ")") == p_belief(im.agent(a), p, e));
        }
      }
      CHECK(eval_expr(doc, "C(" + lit + ")") == common_qualitative(im, e));
      CHECK(eval_expr(doc, "~" + lit) == ~e);
    }
  }
}

TEST_CASE("random bytes only produce located errors") {
  std::mt19937_64 rng(11);
  const std::string alphabet = "states:prior agent poss type bayes additive capacity event sigma atoms {}=/->;#\n 0123 s1s2";
  for (int i = 0; i < 3000; ++i) {
    std::string text(rng() % 120, ' ');
    for (auto& c : text) c = (i % 2) ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
    try {
      parse_model(text);
    } catch (const Error& e) {
      CHECK(e.where().line >= 1);
    }
  }
}
