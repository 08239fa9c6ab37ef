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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact rational equality or an exact
// zero test; there is no tolerance anywhere.
//
// usage: emck_acceptance CLI_BINARY FIXTURE_DIR

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "emck/axioms.hpp"
#include "emck/dslio.hpp"
#include "emck/errors.hpp"
#include "emck/fixtures.hpp"
#include "emck/modelgen.hpp"
#include "emck/multiagent.hpp"
#include "emck/theorems.hpp"

using namespace emck;

namespace {

constexpr std::uint64_t kProp1Draws = 10'000;
constexpr std::uint64_t kProp3Draws = 1'000;
constexpr std::uint64_t kRoundTripModels = 1'000;
constexpr std::uint64_t kFuzzInputs = 100'000;

std::string cli_path;
std::string fixture_dir;
int failures = 0;

void verdict(int criterion, bool pass, const std::string& detail) {
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << std::endl;
  if (!pass) ++failures;
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

EpistemicModel agent0(std::string_view fixture, bool allow_null = false) {
  return fixtures::load(fixture, ModelOptions{!allow_null}).model.agent(0);
}

// Criterion 2's family: Bayes types on partitions with positive cells, n <= 4, 1/6 grid.
GenParams partition_family() {
  GenParams p;
  p.min_states = 1;
  p.max_states = 4;
  p.denominator = 6;
  p.type_mode = TypeMode::kBayes;
  p.poss_mode = PossMode::kPartition;
  p.allow_null_states = true;
  return p;
}

std::atomic<std::uint64_t> cor5_checked{0};
std::atomic<std::uint64_t> cor5_failed{0};

void check_cor5(const EpistemicModel& m) {
  ++cor5_checked;
  const auto r = verify_cor_ta(m);
  if (r.status != ClaimStatus::kHolds) ++cor5_failed;
}

void criteria_1_and_9_and_2_family() {
  const auto start = std::chrono::steady_clock::now();
  const auto& claim = find_claim("theorem-main");
  const Verifier verify = [](const InteractiveModel& im) {
    const auto& m = im.agent(0);
    if (is_regular(m).passed) check_cor5(m);
    return verify_theorem_main(m);
  };
  const auto r = search_counterexample(verify, claim.defaults, workers());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os << "theorem-main exhaustive n<=3 d=4 arbitrary P: " << (r.found ? "Found" : "NotFound") << " after "
     << r.checked << " models (" << r.skipped << " with a null cell skipped), " << static_cast<int>(secs) << "s";
  if (r.found) os << "; counterexample at index " << r.index;
  verdict(1, !r.found && r.checked > 0, os.str());
}

void criterion_2() {
  const ModelGrid grid(partition_family());
  std::uint64_t built = 0, failed = 0;
  for (std::uint64_t i = 0; i < grid.size(); ++i) {
    const auto im = grid.at(i);
    if (!im) continue;
    ++built;
    const auto& m = im->agent(0);
    if (!is_regular(m).passed) ++failed;
    check_cor5(m);
  }
  verdict(2, failed == 0 && built > 0,
          std::to_string(built) + " Bayes models on partitions with positive cells, " + std::to_string(failed) +
              " not regular");
}

void criterion_3() {
  const auto w2 = agent0("w2");
  const auto a = *w2.space().index_of("a");
  const StateMask p = w2.poss().cell(a);
  const StateMask bracket = w2.types().bracket_mask(a);
  const bool strict = (p & ~bracket) == 0 && bracket != p;
  const bool null_gap = w2.prior().measure_mask(bracket & ~p).is_zero();
  const bool regular = is_regular(w2).passed;
  const bool partitional = poss_is_partition(w2.poss());
  verdict(3, regular && !partitional && strict && null_gap,
          "W2 regular=" + std::string(regular ? "yes" : "no") + " partition=" + (partitional ? "yes" : "no") +
              " P(a)=" + w2.space().format(p) + " [t(a)]=" + w2.space().format(bracket) +
              " mu([t(a)]\\P(a))=" + w2.prior().measure_mask(bracket & ~p).str());
}

void criterion_4() {
  auto p = find_claim("prop-1").defaults;
  p.budget = kProp1Draws;
  const auto r = search_counterexample("prop-1", p, workers());

  const auto w4 = verify_prop1(agent0("w4"));
  bool w4_ok = w4.status == ClaimStatus::kHolds && w4.parts.size() == 2;
  if (w4_ok) {
    const auto& part2 = w4.parts[1];
    w4_ok = part2.status == ClaimStatus::kHolds && !part2.lhs && !part2.rhs && part2.checks.size() == 2 &&
            !part2.checks[1].witnesses.empty();
    if (w4_ok) {
      const auto& w = part2.checks[1].witnesses.front();
      w4_ok = w.threshold == Rational(1) && w.event == StateMask{0b10} && w.state == std::size_t{0};
    }
  }
  verdict(4, !r.found && r.checked >= kProp1Draws && w4_ok,
          "prop-1 over " + std::to_string(r.checked) + " random monotone one-intersection capacities: " +
              (r.found ? "Found" : "NotFound") + "; W4 part 2 both sides false with witness p=1 E={b} at a: " +
              (w4_ok ? "yes" : "no"));
}

void criterion_5() {
  auto p = find_claim("prop-2").defaults;
  p.min_states = 2;
  p.max_states = 2;
  p.denominator = 2;
  const auto r = search_counterexample("prop-2", p, workers());
  verdict(5, !r.found && r.checked == ModelGrid(p).size(),
          "prop-2 exhaustive n=2 d=2 capacities, all P: " + std::string(r.found ? "Found" : "NotFound") + " after " +
              std::to_string(r.checked) + " models");
}

// Criteria 6, 7 and 8 share the full-support part of criterion 2's family.
void criteria_6_7_8() {
  const ModelGrid grid(partition_family());
  std::uint64_t discrete = 0, cor2_failed = 0, cor3_failed = 0, positive = 0, cor4_failed = 0;
  for (std::uint64_t i = 0; i < grid.size(); ++i) {
    const auto im = grid.at(i);
    if (!im) continue;
    const auto& m = im->agent(0);
    ++positive;
    const auto& sigma = m.sigma();
    const auto round_trip = poss_from_type(sigma, m.prior(), bayes_type_from_poss(sigma, m.prior(), m.poss()));
    if (round_trip.cells() != m.poss().cells()) ++cor4_failed;
    if (!m.discrete() || !is_regular(m).passed) continue;
    ++discrete;
    if (verify_cor_main(m).status != ClaimStatus::kHolds) ++cor2_failed;
    if (!check_unawareness(m).passed) ++cor3_failed;
  }
  verdict(6, cor2_failed == 0 && discrete > 0,
          std::to_string(discrete) + " discrete regular models: K=B1, Truth/PI/NI, finite conjunction, P=support; " +
              std::to_string(cor2_failed) + " failures");

  const auto w2 = check_unawareness(agent0("w2"));
  const auto b = agent0("w2").space().index_of("b");
  const bool witness_at_b = !w2.passed && w2.witnesses.front().state == b;
  verdict(7, cor3_failed == 0 && discrete > 0 && witness_at_b,
          std::to_string(discrete) + " discrete regular models unaware of nothing (" + std::to_string(cor3_failed) +
              " failures); W2 unawareness witness at null state b: " + (witness_at_b ? "yes" : "no"));

  verdict(8, cor4_failed == 0 && positive > 0,
          "poss_from_type(bayes_type_from_poss(P)) = P on " + std::to_string(positive) + " partitions, " +
              std::to_string(cor4_failed) + " mismatches");
}

void criterion_9() {
  verdict(9, cor5_failed == 0 && cor5_checked > 0,
          std::to_string(cor5_checked.load()) +
              " regular models from criteria 1-2: mu(B1(E)\\E)=0, mu(K(E)\\E)=0, t(w,B1(E)\\E)=0; " +
              std::to_string(cor5_failed.load()) + " failures");
}

void criterion_10() {
  const auto iw1 = fixtures::load("iw1").model;
  bool fixture_ok = verify_prop3(iw1).status == ClaimStatus::kHolds &&
                    verify_cor_ck(iw1).status == ClaimStatus::kHolds;

  auto p = find_claim("cor-ck").defaults;
  p.mode = GenMode::kRandom;
  p.budget = kProp3Draws;
  p.seed = 2024;
  p.require = {"regular", "discrete"};
  const auto agree = search_counterexample("prop-3", p, workers());
  const auto ck = search_counterexample("cor-ck", p, workers());
  auto exhaustive = find_claim("cor-ck").defaults;
  const auto ck_all = search_counterexample("cor-ck", exhaustive, workers());
  verdict(10, fixture_ok && !agree.found && !ck.found && !ck_all.found && agree.checked >= kProp3Draws,
          "IW1 agreement and C=C1: " + std::string(fixture_ok ? "yes" : "no") + "; " +
              std::to_string(agree.checked) + " random 2-agent discrete regular models: " +
              (agree.found || ck.found ? "Found" : "NotFound") + "; C=C1 with Truth/PI/NI on " +
              std::to_string(ck_all.checked) + " exhaustive models: " + (ck_all.found ? "Found" : "NotFound"));
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = "'" + cli_path + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void criterion_11() {
  std::ostringstream detail;

  // Round trips on fixtures and generated models.
  std::uint64_t round_trips = 0, round_trip_failed = 0;
  const auto round_trip = [&](const ModelDoc& doc) {
    ++round_trips;
    const auto text = serialize_model(doc);
    const auto back = parse_model(text, ModelOptions{false});
    if (!(back == doc) || serialize_model(back) != text) ++round_trip_failed;
  };
  for (const auto name : fixtures::names()) round_trip(fixtures::load(name, ModelOptions{false}));
  for (std::uint64_t i = 0; i < kRoundTripModels; ++i) {
    GenParams p;
    p.max_states = 4;
    p.agents = 1 + i % 3;
    p.sigma_mode = i % 2 ? SigmaMode::kRandomPartition : SigmaMode::kPowerset;
    p.type_mode = static_cast<TypeMode>(i % 4);
    p.poss_mode = static_cast<PossMode>(i % 3);
    p.mode = GenMode::kRandom;
    round_trip(ModelDoc{random_model(p, i), {}, {}});
  }
  detail << round_trips << " round trips (" << round_trip_failed << " failed); ";

  // Expressions against direct operator calls on every event of every fixture.
  std::uint64_t evals = 0, eval_failed = 0;
  for (const auto name : fixtures::names()) {
    const auto doc = fixtures::load(name, ModelOptions{false});
    const auto& im = doc.model;
    const auto thresholds = critical_thresholds(im);
    for (const auto& e : enumerate_events(im.sigma())) {
      std::string lit = "{";
      for (std::size_t s = 0; s < im.space().size(); ++s) {
        if ((e.members() >> s) & 1u) lit += (lit.size() > 1 ? " " : "") + im.space().name(s);
      }
      lit += "}";
      const auto expect = [&](const std::string& expr, const Event& want) {
        ++evals;
        if (!(eval_expr(doc, expr) == want)) ++eval_failed;
      };
      for (std::size_t a = 0; a < im.agent_count(); ++a) {
        expect("K[" + im.name(a) + "](" + lit + ")", qualitative_belief(im.agent(a), e));
        for (const auto& p : thresholds) {
          expect("B[" + im.name(a) + "," + p.str() + "](" + lit + ")", p_belief(im.agent(a), p, e));
        }
      }
      expect("C(" + lit + ")", common_qualitative(im, e));
      for (const auto& p : thresholds) expect("Cp[" + p.str() + "](" + lit + ")", common_p_belief(im, p, e));
      expect("~" + lit, ~e);
    }
  }
  detail << evals << " expression differentials (" << eval_failed << " failed); ";

  // Fuzzing: only located errors.
  std::mt19937_64 rng(20261016);
  const std::string tokens[] = {"states:", "sigma:", "powerset", "atoms", "prior:", "agent", "poss:", "type:",
                                "bayes", "additive", "capacity", "event", "{", "}", "=", "/", "->", ";", ":",
                                "\n", " ", "  ", "#", "a", "b", "1", "0", "1/2", "x"};
  std::uint64_t unlocated = 0, crashes = 0;
  for (std::uint64_t i = 0; i < kFuzzInputs; ++i) {
    std::string text;
    const std::size_t len = rng() % 160;
    if (i % 2 == 0) {
      for (std::size_t k = 0; k < len; ++k) text += static_cast<char>(rng() % 256);
    } else {
      for (std::size_t k = 0; k < len / 3; ++k) text += tokens[rng() % std::size(tokens)];
    }
    try {
      parse_model(text);
    } catch (const Error& e) {
      if (e.where().line < 1) ++unlocated;
    } catch (...) {
      ++crashes;
    }
  }
  detail << kFuzzInputs << " fuzz inputs (" << unlocated << " unlocated, " << crashes << " non-model errors); ";

  // Fixed seeds give byte-identical CLI output.
  const std::string search = "search --format json --claim prop-1 --mode random --seed 11 --budget 500";
  const auto a = run_cli(search);
  const auto b = run_cli(search);
  const auto c = run_cli(search + " --workers 4");
  const std::string check = "check --format json '" + fixture_dir + "/iw1.emod'";
  const auto d = run_cli(check);
  const auto e = run_cli(check);
  const bool identical =
      a.code == 0 && !a.out.empty() && a.out == b.out && a.out == c.out && d.code == 0 && d.out == e.out;
  detail << "CLI output byte-identical: " << (identical ? "yes" : "no");

  verdict(11, round_trip_failed == 0 && eval_failed == 0 && unlocated == 0 && crashes == 0 && identical,
          detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: emck_acceptance CLI_BINARY FIXTURE_DIR\n";
    return 64;
  }
  cli_path = argv[1];
  fixture_dir = argv[2];
  const std::pair<int, std::function<void()>> steps[] = {
      {1, criteria_1_and_9_and_2_family}, {2, criterion_2}, {3, criterion_3},   {4, criterion_4},
      {5, criterion_5},                   {6, criteria_6_7_8}, {9, criterion_9}, {10, criterion_10},
      {11, criterion_11},
  };
  for (const auto& [first, step] : steps) {
    try {
      step();
    } catch (const std::exception& e) {
      verdict(first, false, std::string("aborted: ") + e.what());
    }
  }
  std::cout << (failures == 0 ? "acceptance: all criteria PASS" : "acceptance: some criteria FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
