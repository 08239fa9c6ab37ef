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

#include "emck/theorems.hpp"

#include <string>

#include "emck/errors.hpp"

namespace emck {

namespace {

StateMask lowest(StateMask m) { return m & (~m + 1); }
std::size_t first_state(StateMask m) { return static_cast<std::size_t>(__builtin_ctzll(m)); }

std::string events_scope(const EpistemicModel& m) { return "all " + std::to_string(m.event_count()) + " events"; }

Witness event_state_witness(StateMask e, std::size_t s, std::optional<Rational> value = {}, std::string note = {}) {
  Witness w;
  w.event = e;
  w.state = s;
  w.value = std::move(value);
  w.note = std::move(note);
  return w;
}

bool all_passed(const std::vector<CheckReport>& checks, std::size_t from = 0) {
  for (std::size_t i = from; i < checks.size(); ++i) {
    if (!checks[i].passed) return false;
  }
  return true;
}

Hypothesis hypothesis_of(const CheckReport& c) { return {c.name, c.passed}; }

CheckReport type_row_check(const EpistemicModel& m, std::string name, bool (*pred)(const Classification&)) {
  CheckReport r{std::move(name), true, {}, "all states", {}};
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    if (!pred(classify_values(m.sigma(), m.types().row(s)))) {
      Witness w;
      w.state = s;
      r.fail(std::move(w));
      break;
    }
  }
  return r;
}

CheckReport positive_cells_check(const EpistemicModel& m) {
  CheckReport r{"positive-cells", true, {}, "all states", {}};
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    if (m.prior().measure_mask(m.poss().cell(s)).is_zero()) {
      Witness w;
      w.state = s;
      w.event = m.poss().cell(s);
      w.value = Rational(0);
      r.fail(std::move(w));
      break;
    }
  }
  return r;
}

CheckReport discrete_check(const EpistemicModel& m) {
  CheckReport r{"discrete", m.discrete(), {}, "powerset algebra and full-support prior", {}};
  if (!r.passed) {
    Witness w;
    if (!m.sigma().is_powerset()) {
      w.note = "algebra is not the powerset";
    } else {
      for (std::size_t s = 0; s < m.state_count(); ++s) {
        if (m.prior().state_atom_weight(s).is_zero()) {
          w.state = s;
          w.value = Rational(0);
          w.note = "null singleton";
          break;
        }
      }
    }
    r.witnesses.push_back(std::move(w));
  }
  return r;
}

// mu{omega | P(omega) contains [t(omega)]}: both maps are atom-constant, so
// the set is measurable.
Rational measure_of_containing_states(const EpistemicModel& m) {
  StateMask set = 0;
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    if ((m.types().bracket_mask(s) & ~m.poss().cell(s)) == 0) set |= StateMask{1} << s;
  }
  return m.prior().measure_mask(set);
}

}  // namespace

CheckReport check_bayes_identity(const EpistemicModel& m) {
  CheckReport r{"bayes-identity", true, {}, events_scope(m) + " x all states", {}};
  const auto& sigma = m.sigma();
  const auto& prior = m.prior();
  const auto& t = m.types();
  const auto& cells = m.poss().cells();
  for (std::size_t s = 0; s < cells.size(); ++s) {
    if (prior.measure_mask(cells[s]).is_zero()) {
      r.fail(event_state_witness(cells[s], s, Rational(0), "mu(P) = 0, conditional undefined"));
      return r;
    }
  }
  for (std::size_t e = 0; e < m.event_count(); ++e) {
    const auto idx = static_cast<EventIndex>(e);
    const StateMask em = sigma.mask_of(idx);
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const auto& cell_mass = prior.measure_mask(cells[s]);
      if (t(s, idx) * cell_mass != prior.measure_mask(em & cells[s])) {
        r.fail(event_state_witness(em, s, t(s, idx), "mu(E | P) = " + (prior.measure_mask(em & cells[s]) / cell_mass).str()));
        return r;
      }
    }
  }
  return r;
}

CheckReport check_product_identity(const EpistemicModel& m) {
  CheckReport r{"product-identity", true, {}, events_scope(m) + " x all states", {}};
  const auto& sigma = m.sigma();
  const auto& prior = m.prior();
  const auto& t = m.types();
  const auto& cells = m.poss().cells();
  for (std::size_t e = 0; e < m.event_count(); ++e) {
    const auto idx = static_cast<EventIndex>(e);
    const StateMask em = sigma.mask_of(idx);
    for (std::size_t s = 0; s < cells.size(); ++s) {
      if (t(s, idx) * prior.measure_mask(cells[s]) != prior.measure_mask(em & cells[s])) {
        r.fail(event_state_witness(em, s, t(s, idx), "mu(E & P) = " + prior.measure_mask(em & cells[s]).str()));
        return r;
      }
    }
  }
  return r;
}

CheckReport check_poss_within_bracket(const EpistemicModel& m) {
  CheckReport r{"poss-within-bracket", true, {}, "all states", {}};
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    const StateMask bad = m.poss().cell(s) & ~m.types().bracket_mask(s);
    if (bad != 0) {
      Witness w;
      w.state = s;
      w.other_state = first_state(bad);
      r.fail(std::move(w));
      break;
    }
  }
  return r;
}

CheckReport check_bracket_within_poss_as(const EpistemicModel& m) {
  CheckReport r{"bracket-within-poss-almost-surely", true, {}, "all states", {}};
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    const StateMask diff = m.types().bracket_mask(s) & ~m.poss().cell(s);
    const auto& mass = m.prior().measure_mask(diff);
    if (!mass.is_zero()) {
      Witness w;
      w.state = s;
      w.event = diff;
      w.value = mass;
      r.fail(std::move(w));
      break;
    }
  }
  return r;
}

CheckReport check_poss_is_bracket(const EpistemicModel& m) {
  CheckReport r{"poss-is-bracket", true, {}, "all states", {}};
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    const StateMask diff = m.types().bracket_mask(s) ^ m.poss().cell(s);
    if (diff != 0) {
      Witness w;
      w.state = s;
      w.other_state = first_state(lowest(diff));
      w.event = m.types().bracket_mask(s);
      r.fail(std::move(w));
      break;
    }
  }
  return r;
}

namespace {

VerificationReport theorem_main_with(const EpistemicModel& m, CheckReport identity, std::string claim) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.kind = ClaimKind::kIff;
  r.checks.push_back(is_regular(m));
  r.checks.push_back(std::move(identity));
  r.checks.push_back(check_poss_within_bracket(m));
  r.checks.push_back(check_bracket_within_poss_as(m));
  r.lhs = r.checks[0].passed;
  r.rhs = all_passed(r.checks, 1);
  r.notes.emplace_back("reading of (iii)", "per state: mu([t(omega)] \\ P(omega)) = 0");
  r.notes.emplace_back("mu{omega | P(omega) contains [t(omega)]}", measure_of_containing_states(m).str());
  return r;
}

}  // namespace

VerificationReport verify_theorem_main(const EpistemicModel& m) {
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    if (m.prior().measure_mask(m.poss().cell(s)).is_zero()) {
      throw Error(ErrorKind::kAssumptionViolated,
                  "mu(P(" + m.space().name(s) + ")) = 0; use the product form for such models");
    }
  }
  auto r = theorem_main_with(m, check_bayes_identity(m), "theorem-main");
  settle(r);
  return r;
}

VerificationReport verify_theorem_main_product(const EpistemicModel& m) {
  auto r = theorem_main_with(m, check_product_identity(m), "theorem-main-product");
  const auto cells = positive_cells_check(m);
  if (!cells.passed && r.lhs != r.rhs) {
    r.hypotheses.push_back(hypothesis_of(cells));
    r.notes.emplace_back("equivalence", "not asserted: some cell is mu-null");
  }
  settle(r);
  return r;
}

TypeMapping bayes_type_from_poss(const SigmaAlgebra& sigma, const Prior& prior, const Possibility& poss) {
  if (!(sigma == prior.sigma()) || !(sigma == poss.sigma())) {
    throw Error(ErrorKind::kAlgebraMismatch, "prior and correspondence must share Sigma");
  }
  const std::size_t n = sigma.state_count();
  const std::size_t count = sigma.event_count();
  std::vector<Rational> table;
  table.reserve(n * count);
  for (std::size_t s = 0; s < n; ++s) {
    const StateMask cell = poss.cell(s);
    const Rational mass = prior.measure_mask(cell);
    if (mass.is_zero()) {
      throw Error(ErrorKind::kConditioningOnNull,
                  "mu(P(" + sigma.space().name(s) + ")) = mu(" + sigma.space().format(cell) + ") = 0");
    }
    for (std::size_t e = 0; e < count; ++e) {
      table.push_back(prior.measure_mask(sigma.mask_of(static_cast<EventIndex>(e)) & cell) / mass);
    }
  }
  return TypeMapping(sigma, std::move(table));
}

Possibility poss_from_type(const SigmaAlgebra& sigma, const Prior& prior, const TypeMapping& types) {
  if (!(sigma == prior.sigma()) || !(sigma == types.sigma())) {
    throw Error(ErrorKind::kAlgebraMismatch, "prior and types must share Sigma");
  }
  if (const auto r = type_measurability_check(types); !r.passed) {
    throw Error(ErrorKind::kNotMeasurable, "type mapping is not measurable: " + r.witnesses.front().note);
  }
  std::vector<StateMask> cells(sigma.state_count());
  for (std::size_t s = 0; s < cells.size(); ++s) cells[s] = types.bracket_mask(s);
  return Possibility(sigma, std::move(cells));
}

VerificationReport verify_cor_unique(const EpistemicModel& a, const EpistemicModel& b) {
  if (!(a.prior() == b.prior())) throw Error(ErrorKind::kInvalidArgument, "models must share Omega, Sigma and mu");
  const bool shared_poss = a.poss() == b.poss();
  const bool shared_types = a.types() == b.types();
  if (!shared_poss && !shared_types) {
    throw Error(ErrorKind::kInvalidArgument, "models must share the correspondence or the type mapping");
  }
  VerificationReport r;
  r.claim = "cor-unique";
  r.kind = ClaimKind::kImplication;
  r.hypotheses.push_back({"first-regular", is_regular(a).passed});
  r.hypotheses.push_back({"second-regular", is_regular(b).passed});
  if (shared_poss) {
    CheckReport c{"types-equal", true, {}, "all states and events", {}};
    for (std::size_t e = 0; e < a.event_count() && c.passed; ++e) {
      const auto idx = static_cast<EventIndex>(e);
      for (std::size_t s = 0; s < a.state_count(); ++s) {
        if (a.types()(s, idx) != b.types()(s, idx)) {
          c.fail(event_state_witness(a.sigma().mask_of(idx), s, a.types()(s, idx)));
          break;
        }
      }
    }
    r.checks.push_back(std::move(c));
  }
  if (shared_types) {
    CheckReport c{"poss-equal-almost-surely", true, {}, "all states", {}};
    for (std::size_t s = 0; s < a.state_count(); ++s) {
      const StateMask diff = a.poss().cell(s) ^ b.poss().cell(s);
      if (!a.prior().measure_mask(diff).is_zero()) {
        c.fail(event_state_witness(diff, s, a.prior().measure_mask(diff)));
        break;
      }
    }
    r.checks.push_back(std::move(c));
  }
  r.rhs = all_passed(r.checks);
  settle(r);
  return r;
}

namespace {

CheckReport k_equals_b1(const EpistemicModel& m) {
  CheckReport r{"K-equals-B1", true, {}, events_scope(m), {}};
  for (std::size_t e = 0; e < m.event_count(); ++e) {
    const StateMask em = m.sigma().mask_of(static_cast<EventIndex>(e));
    const StateMask diff = knows_mask(m, em) ^ believes_mask(m, Rational(1), em);
    if (diff != 0) {
      r.fail(event_state_witness(em, first_state(diff)));
      break;
    }
  }
  return r;
}

// Pairwise closure plus B^1(Omega) = Omega gives every finite family by induction.
CheckReport b1_strong_conjunction(const EpistemicModel& m) {
  CheckReport r{"B1-finite-conjunction", true, {}, "all pairs of events and the empty family", {}};
  const auto& sigma = m.sigma();
  const Rational one(1);
  const StateMask top = believes_mask(m, one, sigma.all());
  if (top != sigma.all()) {
    r.fail(event_state_witness(sigma.all(), first_state(sigma.all() & ~top), {}, "empty family"));
    return r;
  }
  const std::size_t count = m.event_count();
  std::vector<StateMask> b1(count);
  for (std::size_t e = 0; e < count; ++e) b1[e] = believes_mask(m, one, sigma.mask_of(static_cast<EventIndex>(e)));
  for (std::size_t e = 0; e < count; ++e) {
    for (std::size_t f = e + 1; f < count; ++f) {
      const StateMask meet = sigma.mask_of(static_cast<EventIndex>(e)) & sigma.mask_of(static_cast<EventIndex>(f));
      const StateMask bad = b1[e] & b1[f] & ~b1[sigma.index_of(meet)];
      if (bad != 0) {
        Witness w = event_state_witness(meet, first_state(bad));
        w.note = "B1(" + sigma.space().format(sigma.mask_of(static_cast<EventIndex>(e))) + ") & B1(" +
                 sigma.space().format(sigma.mask_of(static_cast<EventIndex>(f))) + ") not within B1 of the meet";
        r.fail(std::move(w));
        return r;
      }
    }
  }
  return r;
}

CheckReport support_identity(const EpistemicModel& m) {
  CheckReport r{"poss-is-support", true, {}, "all states", {}};
  if (!m.sigma().is_powerset()) {
    r.scope = "skipped: singletons are not events";
    return r;
  }
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    StateMask support = 0;
    for (std::size_t o = 0; o < m.state_count(); ++o) {
      const StateMask single = StateMask{1} << o;
      if (!m.types()(s, m.sigma().index_of(single)).is_zero()) support |= single;
    }
    if (support != m.poss().cell(s)) {
      Witness w;
      w.state = s;
      w.other_state = first_state(support ^ m.poss().cell(s));
      w.event = support;
      r.fail(std::move(w));
      break;
    }
  }
  return r;
}

}  // namespace

VerificationReport verify_cor_main(const EpistemicModel& m) {
  VerificationReport r;
  r.claim = "cor-main";
  r.kind = ClaimKind::kIff;
  r.hypotheses.push_back(hypothesis_of(discrete_check(m)));
  r.checks.push_back(is_regular(m));
  r.checks.push_back(check_poss_is_bracket(m));
  r.lhs = r.checks[0].passed;
  r.rhs = r.checks[1].passed;

  VerificationReport part;
  part.claim = "cor-main-consequences";
  part.kind = ClaimKind::kImplication;
  part.hypotheses.push_back({"discrete", m.discrete()});
  part.hypotheses.push_back({"regular", r.lhs});
  part.checks.push_back(k_equals_b1(m));
  part.checks.push_back(check_truth_axiom(m));
  part.checks.push_back(check_positive_introspection(m));
  part.checks.push_back(check_negative_introspection(m));
  part.checks.push_back(b1_strong_conjunction(m));
  part.checks.push_back(support_identity(m));
  part.rhs = all_passed(part.checks);
  settle(part);
  r.parts.push_back(std::move(part));
  settle(r);
  return r;
}

CheckReport check_unawareness(const EpistemicModel& m) {
  CheckReport r{"no-unawareness", true, {}, events_scope(m), {}};
  const StateMask all = m.sigma().all();
  for (std::size_t e = 0; e < m.event_count(); ++e) {
    const StateMask em = m.sigma().mask_of(static_cast<EventIndex>(e));
    const StateMask not_k = all & ~knows_mask(m, em);
    const StateMask not_k2 = all & ~knows_mask(m, not_k);
    if (const StateMask bad = not_k & not_k2; bad != 0) {
      r.fail(event_state_witness(em, first_state(bad), {}, "unaware of E"));
      break;
    }
  }
  return r;
}

VerificationReport verify_cor_unaware(const EpistemicModel& m) {
  VerificationReport r;
  r.claim = "cor-unaware";
  r.kind = ClaimKind::kImplication;
  r.hypotheses.push_back(hypothesis_of(discrete_check(m)));
  r.hypotheses.push_back({"regular", is_regular(m).passed});
  r.checks.push_back(check_unawareness(m));
  r.rhs = r.checks[0].passed;
  settle(r);
  return r;
}

VerificationReport verify_cor_regular(const EpistemicModel& m) {
  const auto partition = [&] {
    CheckReport c{"partition", poss_is_partition(m.poss()), {}, "all states", {}};
    if (!c.passed) {
      const auto k = kripke_properties(m);
      c.witnesses = k.report.witnesses;
      if (c.witnesses.empty()) c.witnesses.push_back(Witness{});
    }
    return c;
  }();
  const auto prob = check_probability_types(m);
  const auto inv = check_invariance(m);
  const auto ent = check_entailment(m);
  const auto se = check_self_evidence(m);
  const auto is_bracket = check_poss_is_bracket(m);
  const auto bayes = check_bayes_identity(m);

  VerificationReport r;
  r.claim = "cor-regular";
  r.kind = ClaimKind::kIff;
  r.hypotheses.push_back(hypothesis_of(positive_cells_check(m)));
  r.checks = {partition, prob, inv, ent, se, is_bracket, bayes};
  r.lhs = partition.passed && prob.passed && inv.passed && ent.passed && se.passed;
  r.rhs = is_bracket.passed && bayes.passed;

  VerificationReport uniqueness;
  uniqueness.claim = "cor-regular-uniqueness";
  uniqueness.kind = ClaimKind::kIff;
  uniqueness.hypotheses = {hypothesis_of(inv), hypothesis_of(ent), hypothesis_of(se), hypothesis_of(prob)};
  uniqueness.checks = {partition, is_bracket};
  uniqueness.lhs = partition.passed;
  uniqueness.rhs = is_bracket.passed;
  settle(uniqueness);

  VerificationReport bayes_part;
  bayes_part.claim = "cor-regular-bayes";
  bayes_part.kind = ClaimKind::kIff;
  bayes_part.hypotheses = {hypothesis_of(is_bracket), hypothesis_of(prob), r.hypotheses.front()};
  bayes_part.checks = {ent, inv, bayes};
  bayes_part.lhs = ent.passed && inv.passed;
  bayes_part.rhs = bayes.passed;
  settle(bayes_part);

  r.parts.push_back(std::move(uniqueness));
  r.parts.push_back(std::move(bayes_part));
  settle(r);
  return r;
}

namespace {

template <typename Op>
CheckReport truth_mu_as(const EpistemicModel& m, std::string name, Op op) {
  CheckReport r{std::move(name), true, {}, events_scope(m), {}};
  for (std::size_t e = 0; e < m.event_count(); ++e) {
    const StateMask em = m.sigma().mask_of(static_cast<EventIndex>(e));
    const StateMask excess = op(em) & ~em;
    if (const auto& mass = m.prior().measure_mask(excess); !mass.is_zero()) {
      Witness w;
      w.event = em;
      w.value = mass;
      w.note = "mass of excess " + m.space().format(excess);
      r.fail(std::move(w));
      break;
    }
  }
  return r;
}

template <typename Op>
CheckReport truth_t_as(const EpistemicModel& m, std::string name, Op op) {
  CheckReport r{std::move(name), true, {}, events_scope(m) + " x all states", {}};
  for (std::size_t e = 0; e < m.event_count(); ++e) {
    const StateMask em = m.sigma().mask_of(static_cast<EventIndex>(e));
    const StateMask excess = op(em) & ~em;
    const EventIndex idx = m.sigma().index_of(excess);
    for (std::size_t s = 0; s < m.state_count(); ++s) {
      if (!m.types()(s, idx).is_zero()) {
        r.fail(event_state_witness(em, s, m.types()(s, idx), "type mass of excess " + m.space().format(excess)));
        return r;
      }
    }
  }
  return r;
}

}  // namespace

VerificationReport verify_cor_ta(const EpistemicModel& m, bool type_only) {
  VerificationReport r;
  r.claim = type_only ? "cor-ta-type-only" : "cor-ta";
  r.kind = ClaimKind::kImplication;
  if (type_only) {
    r.hypotheses.push_back(hypothesis_of(check_invariance(m)));
    r.hypotheses.push_back(hypothesis_of(check_certainty(m)));
    bool positive = true;
    for (std::size_t s = 0; s < m.state_count(); ++s) {
      positive = positive && !m.prior().measure_mask(m.types().bracket_mask(s)).is_zero();
    }
    r.hypotheses.push_back({"positive-brackets", positive});
  } else {
    r.hypotheses.push_back({"regular", is_regular(m).passed});
  }
  const Rational one(1);
  const auto b1 = [&](StateMask e) { return believes_mask(m, one, e); };
  const auto k = [&](StateMask e) { return knows_mask(m, e); };
  r.checks.push_back(truth_mu_as(m, "B1-truth-mu-almost-surely", b1));
  r.checks.push_back(truth_t_as(m, "B1-truth-type-almost-surely", b1));
  if (!type_only) {
    r.checks.push_back(truth_mu_as(m, "K-truth-mu-almost-surely", k));
    r.checks.push_back(truth_t_as(m, "K-truth-type-almost-surely", k));
  }
  r.rhs = all_passed(r.checks);
  settle(r);
  return r;
}

VerificationReport verify_prop1(const EpistemicModel& m) {
  VerificationReport r;
  r.claim = "prop-1";
  r.kind = ClaimKind::kImplication;
  r.hypotheses.push_back(hypothesis_of(type_row_check(m, "monotone-types", [](const Classification& c) { return c.monotone; })));
  r.hypotheses.push_back(hypothesis_of(
      type_row_check(m, "one-intersection-types", [](const Classification& c) { return c.one_intersection; })));

  VerificationReport part1;
  part1.claim = "prop-1-part-1";
  part1.kind = ClaimKind::kIff;
  part1.hypotheses = r.hypotheses;
  part1.checks.push_back(check_positive_certainty(m));
  part1.checks.push_back(check_introspection(m, Introspection::kBeliefToCertainBelief));
  part1.lhs = part1.checks[0].passed;
  part1.rhs = part1.checks[1].passed;
  settle(part1);

  VerificationReport part2;
  part2.claim = "prop-1-part-2";
  part2.kind = ClaimKind::kIff;
  part2.hypotheses = r.hypotheses;
  {
    CheckReport norm{"types-normalized-at-Omega", true, {}, "all states", {}};
    for (std::size_t s = 0; s < m.state_count(); ++s) {
      const auto& v = m.types()(s, m.sigma().full_index());
      if (!v.is_one()) {
        Witness w;
        w.state = s;
        w.value = v;
        norm.fail(std::move(w));
        break;
      }
    }
    part2.hypotheses.push_back(hypothesis_of(norm));
  }
  part2.checks.push_back(check_down_certainty(m));
  part2.checks.push_back(check_introspection(m, Introspection::kDisbeliefToCertainDisbelief));
  part2.lhs = part2.checks[0].passed;
  part2.rhs = part2.checks[1].passed;
  settle(part2);

  r.rhs = part1.conclusion_holds() && (part2.status == ClaimStatus::kHypothesisNotMet || part2.conclusion_holds());
  r.parts.push_back(std::move(part1));
  r.parts.push_back(std::move(part2));
  settle(r);
  return r;
}

VerificationReport verify_prop2(const EpistemicModel& m) {
  VerificationReport r;
  r.claim = "prop-2";
  r.kind = ClaimKind::kImplication;

  VerificationReport part1;
  part1.claim = "prop-2-part-1";
  part1.kind = ClaimKind::kIff;
  part1.checks.push_back(check_self_evidence(m));
  part1.checks.push_back(check_introspection(m, Introspection::kBeliefToQualitative));
  part1.lhs = part1.checks[0].passed;
  part1.rhs = part1.checks[1].passed;
  settle(part1);

  VerificationReport part2;
  part2.claim = "prop-2-part-2";
  part2.kind = ClaimKind::kIff;
  part2.checks.push_back(check_down_containment(m));
  part2.checks.push_back(check_introspection(m, Introspection::kDisbeliefToQualitative));
  part2.lhs = part2.checks[0].passed;
  part2.rhs = part2.checks[1].passed;
  settle(part2);

  r.rhs = part1.conclusion_holds() && part2.conclusion_holds();
  r.parts.push_back(std::move(part1));
  r.parts.push_back(std::move(part2));
  settle(r);
  return r;
}

}  // namespace emck
