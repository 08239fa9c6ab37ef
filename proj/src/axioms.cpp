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

#include "emck/axioms.hpp"

#include <string>

namespace emck {

namespace {

constexpr StateMask bit(std::size_t s) { return StateMask{1} << s; }

std::string events_scope(const EpistemicModel& m) { return "all " + std::to_string(m.event_count()) + " events"; }
std::string states_scope(const EpistemicModel& m) { return "all " + std::to_string(m.state_count()) + " states"; }

Witness state_witness(std::size_t s, const Rational& value, std::string note = {}) {
  Witness w;
  w.state = s;
  w.value = value;
  w.note = std::move(note);
  return w;
}

// Least state-pair (omega, omega') with omega' in P(omega) but outside `allowed(omega)`.
template <typename Allowed>
CheckReport containment_check(const EpistemicModel& m, std::string name, Allowed allowed, bool up) {
  CheckReport r{std::move(name), true, {}, "all state pairs", {}};
  const auto& t = m.types();
  for (std::size_t s = 0; s < m.state_count() && r.passed; ++s) {
    const StateMask bad = m.poss().cell(s) & ~allowed(s);
    if (bad == 0) continue;
    const auto other = static_cast<std::size_t>(__builtin_ctzll(bad));
    Witness w;
    w.state = s;
    w.other_state = other;
    for (std::size_t e = 0; e < t.event_count(); ++e) {
      const auto idx = static_cast<EventIndex>(e);
      if (up ? t(s, idx) > t(other, idx) : t(s, idx) < t(other, idx)) {
        w.event = m.sigma().mask_of(idx);
        w.value = t(other, idx);
        break;
      }
    }
    w.note = up ? "type at state not dominated by type at other" : "type at other not dominated by type at state";
    r.fail(std::move(w));
  }
  return r;
}

template <typename Target>
CheckReport certainty_check(const EpistemicModel& m, std::string name, Target target) {
  CheckReport r{std::move(name), true, {}, states_scope(m), {}};
  const auto& t = m.types();
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    const auto& v = t(s, m.sigma().index_of(target(s)));
    if (!v.is_one()) {
      auto w = state_witness(s, v);
      w.event = target(s);
      r.fail(std::move(w));
      break;
    }
  }
  return r;
}

}  // namespace

CheckReport check_invariance(const EpistemicModel& m) {
  CheckReport r{"invariance", true, {}, events_scope(m), {}};
  const auto& sigma = m.sigma();
  const auto& t = m.types();
  for (std::size_t e = 0; e < m.event_count(); ++e) {
    const auto idx = static_cast<EventIndex>(e);
    Rational integral;
    for (std::size_t j = 0; j < sigma.atom_count(); ++j) {
      const auto& w = m.prior().atom_weight(j);
      if (w.is_zero()) continue;
      integral += t(static_cast<std::size_t>(__builtin_ctzll(sigma.atom(j))), idx) * w;
    }
    if (integral != m.prior().measure(idx)) {
      Witness w;
      w.event = sigma.mask_of(idx);
      w.value = integral;
      w.note = "mu(E) = " + m.prior().measure(idx).str();
      r.fail(std::move(w));
      break;
    }
  }
  return r;
}

CheckReport check_entailment(const EpistemicModel& m) {
  return certainty_check(m, "entailment", [&](std::size_t s) { return m.poss().cell(s); });
}

CheckReport check_self_evidence(const EpistemicModel& m) {
  return containment_check(m, "self-evidence", [&](std::size_t s) { return m.types().up_mask(s); }, true);
}

CheckReport check_down_containment(const EpistemicModel& m) {
  return containment_check(m, "down-containment", [&](std::size_t s) { return m.types().down_mask(s); }, false);
}

CheckReport check_certainty(const EpistemicModel& m, CertaintyMode mode) {
  if (mode == CertaintyMode::kExact) {
    return certainty_check(m, "certainty", [&](std::size_t s) { return m.types().bracket_mask(s); });
  }
  CheckReport r{"certainty-almost-surely", true, {}, states_scope(m) + " up to a mu-null set", {}};
  const auto& t = m.types();
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    const auto& v = t(s, m.sigma().index_of(t.bracket_mask(s)));
    if (!v.is_one() && !m.prior().state_atom_weight(s).is_zero()) {
      auto w = state_witness(s, v, "failing state carries positive prior weight");
      w.event = t.bracket_mask(s);
      r.fail(std::move(w));
      break;
    }
  }
  return r;
}

CheckReport check_positive_certainty(const EpistemicModel& m) {
  return certainty_check(m, "positive-certainty", [&](std::size_t s) { return m.types().up_mask(s); });
}

CheckReport check_down_certainty(const EpistemicModel& m) {
  return certainty_check(m, "down-certainty", [&](std::size_t s) { return m.types().down_mask(s); });
}

const char* to_string(Introspection which) {
  switch (which) {
    case Introspection::kBeliefToCertainBelief: return "Bp-within-B1Bp";
    case Introspection::kDisbeliefToCertainDisbelief: return "notBp-within-B1notBp";
    case Introspection::kBeliefToQualitative: return "Bp-within-KBp";
    case Introspection::kDisbeliefToQualitative: return "notBp-within-KnotBp";
  }
  return "unknown";
}

CheckReport check_introspection(const EpistemicModel& m, Introspection which) {
  const auto thresholds = critical_thresholds(m);
  CheckReport r{to_string(which), true, {},
                std::to_string(thresholds.size()) + " critical thresholds x " + events_scope(m), {}};
  const auto& sigma = m.sigma();
  const StateMask all = sigma.all();
  const bool negated = which == Introspection::kDisbeliefToCertainDisbelief || which == Introspection::kDisbeliefToQualitative;
  const bool certain = which == Introspection::kBeliefToCertainBelief || which == Introspection::kDisbeliefToCertainDisbelief;
  for (const auto& p : thresholds) {
    for (std::size_t e = 0; e < m.event_count(); ++e) {
      const StateMask em = sigma.mask_of(static_cast<EventIndex>(e));
      StateMask inner = believes_mask(m, p, em);
      if (negated) inner = all & ~inner;
      const StateMask outer = certain ? believes_mask(m, Rational(1), inner) : knows_mask(m, inner);
      const StateMask bad = inner & ~outer;
      if (bad != 0) {
        Witness w;
        w.threshold = p;
        w.event = em;
        w.state = static_cast<std::size_t>(__builtin_ctzll(bad));
        r.fail(std::move(w));
        return r;
      }
    }
  }
  return r;
}

CheckReport check_p_introspection(const EpistemicModel& m) {
  CheckReport r{"p-introspection", true, {}, "four inclusions", {}};
  for (auto which : {Introspection::kBeliefToCertainBelief, Introspection::kDisbeliefToCertainDisbelief,
                     Introspection::kBeliefToQualitative, Introspection::kDisbeliefToQualitative}) {
    auto part = check_introspection(m, which);
    if (!part.passed) {
      r.passed = false;
      auto w = part.witnesses.front();
      w.note = part.name;
      r.witnesses.push_back(std::move(w));
    }
    r.parts.push_back(std::move(part));
  }
  return r;
}

CheckReport check_probability_types(const EpistemicModel& m) {
  CheckReport r{"probability-types", true, {}, states_scope(m), {}};
  for (std::size_t s = 0; s < m.state_count(); ++s) {
    const auto c = classify_values(m.sigma(), m.types().row(s));
    if (!c.probability()) {
      Witness w;
      w.state = s;
      w.note = !c.normalized ? "type not normalized" : "type not additive";
      r.fail(std::move(w));
      break;
    }
  }
  return r;
}

CheckReport is_regular(const EpistemicModel& m) {
  CheckReport r{"regular", true, {}, "probability types, invariance, entailment, self-evidence", {}};
  r.parts.push_back(check_probability_types(m));
  r.parts.push_back(check_invariance(m));
  r.parts.push_back(check_entailment(m));
  r.parts.push_back(check_self_evidence(m));
  for (const auto& p : r.parts) {
    if (!p.passed) {
      r.passed = false;
      auto w = p.witnesses.front();
      w.note = p.name + (w.note.empty() ? "" : ": " + w.note);
      r.witnesses.push_back(std::move(w));
    }
  }
  return r;
}

namespace {

template <typename Violation>
CheckReport operator_check(const EpistemicModel& m, std::string name, Violation bad_states) {
  CheckReport r{std::move(name), true, {}, events_scope(m), {}};
  for (std::size_t e = 0; e < m.event_count(); ++e) {
    const StateMask em = m.sigma().mask_of(static_cast<EventIndex>(e));
    if (const StateMask bad = bad_states(em); bad != 0) {
      Witness w;
      w.event = em;
      w.state = static_cast<std::size_t>(__builtin_ctzll(bad));
      r.fail(std::move(w));
      break;
    }
  }
  return r;
}

}  // namespace

CheckReport check_truth_axiom(const EpistemicModel& m) {
  return operator_check(m, "truth-axiom", [&](StateMask e) { return knows_mask(m, e) & ~e; });
}

CheckReport check_positive_introspection(const EpistemicModel& m) {
  return operator_check(m, "positive-introspection", [&](StateMask e) {
    const StateMask k = knows_mask(m, e);
    return k & ~knows_mask(m, k);
  });
}

CheckReport check_negative_introspection(const EpistemicModel& m) {
  return operator_check(m, "negative-introspection", [&](StateMask e) {
    const StateMask nk = m.sigma().all() & ~knows_mask(m, e);
    return nk & ~knows_mask(m, nk);
  });
}

bool poss_is_partition(const Possibility& poss) {
  const auto& cells = poss.cells();
  for (std::size_t s = 0; s < cells.size(); ++s) {
    if (!((cells[s] >> s) & 1u)) return false;
    for (std::size_t o = 0; o < cells.size(); ++o) {
      if (((cells[s] >> o) & 1u) && cells[o] != cells[s]) return false;
    }
  }
  return true;
}

KripkeReport kripke_properties(const EpistemicModel& m) {
  KripkeReport k;
  const auto& cells = m.poss().cells();
  const std::size_t n = cells.size();
  const auto& space = m.space();
  const auto at = [&](std::size_t s, std::size_t o) { return " at (" + space.name(s) + "," + space.name(o) + ")"; };
  CheckReport refl{"reflexive", true, {}, states_scope(m), {}};
  CheckReport trans{"transitive", true, {}, "all state pairs", {}};
  CheckReport eucl{"euclidean", true, {}, "all state pairs", {}};
  for (std::size_t s = 0; s < n; ++s) {
    if (refl.passed && !((cells[s] >> s) & 1u)) {
      Witness w;
      w.state = s;
      w.note = "not reflexive at " + space.name(s);
      refl.fail(std::move(w));
    }
    for (std::size_t o = 0; o < n; ++o) {
      if (!((cells[s] >> o) & 1u)) continue;
      if (trans.passed && (cells[o] & ~cells[s]) != 0) {
        Witness w;
        w.state = s;
        w.other_state = o;
        w.note = "not transitive" + at(s, o);
        trans.fail(std::move(w));
      }
      if (eucl.passed && (cells[s] & ~cells[o]) != 0) {
        Witness w;
        w.state = s;
        w.other_state = o;
        w.note = "not euclidean" + at(s, o);
        eucl.fail(std::move(w));
      }
    }
  }
  k.reflexive = refl.passed;
  k.transitive = trans.passed;
  k.euclidean = eucl.passed;
  k.partition = k.reflexive && k.transitive && k.euclidean;

  auto truth = check_truth_axiom(m);
  auto pi = check_positive_introspection(m);
  auto ni = check_negative_introspection(m);
  k.truth_axiom = truth.passed;
  k.positive_introspection = pi.passed;
  k.negative_introspection = ni.passed;

  CheckReport agree{"kripke-equivalences", k.consistent(), {}, "relational vs operator-level verdicts", {}};
  if (!agree.passed) agree.witnesses.push_back(Witness{{}, {}, {}, {}, {}, "relational and operator verdicts differ"});

  k.report = CheckReport{"kripke", k.partition, {}, "P reflexive, transitive, euclidean", {}};
  for (auto* part : {&refl, &trans, &eucl}) {
    if (!part->passed) k.report.witnesses.push_back(part->witnesses.front());
  }
  k.report.parts = {std::move(refl), std::move(trans), std::move(eucl), std::move(truth), std::move(pi),
                    std::move(ni), std::move(agree)};
  if (!k.consistent()) k.report.passed = false;
  return k;
}

}  // namespace emck
