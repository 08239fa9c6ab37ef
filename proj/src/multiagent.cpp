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

#include "emck/multiagent.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "emck/axioms.hpp"
#include "emck/errors.hpp"

namespace emck {

namespace {

std::size_t first_state(StateMask m) { return static_cast<std::size_t>(__builtin_ctzll(m)); }

void require_sigma(const InteractiveModel& im, const Event& e) {
  if (!(im.sigma() == e.sigma())) throw Error(ErrorKind::kAlgebraMismatch, "event from a different algebra");
}

}  // namespace

const char* to_string(TypeSource source) {
  switch (source) {
    case TypeSource::kBayes: return "bayes";
    case TypeSource::kAdditive: return "additive";
    case TypeSource::kCapacity: return "capacity";
  }
  return "unknown";
}

InteractiveModel::InteractiveModel(std::vector<std::string> names, std::vector<EpistemicModel> models,
                                   std::vector<TypeSource> sources)
    : names_(std::move(names)), models_(std::move(models)), sources_(std::move(sources)) {
  if (models_.empty()) throw Error(ErrorKind::kInvalidValue, "an interactive model needs at least one agent");
  if (names_.size() != models_.size()) throw Error(ErrorKind::kInvalidValue, "one name per agent expected");
  if (sources_.empty()) sources_.assign(models_.size(), TypeSource::kCapacity);
  if (sources_.size() != models_.size()) throw Error(ErrorKind::kInvalidValue, "one type source per agent expected");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error(ErrorKind::kInvalidValue, "agent names must be nonempty");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw Error(ErrorKind::kInvalidValue, "duplicate agent '" + names_[i] + "'");
    }
    if (!(models_[i].prior() == models_.front().prior())) {
      throw Error(ErrorKind::kAlgebraMismatch, "agent '" + names_[i] + "' does not share the common prior");
    }
  }
}

std::optional<std::size_t> InteractiveModel::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool InteractiveModel::regular() const {
  return std::all_of(models_.begin(), models_.end(), [](const EpistemicModel& m) { return is_regular(m).passed; });
}

StateMask mutual_knows_mask(const InteractiveModel& im, StateMask e) noexcept {
  StateMask out = im.sigma().all();
  for (const auto& m : im.agents()) out &= knows_mask(m, e);
  return out;
}

StateMask mutual_believes_mask(const InteractiveModel& im, const Rational& p, StateMask e) noexcept {
  StateMask out = im.sigma().all();
  for (const auto& m : im.agents()) out &= believes_mask(m, p, e);
  return out;
}

StateMask common_knows_mask(const InteractiveModel& im, StateMask e) {
  const std::size_t n = im.space().size();
  std::vector<StateMask> reach(n, 0);
  for (const auto& m : im.agents()) {
    for (std::size_t s = 0; s < n; ++s) reach[s] |= m.poss().cell(s);
  }
  const std::vector<StateMask> step = reach;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s = 0; s < n; ++s) {
      StateMask next = reach[s];
      for (StateMask rest = reach[s]; rest != 0; rest &= rest - 1) next |= step[first_state(rest)];
      if (next != reach[s]) {
        reach[s] = next;
        changed = true;
      }
    }
  }
  StateMask out = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if ((reach[s] & ~e) == 0) out |= StateMask{1} << s;
  }
  return out;
}

StateMask common_knows_iterative_mask(const InteractiveModel& im, StateMask e) {
  StateMask out = im.sigma().all();
  StateMask x = e;
  for (std::size_t n = 0; n < im.space().size(); ++n) {
    x = mutual_knows_mask(im, x);
    out &= x;
  }
  return out;
}

StateMask common_believes_mask(const InteractiveModel& im, const Rational& p, StateMask e) {
  // Without the Truth Axiom the iterates need not decrease, so run until the
  // orbit closes; every later iterate is then already recorded.
  std::unordered_set<StateMask> seen;
  StateMask out = im.sigma().all();
  StateMask x = e;
  for (;;) {
    x = mutual_believes_mask(im, p, x);
    if (!seen.insert(x).second) break;
    out &= x;
  }
  return out;
}

Event mutual_qualitative(const InteractiveModel& im, const Event& e) {
  require_sigma(im, e);
  return Event(im.sigma(), mutual_knows_mask(im, e.members()));
}

Event mutual_p_belief(const InteractiveModel& im, const Rational& p, const Event& e) {
  require_sigma(im, e);
  if (!p.in_unit_interval()) throw Error(ErrorKind::kRationalOutOfRange, "p = " + p.str() + " outside [0,1]");
  return Event(im.sigma(), mutual_believes_mask(im, p, e.members()));
}

Event common_qualitative(const InteractiveModel& im, const Event& e) {
  require_sigma(im, e);
  const StateMask closure = common_knows_mask(im, e.members());
  if (closure != common_knows_iterative_mask(im, e.members())) {
    throw std::logic_error("common belief: closure and iteration disagree at " + e.str());
  }
  return Event(im.sigma(), closure);
}

Event common_p_belief(const InteractiveModel& im, const Rational& p, const Event& e) {
  require_sigma(im, e);
  if (!p.in_unit_interval()) throw Error(ErrorKind::kRationalOutOfRange, "p = " + p.str() + " outside [0,1]");
  return Event(im.sigma(), common_believes_mask(im, p, e.members()));
}

std::vector<Rational> critical_thresholds(const InteractiveModel& im) {
  std::vector<Rational> v;
  for (const auto& m : im.agents()) {
    const auto own = critical_thresholds(m);
    v.insert(v.end(), own.begin(), own.end());
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

namespace {

std::string events_scope(const InteractiveModel& im) {
  return "all " + std::to_string(im.sigma().event_count()) + " events";
}

Witness event_state(StateMask e, std::size_t s, std::string note = {}) {
  Witness w;
  w.event = e;
  w.state = s;
  w.note = std::move(note);
  return w;
}

template <typename Bad>
CheckReport over_events(const InteractiveModel& im, std::string name, Bad bad_states) {
  CheckReport r{std::move(name), true, {}, events_scope(im), {}};
  const auto count = im.sigma().event_count();
  for (std::size_t e = 0; e < count; ++e) {
    const StateMask em = im.sigma().mask_of(static_cast<EventIndex>(e));
    if (const StateMask bad = bad_states(em); bad != 0) {
      r.fail(event_state(em, first_state(bad)));
      break;
    }
  }
  return r;
}

std::vector<CheckReport> regularity_reports(const InteractiveModel& im) {
  std::vector<CheckReport> out;
  for (std::size_t i = 0; i < im.agent_count(); ++i) {
    auto r = is_regular(im.agent(i));
    r.name = "regular[" + im.name(i) + "]";
    out.push_back(std::move(r));
  }
  return out;
}

void add_regularity(VerificationReport& r, const InteractiveModel& im) {
  for (auto& c : regularity_reports(im)) r.hypotheses.push_back({c.name, c.passed});
}

}  // namespace

VerificationReport verify_cor_ck(const InteractiveModel& im) {
  VerificationReport r;
  r.claim = "cor-ck";
  r.kind = ClaimKind::kImplication;
  r.hypotheses.push_back({"discrete", im.discrete()});
  add_regularity(r, im);
  const Rational one(1);
  const StateMask all = im.sigma().all();
  r.checks.push_back(over_events(im, "closure-equals-iteration", [&](StateMask e) {
    return common_knows_mask(im, e) ^ common_knows_iterative_mask(im, e);
  }));
  r.checks.push_back(over_events(im, "C-equals-C1", [&](StateMask e) {
    return common_knows_mask(im, e) ^ common_believes_mask(im, one, e);
  }));
  r.checks.push_back(over_events(im, "C-truth-axiom", [&](StateMask e) { return common_knows_mask(im, e) & ~e; }));
  r.checks.push_back(over_events(im, "C-positive-introspection", [&](StateMask e) {
    const StateMask c = common_knows_mask(im, e);
    return c & ~common_knows_mask(im, c);
  }));
  r.checks.push_back(over_events(im, "C-negative-introspection", [&](StateMask e) {
    const StateMask nc = all & ~common_knows_mask(im, e);
    return nc & ~common_knows_mask(im, nc);
  }));
  r.rhs = std::all_of(r.checks.begin(), r.checks.end(), [](const CheckReport& c) { return c.passed; });
  settle(r);
  return r;
}

CheckReport verify_agreement(const InteractiveModel& im, const Rational& p, const Event& e, std::uint64_t budget) {
  require_sigma(im, e);
  if (!p.in_unit_interval()) throw Error(ErrorKind::kRationalOutOfRange, "p = " + p.str() + " outside [0,1]");
  const std::size_t agents = im.agent_count();
  const std::size_t n = im.space().size();
  const EventIndex idx = e.index();

  std::vector<std::vector<Rational>> values(agents);
  std::uint64_t vectors = 1;
  for (std::size_t i = 0; i < agents; ++i) {
    for (std::size_t s = 0; s < n; ++s) values[i].push_back(im.agent(i).types()(s, idx));
    std::sort(values[i].begin(), values[i].end());
    values[i].erase(std::unique(values[i].begin(), values[i].end()), values[i].end());
    if (vectors > budget / values[i].size()) {
      throw Error(ErrorKind::kResourceLimit, "agreement enumeration exceeds the budget of " +
                                                 std::to_string(budget) + " posterior vectors");
    }
    vectors *= values[i].size();
  }

  CheckReport r{"agreement", true, {}, std::to_string(vectors) + " posterior vectors at p=" + p.str() + ", E=" + e.str(), {}};
  const Rational slack = Rational(1) - p;
  std::vector<std::size_t> digit(agents, 0);
  for (std::uint64_t v = 0; v < vectors; ++v) {
    StateMask d = im.sigma().all();
    for (std::size_t i = 0; i < agents; ++i) {
      StateMask level = 0;
      for (std::size_t s = 0; s < n; ++s) {
        if (im.agent(i).types()(s, idx) == values[i][digit[i]]) level |= StateMask{1} << s;
      }
      d &= level;
    }
    const StateMask cp = common_believes_mask(im, p, d);
    const StateMask c = common_knows_mask(im, d);
    for (std::size_t i = 0; i < agents && r.passed; ++i) {
      for (std::size_t j = i + 1; j < agents && r.passed; ++j) {
        const Rational gap = abs(values[i][digit[i]] - values[j][digit[j]]);
        const bool p_violation = cp != 0 && gap > slack;
        const bool c_violation = c != 0 && !gap.is_zero();
        if (p_violation || c_violation) {
          Witness w;
          w.threshold = p;
          w.event = d;
          w.state = first_state(p_violation ? cp : c);
          w.value = gap;
          w.note = std::string(p_violation ? "common p-belief" : "common belief") + " in D with posteriors " +
                   im.name(i) + "=" + values[i][digit[i]].str() + ", " + im.name(j) + "=" + values[j][digit[j]].str();
          r.fail(std::move(w));
        }
      }
    }
    if (!r.passed) break;
    for (std::size_t i = agents; i-- > 0;) {
      if (++digit[i] < values[i].size()) break;
      digit[i] = 0;
    }
  }
  return r;
}

VerificationReport verify_prop3(const InteractiveModel& im, std::uint64_t budget) {
  VerificationReport r;
  r.claim = "prop-3";
  r.kind = ClaimKind::kImplication;
  add_regularity(r, im);
  const auto thresholds = critical_thresholds(im);
  CheckReport all{"agreement", true, {},
                  std::to_string(thresholds.size()) + " critical thresholds x " + events_scope(im), {}};
  const auto count = im.sigma().event_count();
  for (std::size_t e = 0; e < count && all.passed; ++e) {
    const Event ev = Event::from_index(im.sigma(), static_cast<EventIndex>(e));
    for (const auto& p : thresholds) {
      auto one = verify_agreement(im, p, ev, budget);
      if (!one.passed) {
        all.fail(one.witnesses.front());
        break;
      }
    }
  }
  r.checks.push_back(std::move(all));
  r.rhs = r.checks.front().passed;
  settle(r);
  return r;
}

namespace {

template <typename Op>
CheckReport common_truth_mu(const InteractiveModel& im, std::string name, Op op) {
  CheckReport r{std::move(name), true, {}, events_scope(im), {}};
  const auto count = im.sigma().event_count();
  for (std::size_t e = 0; e < count; ++e) {
    const StateMask em = im.sigma().mask_of(static_cast<EventIndex>(e));
    const StateMask excess = op(em) & ~em;
    if (const auto& mass = im.prior().measure_mask(excess); !mass.is_zero()) {
      Witness w;
      w.event = em;
      w.value = mass;
      w.note = "mass of excess " + im.space().format(excess);
      r.fail(std::move(w));
      break;
    }
  }
  return r;
}

template <typename Op>
CheckReport common_truth_types(const InteractiveModel& im, std::string name, Op op) {
  CheckReport r{std::move(name), true, {}, events_scope(im) + " x all agents and states", {}};
  const auto count = im.sigma().event_count();
  for (std::size_t e = 0; e < count; ++e) {
    const StateMask em = im.sigma().mask_of(static_cast<EventIndex>(e));
    const EventIndex excess = im.sigma().index_of(op(em) & ~em);
    for (std::size_t i = 0; i < im.agent_count(); ++i) {
      for (std::size_t s = 0; s < im.space().size(); ++s) {
        const auto& v = im.agent(i).types()(s, excess);
        if (!v.is_zero()) {
          Witness w = event_state(em, s, "agent " + im.name(i));
          w.value = v;
          r.fail(std::move(w));
          return r;
        }
      }
    }
  }
  return r;
}

}  // namespace

VerificationReport verify_cor_ta_common(const InteractiveModel& im) {
  VerificationReport r;
  r.claim = "cor-ta-common";
  r.kind = ClaimKind::kImplication;
  add_regularity(r, im);
  const Rational one(1);
  const auto c = [&](StateMask e) { return common_knows_mask(im, e); };
  const auto c1 = [&](StateMask e) { return common_believes_mask(im, one, e); };
  r.checks.push_back(common_truth_mu(im, "C-truth-mu-almost-surely", c));
  r.checks.push_back(common_truth_mu(im, "C1-truth-mu-almost-surely", c1));
  r.checks.push_back(common_truth_types(im, "C-truth-type-almost-surely", c));
  r.checks.push_back(common_truth_types(im, "C1-truth-type-almost-surely", c1));
  r.rhs = std::all_of(r.checks.begin(), r.checks.end(), [](const CheckReport& x) { return x.passed; });
  settle(r);
  return r;
}

}  // namespace emck
