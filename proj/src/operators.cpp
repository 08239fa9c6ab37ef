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

#include "emck/operators.hpp"

#include <algorithm>

#include "emck/errors.hpp"

namespace emck {

Possibility::Possibility(SigmaAlgebra sigma, std::vector<StateMask> cells)
    : sigma_(std::move(sigma)), cells_(std::move(cells)) {
  if (cells_.size() != sigma_.state_count()) throw Error(ErrorKind::kInvalidValue, "one cell per state expected");
  for (std::size_t s = 0; s < cells_.size(); ++s) {
    if (!sigma_.is_measurable(cells_[s])) {
      throw Error(ErrorKind::kNotMeasurable, "P(" + sigma_.space().name(s) + ") = " +
                                                 sigma_.space().format(cells_[s] & sigma_.all()) + " is not in Sigma");
    }
  }
}

CheckReport poss_measurability_check(const Possibility& poss) {
  CheckReport r{"poss-measurability", true, {}, "all events of Sigma", {}};
  const auto& sigma = poss.sigma();
  const auto count = sigma.event_count();
  for (std::size_t e = 0; e < count; ++e) {
    const StateMask em = sigma.mask_of(static_cast<EventIndex>(e));
    StateMask k = 0;
    for (std::size_t s = 0; s < sigma.state_count(); ++s) {
      if ((poss.cell(s) & ~em) == 0) k |= StateMask{1} << s;
    }
    if (!sigma.is_measurable(k)) {
      r.fail({std::nullopt, std::nullopt, em, std::nullopt, std::nullopt,
              "K(E) = " + sigma.space().format(k) + " splits an atom"});
      break;
    }
  }
  return r;
}

EpistemicModel::EpistemicModel(Prior prior, Possibility poss, TypeMapping types, ModelOptions options)
    : prior_(std::move(prior)), poss_(std::move(poss)), types_(std::move(types)), options_(options) {
  if (!(prior_.sigma() == poss_.sigma()) || !(prior_.sigma() == types_.sigma())) {
    throw Error(ErrorKind::kAlgebraMismatch, "prior, correspondence and types must share Sigma");
  }
  if (!sigma().is_powerset()) {
    if (const auto r = poss_measurability_check(poss_); !r.passed) {
      throw Error(ErrorKind::kNotMeasurable,
                  "possibility correspondence: " + r.witnesses.front().note + " at E=" +
                      space().format(*r.witnesses.front().event));
    }
    if (const auto r = type_measurability_check(types_); !r.passed) {
      const auto& w = r.witnesses.front();
      throw Error(ErrorKind::kNotMeasurable, "type mapping: " + w.note + " (state " + space().name(*w.state) + ")");
    }
  }
  if (options_.require_positive_cells) {
    for (std::size_t s = 0; s < state_count(); ++s) {
      if (prior_.measure_mask(poss_.cell(s)).is_zero()) {
        throw Error(ErrorKind::kAssumptionViolated,
                    "mu(P(" + space().name(s) + ")) = 0; relax the positive-cell assumption to load this model");
      }
    }
  }
}

bool EpistemicModel::positive_cells() const noexcept {
  for (std::size_t s = 0; s < state_count(); ++s) {
    if (prior_.measure_mask(poss_.cell(s)).is_zero()) return false;
  }
  return true;
}

bool EpistemicModel::discrete() const noexcept { return sigma().is_powerset() && prior_.full_support(); }

StateMask knows_mask(const EpistemicModel& model, StateMask e) noexcept {
  StateMask out = 0;
  const auto& cells = model.poss().cells();
  for (std::size_t s = 0; s < cells.size(); ++s) {
    if ((cells[s] & ~e) == 0) out |= StateMask{1} << s;
  }
  return out;
}

StateMask believes_mask(const EpistemicModel& model, const Rational& p, StateMask e) noexcept {
  const EventIndex idx = model.sigma().index_of(e);
  StateMask out = 0;
  const auto& t = model.types();
  for (std::size_t s = 0; s < t.state_count(); ++s) {
    if (t(s, idx) >= p) out |= StateMask{1} << s;
  }
  return out;
}

namespace {

void require_model_sigma(const EpistemicModel& model, const Event& e) {
  if (!(model.sigma() == e.sigma())) throw Error(ErrorKind::kAlgebraMismatch, "event from a different algebra");
}

}  // namespace

Event qualitative_belief(const EpistemicModel& model, const Event& e) {
  require_model_sigma(model, e);
  return Event(model.sigma(), knows_mask(model, e.members()));
}

Event p_belief(const EpistemicModel& model, const Rational& p, const Event& e) {
  require_model_sigma(model, e);
  if (!p.in_unit_interval()) throw Error(ErrorKind::kRationalOutOfRange, "p = " + p.str() + " outside [0,1]");
  return Event(model.sigma(), believes_mask(model, p, e.members()));
}

std::vector<Rational> critical_thresholds(const TypeMapping& types) {
  std::vector<Rational> v{Rational(0), Rational(1)};
  v.insert(v.end(), types.table().begin(), types.table().end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Rational> critical_thresholds(const EpistemicModel& model) { return critical_thresholds(model.types()); }

Possibility poss_from_operator(const SigmaAlgebra& sigma, std::span<const StateMask> k_table) {
  const auto count = sigma.event_count();
  const auto& space = sigma.space();
  if (k_table.size() != count) throw Error(ErrorKind::kInvalidValue, "operator table needs one entry per event");
  for (std::size_t e = 0; e < count; ++e) {
    if (!sigma.is_measurable(k_table[e])) {
      throw Error(ErrorKind::kNotInducible, "K(" + space.format(sigma.mask_of(static_cast<EventIndex>(e))) +
                                                ") is not in Sigma");
    }
  }
  const EventIndex full = sigma.full_index();
  if (k_table[full] != sigma.all()) throw Error(ErrorKind::kNotInducible, "Necessitation fails: K(Omega) != Omega");

  std::vector<StateMask> cells(sigma.state_count(), sigma.all());
  for (std::size_t e = 0; e < count; ++e) {
    const StateMask em = sigma.mask_of(static_cast<EventIndex>(e));
    for (std::size_t s = 0; s < cells.size(); ++s) {
      if ((k_table[e] >> s) & 1u) cells[s] &= em;
    }
  }
  // The induced operator agrees with the table iff the table is monotone and
  // conjunctive; on mismatch locate a concrete violation for the message.
  for (std::size_t e = 0; e < count; ++e) {
    const StateMask em = sigma.mask_of(static_cast<EventIndex>(e));
    StateMask induced = 0;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      if ((cells[s] & ~em) == 0) induced |= StateMask{1} << s;
    }
    if (induced == k_table[e]) continue;
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        const StateMask am = sigma.mask_of(static_cast<EventIndex>(a));
        const StateMask bm = sigma.mask_of(static_cast<EventIndex>(b));
        if ((am & ~bm) == 0 && (k_table[a] & ~k_table[b]) != 0) {
          throw Error(ErrorKind::kNotInducible,
                      "Monotonicity fails: " + space.format(am) + " subset of " + space.format(bm));
        }
        const StateMask meet = am & bm;
        if ((k_table[a] & k_table[b] & ~k_table[sigma.index_of(meet)]) != 0) {
          throw Error(ErrorKind::kNotInducible,
                      "Conjunction fails on " + space.format(am) + " and " + space.format(bm));
        }
      }
    }
    throw Error(ErrorKind::kNotInducible, "operator disagrees with its induced correspondence at " + space.format(em));
  }
  return Possibility(sigma, std::move(cells));
}

}  // namespace emck
