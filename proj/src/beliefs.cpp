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

#include "emck/beliefs.hpp"

#include "emck/errors.hpp"

namespace emck {

Prior::Prior(SigmaAlgebra sigma, std::vector<Rational> weights)
    : sigma_(std::move(sigma)), atom_weights_(std::move(weights)) {
  if (atom_weights_.size() != sigma_.atom_count()) {
    throw Error(ErrorKind::kInvalidValue, "prior needs one weight per atom");
  }
  Rational total;
  for (const auto& w : atom_weights_) {
    if (w.is_negative()) throw Error(ErrorKind::kInvalidValue, "negative prior weight " + w.str());
    total += w;
  }
  if (!total.is_one()) throw Error(ErrorKind::kPriorNotNormalized, "prior weights sum to " + total.str());
  const auto count = sigma_.event_count();
  event_measure_.assign(count, Rational());
  // Each event's measure extends the one without its highest atom.
  for (std::size_t e = 1; e < count; ++e) {
    const int top = 63 - __builtin_clzll(e);
    event_measure_[e] = event_measure_[e & ~(std::size_t{1} << top)] + atom_weights_[static_cast<std::size_t>(top)];
  }
}

Prior Prior::from_atom_weights(const SigmaAlgebra& sigma, std::vector<Rational> weights) {
  return Prior(sigma, std::move(weights));
}

Prior Prior::from_state_weights(const SigmaAlgebra& sigma, const std::vector<Rational>& weights) {
  if (weights.size() != sigma.state_count()) throw Error(ErrorKind::kInvalidValue, "prior needs one weight per state");
  std::vector<Rational> atoms(sigma.atom_count());
  for (std::size_t s = 0; s < weights.size(); ++s) {
    if (weights[s].is_negative()) throw Error(ErrorKind::kInvalidValue, "negative prior weight " + weights[s].str());
    atoms[sigma.atom_of(s)] += weights[s];
  }
  return Prior(sigma, std::move(atoms));
}

bool Prior::full_support() const noexcept {
  for (const auto& w : atom_weights_) {
    if (w.is_zero()) return false;
  }
  return true;
}

namespace {

void require_same(const SigmaAlgebra& a, const SigmaAlgebra& b) {
  if (!(a == b)) throw Error(ErrorKind::kAlgebraMismatch, "event and measure use different algebras");
}

}  // namespace

Rational measure_of(const Prior& prior, const Event& e) {
  require_same(prior.sigma(), e.sigma());
  return prior.measure(e.index());
}

Rational conditional(const Prior& prior, const Event& e, const Event& f) {
  require_same(prior.sigma(), e.sigma());
  require_same(prior.sigma(), f.sigma());
  const auto& denom = prior.measure(f.index());
  if (denom.is_zero()) throw Error(ErrorKind::kConditioningOnNull, "mu(" + f.str() + ") = 0");
  return prior.measure_mask(e.members() & f.members()) / denom;
}

bool almost_contains(const Prior& prior, const Event& e, const Event& f) {
  return measure_of(prior, difference(e, f)).is_zero();
}

bool almost_equal(const Prior& prior, const Event& e, const Event& f) {
  return measure_of(prior, symmetric_difference(e, f)).is_zero();
}

Rational expectation(const Prior& prior, std::span<const Rational> per_state) {
  const auto& sigma = prior.sigma();
  if (per_state.size() != sigma.state_count()) throw Error(ErrorKind::kInvalidValue, "one value per state expected");
  Rational total;
  for (std::size_t j = 0; j < sigma.atom_count(); ++j) {
    const StateMask atom = sigma.atom(j);
    const auto rep = static_cast<std::size_t>(__builtin_ctzll(atom));
    for (std::size_t s = rep + 1; s < per_state.size(); ++s) {
      if (((atom >> s) & 1u) && per_state[s] != per_state[rep]) {
        throw Error(ErrorKind::kNotMeasurable, "function differs on atom " + sigma.space().format(atom));
      }
    }
    if (!prior.atom_weight(j).is_zero()) total += per_state[rep] * prior.atom_weight(j);
  }
  return total;
}

SetFunction::SetFunction(SigmaAlgebra sigma, std::vector<Rational> values)
    : sigma_(std::move(sigma)), values_(std::move(values)) {
  if (values_.size() != sigma_.event_count()) {
    throw Error(ErrorKind::kInvalidValue, "set function needs " + std::to_string(sigma_.event_count()) + " values");
  }
  for (const auto& v : values_) {
    if (!v.in_unit_interval()) throw Error(ErrorKind::kInvalidValue, "value " + v.str() + " outside [0,1]");
  }
}

SetFunction SetFunction::from_atom_weights(const SigmaAlgebra& sigma, const std::vector<Rational>& weights) {
  if (weights.size() != sigma.atom_count()) throw Error(ErrorKind::kInvalidValue, "one weight per atom expected");
  const auto count = sigma.event_count();
  std::vector<Rational> values(count);
  for (std::size_t e = 1; e < count; ++e) {
    const int top = 63 - __builtin_clzll(e);
    values[e] = values[e & ~(std::size_t{1} << top)] + weights[static_cast<std::size_t>(top)];
  }
  return SetFunction(sigma, std::move(values));
}

SetFunction SetFunction::from_prior(const Prior& prior) {
  return from_atom_weights(prior.sigma(), prior.atom_weights());
}

SetFunction SetFunction::point_mass(const SigmaAlgebra& sigma, std::size_t state) {
  std::vector<Rational> weights(sigma.atom_count());
  weights.at(sigma.atom_of(state)) = 1;
  return from_atom_weights(sigma, weights);
}

const Rational& SetFunction::value(const Event& e) const {
  require_same(sigma_, e.sigma());
  return values_[e.index()];
}

Classification classify_values(const SigmaAlgebra& sigma, std::span<const Rational> v) {
  const std::size_t k = sigma.atom_count();
  const std::size_t count = std::size_t{1} << k;
  const std::size_t full = count - 1;
  Classification c;
  c.normalized = v[0].is_zero() && v[full].is_one();

  c.monotone = true;
  for (std::size_t e = 0; e < count && c.monotone; ++e) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t bit = std::size_t{1} << j;
      if (!(e & bit) && v[e | bit] < v[e]) {
        c.monotone = false;
        break;
      }
    }
  }

  c.additive = v[0].is_zero();
  for (std::size_t e = 1; e < count && c.additive; ++e) {
    const int top = 63 - __builtin_clzll(e);
    const std::size_t rest = e & ~(std::size_t{1} << top);
    if (v[rest] + v[std::size_t{1} << top] != v[e]) c.additive = false;
  }

  c.convex = true;
  for (std::size_t e = 0; e < count && c.convex; ++e) {
    for (std::size_t a = 0; a < k && c.convex; ++a) {
      const std::size_t ba = std::size_t{1} << a;
      if (e & ba) continue;
      for (std::size_t b = a + 1; b < k; ++b) {
        const std::size_t bb = std::size_t{1} << b;
        if (e & bb) continue;
        if (v[e | ba] + v[e | bb] > v[e] + v[e | ba | bb]) {
          c.convex = false;
          break;
        }
      }
    }
  }

  // Pairs (E, F) of value-one events with E & F == x, counted via a superset
  // zeta transform followed by Moebius inversion.
  std::vector<std::int64_t> pairs(count, 0);
  for (std::size_t e = 0; e < count; ++e) pairs[e] = v[e].is_one() ? 1 : 0;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t e = 0; e < count; ++e) {
      if (!(e & bit)) pairs[e] += pairs[e | bit];
    }
  }
  for (auto& p : pairs) p *= p;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t e = 0; e < count; ++e) {
      if (!(e & bit)) pairs[e] -= pairs[e | bit];
    }
  }
  c.one_intersection = true;
  for (std::size_t e = 0; e < count; ++e) {
    if (pairs[e] > 0 && !v[e].is_one()) {
      c.one_intersection = false;
      break;
    }
  }
  return c;
}

Classification classify(const SetFunction& fn) { return classify_values(fn.sigma(), fn.values()); }

TypeMapping::TypeMapping(SigmaAlgebra sigma, std::vector<Rational> table)
    : sigma_(std::move(sigma)), events_(sigma_.event_count()), table_(std::move(table)) {
  if (table_.size() != events_ * sigma_.state_count()) {
    throw Error(ErrorKind::kInvalidValue, "type table needs one row per state");
  }
  for (const auto& v : table_) {
    if (!v.in_unit_interval()) throw Error(ErrorKind::kInvalidValue, "type value " + v.str() + " outside [0,1]");
  }
  index_order_sets();
}

TypeMapping::TypeMapping(const std::vector<SetFunction>& rows) : sigma_(rows.at(0).sigma()) {
  events_ = sigma_.event_count();
  if (rows.size() != sigma_.state_count()) throw Error(ErrorKind::kInvalidValue, "type mapping needs one row per state");
  table_.reserve(events_ * rows.size());
  for (const auto& r : rows) {
    require_same(sigma_, r.sigma());
    table_.insert(table_.end(), r.values().begin(), r.values().end());
  }
  index_order_sets();
}

void TypeMapping::index_order_sets() {
  const std::size_t n = sigma_.state_count();
  up_.assign(n, 0);
  down_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ra = row(a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto rb = row(b);
      bool le = true;
      for (std::size_t e = 0; e < events_; ++e) {
        if (ra[e] > rb[e]) {
          le = false;
          break;
        }
      }
      if (le) {
        up_[a] |= StateMask{1} << b;
        down_[b] |= StateMask{1} << a;
      }
    }
  }
}

SetFunction TypeMapping::at(std::size_t state) const {
  const auto r = row(state);
  return SetFunction(sigma_, std::vector<Rational>(r.begin(), r.end()));
}

Event up_set(const TypeMapping& t, std::size_t state) { return Event(t.sigma(), t.up_mask(state)); }
Event down_set(const TypeMapping& t, std::size_t state) { return Event(t.sigma(), t.down_mask(state)); }
Event bracket(const TypeMapping& t, std::size_t state) { return Event(t.sigma(), t.bracket_mask(state)); }

CheckReport type_measurability_check(const TypeMapping& t) {
  CheckReport r{"type-measurability", true, {}, "all events x atoms; up/down sets at every state", {}};
  const auto& sigma = t.sigma();
  for (std::size_t e = 0; e < t.event_count() && r.passed; ++e) {
    for (std::size_t s = 0; s < t.state_count(); ++s) {
      const StateMask atom = sigma.atom(sigma.atom_of(s));
      const auto rep = static_cast<std::size_t>(__builtin_ctzll(atom));
      if (t(s, static_cast<EventIndex>(e)) != t(rep, static_cast<EventIndex>(e))) {
        r.fail({s, rep, sigma.mask_of(static_cast<EventIndex>(e)), std::nullopt, t(s, static_cast<EventIndex>(e)),
                "t(., E) not constant on atom " + sigma.space().format(atom)});
        break;
      }
    }
  }
  for (std::size_t s = 0; s < t.state_count(); ++s) {
    if (!sigma.is_measurable(t.up_mask(s))) {
      r.fail({s, std::nullopt, std::nullopt, std::nullopt, std::nullopt, "up set not in Sigma"});
    }
    if (!sigma.is_measurable(t.down_mask(s))) {
      r.fail({s, std::nullopt, std::nullopt, std::nullopt, std::nullopt, "down set not in Sigma"});
    }
  }
  return r;
}

}  // namespace emck
