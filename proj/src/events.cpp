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

#include "emck/events.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_set>

#include "emck/errors.hpp"

namespace emck {

namespace {

std::atomic<int> g_max_atoms{kDefaultMaxAtoms};

}  // namespace

int max_atoms() noexcept { return g_max_atoms.load(std::memory_order_relaxed); }

void set_max_atoms(int cap) noexcept {
  g_max_atoms.store(std::clamp(cap, 1, kHardMaxAtoms), std::memory_order_relaxed);
}

StateSpace::StateSpace(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(ErrorKind::kEmptyStateName, "state space needs at least one state");
  if (names_.size() > kMaxStates) {
    throw Error(ErrorKind::kTooManyStates,
                std::to_string(names_.size()) + " states (limit " + std::to_string(kMaxStates) + ")");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error(ErrorKind::kEmptyStateName, "state names must be nonempty");
    if (!seen.insert(n).second) throw Error(ErrorKind::kDuplicateState, "state '" + n + "' declared twice");
  }
}

std::optional<std::size_t> StateSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::string StateSpace::format(StateMask members, std::string_view sep) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!((members >> i) & 1u)) continue;
    if (!first) out += sep;
    out += names_[i];
    first = false;
  }
  out += "}";
  return out;
}

StateSpace make_space(std::vector<std::string> names) { return StateSpace(std::move(names)); }

struct SigmaAlgebra::Impl {
  StateSpace space;
  std::vector<StateMask> atoms;
  std::vector<std::uint8_t> atom_of_state;
  bool powerset = false;
};

SigmaAlgebra SigmaAlgebra::powerset(const StateSpace& space) {
  std::vector<StateMask> blocks;
  blocks.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) blocks.push_back(StateMask{1} << i);
  return from_atoms(space, blocks);
}

SigmaAlgebra SigmaAlgebra::from_atoms(const StateSpace& space, const std::vector<StateMask>& blocks) {
  StateMask seen = 0;
  for (const StateMask b : blocks) {
    if (b == 0) throw Error(ErrorKind::kInvalidAtoms, "empty block");
    if ((b & ~space.all()) != 0) throw Error(ErrorKind::kInvalidAtoms, "block mentions unknown states");
    if ((seen & b) != 0) {
      throw Error(ErrorKind::kInvalidAtoms, "blocks overlap on " + space.format(seen & b));
    }
    seen |= b;
  }
  if (seen != space.all()) {
    throw Error(ErrorKind::kInvalidAtoms, "blocks do not cover " + space.format(space.all() & ~seen));
  }
  auto impl = std::make_shared<Impl>(Impl{space, blocks, {}, false});
  std::sort(impl->atoms.begin(), impl->atoms.end(),
            [](StateMask a, StateMask b) { return __builtin_ctzll(a) < __builtin_ctzll(b); });
  impl->atom_of_state.assign(space.size(), 0);
  for (std::size_t j = 0; j < impl->atoms.size(); ++j) {
    for (std::size_t s = 0; s < space.size(); ++s) {
      if ((impl->atoms[j] >> s) & 1u) impl->atom_of_state[s] = static_cast<std::uint8_t>(j);
    }
  }
  impl->powerset = impl->atoms.size() == space.size();
  return SigmaAlgebra(std::move(impl));
}

const StateSpace& SigmaAlgebra::space() const noexcept { return impl_->space; }
std::size_t SigmaAlgebra::atom_count() const noexcept { return impl_->atoms.size(); }
StateMask SigmaAlgebra::atom(std::size_t j) const { return impl_->atoms.at(j); }
const std::vector<StateMask>& SigmaAlgebra::atoms() const noexcept { return impl_->atoms; }
std::size_t SigmaAlgebra::atom_of(std::size_t state) const { return impl_->atom_of_state.at(state); }
bool SigmaAlgebra::is_powerset() const noexcept { return impl_->powerset; }

bool SigmaAlgebra::is_measurable(StateMask subset) const noexcept {
  if ((subset & ~all()) != 0) return false;
  if (impl_->powerset) return true;
  for (const StateMask a : impl_->atoms) {
    const StateMask hit = subset & a;
    if (hit != 0 && hit != a) return false;
  }
  return true;
}

std::size_t SigmaAlgebra::event_count() const {
  const auto k = atom_count();
  if (k > static_cast<std::size_t>(max_atoms())) {
    throw Error(ErrorKind::kTooManyAtoms,
                std::to_string(k) + " atoms exceed the enumeration cap of " + std::to_string(max_atoms()));
  }
  return std::size_t{1} << k;
}

EventIndex SigmaAlgebra::full_index() const noexcept {
  return static_cast<EventIndex>((std::uint64_t{1} << atom_count()) - 1);
}

EventIndex SigmaAlgebra::index_of(StateMask members) const noexcept {
  if (impl_->powerset) return static_cast<EventIndex>(members);
  EventIndex index = 0;
  const auto& atoms = impl_->atoms;
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    if ((members & atoms[j]) != 0) index |= EventIndex{1} << j;
  }
  return index;
}

StateMask SigmaAlgebra::mask_of(EventIndex index) const noexcept {
  if (impl_->powerset) return index;
  StateMask members = 0;
  const auto& atoms = impl_->atoms;
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    if ((index >> j) & 1u) members |= atoms[j];
  }
  return members;
}

StateMask SigmaAlgebra::closure(StateMask subset) const noexcept {
  if (impl_->powerset) return subset & all();
  StateMask out = 0;
  for (const StateMask a : impl_->atoms) {
    if ((subset & a) != 0) out |= a;
  }
  return out;
}

bool operator==(const SigmaAlgebra& a, const SigmaAlgebra& b) noexcept {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->space == b.impl_->space && a.impl_->atoms == b.impl_->atoms;
}

SigmaAlgebra sigma_powerset(const StateSpace& space) { return SigmaAlgebra::powerset(space); }

SigmaAlgebra sigma_from_atoms(const StateSpace& space, const std::vector<StateMask>& blocks) {
  return SigmaAlgebra::from_atoms(space, blocks);
}

bool is_measurable(const SigmaAlgebra& sigma, StateMask subset) noexcept { return sigma.is_measurable(subset); }

Event::Event(SigmaAlgebra sigma, StateMask members) : sigma_(std::move(sigma)), members_(members) {
  if (!sigma_.is_measurable(members_)) {
    throw Error(ErrorKind::kNotMeasurable, sigma_.space().format(members_ & sigma_.all()) +
                                               " is not a union of atoms");
  }
}

bool Event::subset_of(const Event& other) const {
  if (!(sigma_ == other.sigma_)) throw Error(ErrorKind::kAlgebraMismatch, "events from different algebras");
  return (members_ & ~other.members_) == 0;
}

namespace {

const SigmaAlgebra& common(const Event& e, const Event& f) {
  if (!(e.sigma() == f.sigma())) throw Error(ErrorKind::kAlgebraMismatch, "events from different algebras");
  return e.sigma();
}

}  // namespace

Event complement(const Event& e) { return Event(e.sigma(), e.sigma().all() & ~e.members()); }
Event intersect(const Event& e, const Event& f) { return Event(common(e, f), e.members() & f.members()); }
Event unite(const Event& e, const Event& f) { return Event(common(e, f), e.members() | f.members()); }
Event difference(const Event& e, const Event& f) { return Event(common(e, f), e.members() & ~f.members()); }
Event symmetric_difference(const Event& e, const Event& f) {
  return Event(common(e, f), e.members() ^ f.members());
}

std::vector<Event> enumerate_events(const SigmaAlgebra& sigma) {
  const auto count = sigma.event_count();
  std::vector<Event> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(Event::from_index(sigma, static_cast<EventIndex>(i)));
  return out;
}

}  // namespace emck
