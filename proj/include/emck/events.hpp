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

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace emck {

/// Bit i set means state i (in declaration order) is a member.
using StateMask = std::uint64_t;
/// Bit j set means atom j of a sigma-algebra is included. Also the position
/// of the event in enumerate_events() order.
using EventIndex = std::uint32_t;

inline constexpr std::size_t kMaxStates = 64;
inline constexpr int kDefaultMaxAtoms = 16;
inline constexpr int kHardMaxAtoms = 24;

/// Enumeration cap on the number of atoms (2^k events are materialized).
int max_atoms() noexcept;
/// Clamped to [1, kHardMaxAtoms].
void set_max_atoms(int cap) noexcept;

inline int popcount(StateMask m) noexcept { return __builtin_popcountll(m); }

/// Ordered, nonempty list of distinct state names.
class StateSpace {
 public:
  explicit StateSpace(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  StateMask all() const noexcept {
    return names_.size() == 64 ? ~StateMask{0} : (StateMask{1} << names_.size()) - 1;
  }

  /// Renders a member set as "{a,b}" using declaration order.
  std::string format(StateMask members, std::string_view sep = ",") const;

  friend bool operator==(const StateSpace&, const StateSpace&) = default;

 private:
  std::vector<std::string> names_;
};

StateSpace make_space(std::vector<std::string> names);

/// A finite sigma-algebra, stored as its atom partition.
///
/// Atoms are kept sorted by their lowest member state, so the powerset
/// algebra has atom i == {state i} and EventIndex coincides with StateMask.
class SigmaAlgebra {
 public:
  static SigmaAlgebra powerset(const StateSpace& space);
  static SigmaAlgebra from_atoms(const StateSpace& space, const std::vector<StateMask>& blocks);

  const StateSpace& space() const noexcept;
  std::size_t state_count() const noexcept { return space().size(); }
  std::size_t atom_count() const noexcept;
  StateMask atom(std::size_t j) const;
  const std::vector<StateMask>& atoms() const noexcept;
  std::size_t atom_of(std::size_t state) const;
  bool is_powerset() const noexcept;
  StateMask all() const noexcept { return space().all(); }

  bool is_measurable(StateMask subset) const noexcept;

  /// 2^atom_count(); throws TooManyAtoms beyond max_atoms().
  std::size_t event_count() const;
  EventIndex full_index() const noexcept;
  /// Precondition: is_measurable(members).
  EventIndex index_of(StateMask members) const noexcept;
  StateMask mask_of(EventIndex index) const noexcept;

  /// Smallest measurable superset (union of atoms met by `subset`).
  StateMask closure(StateMask subset) const noexcept;

  friend bool operator==(const SigmaAlgebra& a, const SigmaAlgebra& b) noexcept;

 private:
  struct Impl;
  explicit SigmaAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

SigmaAlgebra sigma_powerset(const StateSpace& space);
SigmaAlgebra sigma_from_atoms(const StateSpace& space, const std::vector<StateMask>& blocks);
bool is_measurable(const SigmaAlgebra& sigma, StateMask subset) noexcept;

/// A measurable subset of the state space, tied to its sigma-algebra.
class Event {
 public:
  /// Throws NotMeasurable when `members` splits an atom.
  Event(SigmaAlgebra sigma, StateMask members);

  static Event empty(const SigmaAlgebra& sigma) { return Event(sigma, 0); }
  static Event full(const SigmaAlgebra& sigma) { return Event(sigma, sigma.all()); }
  static Event from_index(const SigmaAlgebra& sigma, EventIndex index) {
    return Event(sigma, sigma.mask_of(index));
  }

  StateMask members() const noexcept { return members_; }
  const SigmaAlgebra& sigma() const noexcept { return sigma_; }
  EventIndex index() const noexcept { return sigma_.index_of(members_); }
  bool contains(std::size_t state) const noexcept { return (members_ >> state) & 1u; }
  bool is_empty() const noexcept { return members_ == 0; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(popcount(members_)); }
  bool subset_of(const Event& other) const;
  std::string str() const { return sigma_.space().format(members_); }

  friend bool operator==(const Event& a, const Event& b) noexcept {
    return a.members_ == b.members_ && a.sigma_ == b.sigma_;
  }

 private:
  SigmaAlgebra sigma_;
  StateMask members_ = 0;
};

Event complement(const Event& e);
/// Operands must share a sigma-algebra (AlgebraMismatch otherwise).
Event intersect(const Event& e, const Event& f);
Event unite(const Event& e, const Event& f);
Event difference(const Event& e, const Event& f);
Event symmetric_difference(const Event& e, const Event& f);

inline Event operator~(const Event& e) { return complement(e); }
inline Event operator&(const Event& e, const Event& f) { return intersect(e, f); }
inline Event operator|(const Event& e, const Event& f) { return unite(e, f); }
inline Event operator-(const Event& e, const Event& f) { return difference(e, f); }
inline Event operator^(const Event& e, const Event& f) { return symmetric_difference(e, f); }

/// All 2^k events in EventIndex order: [empty, A1, A2, A1|A2, A3, ...].
std::vector<Event> enumerate_events(const SigmaAlgebra& sigma);

}  // namespace emck
