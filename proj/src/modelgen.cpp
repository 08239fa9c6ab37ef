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

#include "emck/modelgen.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "emck/axioms.hpp"
#include "emck/errors.hpp"
#include "emck/theorems.hpp"

namespace emck {

const char* to_string(SigmaMode mode) { return mode == SigmaMode::kPowerset ? "powerset" : "random-partition"; }

const char* to_string(TypeMode mode) {
  switch (mode) {
    case TypeMode::kBayes: return "bayes";
    case TypeMode::kAdditive: return "random-additive";
    case TypeMode::kCapacity: return "random-capacity";
    case TypeMode::kMonotoneCapacity: return "random-monotone-capacity";
  }
  return "unknown";
}

const char* to_string(PossMode mode) {
  switch (mode) {
    case PossMode::kPartition: return "partition";
    case PossMode::kReflexive: return "reflexive";
    case PossMode::kArbitrary: return "arbitrary-nonempty";
  }
  return "unknown";
}

const char* to_string(GenMode mode) { return mode == GenMode::kExhaustive ? "exhaustive" : "random"; }

std::optional<SigmaMode> sigma_mode_from(std::string_view t) {
  if (t == "powerset") return SigmaMode::kPowerset;
  if (t == "random-partition") return SigmaMode::kRandomPartition;
  return std::nullopt;
}

std::optional<TypeMode> type_mode_from(std::string_view t) {
  for (auto m : {TypeMode::kBayes, TypeMode::kAdditive, TypeMode::kCapacity, TypeMode::kMonotoneCapacity}) {
    if (t == to_string(m)) return m;
  }
  return std::nullopt;
}

std::optional<PossMode> poss_mode_from(std::string_view t) {
  for (auto m : {PossMode::kPartition, PossMode::kReflexive, PossMode::kArbitrary}) {
    if (t == to_string(m)) return m;
  }
  return std::nullopt;
}

std::optional<GenMode> gen_mode_from(std::string_view t) {
  if (t == "exhaustive") return GenMode::kExhaustive;
  if (t == "random") return GenMode::kRandom;
  return std::nullopt;
}

const std::vector<std::string>& filter_flags() {
  static const std::vector<std::string> flags{"regular",  "discrete",         "partition",  "positive-cells",
                                              "monotone", "one-intersection", "normalized", "probability",
                                              "convex"};
  return flags;
}

namespace {

template <typename Pred>
bool every_row(const InteractiveModel& im, Pred pred) {
  for (const auto& m : im.agents()) {
    for (std::size_t s = 0; s < m.state_count(); ++s) {
      if (!pred(classify_values(m.sigma(), m.types().row(s)))) return false;
    }
  }
  return true;
}

}  // namespace

bool satisfies(const InteractiveModel& im, std::string_view flag) {
  const auto& agents = im.agents();
  if (flag == "regular") return im.regular();
  if (flag == "discrete") return im.discrete();
  if (flag == "partition") {
    return std::all_of(agents.begin(), agents.end(), [](const EpistemicModel& m) { return poss_is_partition(m.poss()); });
  }
  if (flag == "positive-cells") {
    return std::all_of(agents.begin(), agents.end(), [](const EpistemicModel& m) { return m.positive_cells(); });
  }
  if (flag == "monotone") return every_row(im, [](const Classification& c) { return c.monotone; });
  if (flag == "one-intersection") return every_row(im, [](const Classification& c) { return c.one_intersection; });
  if (flag == "normalized") return every_row(im, [](const Classification& c) { return c.normalized; });
  if (flag == "probability") return every_row(im, [](const Classification& c) { return c.probability(); });
  if (flag == "convex") return every_row(im, [](const Classification& c) { return c.convex; });
  throw Error(ErrorKind::kInvalidArgument, "unknown filter flag '" + std::string(flag) + "'");
}

void validate(const GenParams& p) {
  if (p.min_states < 1 || p.max_states < p.min_states) throw Error(ErrorKind::kInvalidArgument, "need 1 <= min_states <= max_states");
  if (p.max_states > 8) throw Error(ErrorKind::kInvalidArgument, "generated models have at most 8 states");
  if (p.agents < 1 || p.agents > 8) throw Error(ErrorKind::kInvalidArgument, "agents must lie in [1, 8]");
  if (p.denominator < 1 || p.denominator > 1000) throw Error(ErrorKind::kInvalidArgument, "denominator must lie in [1, 1000]");
  if (p.budget == 0) throw Error(ErrorKind::kInvalidArgument, "budget must be positive");
  const auto& flags = filter_flags();
  for (const auto& f : p.require) {
    if (std::find(flags.begin(), flags.end(), f) == flags.end()) {
      throw Error(ErrorKind::kInvalidArgument, "unknown filter flag '" + f + "'");
    }
  }
}

namespace {

std::vector<std::string> agent_names(std::size_t count) {
  static const char* const kNames[] = {"alice", "bob", "carol", "dave", "erin", "frank", "grace", "heidi"};
  return {kNames, kNames + count};
}

// Compositions of `total` into `parts` parts (each >= `least`), lexicographic.
void compositions(std::int64_t total, std::size_t parts, std::int64_t least, std::vector<std::int64_t>& cur,
                  std::vector<std::vector<std::int64_t>>& out) {
  if (cur.size() + 1 == parts) {
    if (total >= least) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  const std::int64_t reserve = least * static_cast<std::int64_t>(parts - cur.size() - 1);
  for (std::int64_t v = least; v + reserve <= total; ++v) {
    cur.push_back(v);
    compositions(total - v, parts, least, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::int64_t>> compositions(std::int64_t total, std::size_t parts, std::int64_t least) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  compositions(total, parts, least, cur, out);
  return out;
}

// Restricted growth strings: every set partition of m items, lexicographic.
std::vector<std::vector<std::size_t>> set_partitions(std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> a(m, 0);
  const auto rec = [&](auto&& self, std::size_t i, std::size_t top) -> void {
    if (i == m) {
      out.push_back(a);
      return;
    }
    for (std::size_t v = 0; v <= top + 1; ++v) {
      a[i] = v;
      self(self, i + 1, std::max(top, v));
    }
  };
  if (m == 0) return {{}};
  a[0] = 0;
  rec(rec, 1, 0);
  return out;
}

std::vector<StateMask> blocks_of(const std::vector<std::size_t>& rgs, const std::vector<StateMask>& items) {
  std::vector<StateMask> blocks(*std::max_element(rgs.begin(), rgs.end()) + 1, 0);
  for (std::size_t i = 0; i < rgs.size(); ++i) blocks[rgs[i]] |= items[i];
  return blocks;
}

StateMask union_of(std::uint64_t code, const SigmaAlgebra& sigma) {
  StateMask m = 0;
  for (std::size_t j = 0; j < sigma.atom_count(); ++j) {
    if ((code >> j) & 1u) m |= sigma.atom(j);
  }
  return m;
}

// Per-atom cells expanded to a per-state correspondence.
Possibility poss_from_atom_cells(const SigmaAlgebra& sigma, const std::vector<StateMask>& atom_cells) {
  std::vector<StateMask> cells(sigma.state_count());
  for (std::size_t s = 0; s < cells.size(); ++s) cells[s] = atom_cells[sigma.atom_of(s)];
  return Possibility(sigma, std::move(cells));
}

std::vector<Rational> additive_row(const SigmaAlgebra& sigma, const std::vector<std::int64_t>& weights, std::int64_t d) {
  const std::size_t count = sigma.event_count();
  std::vector<Rational> row(count);
  for (std::size_t e = 0; e < count; ++e) {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if ((e >> j) & 1u) sum += weights[j];
    }
    row[e] = Rational(sum, d);
  }
  return row;
}

bool monotone_row(const std::vector<std::int64_t>& v, std::size_t atoms) {
  for (std::size_t e = 0; e < v.size(); ++e) {
    for (std::size_t j = 0; j < atoms; ++j) {
      if (!((e >> j) & 1u) && v[e] > v[e | (std::size_t{1} << j)]) return false;
    }
  }
  return true;
}

constexpr std::uint64_t kNoLimit = ~std::uint64_t{0};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kNoLimit / a) return kNoLimit;
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

TypeMapping table_from_rows(const SigmaAlgebra& sigma, const std::vector<const std::vector<Rational>*>& atom_rows) {
  const std::size_t count = sigma.event_count();
  std::vector<Rational> table;
  table.reserve(sigma.state_count() * count);
  for (std::size_t s = 0; s < sigma.state_count(); ++s) {
    const auto& row = *atom_rows[sigma.atom_of(s)];
    table.insert(table.end(), row.begin(), row.end());
  }
  return TypeMapping(sigma, std::move(table));
}

}  // namespace

struct ModelGrid::Impl {
  struct Block {
    SigmaAlgebra sigma;
    std::vector<Prior> priors;
    std::vector<Possibility> poss;
    std::vector<std::vector<Rational>> rows;  // empty for Bayes agents
    std::uint64_t per_agent = 0;
    std::uint64_t count = 0;
    std::uint64_t start = 0;
  };

  GenParams params;
  std::vector<std::string> names;
  std::vector<Block> blocks;
  std::uint64_t total = 0;

  explicit Impl(const GenParams& p) : params(p), names(agent_names(p.agents)) {
    validate(p);
    for (std::size_t n = p.min_states; n <= p.max_states; ++n) {
      std::vector<std::string> state_names;
      for (std::size_t s = 0; s < n; ++s) state_names.push_back("s" + std::to_string(s + 1));
      const StateSpace space(state_names);
      std::vector<SigmaAlgebra> algebras;
      if (p.sigma_mode == SigmaMode::kPowerset) {
        algebras.push_back(SigmaAlgebra::powerset(space));
      } else {
        std::vector<StateMask> singles(n);
        for (std::size_t s = 0; s < n; ++s) singles[s] = StateMask{1} << s;
        for (const auto& rgs : set_partitions(n)) algebras.push_back(SigmaAlgebra::from_atoms(space, blocks_of(rgs, singles)));
      }
      for (auto& sigma : algebras) add_block(std::move(sigma));
    }
  }

  void add_block(SigmaAlgebra sigma) {
    const auto& p = params;
    const std::size_t k = sigma.atom_count();
    Block b{sigma, {}, {}, {}, 0, 0, total};

    // Cheap count first so oversized grids fail before materialising.
    const std::size_t events = std::size_t{1} << k;
    if ((p.type_mode == TypeMode::kCapacity || p.type_mode == TypeMode::kMonotoneCapacity) &&
        checked_pow(static_cast<std::uint64_t>(p.denominator + 1), events) > p.budget) {
      throw Error(ErrorKind::kResourceLimit, "capacity grid with " + std::to_string(events) + " events and denominator " +
                                                 std::to_string(p.denominator) + " exceeds the budget");
    }

    for (const auto& w : compositions(p.denominator, k, p.allow_null_states ? 0 : 1)) {
      std::vector<Rational> weights;
      for (const auto x : w) weights.emplace_back(x, p.denominator);
      b.priors.push_back(Prior::from_atom_weights(sigma, weights));
    }

    std::vector<StateMask> atoms(sigma.atoms());
    if (p.poss_mode == PossMode::kPartition) {
      for (const auto& rgs : set_partitions(k)) {
        const auto blocks = blocks_of(rgs, atoms);
        std::vector<StateMask> atom_cells(k);
        for (std::size_t j = 0; j < k; ++j) atom_cells[j] = blocks[rgs[j]];
        b.poss.push_back(poss_from_atom_cells(sigma, atom_cells));
      }
    } else {
      std::vector<std::vector<StateMask>> per_atom(k);
      for (std::size_t j = 0; j < k; ++j) {
        for (std::uint64_t code = 1; code < (std::uint64_t{1} << k); ++code) {
          if (p.poss_mode == PossMode::kReflexive && !((code >> j) & 1u)) continue;
          per_atom[j].push_back(union_of(code, sigma));
        }
      }
      std::uint64_t combos = 1;
      for (const auto& v : per_atom) combos = checked_mul(combos, v.size());
      if (combos > p.budget) throw Error(ErrorKind::kResourceLimit, "correspondence grid exceeds the budget");
      std::vector<std::size_t> digit(k, 0);
      for (std::uint64_t c = 0; c < combos; ++c) {
        std::vector<StateMask> atom_cells(k);
        for (std::size_t j = 0; j < k; ++j) atom_cells[j] = per_atom[j][digit[j]];
        b.poss.push_back(poss_from_atom_cells(sigma, atom_cells));
        for (std::size_t j = k; j-- > 0;) {
          if (++digit[j] < per_atom[j].size()) break;
          digit[j] = 0;
        }
      }
    }

    switch (p.type_mode) {
      case TypeMode::kBayes: break;
      case TypeMode::kAdditive:
        for (const auto& w : compositions(p.denominator, k, 0)) b.rows.push_back(additive_row(sigma, w, p.denominator));
        break;
      case TypeMode::kCapacity:
      case TypeMode::kMonotoneCapacity: {
        const auto grid = static_cast<std::size_t>(p.denominator + 1);
        const std::uint64_t tables = checked_pow(grid, events);
        std::vector<std::int64_t> v(events, 0);
        for (std::uint64_t t = 0; t < tables; ++t) {
          const bool normal_ok = p.normalization != Normalization::kNormalized || (v.front() == 0 && v.back() == p.denominator);
          const bool monotone_ok = p.type_mode != TypeMode::kMonotoneCapacity || monotone_row(v, k);
          if (normal_ok && monotone_ok) {
            std::vector<Rational> row(events);
            for (std::size_t e = 0; e < events; ++e) row[e] = Rational(v[e], p.denominator);
            b.rows.push_back(std::move(row));
          }
          for (std::size_t e = events; e-- > 0;) {
            if (++v[e] < static_cast<std::int64_t>(grid)) break;
            v[e] = 0;
          }
        }
        break;
      }
    }

    b.per_agent = p.type_mode == TypeMode::kBayes ? b.poss.size() : checked_mul(b.poss.size(), checked_pow(b.rows.size(), k));
    b.count = checked_mul(b.priors.size(), checked_pow(b.per_agent, p.agents));
    if (b.count == kNoLimit || total + b.count > p.budget || total + b.count < total) {
      throw Error(ErrorKind::kResourceLimit, "the exhaustive grid exceeds the budget of " + std::to_string(p.budget) + " models");
    }
    total += b.count;
    if (b.count != 0) blocks.push_back(std::move(b));
  }

  std::optional<InteractiveModel> at(std::uint64_t index) const {
    if (index >= total) throw Error(ErrorKind::kInvalidArgument, "grid index out of range");
    const auto it = std::upper_bound(blocks.begin(), blocks.end(), index,
                                     [](std::uint64_t i, const Block& b) { return i < b.start; });
    const Block& b = *(it - 1);
    std::uint64_t r = index - b.start;
    const std::uint64_t agent_space = checked_pow(b.per_agent, params.agents);
    const Prior& prior = b.priors[r / agent_space];
    r %= agent_space;

    const std::size_t k = b.sigma.atom_count();
    const std::uint64_t type_space = params.type_mode == TypeMode::kBayes ? 1 : checked_pow(b.rows.size(), k);
    std::vector<std::uint64_t> codes(params.agents);
    for (std::size_t a = params.agents; a-- > 0;) {
      codes[a] = r % b.per_agent;
      r /= b.per_agent;
    }
    std::vector<EpistemicModel> models;
    models.reserve(params.agents);
    std::vector<TypeSource> sources;
    for (std::size_t a = 0; a < params.agents; ++a) {
      const Possibility& poss = b.poss[codes[a] / type_space];
      std::uint64_t t = codes[a] % type_space;
      if (params.type_mode == TypeMode::kBayes) {
        if (!positive(prior, poss)) return std::nullopt;
        models.emplace_back(prior, poss, bayes_type_from_poss(b.sigma, prior, poss), ModelOptions{false});
        sources.push_back(TypeSource::kBayes);
        continue;
      }
      std::vector<const std::vector<Rational>*> atom_rows(k);
      for (std::size_t j = k; j-- > 0;) {
        atom_rows[j] = &b.rows[t % b.rows.size()];
        t /= b.rows.size();
      }
      models.emplace_back(prior, poss, table_from_rows(b.sigma, atom_rows), ModelOptions{false});
      sources.push_back(params.type_mode == TypeMode::kAdditive ? TypeSource::kAdditive : TypeSource::kCapacity);
    }
    return InteractiveModel(names, std::move(models), std::move(sources));
  }

  static bool positive(const Prior& prior, const Possibility& poss) {
    for (const auto cell : poss.cells()) {
      if (prior.measure_mask(cell).is_zero()) return false;
    }
    return true;
  }
};

ModelGrid::ModelGrid(const GenParams& params) : impl_(std::make_unique<Impl>(params)) {}
ModelGrid::~ModelGrid() = default;
ModelGrid::ModelGrid(ModelGrid&&) noexcept = default;
ModelGrid& ModelGrid::operator=(ModelGrid&&) noexcept = default;
std::uint64_t ModelGrid::size() const noexcept { return impl_->total; }
std::optional<InteractiveModel> ModelGrid::at(std::uint64_t index) const { return impl_->at(index); }

namespace {

bool passes_filters(const InteractiveModel& im, const std::vector<std::string>& require) {
  return std::all_of(require.begin(), require.end(), [&](const std::string& f) { return satisfies(im, f); });
}

}  // namespace

std::vector<InteractiveModel> enumerate_models(const GenParams& params) {
  const ModelGrid grid(params);
  std::vector<InteractiveModel> out;
  for (std::uint64_t i = 0; i < grid.size(); ++i) {
    auto m = grid.at(i);
    if (m && passes_filters(*m, params.require)) out.push_back(std::move(*m));
  }
  return out;
}

namespace {

using Rng = std::mt19937_64;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// Uniform composition of `total` into `parts` parts, each >= `least`.
std::vector<std::int64_t> random_composition(Rng& rng, std::int64_t total, std::size_t parts, std::int64_t least) {
  const std::int64_t free = total - least * static_cast<std::int64_t>(parts);
  // Stars and bars: choose parts-1 bar positions among free+parts-1 slots.
  std::vector<std::int64_t> slots(static_cast<std::size_t>(free) + parts - 1);
  std::iota(slots.begin(), slots.end(), 0);
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<std::int64_t> bars(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(parts - 1));
  std::sort(bars.begin(), bars.end());
  std::vector<std::int64_t> out;
  std::int64_t prev = -1;
  for (const auto bar : bars) {
    out.push_back(bar - prev - 1 + least);
    prev = bar;
  }
  out.push_back(static_cast<std::int64_t>(slots.size()) - prev - 1 + least);
  return out;
}

std::vector<std::size_t> random_rgs(Rng& rng, std::size_t m) {
  std::vector<std::size_t> a(m, 0);
  std::size_t top = 0;
  for (std::size_t i = 1; i < m; ++i) {
    a[i] = static_cast<std::size_t>(uniform(rng, 0, top + 1));
    top = std::max(top, a[i]);
  }
  return a;
}

std::vector<Rational> random_row(Rng& rng, const GenParams& p, const SigmaAlgebra& sigma, bool normalized) {
  const std::size_t k = sigma.atom_count();
  const std::size_t events = std::size_t{1} << k;
  const std::int64_t d = p.denominator;
  if (p.type_mode == TypeMode::kAdditive) return additive_row(sigma, random_composition(rng, d, k, 0), d);
  std::vector<std::int64_t> v(events);
  for (auto& x : v) x = static_cast<std::int64_t>(uniform(rng, 0, static_cast<std::uint64_t>(d)));
  if (p.type_mode == TypeMode::kMonotoneCapacity) {
    // Sorted values laid along a random linear extension of the subset order.
    std::sort(v.begin(), v.end());
    std::vector<std::pair<std::uint64_t, std::size_t>> order;
    for (std::size_t e = 0; e < events; ++e) {
      order.emplace_back((static_cast<std::uint64_t>(__builtin_popcountll(e)) << 32) | uniform(rng, 0, 0xffffffffu), e);
    }
    std::sort(order.begin(), order.end());
    std::vector<std::int64_t> laid(events);
    for (std::size_t i = 0; i < events; ++i) laid[order[i].second] = v[i];
    v = std::move(laid);
  }
  if (normalized) {
    v.front() = 0;
    v.back() = d;
  }
  std::vector<Rational> row(events);
  for (std::size_t e = 0; e < events; ++e) row[e] = Rational(v[e], d);
  return row;
}

std::optional<InteractiveModel> draw_once(const GenParams& p, Rng& rng) {
  const auto n = static_cast<std::size_t>(uniform(rng, p.min_states, p.max_states));
  std::vector<std::string> state_names;
  for (std::size_t s = 0; s < n; ++s) state_names.push_back("s" + std::to_string(s + 1));
  const StateSpace space(state_names);
  SigmaAlgebra sigma = SigmaAlgebra::powerset(space);
  if (p.sigma_mode == SigmaMode::kRandomPartition) {
    std::vector<StateMask> singles(n);
    for (std::size_t s = 0; s < n; ++s) singles[s] = StateMask{1} << s;
    sigma = SigmaAlgebra::from_atoms(space, blocks_of(random_rgs(rng, n), singles));
  }
  const std::size_t k = sigma.atom_count();
  const std::int64_t d = p.allow_null_states ? p.denominator : std::max<std::int64_t>(p.denominator, static_cast<std::int64_t>(k));
  std::vector<Rational> weights;
  for (const auto x : random_composition(rng, d, k, p.allow_null_states ? 0 : 1)) weights.emplace_back(x, d);
  const Prior prior = Prior::from_atom_weights(sigma, weights);
  const bool normalized = p.normalization == Normalization::kNormalized ||
                          (p.normalization == Normalization::kMixed && uniform(rng, 0, 1) == 1);

  std::vector<EpistemicModel> models;
  std::vector<TypeSource> sources;
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;
  for (std::size_t a = 0; a < p.agents; ++a) {
    std::vector<StateMask> atom_cells(k);
    if (p.poss_mode == PossMode::kPartition) {
      const auto rgs = random_rgs(rng, k);
      const auto blocks = blocks_of(rgs, sigma.atoms());
      for (std::size_t j = 0; j < k; ++j) atom_cells[j] = blocks[rgs[j]];
    } else {
      for (std::size_t j = 0; j < k; ++j) {
        std::uint64_t code = uniform(rng, p.poss_mode == PossMode::kReflexive ? 0 : 1, full);
        if (p.poss_mode == PossMode::kReflexive) code |= std::uint64_t{1} << j;
        atom_cells[j] = union_of(code, sigma);
      }
    }
    const auto poss = poss_from_atom_cells(sigma, atom_cells);
    if (p.type_mode == TypeMode::kBayes) {
      for (const auto cell : poss.cells()) {
        if (prior.measure_mask(cell).is_zero()) return std::nullopt;
      }
      models.emplace_back(prior, poss, bayes_type_from_poss(sigma, prior, poss), ModelOptions{false});
      sources.push_back(TypeSource::kBayes);
      continue;
    }
    std::vector<std::vector<Rational>> rows(k);
    for (auto& r : rows) r = random_row(rng, p, sigma, normalized);
    std::vector<const std::vector<Rational>*> ptrs;
    for (const auto& r : rows) ptrs.push_back(&r);
    models.emplace_back(prior, poss, table_from_rows(sigma, ptrs), ModelOptions{false});
    sources.push_back(p.type_mode == TypeMode::kAdditive ? TypeSource::kAdditive : TypeSource::kCapacity);
  }
  return InteractiveModel(agent_names(p.agents), std::move(models), std::move(sources));
}

constexpr std::uint64_t kMaxRedraws = 100'000;

}  // namespace

RandomDraw random_draw(const GenParams& params, std::uint64_t seed, std::uint64_t index) {
  validate(params);
  for (std::uint64_t attempt = 0; attempt < kMaxRedraws; ++attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                      static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(attempt >> 32)};
    Rng rng(seq);
    auto m = draw_once(params, rng);
    if (m && passes_filters(*m, params.require)) return RandomDraw{std::move(*m), attempt};
  }
  throw Error(ErrorKind::kResourceLimit, "no draw satisfied the filters after " + std::to_string(kMaxRedraws) + " attempts");
}

InteractiveModel random_model(const GenParams& params, std::uint64_t seed) { return random_draw(params, seed, 0).model; }

namespace {

Verifier single_agent(VerificationReport (*fn)(const EpistemicModel&)) {
  return [fn](const InteractiveModel& im) {
    if (im.agent_count() != 1) throw Error(ErrorKind::kInvalidArgument, "claim is about a single agent");
    return fn(im.agent(0));
  };
}

GenParams profile(TypeMode types, PossMode poss, bool null_states, std::int64_t d, std::size_t states,
                  std::size_t agents = 1, GenMode mode = GenMode::kExhaustive) {
  GenParams p;
  p.type_mode = types;
  p.poss_mode = poss;
  p.allow_null_states = null_states;
  p.denominator = d;
  p.max_states = states;
  p.agents = agents;
  p.mode = mode;
  p.budget = mode == GenMode::kExhaustive ? 100'000'000 : 10'000;
  return p;
}

}  // namespace

const std::vector<ClaimSpec>& claim_registry() {
  static const std::vector<ClaimSpec> registry = [] {
    std::vector<ClaimSpec> r;
    const auto additive = profile(TypeMode::kAdditive, PossMode::kArbitrary, true, 4, 3);
    r.push_back({"theorem-main", "regular iff Bayes identity, P within [t], [t] within P a.s.", additive,
                 single_agent(&verify_theorem_main)});
    r.push_back({"theorem-main-product", "the same with the product form of the Bayes identity", additive,
                 single_agent(&verify_theorem_main_product)});
    r.push_back({"cor-regular", "partition plus consistency iff P = [t] and Bayes types", additive,
                 single_agent(&verify_cor_regular)});
    r.push_back({"cor-ta", "B^1 and K satisfy the Truth Axiom almost surely", additive,
                 [](const InteractiveModel& im) { return single_agent([](const EpistemicModel& m) {
                   return verify_cor_ta(m);
                 })(im); }});
    auto p1 = profile(TypeMode::kMonotoneCapacity, PossMode::kArbitrary, true, 4, 3, 1, GenMode::kRandom);
    p1.normalization = Normalization::kMixed;
    p1.require = {"one-intersection"};
    r.push_back({"prop-1", "Positive Certainty iff B^p within B^1 B^p (and the down variant)", p1,
                 single_agent(&verify_prop1)});
    r.push_back({"prop-2", "Self-Evidence iff B^p within K B^p (and the down variant)",
                 profile(TypeMode::kCapacity, PossMode::kArbitrary, true, 2, 2), single_agent(&verify_prop2)});
    const auto discrete = profile(TypeMode::kAdditive, PossMode::kArbitrary, false, 4, 3);
    r.push_back({"cor-main", "discrete models: regular iff P = [t]; then K = B^1 is S5", discrete,
                 single_agent(&verify_cor_main)});
    r.push_back({"cor-unaware", "discrete regular models are unaware of nothing", discrete,
                 single_agent(&verify_cor_unaware)});
    const auto interactive = profile(TypeMode::kBayes, PossMode::kPartition, true, 4, 3, 2);
    r.push_back({"prop-3", "common p-belief bounds disagreement by 1 - p", interactive,
                 [](const InteractiveModel& im) { return verify_prop3(im); }, true});
    r.push_back({"cor-ck", "common belief is common knowledge in discrete regular models",
                 profile(TypeMode::kBayes, PossMode::kPartition, false, 4, 3, 2),
                 [](const InteractiveModel& im) { return verify_cor_ck(im); }, true});
    r.push_back({"cor-ta-common", "C and C^1 satisfy the Truth Axiom almost surely", interactive,
                 [](const InteractiveModel& im) { return verify_cor_ta_common(im); }, true});
    return r;
  }();
  return registry;
}

const ClaimSpec& find_claim(std::string_view name) {
  for (const auto& c : claim_registry()) {
    if (c.name == name) return c;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown claim '" + std::string(name) + "'");
}

namespace {

struct ChunkCounts {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::uint64_t filtered = 0;
};

constexpr std::uint64_t kChunk = 1024;

}  // namespace

SearchResult search_counterexample(const Verifier& verify, const GenParams& params, unsigned workers) {
  validate(params);
  std::optional<ModelGrid> grid;
  std::uint64_t total = params.budget;
  if (params.mode == GenMode::kExhaustive) {
    grid.emplace(params);
    total = grid->size();
  }
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<ChunkCounts> counts(chunks);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{kNoLimit};
  std::mutex mu;
  SearchResult result;
  std::exception_ptr failure;

  const auto work = [&] {
    try {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= chunks || c * kChunk > best.load()) return;
        ChunkCounts& cc = counts[c];
        const std::uint64_t end = std::min(total, (c + 1) * kChunk);
        for (std::uint64_t i = c * kChunk; i < end; ++i) {
          std::optional<InteractiveModel> model;
          if (grid) {
            model = grid->at(i);
            if (!model) {
              ++cc.skipped;
              continue;
            }
            if (!passes_filters(*model, params.require)) {
              ++cc.filtered;
              continue;
            }
          } else {
            auto draw = random_draw(params, params.seed, i);
            cc.filtered += draw.rejected;
            model.emplace(std::move(draw.model));
          }
          std::optional<VerificationReport> report;
          try {
            report = verify(*model);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::kAssumptionViolated && e.kind() != ErrorKind::kConditioningOnNull) throw;
            ++cc.skipped;
            continue;
          }
          ++cc.checked;
          if (report->falsified()) {
            std::lock_guard<std::mutex> lock(mu);
            if (i < best.load()) {
              best.store(i);
              result.model = std::move(model);
              result.report = std::move(report);
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };

  const unsigned n = std::max(1u, workers);
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  const std::uint64_t stop = best.load();
  result.found = stop != kNoLimit;
  result.index = result.found ? stop : 0;
  const std::uint64_t last_chunk = result.found ? stop / kChunk : chunks;
  for (std::uint64_t c = 0; c < std::min(chunks, last_chunk + (result.found ? 1 : 0)); ++c) {
    result.checked += counts[c].checked;
    result.skipped += counts[c].skipped;
    result.filtered += counts[c].filtered;
  }
  return result;
}

SearchResult search_counterexample(std::string_view claim, const GenParams& params, unsigned workers) {
  return search_counterexample(find_claim(claim).verify, params, workers);
}

}  // namespace emck
