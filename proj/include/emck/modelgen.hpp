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

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emck/multiagent.hpp"
#include "emck/report.hpp"

namespace emck {

enum class SigmaMode { kPowerset, kRandomPartition };
enum class TypeMode { kBayes, kAdditive, kCapacity, kMonotoneCapacity };
enum class PossMode { kPartition, kReflexive, kArbitrary };
/// Capacity endpoints: kNormalized forces t(empty) = 0 and t(Omega) = 1;
/// kMixed does so for a random half of the draws (exhaustive: same as kFree).
enum class Normalization { kFree, kNormalized, kMixed };
enum class GenMode { kExhaustive, kRandom };

const char* to_string(SigmaMode mode);
const char* to_string(TypeMode mode);
const char* to_string(PossMode mode);
const char* to_string(GenMode mode);
std::optional<SigmaMode> sigma_mode_from(std::string_view text);
std::optional<TypeMode> type_mode_from(std::string_view text);
std::optional<PossMode> poss_mode_from(std::string_view text);
std::optional<GenMode> gen_mode_from(std::string_view text);

/// Filter flags accepted in GenParams::require.
const std::vector<std::string>& filter_flags();
/// Re-derives `flag` on `model` with the axioms module.
bool satisfies(const InteractiveModel& model, std::string_view flag);

struct GenParams {
  std::size_t min_states = 1;
  std::size_t max_states = 3;
  std::size_t agents = 1;
  std::int64_t denominator = 4;  // weights on the grid {0, 1/d, ..., 1}
  SigmaMode sigma_mode = SigmaMode::kPowerset;
  TypeMode type_mode = TypeMode::kAdditive;
  PossMode poss_mode = PossMode::kArbitrary;
  Normalization normalization = Normalization::kFree;
  bool allow_null_states = true;
  std::vector<std::string> require;
  GenMode mode = GenMode::kExhaustive;
  std::uint64_t seed = 0;
  std::uint64_t budget = 100'000'000;
};

/// Validates ranges and flag names; InvalidArgument otherwise.
void validate(const GenParams& params);

/// Index-addressable exhaustive enumeration in lexicographic order: states,
/// algebra, prior, then per agent (correspondence, types atom by atom).
/// ResourceLimit when the grid exceeds the budget.
class ModelGrid {
 public:
  explicit ModelGrid(const GenParams& params);
  ~ModelGrid();
  ModelGrid(ModelGrid&&) noexcept;
  ModelGrid& operator=(ModelGrid&&) noexcept;

  std::uint64_t size() const noexcept;
  /// nullopt when the grid point yields no model (a Bayes agent with a null cell).
  std::optional<InteractiveModel> at(std::uint64_t index) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Every model of the grid that exists and passes the filters, in order.
std::vector<InteractiveModel> enumerate_models(const GenParams& params);

struct RandomDraw {
  InteractiveModel model;
  std::uint64_t rejected = 0;  // draws discarded before this one
};

/// Model `index` of the random stream for `seed`; draws are redrawn until
/// they exist and pass the filters. ResourceLimit after too many rejections.
RandomDraw random_draw(const GenParams& params, std::uint64_t seed, std::uint64_t index);
InteractiveModel random_model(const GenParams& params, std::uint64_t seed);

using Verifier = std::function<VerificationReport(const InteractiveModel&)>;

struct ClaimSpec {
  std::string name;
  std::string summary;
  GenParams defaults;
  Verifier verify;
  bool interactive = false;  // about the whole group rather than agent 0
};

const std::vector<ClaimSpec>& claim_registry();
/// InvalidArgument for unknown claims.
const ClaimSpec& find_claim(std::string_view name);

struct SearchResult {
  bool found = false;
  std::uint64_t index = 0;  // stream index of the counterexample
  std::optional<InteractiveModel> model;
  std::optional<VerificationReport> report;
  std::uint64_t checked = 0;   // models verified
  std::uint64_t skipped = 0;   // no model, or the verifier's standing assumption failed
  std::uint64_t filtered = 0;  // rejected by `require` (random mode: redraws)
};

/// Runs `verify` over the stream; the first model whose report is falsified
/// is returned. Counts are exact and independent of `workers`.
SearchResult search_counterexample(const Verifier& verify, const GenParams& params, unsigned workers = 1);
SearchResult search_counterexample(std::string_view claim, const GenParams& params, unsigned workers = 1);

}  // namespace emck
