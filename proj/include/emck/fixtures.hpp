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

#include <string_view>
#include <vector>

#include "emck/dslio.hpp"

namespace emck::fixtures {

// Reference models shipped with the library, in canonical document form.
// The same texts live in fixtures/*.emod.

/// Three states, partition {1}{2,3}, Bayes types: the partitional baseline.
std::string_view w1();
/// Two states with a null state b, P(b) = {a,b}: regular but not partitional.
std::string_view w2();
/// Two states with a non-additive capacity at a.
std::string_view w4();
/// W1's prior with two agents holding crossing partitions.
std::string_view iw1();

/// Names accepted by source(): "w1", "w2", "w4", "iw1".
std::vector<std::string_view> names();
/// InvalidArgument for unknown names.
std::string_view source(std::string_view name);
ModelDoc load(std::string_view name, ModelOptions options = {});

}  // namespace emck::fixtures
