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

#include "emck/fixtures.hpp"

#include "emck/errors.hpp"

namespace emck::fixtures {

std::string_view w1() {
  return R"(states: 1 2 3
sigma: powerset
prior: 1=1/2 2=1/4 3=1/4
agent alice:
  poss: 1 -> {1}; 2 -> {2 3}; 3 -> {2 3}
  type: bayes
event E = {2 3}
)";
}

std::string_view w2() {
  return R"(states: a b
sigma: powerset
prior: a=1 b=0
agent alice:
  poss: a -> {a}; b -> {a b}
  type: additive
    a: a=1 b=0
    b: a=1 b=0
event A = {a}
)";
}

std::string_view w4() {
  return R"(states: a b
sigma: powerset
prior: a=1/2 b=1/2
agent alice:
  poss: a -> {a}; b -> {b}
  type: capacity
    a: {}=0 {a}=0 {b}=0 {a b}=1
    b: {}=0 {a}=0 {b}=1 {a b}=1
event B = {b}
)";
}

std::string_view iw1() {
  return R"(states: 1 2 3
sigma: powerset
prior: 1=1/2 2=1/4 3=1/4
agent alice:
  poss: 1 -> {1}; 2 -> {2 3}; 3 -> {2 3}
  type: bayes
agent bob:
  poss: 1 -> {1 2}; 2 -> {1 2}; 3 -> {3}
  type: bayes
event D = {1}
event E = {2 3}
)";
}

std::vector<std::string_view> names() { return {"w1", "w2", "w4", "iw1"}; }

std::string_view source(std::string_view name) {
  if (name == "w1") return w1();
  if (name == "w2") return w2();
  if (name == "w4") return w4();
  if (name == "iw1") return iw1();
  throw Error(ErrorKind::kInvalidArgument, "unknown fixture '" + std::string(name) + "'");
}

ModelDoc load(std::string_view name, ModelOptions options) { return parse_model(source(name), options); }

}  // namespace emck::fixtures
