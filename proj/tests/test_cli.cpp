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

// Runs the command-line tool as a subprocess. EMCK_CLI names the binary and
// EMCK_FIXTURES the fixture directory.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string env(const char* name) {
  const char* v = std::getenv(name);
  REQUIRE_MESSAGE(v != nullptr, name << " is not set");
  return v;
}

std::string fixture(const std::string& name) { return env("EMCK_FIXTURES") + "/" + name + ".emod"; }

// stdout only; stderr is discarded so outputs compare byte for byte.
Run run(const std::string& args, const std::string& prefix = "") {
  const std::string cmd = prefix + "'" + env("EMCK_CLI") + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = "emck_cli_" + name;
  std::ofstream(path) << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("validate") {
  CHECK(run("validate " + fixture("w1")).code == 0);
  const auto bad_prior = temp_file("prior.emod", "states: s1 s2\nprior: s1=1/2 s2=1/3\n");
  const auto r = run("validate --format json " + bad_prior);
  CHECK(r.code == 2);
  CHECK(r.out.find("\"line\": 2") != std::string::npos);
  CHECK(r.out.find("PriorNotNormalized") != std::string::npos);
  const auto outside = temp_file("outside.emod",
                                 "states: s1 s2 s3\nsigma: atoms {s1} {s2 s3}\nprior: s1=1/2 s2=1/2\n"
                                 "agent a:\n  poss: s1 -> {s1}; s2 -> {s2}; s3 -> {s2 s3}\n  type: bayes\n");
  const auto o = run("validate --format json " + outside);
  CHECK(o.code == 3);
  CHECK(o.out.find("NotMeasurable") != std::string::npos);
  CHECK(o.out.find("{s2}") != std::string::npos);
  CHECK(run("validate no-such-file.emod").code == 64);
}

TEST_CASE("check") {
  CHECK(run("check " + fixture("w1")).code == 0);
  const auto k = run("check --axioms kripke " + fixture("w2"));
  CHECK(k.code == 1);
  CHECK(k.out.find("not euclidean at (b,a)") != std::string::npos);
  CHECK(run("check --axioms bogus " + fixture("w1")).code == 64);
  CHECK(run("check --agent nobody " + fixture("w1")).code == 2);
  const auto j = run("check --format json --axioms invariance,regular " + fixture("iw1"));
  CHECK(j.code == 0);
  CHECK(j.out.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("verify") {
  const auto r = run("verify --claim theorem-main " + fixture("w1"));
  CHECK(r.code == 0);
  CHECK(r.out.find("lhs=true rhs=true") != std::string::npos);
  const auto p1 = run("verify --claim prop-1 " + fixture("w4"));
  CHECK(p1.code == 0);
  CHECK(p1.out.find("claim prop-1-part-2 (iff): holds\n    lhs=false rhs=false") != std::string::npos);
  CHECK(p1.out.find("witness: p=1 E={b} state=a") != std::string::npos);
  CHECK(run("verify --claim cor-main " + fixture("w2")).code == 4);
  const auto d = run("verify --diagnostic --claim cor-unaware " + fixture("w2"));
  CHECK(d.code == 1);
  CHECK(d.out.find("E={a} state=b (unaware of E)") != std::string::npos);
  CHECK(run("verify --claim prop-3 " + fixture("iw1")).code == 0);
  CHECK(run("verify --claim cor-ck " + fixture("iw1")).code == 0);
  CHECK(run("verify --claim no-such-claim " + fixture("w1")).code == 64);
  CHECK(run("verify " + fixture("w1")).code == 64);
}

TEST_CASE("eval") {
  const auto k = run("eval --expr 'K[alice]({2 3})' " + fixture("w1"));
  CHECK(k.code == 0);
  CHECK(k.out == "{2,3}\n");
  const auto c = run("eval --expr 'Cp[1](E)' --at 2 " + fixture("iw1"));
  CHECK(c.code == 0);
  CHECK(c.out == "{}\n2 not in event\n");
  CHECK(run("eval --expr 'K[alice](E' " + fixture("w1")).code == 2);
  CHECK(run("eval --expr 'B[alice,3/2](E)' " + fixture("w1")).code == 2);
}

TEST_CASE("canonical") {
  const auto expanded = run("canonical --mode bayes-from-poss --expand-types " + fixture("w1"));
  CHECK(expanded.code == 0);
  CHECK(expanded.out.find("2: 1=0 2=1/2 3=1/2") != std::string::npos);
  const auto types_only = temp_file("types.emod",
                                    "states: a b c\nprior: a=1/2 b=1/4 c=1/4\nagent x:\n  type: additive\n"
                                    "    a: a=1\n    b: b=1/2 c=1/2\n    c: b=1/2 c=1/2\n");
  const auto out = std::string("emck_cli_induced.emod");
  CHECK(run("canonical --mode poss-from-type --out " + out + " " + types_only).code == 0);
  CHECK(slurp(out).find("poss: a -> {a}; b -> {b c}; c -> {b c}") != std::string::npos);
  CHECK(run("validate " + out).code == 0);
  const auto null_cell =
      temp_file("null.emod", "states: a b\nprior: a=1 b=0\nagent x:\n  poss: a -> {a}; b -> {b}\n  type: bayes\n");
  CHECK(run("canonical --mode bayes-from-poss " + null_cell).code == 3);
  CHECK(run("canonical --mode sideways " + fixture("w1")).code == 64);
}

TEST_CASE("search") {
  const auto r = run("search --claim prop-2 --states 2 --mode random --seed 7 --budget 10000");
  CHECK(r.code == 0);
  CHECK(r.out.find("NotFound after 10000 models") != std::string::npos);
  CHECK(run("search --claim theorem-main --budget 0").code == 64);
  CHECK(run("search --claim theorem-main --states 3 --denominator 4 --budget 10").code == 64);
  const auto small = run("search --claim theorem-main --states 2 --denominator 2");
  CHECK(small.code == 0);
  CHECK(small.out.find("NotFound after") != std::string::npos);
}

TEST_CASE("fixed flags give byte-identical output") {
  const std::string args = "search --format json --claim prop-1 --states 3 --mode random --seed 3 --budget 300";
  const auto a = run(args);
  const auto b = run(args);
  const auto c = run(args + " --workers 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(run("check --format json " + fixture("iw1")).out == run("check --format json " + fixture("iw1")).out);
}

TEST_CASE("atom cap from the environment") {
  CHECK(run("validate " + fixture("w1"), "EMCK_MAX_ATOMS=2 ").code == 3);
  CHECK(run("validate " + fixture("w1"), "EMCK_MAX_ATOMS=3 ").code == 0);
  CHECK(run("validate " + fixture("w1"), "EMCK_MAX_ATOMS=zero ").code == 64);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 64);
  CHECK(run("frobnicate").code == 64);
  CHECK(run("--help").code == 0);
}
