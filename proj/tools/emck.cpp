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

// Command-line front end. Talks to the checker only through the C API.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "emck/emck.h"

namespace {

struct Options {
  std::string file;
  std::string format = "text";
  bool allow_null_cells = false;
  std::string axioms = "all";
  std::string agent = "all";
  std::string claim;
  bool diagnostic = false;
  std::string expr;
  std::optional<std::string> at;
  std::string mode;
  bool expand_types = false;
  std::string out;
  int states = 0;
  int agents = 0;
  int denominator = 0;
  std::string search_mode;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  unsigned workers = 1;
};

emck_format format_of(const Options& o) { return o.format == "json" ? EMCK_JSON : EMCK_TEXT; }

struct Owned {
  char* p = nullptr;
  ~Owned() { emck_string_free(p); }
};

using ModelPtr = std::unique_ptr<emck_model, decltype(&emck_model_free)>;

int report_error(emck_status status, const Options& o) {
  if (format_of(o) == EMCK_JSON) {
    auto escape = [](const std::string& s) {
      std::string out;
      for (const char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
          out += "\\n";
          continue;
        }
        out += c;
      }
      return out;
    };
    std::cout << "{\n  \"error\": {\n    \"kind\": \"" << escape(emck_last_error_kind()) << "\",\n    \"message\": \""
              << escape(emck_last_error()) << "\",\n    \"line\": " << emck_last_error_line()
              << ",\n    \"column\": " << emck_last_error_column() << ",\n    \"exit\": " << static_cast<int>(status)
              << "\n  }\n}\n";
  }
  std::cerr << "emck: " << emck_last_error() << "\n";
  return static_cast<int>(status);
}

int emit(emck_status status, const Owned& text, const Options& o) {
  if (text.p != nullptr) std::cout << text.p;
  if (text.p == nullptr && status != EMCK_OK) return report_error(status, o);
  return static_cast<int>(status);
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

int load(const Options& o, ModelPtr& model) {
  emck_model* raw = nullptr;
  const auto status = emck_model_load(o.file.c_str(), o.allow_null_cells ? EMCK_ALLOW_NULL_CELLS : 0u, &raw);
  if (status != EMCK_OK) return report_error(status, o);
  model.reset(raw);
  return 0;
}

int run_validate(const Options& o) {
  ModelPtr model(nullptr, emck_model_free);
  if (const int rc = load(o, model); rc != 0) return rc;
  Owned text;
  return emit(emck_validate(model.get(), format_of(o), &text.p), text, o);
}

int run_check(const Options& o) {
  ModelPtr model(nullptr, emck_model_free);
  if (const int rc = load(o, model); rc != 0) return rc;
  Owned text;
  return emit(emck_check(model.get(), o.axioms.c_str(), o.agent.c_str(), format_of(o), &text.p), text, o);
}

int run_verify(const Options& o) {
  ModelPtr model(nullptr, emck_model_free);
  if (const int rc = load(o, model); rc != 0) return rc;
  Owned text;
  const auto status =
      emck_verify(model.get(), o.claim.c_str(), o.agent.c_str(), o.diagnostic ? 1 : 0, format_of(o), &text.p);
  return emit(status, text, o);
}

int run_eval(const Options& o) {
  ModelPtr model(nullptr, emck_model_free);
  if (const int rc = load(o, model); rc != 0) return rc;
  Owned text;
  const auto status = emck_eval(model.get(), o.expr.c_str(), o.at ? o.at->c_str() : nullptr, format_of(o), &text.p);
  return emit(status, text, o);
}

int run_canonical(const Options& o) {
  std::ifstream in(o.file, std::ios::binary);
  if (!in) {
    std::cerr << "emck: cannot read '" << o.file << "'\n";
    return EMCK_USAGE;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string source = buf.str();
  Owned text;
  const auto status = emck_canonical(source.data(), source.size(), o.mode.c_str(), o.expand_types ? 1 : 0, &text.p);
  if (status != EMCK_OK) return report_error(status, o);
  if (o.out.empty()) {
    std::cout << text.p;
  } else if (!write_file(o.out, text.p)) {
    std::cerr << "emck: cannot write '" << o.out << "'\n";
    return EMCK_USAGE;
  }
  return EMCK_OK;
}

int run_search(const Options& o) {
  emck_search_params p{};
  p.claim = o.claim.c_str();
  p.states = o.states;
  p.agents = o.agents;
  p.denominator = o.denominator;
  p.mode = o.search_mode.empty() ? nullptr : o.search_mode.c_str();
  p.seed = o.seed;
  p.budget = o.budget.value_or(0);
  p.budget_set = o.budget ? 1 : 0;
  p.workers = o.workers;
  Owned report;
  Owned model;
  const auto status = emck_search(&p, format_of(o), &report.p, &model.p);
  if (report.p == nullptr) return report_error(status, o);
  std::cout << report.p;
  if (model.p != nullptr) {
    if (!o.out.empty()) {
      if (!write_file(o.out, model.p)) {
        std::cerr << "emck: cannot write '" << o.out << "'\n";
        return EMCK_USAGE;
      }
    } else if (format_of(o) == EMCK_TEXT) {
      std::cout << "counterexample:\n" << model.p;
    }
  }
  return static_cast<int>(status);
}

int run_claims() {
  Owned names;
  emck_claims(&names.p);
  std::cout << names.p;
  return 0;
}

int apply_atom_cap() {
  const char* env = std::getenv("EMCK_MAX_ATOMS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (*end != '\0' || cap < 1 || cap > 1000) {
    std::cerr << "emck: EMCK_MAX_ATOMS must be a positive integer\n";
    return EMCK_USAGE;
  }
  if (emck_set_max_atoms(static_cast<int>(cap)) != EMCK_OK) {
    std::cerr << "emck: " << emck_last_error() << "\n";
    return EMCK_USAGE;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite epistemic model checker: probabilistic and qualitative belief."};
  app.set_version_flag("--version", std::string(emck_version()));
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* cmd, bool needs_file) {
    if (needs_file) cmd->add_option("file", o.file, "model file (.emod)")->required();
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  const auto null_cells = [&](CLI::App* cmd) {
    cmd->add_flag("--allow-null-cells", o.allow_null_cells, "accept possibility cells of prior measure zero");
  };

  auto* validate = app.add_subcommand("validate", "parse and run the structural checks");
  common(validate, true);
  null_cells(validate);

  auto* check = app.add_subcommand("check", "run named axiom checkers");
  common(check, true);
  null_cells(check);
  check->add_option("--axioms", o.axioms, "comma-separated checker names or 'all'");
  check->add_option("--agent", o.agent, "agent name or 'all'");

  auto* verify = app.add_subcommand("verify", "verify a claim on one model");
  common(verify, true);
  null_cells(verify);
  verify->add_option("--claim", o.claim, "claim name")->required();
  verify->add_option("--agent", o.agent, "agent name or 'all' (single-agent claims)");
  verify->add_flag("--diagnostic", o.diagnostic, "evaluate even when hypotheses fail");

  auto* eval = app.add_subcommand("eval", "evaluate an operator expression");
  common(eval, true);
  null_cells(eval);
  eval->add_option("--expr", o.expr, "expression, e.g. K[alice](E)")->required();
  eval->add_option("--at", o.at, "report membership of this state");

  auto* canonical = app.add_subcommand("canonical", "derive types from P or P from types");
  common(canonical, true);
  canonical->add_option("--mode", o.mode, "derivation")
      ->required()
      ->check(CLI::IsMember({"bayes-from-poss", "poss-from-type"}));
  canonical->add_flag("--expand-types", o.expand_types, "write Bayes types as explicit tables");
  canonical->add_option("--out", o.out, "output path (default stdout)");

  auto* search = app.add_subcommand("search", "search generated models for a counterexample");
  common(search, false);
  search->add_option("--claim", o.claim, "claim name")->required();
  search->add_option("--states", o.states, "maximum number of states")->check(CLI::PositiveNumber);
  search->add_option("--agents", o.agents, "number of agents")->check(CLI::PositiveNumber);
  search->add_option("--denominator", o.denominator, "weight grid denominator")->check(CLI::PositiveNumber);
  search->add_option("--mode", o.search_mode, "generation mode")->check(CLI::IsMember({"exhaustive", "random"}));
  search->add_option("--seed", o.seed, "random seed");
  search->add_option("--budget", o.budget, "maximum number of models");
  search->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1u, 256u));
  search->add_option("--out", o.out, "write a counterexample model here");

  auto* claims = app.add_subcommand("claims", "list verifiable claims");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return EMCK_USAGE;
  }

  if (const int rc = apply_atom_cap(); rc != 0) return rc;
  try {
    if (*validate) return run_validate(o);
    if (*check) return run_check(o);
    if (*verify) return run_verify(o);
    if (*eval) return run_eval(o);
    if (*canonical) return run_canonical(o);
    if (*search) return run_search(o);
    if (*claims) return run_claims();
  } catch (const std::exception& e) {
    std::cerr << "emck: " << e.what() << "\n";
    return EMCK_INTERNAL;
  }
  return EMCK_USAGE;
}
