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

#include "emck/emck.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "emck/axioms.hpp"
#include "emck/dslio.hpp"
#include "emck/errors.hpp"
#include "emck/modelgen.hpp"
#include "emck/theorems.hpp"

struct emck_model {
  emck::ModelDoc doc;
};

namespace {

using json = nlohmann::ordered_json;
using namespace emck;

constexpr const char* kVersion = "0.1.0";

struct LastError {
  std::string message;
  std::string kind;
  int line = 0;
  int column = 0;
};

thread_local LastError last_error;

emck_status status_of(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::kParse: return EMCK_PARSE;
    case ErrorCategory::kInvariant: return EMCK_INVARIANT;
    case ErrorCategory::kHypothesis: return EMCK_HYPOTHESIS;
    case ErrorCategory::kUsage: return EMCK_USAGE;
    case ErrorCategory::kResource:
      // An exhausted budget is the caller's choice; too many atoms or an
      // overflow is a property of the model.
      return e.kind() == ErrorKind::kResourceLimit ? EMCK_USAGE : EMCK_INVARIANT;
    case ErrorCategory::kInternal: return e.kind() == ErrorKind::kIo ? EMCK_USAGE : EMCK_INTERNAL;
  }
  return EMCK_INTERNAL;
}

emck_status fail(emck_status status, std::string message, std::string kind, SourceLocation at = {}) {
  last_error = LastError{std::move(message), std::move(kind), at.line, at.column};
  return status;
}

template <typename F>
emck_status guarded(F&& body) noexcept {
  try {
    last_error = LastError{};
    return body();
  } catch (const Error& e) {
    return fail(status_of(e), e.what(), to_string(e.kind()), e.where());
  } catch (const std::bad_alloc&) {
    return fail(EMCK_INTERNAL, "out of memory", "Internal");
  } catch (const std::exception& e) {
    return fail(EMCK_INTERNAL, e.what(), "Internal");
  } catch (...) {
    return fail(EMCK_INTERNAL, "unknown failure", "Internal");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out != nullptr) *out = dup(s);
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorKind::kInvalidArgument, std::string(what) + " must not be null");
}

ModelOptions options_from(unsigned flags) { return ModelOptions{(flags & EMCK_ALLOW_NULL_CELLS) == 0}; }

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (const char c : text) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

struct Checker {
  const char* name;
  CheckReport (*run)(const EpistemicModel&);
  bool in_all;
};

const std::vector<Checker>& checkers() {
  static const std::vector<Checker> table{
      {"invariance", &check_invariance, true},
      {"entailment", &check_entailment, true},
      {"self-evidence", &check_self_evidence, true},
      {"certainty", [](const EpistemicModel& m) { return check_certainty(m); }, true},
      {"positive-certainty", &check_positive_certainty, true},
      {"down-certainty", &check_down_certainty, true},
      {"regular", &is_regular, true},
      {"kripke", [](const EpistemicModel& m) { return kripke_properties(m).report; }, true},
      {"down-containment", &check_down_containment, false},
      {"certainty-almost-surely",
       [](const EpistemicModel& m) { return check_certainty(m, CertaintyMode::kAlmostSurely); }, false},
      {"probability-types", &check_probability_types, false},
      {"p-introspection", &check_p_introspection, false},
      {"truth-axiom", &check_truth_axiom, false},
      {"positive-introspection", &check_positive_introspection, false},
      {"negative-introspection", &check_negative_introspection, false},
      {"unawareness", &check_unawareness, false},
      {"bayes-identity", &check_bayes_identity, false},
      {"product-identity", &check_product_identity, false},
      {"poss-within-bracket", &check_poss_within_bracket, false},
      {"bracket-within-poss-almost-surely", &check_bracket_within_poss_as, false},
      {"poss-is-bracket", &check_poss_is_bracket, false},
  };
  return table;
}

std::vector<const Checker*> resolve_checkers(std::string_view list) {
  std::vector<const Checker*> out;
  for (const auto& name : split_list(list)) {
    if (name == "all") {
      for (const auto& c : checkers()) {
        if (c.in_all) out.push_back(&c);
      }
      continue;
    }
    const Checker* found = nullptr;
    for (const auto& c : checkers()) {
      if (name == c.name) found = &c;
    }
    if (found == nullptr) {
      std::string known;
      for (const auto& c : checkers()) known += std::string(known.empty() ? "" : ", ") + c.name;
      throw Error(ErrorKind::kInvalidArgument, "unknown axiom '" + name + "' (known: all, " + known + ")");
    }
    out.push_back(found);
  }
  if (out.empty()) throw Error(ErrorKind::kInvalidArgument, "no axioms named");
  return out;
}

std::vector<std::size_t> resolve_agents(const InteractiveModel& im, const char* agent) {
  std::vector<std::size_t> out;
  if (agent == nullptr || std::string_view(agent) == "all") {
    for (std::size_t i = 0; i < im.agent_count(); ++i) out.push_back(i);
    return out;
  }
  const auto i = im.index_of(agent);
  if (!i) throw Error(ErrorKind::kUnknownAgent, "no agent named '" + std::string(agent) + "'");
  out.push_back(*i);
  return out;
}

InteractiveModel solo(const InteractiveModel& im, std::size_t i) {
  return InteractiveModel({im.name(i)}, {im.agent(i)}, {im.source(i)});
}

emck_status report_status(const VerificationReport& r, bool diagnostic) {
  if (diagnostic) return r.conclusion_holds() ? EMCK_OK : EMCK_FAILED;
  switch (r.status) {
    case ClaimStatus::kHolds: return EMCK_OK;
    case ClaimStatus::kFalsified: return EMCK_FAILED;
    case ClaimStatus::kHypothesisNotMet: return EMCK_HYPOTHESIS;
  }
  return EMCK_INTERNAL;
}

// Falsification outranks unmet hypotheses, which outrank success.
emck_status worst(emck_status a, emck_status b) {
  const auto rank = [](emck_status s) { return s == EMCK_FAILED ? 2 : (s == EMCK_HYPOTHESIS ? 1 : 0); };
  return rank(b) > rank(a) ? b : a;
}

std::string list_text(const StateSpace& space, StateMask m) { return space.format(m); }

json members_json(const StateSpace& space, StateMask m) {
  json arr = json::array();
  for (std::size_t s = 0; s < space.size(); ++s) {
    if ((m >> s) & 1u) arr.push_back(space.name(s));
  }
  return arr;
}

}  // namespace

extern "C" {

const char* emck_version(void) { return kVersion; }
const char* emck_last_error(void) { return last_error.message.c_str(); }
const char* emck_last_error_kind(void) { return last_error.kind.c_str(); }
int emck_last_error_line(void) { return last_error.line; }
int emck_last_error_column(void) { return last_error.column; }
void emck_string_free(char* s) { std::free(s); }

emck_status emck_set_max_atoms(int cap) {
  return guarded([&] {
    if (cap < 1 || cap > kHardMaxAtoms) {
      throw Error(ErrorKind::kInvalidArgument, "atom cap must lie in [1, " + std::to_string(kHardMaxAtoms) + "]");
    }
    set_max_atoms(cap);
    return EMCK_OK;
  });
}

emck_status emck_model_parse(const char* text, size_t length, unsigned flags, emck_model** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    need(text, "text");
    *out = new emck_model{parse_model(std::string_view(text, length), options_from(flags))};
    return EMCK_OK;
  });
}

emck_status emck_model_load(const char* path, unsigned flags, emck_model** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    need(path, "path");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::kIo, "cannot read '" + std::string(path) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    *out = new emck_model{parse_model(buf.str(), options_from(flags))};
    return EMCK_OK;
  });
}

void emck_model_free(emck_model* model) { delete model; }

emck_status emck_validate(const emck_model* model, emck_format format, char** report) {
  return guarded([&] {
    need(model, "model");
    const auto& im = model->doc.model;
    const auto& space = im.space();
    if (format == EMCK_JSON) {
      json j;
      j["valid"] = true;
      j["states"] = members_json(space, space.all());
      j["atoms"] = im.sigma().atom_count();
      j["powerset"] = im.sigma().is_powerset();
      j["full_support"] = im.prior().full_support();
      j["agents"] = json::array();
      for (std::size_t i = 0; i < im.agent_count(); ++i) {
        j["agents"].push_back({{"name", im.name(i)},
                               {"types", to_string(im.source(i))},
                               {"partition", poss_is_partition(im.agent(i).poss())},
                               {"positive_cells", im.agent(i).positive_cells()}});
      }
      j["events"] = json::array();
      for (const auto& e : model->doc.events) j["events"].push_back({{"name", e.name}, {"members", members_json(space, e.members)}});
      put(report, j.dump(2) + "\n");
      return EMCK_OK;
    }
    std::ostringstream os;
    os << "valid: " << space.size() << " states, " << im.sigma().atom_count() << " atoms, " << im.agent_count()
       << (im.agent_count() == 1 ? " agent" : " agents") << "\n";
    os << "prior: " << (im.prior().full_support() ? "full support" : "has null atoms") << "\n";
    for (std::size_t i = 0; i < im.agent_count(); ++i) {
      const auto& m = im.agent(i);
      os << "agent " << im.name(i) << ": " << to_string(im.source(i)) << " types, "
         << (poss_is_partition(m.poss()) ? "partitional" : "non-partitional") << " P"
         << (m.positive_cells() ? "" : ", some cell is null") << "\n";
    }
    for (const auto& e : model->doc.events) os << "event " << e.name << " = " << list_text(space, e.members) << "\n";
    put(report, os.str());
    return EMCK_OK;
  });
}

emck_status emck_check(const emck_model* model, const char* axioms, const char* agent, emck_format format,
                       char** report) {
  return guarded([&] {
    need(model, "model");
    const auto list = resolve_checkers(axioms == nullptr ? "all" : axioms);
    const auto& im = model->doc.model;
    const auto& space = im.space();
    bool passed = true;
    json j;
    j["agents"] = json::array();
    std::ostringstream os;
    for (const auto i : resolve_agents(im, agent)) {
      json checks = json::array();
      os << "agent " << im.name(i) << "\n";
      for (const auto* c : list) {
        const auto r = c->run(im.agent(i));
        passed = passed && r.passed;
        if (format == EMCK_JSON) {
          checks.push_back(json::parse(to_json(r, space)));
        } else {
          std::istringstream lines(to_text(r, space));
          for (std::string line; std::getline(lines, line);) os << "  " << line << "\n";
        }
      }
      j["agents"].push_back({{"name", im.name(i)}, {"checks", std::move(checks)}});
    }
    j["passed"] = passed;
    os << (passed ? "all checks passed" : "some checks failed") << "\n";
    put(report, format == EMCK_JSON ? j.dump(2) + "\n" : os.str());
    return passed ? EMCK_OK : EMCK_FAILED;
  });
}

emck_status emck_verify(const emck_model* model, const char* claim, const char* agent, int diagnostic,
                        emck_format format, char** report) {
  return guarded([&] {
    need(model, "model");
    need(claim, "claim");
    const auto& spec = find_claim(claim);
    const auto& im = model->doc.model;
    const auto& space = im.space();
    std::vector<std::pair<std::string, VerificationReport>> runs;
    if (spec.interactive) {
      runs.emplace_back("", spec.verify(im));
    } else {
      for (const auto i : resolve_agents(im, agent)) runs.emplace_back(im.name(i), spec.verify(solo(im, i)));
    }
    emck_status status = EMCK_OK;
    for (const auto& [name, r] : runs) status = worst(status, report_status(r, diagnostic != 0));
    if (format == EMCK_JSON) {
      json j;
      j["claim"] = spec.name;
      j["diagnostic"] = diagnostic != 0;
      j["exit"] = static_cast<int>(status);
      j["runs"] = json::array();
      for (const auto& [name, r] : runs) {
        json run;
        if (!name.empty()) run["agent"] = name;
        run["report"] = json::parse(to_json(r, space));
        j["runs"].push_back(std::move(run));
      }
      put(report, j.dump(2) + "\n");
    } else {
      std::ostringstream os;
      for (const auto& [name, r] : runs) {
        if (!name.empty()) os << "agent " << name << "\n";
        os << to_text(r, space);
      }
      put(report, os.str());
    }
    return status;
  });
}

emck_status emck_eval(const emck_model* model, const char* expr, const char* at, emck_format format, char** result) {
  return guarded([&] {
    need(model, "model");
    need(expr, "expr");
    const auto& space = model->doc.model.space();
    const Event e = eval_expr(model->doc, expr);
    std::optional<bool> member;
    if (at != nullptr) {
      const auto s = space.index_of(at);
      if (!s) throw Error(ErrorKind::kUnknownState, "no state named '" + std::string(at) + "'");
      member = ((e.members() >> *s) & 1u) != 0;
    }
    if (format == EMCK_JSON) {
      json j;
      j["expr"] = expr;
      j["event"] = members_json(space, e.members());
      if (member) {
        j["at"] = at;
        j["member"] = *member;
      }
      put(result, j.dump(2) + "\n");
    } else {
      std::string out = list_text(space, e.members()) + "\n";
      if (member) out += std::string(at) + (*member ? " in event\n" : " not in event\n");
      put(result, out);
    }
    return EMCK_OK;
  });
}

emck_status emck_serialize(const emck_model* model, int expand_types, char** text) {
  return guarded([&] {
    need(model, "model");
    put(text, serialize_model(model->doc, SerializeOptions{expand_types != 0}));
    return EMCK_OK;
  });
}

emck_status emck_canonical(const char* text, size_t length, const char* mode, int expand_types, char** out) {
  return guarded([&] {
    need(text, "text");
    need(mode, "mode");
    const std::string_view m(mode);
    Completion completion;
    if (m == "bayes-from-poss") {
      completion = Completion::kBayesFromPoss;
    } else if (m == "poss-from-type") {
      completion = Completion::kPossFromType;
    } else {
      throw Error(ErrorKind::kInvalidArgument, "unknown mode '" + std::string(m) + "' (bayes-from-poss, poss-from-type)");
    }
    const auto doc = build_model(parse_source(std::string_view(text, length)), ModelOptions{false}, completion);
    put(out, serialize_model(doc, SerializeOptions{expand_types != 0}));
    return EMCK_OK;
  });
}

emck_status emck_claims(char** names) {
  return guarded([&] {
    std::string out;
    for (const auto& c : claim_registry()) out += c.name + "\n";
    put(names, out);
    return EMCK_OK;
  });
}

emck_status emck_search(const emck_search_params* params, emck_format format, char** report, char** model) {
  return guarded([&] {
    need(params, "params");
    need(params->claim, "claim");
    const auto& spec = find_claim(params->claim);
    GenParams p = spec.defaults;
    if (params->mode != nullptr) {
      const auto mode = gen_mode_from(params->mode);
      if (!mode) throw Error(ErrorKind::kInvalidArgument, "unknown mode '" + std::string(params->mode) + "'");
      if (*mode != p.mode) p.budget = *mode == GenMode::kExhaustive ? 100'000'000 : 10'000;
      p.mode = *mode;
    }
    if (params->states < 0 || params->agents < 0 || params->denominator < 0) {
      throw Error(ErrorKind::kInvalidArgument, "counts must not be negative");
    }
    if (params->states > 0) {
      p.max_states = static_cast<std::size_t>(params->states);
      p.min_states = std::min(p.min_states, p.max_states);
    }
    if (params->agents > 0) p.agents = static_cast<std::size_t>(params->agents);
    if (params->denominator > 0) p.denominator = params->denominator;
    if (params->budget_set != 0) p.budget = params->budget;
    p.seed = params->seed;
    if (!spec.interactive && p.agents != 1) throw Error(ErrorKind::kInvalidArgument, spec.name + " is about one agent");

    const auto r = search_counterexample(spec.verify, p, params->workers);
    std::string model_text;
    if (r.found) model_text = serialize_model(*r.model);
    if (format == EMCK_JSON) {
      json j;
      j["claim"] = spec.name;
      j["mode"] = to_string(p.mode);
      j["max_states"] = p.max_states;
      j["agents"] = p.agents;
      j["denominator"] = p.denominator;
      j["seed"] = p.seed;
      j["budget"] = p.budget;
      j["found"] = r.found;
      j["checked"] = r.checked;
      j["skipped"] = r.skipped;
      j["filtered"] = r.filtered;
      if (r.found) {
        j["index"] = r.index;
        j["report"] = json::parse(to_json(*r.report, r.model->space()));
        j["model"] = model_text;
      }
      put(report, j.dump(2) + "\n");
    } else {
      std::ostringstream os;
      os << "claim " << spec.name << ": " << to_string(p.mode) << ", states<=" << p.max_states << ", agents "
         << p.agents << ", denominator " << p.denominator;
      if (p.mode == GenMode::kRandom) os << ", seed " << p.seed;
      os << "\n";
      if (r.found) {
        os << "Found at index " << r.index << " after " << r.checked << " models (" << r.skipped << " skipped, "
           << r.filtered << " filtered)\n";
        os << to_text(*r.report, r.model->space());
      } else {
        os << "NotFound after " << r.checked << " models (" << r.skipped << " skipped, " << r.filtered
           << " filtered)\n";
      }
      put(report, os.str());
    }
    if (model != nullptr) *model = r.found ? dup(model_text) : nullptr;
    return r.found ? EMCK_FAILED : EMCK_OK;
  });
}

}  // extern "C"
