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

#include "emck/dslio.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "emck/theorems.hpp"
#include "json.hpp"

namespace emck {

namespace {

constexpr std::array<std::string_view, 7> kReserved = {"states", "sigma", "prior", "agent", "poss", "type", "event"};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '.' || c == '\'';
}

bool is_reserved(std::string_view word) {
  return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

// Cursor over one line of input with 1-based positions for diagnostics.
class Cursor {
 public:
  Cursor(std::string_view text, int line) : text_(text), line_(line) {}

  SourceLocation here() const { return {line_, static_cast<int>(pos_) + 1}; }
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view s) {
    skip_ws();
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }
  void expect(char c, std::string_view what) {
    if (!accept(c)) fail("expected " + std::string(what));
  }
  void expect_end() {
    if (!eof()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  std::string word(std::string_view what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected " + std::string(what));
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational rational() {
    skip_ws();
    const auto at = here();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 ||
                                   text_[pos_] == '/' || text_[pos_] == '.' || text_[pos_] == '-' ||
                                   text_[pos_] == '+')) {
      ++pos_;
    }
    const auto token = text_.substr(start, pos_ - start);
    if (token.empty()) throw Error(ErrorKind::kSyntax, "expected a rational p/q", at);
    std::optional<Rational> r;
    try {
      r = Rational::parse(token);
    } catch (const Error& e) {
      throw Error(e.kind(), e.detail(), at);
    }
    if (!r) throw Error(ErrorKind::kSyntax, "expected a rational p/q, got '" + std::string(token) + "'", at);
    return *r;
  }

  [[noreturn]] void fail(const std::string& message, ErrorKind kind = ErrorKind::kSyntax) const {
    throw Error(kind, message, here());
  }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

std::size_t resolve_state(Cursor& c, const StateSpace& space) {
  const auto at = c.here();
  const auto name = c.word("a state name");
  const auto idx = space.index_of(name);
  if (!idx) throw Error(ErrorKind::kUnknownState, "unknown state '" + name + "'", at);
  return *idx;
}

// "{a b}" or "{a,b}" or "{}".
StateMask set_literal(Cursor& c, const StateSpace& space) {
  c.expect('{', "'{'");
  StateMask m = 0;
  while (!c.accept('}')) {
    if (c.eof()) c.fail("unterminated set, expected '}'");
    m |= StateMask{1} << resolve_state(c, space);
    c.accept(',');
  }
  return m;
}

// Members of a set as written inside document braces: "a b".
std::string set_text(const StateSpace& space, StateMask m) {
  const auto braced = space.format(m, " ");
  return braced.substr(1, braced.size() - 2);
}

Error located(const Error& e, SourceLocation at) {
  if (e.where().line != 0) return e;
  return Error(e.kind(), e.detail(), at);
}

template <typename F>
auto at_location(SourceLocation at, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw located(e, at);
  }
}

Rational unit_value(Cursor& c) {
  const auto at = c.here();
  const auto r = c.rational();
  if (!r.in_unit_interval()) throw Error(ErrorKind::kRationalOutOfRange, "value " + r.str() + " outside [0,1]", at);
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ModelSource run() {
    int lineno = 0;
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(start, end - start);
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      Cursor c(line, lineno);
      if (!c.eof()) handle(c);
      if (end == text_.size()) break;
      start = end + 1;
    }
    return finish(lineno);
  }

 private:
  void handle(Cursor& c) {
    const auto at = c.here();
    if (c.peek() == '{' || !is_name_char(c.peek())) c.fail("expected a section keyword");
    const auto head = c.word("a section keyword");
    if (head == "states") return states(c, at);
    if (head == "sigma") return sigma(c, at);
    if (head == "prior") return prior(c, at);
    if (head == "agent") return agent(c, at);
    if (head == "event") return event(c, at);
    if (head == "poss") return poss(c, at);
    if (head == "type") return type(c, at);
    if (in_rows_ && space_ && space_->index_of(head)) return row(c, at, *space_->index_of(head));
    throw Error(ErrorKind::kSyntax, "unexpected '" + head + "'", at);
  }

  const StateSpace& need_states(SourceLocation at) {
    if (!space_) throw Error(ErrorKind::kSyntax, "'states:' must come first", at);
    return *space_;
  }

  // Sigma is frozen once anything depends on it.
  const SigmaAlgebra& need_sigma(SourceLocation at) {
    need_states(at);
    if (!sigma_) sigma_ = at_location(at, [&] { return SigmaAlgebra::powerset(*space_); });
    return *sigma_;
  }

  void states(Cursor& c, SourceLocation at) {
    if (space_) throw Error(ErrorKind::kDuplicateSection, "duplicate 'states:' section", at);
    c.expect(':', "':' after 'states'");
    std::vector<std::string> names;
    while (!c.eof()) {
      const auto where = c.here();
      auto name = c.word("a state name");
      if (is_reserved(name)) throw Error(ErrorKind::kSyntax, "'" + name + "' is reserved", where);
      if (std::find(names.begin(), names.end(), name) != names.end()) {
        throw Error(ErrorKind::kDuplicateState, "state '" + name + "' declared twice", where);
      }
      names.push_back(std::move(name));
      c.accept(',');
    }
    if (names.empty()) throw Error(ErrorKind::kSyntax, "'states:' lists no states", at);
    space_ = at_location(at, [&] { return StateSpace(std::move(names)); });
  }

  void sigma(Cursor& c, SourceLocation at) {
    const auto& space = need_states(at);
    if (sigma_) {
      throw Error(sigma_declared_ ? ErrorKind::kDuplicateSection : ErrorKind::kSyntax,
                  sigma_declared_ ? "duplicate 'sigma:' section" : "'sigma:' must precede prior, agents and events",
                  at);
    }
    c.expect(':', "':' after 'sigma'");
    const auto kind_at = c.here();
    const auto kind = c.word("'powerset' or 'atoms'");
    if (kind == "powerset") {
      c.expect_end();
      sigma_ = SigmaAlgebra::powerset(space);
    } else if (kind == "atoms") {
      std::vector<StateMask> blocks;
      while (!c.eof()) blocks.push_back(set_literal(c, space));
      sigma_ = at_location(kind_at, [&] { return SigmaAlgebra::from_atoms(space, blocks); });
    } else {
      throw Error(ErrorKind::kSyntax, "expected 'powerset' or 'atoms', got '" + kind + "'", kind_at);
    }
    sigma_declared_ = true;
  }

  void prior(Cursor& c, SourceLocation at) {
    need_sigma(at);
    if (prior_at_) throw Error(ErrorKind::kDuplicateSection, "duplicate 'prior:' section", at);
    c.expect(':', "':' after 'prior'");
    weights_.assign(space_->size(), Rational(0));
    std::vector<bool> seen(space_->size(), false);
    Rational sum;
    while (!c.eof()) {
      const auto where = c.here();
      const auto s = resolve_state(c, *space_);
      if (seen[s]) throw Error(ErrorKind::kSyntax, "state '" + space_->name(s) + "' weighted twice", where);
      seen[s] = true;
      c.expect('=', "'=' after state");
      weights_[s] = unit_value(c);
      sum += weights_[s];
    }
    if (!sum.is_one()) throw Error(ErrorKind::kPriorNotNormalized, "prior weights sum to " + sum.str() + ", not 1", at);
    prior_at_ = at;
  }

  void agent(Cursor& c, SourceLocation at) {
    need_sigma(at);
    const auto name_at = c.here();
    auto name = c.word("an agent name");
    c.expect(':', "':' after the agent name");
    c.expect_end();
    for (const auto& a : agents_) {
      if (a.name == name) throw Error(ErrorKind::kDuplicateSection, "agent '" + name + "' declared twice", name_at);
    }
    AgentSource a;
    a.name = std::move(name);
    a.at = at;
    agents_.push_back(std::move(a));
    in_agent_ = true;
    in_rows_ = false;
  }

  AgentSource& current(SourceLocation at, std::string_view section) {
    if (!in_agent_) throw Error(ErrorKind::kSyntax, "'" + std::string(section) + ":' outside an agent block", at);
    return agents_.back();
  }

  void poss(Cursor& c, SourceLocation at) {
    auto& a = current(at, "poss");
    if (a.poss) throw Error(ErrorKind::kDuplicateSection, "duplicate 'poss:' in agent '" + a.name + "'", at);
    in_rows_ = false;
    c.expect(':', "':' after 'poss'");
    const auto& sigma = *sigma_;
    std::vector<StateMask> cells(space_->size(), 0);
    std::vector<bool> seen(space_->size(), false);
    while (!c.eof()) {
      const auto where = c.here();
      const auto s = resolve_state(c, *space_);
      if (seen[s]) throw Error(ErrorKind::kSyntax, "cell of '" + space_->name(s) + "' given twice", where);
      seen[s] = true;
      if (!c.accept("->")) c.fail("expected '->'");
      const auto cell_at = c.here();
      cells[s] = set_literal(c, *space_);
      if (!sigma.is_measurable(cells[s])) {
        throw Error(ErrorKind::kNotMeasurable,
                    "P(" + space_->name(s) + ") = " + space_->format(cells[s]) + " is not in Sigma", cell_at);
      }
      if (!c.accept(';')) c.expect_end();
    }
    for (std::size_t s = 0; s < seen.size(); ++s) {
      if (!seen[s]) throw Error(ErrorKind::kSyntax, "'poss:' has no cell for state '" + space_->name(s) + "'", at);
    }
    a.poss = std::move(cells);
    a.poss_at = at;
  }

  void type(Cursor& c, SourceLocation at) {
    auto& a = current(at, "type");
    if (a.source) throw Error(ErrorKind::kDuplicateSection, "duplicate 'type:' in agent '" + a.name + "'", at);
    c.expect(':', "':' after 'type'");
    const auto kind_at = c.here();
    const auto kind = c.word("'bayes', 'additive' or 'capacity'");
    c.expect_end();
    const std::size_t n = space_->size();
    if (kind == "bayes") {
      a.source = TypeSource::kBayes;
      in_rows_ = false;
    } else if (kind == "additive") {
      a.source = TypeSource::kAdditive;
      a.weights.assign(n, {});
      in_rows_ = true;
    } else if (kind == "capacity") {
      a.source = TypeSource::kCapacity;
      const auto events = at_location(kind_at, [&] { return sigma_->event_count(); });
      a.table.assign(n, std::vector<std::optional<Rational>>(events));
      in_rows_ = true;
    } else {
      throw Error(ErrorKind::kSyntax, "unknown type kind '" + kind + "'", kind_at);
    }
    a.row_at.assign(n, SourceLocation{});
    a.type_at = at;
  }

  void row(Cursor& c, SourceLocation at, std::size_t s) {
    auto& a = agents_.back();
    c.expect(':', "':' after the state");
    if (a.row_at[s].line == 0) a.row_at[s] = at;
    if (*a.source == TypeSource::kAdditive) {
      if (!a.weights[s].empty()) throw Error(ErrorKind::kSyntax, "second row for state '" + space_->name(s) + "'", at);
      a.weights[s].assign(space_->size(), Rational(0));
      std::vector<bool> seen(space_->size(), false);
      while (!c.eof()) {
        const auto where = c.here();
        const auto o = resolve_state(c, *space_);
        if (seen[o]) throw Error(ErrorKind::kSyntax, "state '" + space_->name(o) + "' weighted twice", where);
        seen[o] = true;
        c.expect('=', "'=' after state");
        a.weights[s][o] = unit_value(c);
      }
      return;
    }
    while (!c.eof()) {
      const auto where = c.here();
      const StateMask e = set_literal(c, *space_);
      if (!sigma_->is_measurable(e)) {
        throw Error(ErrorKind::kNotMeasurable, space_->format(e) + " is not in Sigma", where);
      }
      auto& slot = a.table[s][sigma_->index_of(e)];
      if (slot) throw Error(ErrorKind::kSyntax, "entry " + space_->format(e) + " given twice", where);
      c.expect('=', "'=' after the event");
      slot = unit_value(c);
    }
  }

  void event(Cursor& c, SourceLocation at) {
    const auto& sigma = need_sigma(at);
    in_agent_ = false;
    in_rows_ = false;
    const auto name_at = c.here();
    auto name = c.word("an event name");
    if (is_reserved(name)) throw Error(ErrorKind::kSyntax, "'" + name + "' is reserved", name_at);
    if (event_at_.count(name) != 0) throw Error(ErrorKind::kDuplicateSection, "event '" + name + "' declared twice", name_at);
    c.expect('=', "'=' after the event name");
    const auto set_at = c.here();
    const StateMask m = set_literal(c, *space_);
    c.expect_end();
    if (!sigma.is_measurable(m)) throw Error(ErrorKind::kNotMeasurable, space_->format(m) + " is not in Sigma", set_at);
    event_at_[name] = at;
    events_.push_back({std::move(name), m});
  }

  ModelSource finish(int last_line) {
    const SourceLocation end{last_line, 1};
    need_states(end);
    need_sigma(end);
    if (!prior_at_) throw Error(ErrorKind::kSyntax, "missing 'prior:' section", end);
    for (const auto& a : agents_) {
      if (!a.source) throw Error(ErrorKind::kSyntax, "agent '" + a.name + "' has no 'type:' section", a.at);
      const auto row_loc = [&](std::size_t s) { return a.row_at[s].line != 0 ? a.row_at[s] : a.type_at; };
      if (*a.source == TypeSource::kAdditive) {
        for (std::size_t s = 0; s < a.weights.size(); ++s) {
          if (a.weights[s].empty()) {
            throw Error(ErrorKind::kIncompleteCapacity,
                        "agent '" + a.name + "' has no additive row for state '" + space_->name(s) + "'", a.type_at);
          }
        }
      }
      if (*a.source == TypeSource::kCapacity) {
        for (std::size_t s = 0; s < a.table.size(); ++s) {
          for (std::size_t e = 0; e < a.table[s].size(); ++e) {
            if (!a.table[s][e]) {
              throw Error(ErrorKind::kIncompleteCapacity,
                          "agent '" + a.name + "', state '" + space_->name(s) + "': no value for event {" +
                              set_text(*space_, sigma_->mask_of(static_cast<EventIndex>(e))) + "}",
                          row_loc(s));
            }
          }
        }
      }
    }
    return ModelSource{*sigma_, std::move(weights_), *prior_at_, std::move(agents_), std::move(events_),
                       std::move(event_at_)};
  }

  std::string_view text_;
  std::optional<StateSpace> space_;
  std::optional<SigmaAlgebra> sigma_;
  bool sigma_declared_ = false;
  std::vector<Rational> weights_;
  std::optional<SourceLocation> prior_at_;
  std::vector<AgentSource> agents_;
  std::vector<NamedEvent> events_;
  std::map<std::string, SourceLocation> event_at_;
  bool in_agent_ = false;
  bool in_rows_ = false;
};

}  // namespace

std::optional<StateMask> ModelDoc::event(std::string_view name) const {
  for (const auto& e : events) {
    if (e.name == name) return e.members;
  }
  return std::nullopt;
}

ModelSource parse_source(std::string_view text) { return Parser(text).run(); }

ModelDoc build_model(const ModelSource& src, ModelOptions options, Completion completion) {
  const auto& sigma = src.sigma;
  const Prior prior = at_location(src.prior_at, [&] { return Prior::from_state_weights(sigma, src.prior_weights); });
  std::vector<std::string> names;
  std::vector<EpistemicModel> models;
  std::vector<TypeSource> sources;
  std::map<std::string, SourceLocation> locations;
  locations["prior"] = src.prior_at;
  for (const auto& a : src.agents) {
    TypeSource source = completion == Completion::kBayesFromPoss ? TypeSource::kBayes : *a.source;
    const auto explicit_types = [&]() -> TypeMapping {
      if (source == TypeSource::kAdditive) {
        std::vector<SetFunction> rows;
        for (std::size_t s = 0; s < a.weights.size(); ++s) {
          std::vector<Rational> atoms(sigma.atom_count());
          for (std::size_t o = 0; o < a.weights[s].size(); ++o) atoms[sigma.atom_of(o)] += a.weights[s][o];
          rows.push_back(at_location(a.row_at[s], [&] { return SetFunction::from_atom_weights(sigma, atoms); }));
        }
        return TypeMapping(rows);
      }
      std::vector<Rational> table;
      for (const auto& r : a.table) {
        for (const auto& v : r) table.push_back(*v);
      }
      return TypeMapping(sigma, std::move(table));
    };

    std::optional<Possibility> poss;
    std::optional<TypeMapping> types;
    if (completion == Completion::kPossFromType) {
      if (source == TypeSource::kBayes) {
        throw Error(ErrorKind::kInvalidValue, "agent '" + a.name + "' needs explicit types to induce a correspondence",
                    a.type_at);
      }
      types = at_location(a.type_at, explicit_types);
      poss = at_location(a.type_at, [&] { return poss_from_type(sigma, prior, *types); });
    } else {
      if (!a.poss) throw Error(ErrorKind::kInvalidValue, "agent '" + a.name + "' has no 'poss:' section", a.at);
      poss = at_location(a.poss_at, [&] { return Possibility(sigma, *a.poss); });
      types = at_location(a.type_at, [&] {
        return source == TypeSource::kBayes ? bayes_type_from_poss(sigma, prior, *poss) : explicit_types();
      });
    }
    models.push_back(at_location(a.at, [&] { return EpistemicModel(prior, *poss, std::move(*types), options); }));
    names.push_back(a.name);
    sources.push_back(source);
    locations["agent " + a.name] = a.at;
  }
  for (const auto& [name, at] : src.event_at) locations["event " + name] = at;
  if (models.empty()) throw Error(ErrorKind::kInvalidValue, "the document declares no agent", SourceLocation{1, 1});
  return ModelDoc{InteractiveModel(std::move(names), std::move(models), std::move(sources)), src.events,
                  std::move(locations)};
}

ModelDoc parse_model(std::string_view text, ModelOptions options) { return build_model(parse_source(text), options); }

namespace {

bool additive_row(const SigmaAlgebra& sigma, std::span<const Rational> row) {
  return classify_values(sigma, row).additive;
}

void serialize_agent(std::string& out, const InteractiveModel& im, std::size_t i, SerializeOptions options) {
  const auto& m = im.agent(i);
  const auto& space = im.space();
  const auto& sigma = im.sigma();
  out += "agent " + im.name(i) + ":\n  poss:";
  for (std::size_t s = 0; s < space.size(); ++s) {
    out += (s == 0 ? " " : "; ") + space.name(s) + " -> {" + set_text(space, m.poss().cell(s)) + "}";
  }
  out += "\n";
  TypeSource source = im.source(i);
  if (source == TypeSource::kBayes && options.expand_types) source = TypeSource::kAdditive;
  if (source == TypeSource::kAdditive) {
    for (std::size_t s = 0; s < space.size() && source == TypeSource::kAdditive; ++s) {
      if (!additive_row(sigma, m.types().row(s))) source = TypeSource::kCapacity;
    }
  }
  out += "  type: " + std::string(to_string(source)) + "\n";
  if (source == TypeSource::kBayes) return;
  for (std::size_t s = 0; s < space.size(); ++s) {
    out += "    " + space.name(s) + ":";
    if (source == TypeSource::kAdditive) {
      // An atom's weight sits on its first state.
      for (std::size_t o = 0; o < space.size(); ++o) {
        const std::size_t j = sigma.atom_of(o);
        const bool first = static_cast<std::size_t>(__builtin_ctzll(sigma.atom(j))) == o;
        const Rational w = first ? m.types()(s, sigma.index_of(sigma.atom(j))) : Rational(0);
        out += " " + space.name(o) + "=" + w.str();
      }
    } else {
      for (std::size_t e = 0; e < m.event_count(); ++e) {
        const auto idx = static_cast<EventIndex>(e);
        out += " {" + set_text(space, sigma.mask_of(idx)) + "}=" + m.types()(s, idx).str();
      }
    }
    out += "\n";
  }
}

std::string serialize(const InteractiveModel& im, const std::vector<NamedEvent>& events, SerializeOptions options) {
  const auto& space = im.space();
  const auto& sigma = im.sigma();
  std::string out = "states:";
  for (const auto& n : space.names()) out += " " + n;
  out += "\nsigma:";
  if (sigma.is_powerset()) {
    out += " powerset";
  } else {
    out += " atoms";
    for (const auto a : sigma.atoms()) out += " {" + set_text(space, a) + "}";
  }
  out += "\nprior:";
  for (std::size_t s = 0; s < space.size(); ++s) {
    const std::size_t j = sigma.atom_of(s);
    const bool first = static_cast<std::size_t>(__builtin_ctzll(sigma.atom(j))) == s;
    out += " " + space.name(s) + "=" + (first ? im.prior().atom_weight(j) : Rational(0)).str();
  }
  out += "\n";
  for (std::size_t i = 0; i < im.agent_count(); ++i) serialize_agent(out, im, i, options);
  for (const auto& e : events) out += "event " + e.name + " = {" + set_text(space, e.members) + "}\n";
  return out;
}

}  // namespace

std::string serialize_model(const ModelDoc& doc, SerializeOptions options) {
  return serialize(doc.model, doc.events, options);
}

std::string serialize_model(const InteractiveModel& model, SerializeOptions options) {
  return serialize(model, {}, options);
}

std::string model_to_json(const ModelDoc& doc) {
  using json = nlohmann::ordered_json;
  const auto& im = doc.model;
  const auto& space = im.space();
  const auto& sigma = im.sigma();
  const auto set = [&](StateMask m) {
    json a = json::array();
    for (std::size_t s = 0; s < space.size(); ++s) {
      if ((m >> s) & 1u) a.push_back(space.name(s));
    }
    return a;
  };
  json j;
  j["states"] = space.names();
  if (sigma.is_powerset()) {
    j["sigma"] = "powerset";
  } else {
    json atoms = json::array();
    for (const auto a : sigma.atoms()) atoms.push_back(set(a));
    j["sigma"] = {{"atoms", atoms}};
  }
  json prior = json::object();
  for (std::size_t s = 0; s < space.size(); ++s) {
    const std::size_t a = sigma.atom_of(s);
    const bool first = static_cast<std::size_t>(__builtin_ctzll(sigma.atom(a))) == s;
    prior[space.name(s)] = (first ? im.prior().atom_weight(a) : Rational(0)).str();
  }
  j["prior"] = prior;
  json agents = json::array();
  for (std::size_t i = 0; i < im.agent_count(); ++i) {
    const auto& m = im.agent(i);
    json a;
    a["name"] = im.name(i);
    json poss = json::object();
    for (std::size_t s = 0; s < space.size(); ++s) poss[space.name(s)] = set(m.poss().cell(s));
    a["poss"] = poss;
    a["type"] = to_string(im.source(i));
    json types = json::object();
    for (std::size_t s = 0; s < space.size(); ++s) {
      json row = json::array();
      for (std::size_t e = 0; e < m.event_count(); ++e) {
        const auto idx = static_cast<EventIndex>(e);
        row.push_back({{"event", set(sigma.mask_of(idx))}, {"value", m.types()(s, idx).str()}});
      }
      types[space.name(s)] = row;
    }
    a["types"] = types;
    agents.push_back(a);
  }
  j["agents"] = agents;
  json events = json::object();
  for (const auto& e : doc.events) events[e.name] = set(e.members);
  j["events"] = events;
  return j.dump(2);
}

// ---- expressions ----

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : c_(text, 1) {}

  Expr run() {
    auto e = disjunction();
    c_.expect_end();
    return e;
  }

 private:
  static std::shared_ptr<const Expr> share(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

  Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, SourceLocation at) {
    Expr e;
    e.kind = kind;
    e.at = at;
    e.args = {share(std::move(lhs)), share(std::move(rhs))};
    return e;
  }

  Expr disjunction() {
    auto lhs = conjunction();
    for (;;) {
      const auto at = c_.here();
      if (!c_.accept('|')) return lhs;
      lhs = binary(Expr::Kind::kOr, std::move(lhs), conjunction(), at);
    }
  }

  Expr conjunction() {
    auto lhs = unary();
    for (;;) {
      const auto at = c_.here();
      if (!c_.accept('&')) return lhs;
      lhs = binary(Expr::Kind::kAnd, std::move(lhs), unary(), at);
    }
  }

  Expr unary() {
    if (++depth_ > kMaxDepth) c_.fail("expression nested too deeply");
    c_.skip_ws();
    const auto at = c_.here();
    Expr e;
    if (c_.accept('~')) {
      e.kind = Expr::Kind::kNot;
      e.at = at;
      e.args = {share(unary())};
    } else {
      e = primary();
    }
    --depth_;
    return e;
  }

  Expr argument() {
    c_.expect('(', "'('");
    auto e = disjunction();
    c_.expect(')', "')'");
    return e;
  }

  Rational threshold() {
    const auto at = c_.here();
    const auto p = c_.rational();
    if (!p.in_unit_interval()) throw Error(ErrorKind::kRationalOutOfRange, "p = " + p.str() + " outside [0,1]", at);
    return p;
  }

  Expr primary() {
    c_.skip_ws();
    const auto at = c_.here();
    Expr e;
    e.at = at;
    if (c_.accept('(')) {
      e = disjunction();
      c_.expect(')', "')'");
      return e;
    }
    if (c_.accept('{')) {
      e.kind = Expr::Kind::kLiteral;
      while (!c_.accept('}')) {
        if (c_.eof()) c_.fail("unterminated set, expected '}'");
        e.states.push_back(c_.word("a state name"));
        c_.accept(',');
      }
      return e;
    }
    if (!is_name_char(c_.peek())) c_.fail("expected an event, a set or an operator");
    const auto word = c_.word("a name");
    if (word == "K" && c_.peek() == '[') {
      c_.accept('[');
      e.kind = Expr::Kind::kKnows;
      e.name = c_.word("an agent name");
      c_.expect(']', "']'");
    } else if (word == "B" && c_.peek() == '[') {
      c_.accept('[');
      e.kind = Expr::Kind::kBelieves;
      e.name = c_.word("an agent name");
      c_.expect(',', "','");
      e.p = threshold();
      c_.expect(']', "']'");
    } else if (word == "Cp" && c_.peek() == '[') {
      c_.accept('[');
      e.kind = Expr::Kind::kCommonP;
      e.p = threshold();
      c_.expect(']', "']'");
    } else if (word == "C" && c_.peek() == '(') {
      e.kind = Expr::Kind::kCommon;
    } else {
      e.kind = Expr::Kind::kName;
      e.name = word;
      return e;
    }
    e.args = {share(argument())};
    return e;
  }

  static constexpr int kMaxDepth = 256;
  Cursor c_;
  int depth_ = 0;
};

std::size_t agent_index(const ModelDoc& doc, const Expr& e) {
  const auto i = doc.model.index_of(e.name);
  if (!i) throw Error(ErrorKind::kUnknownAgent, "unknown agent '" + e.name + "'", e.at);
  return *i;
}

}  // namespace

Expr parse_expr(std::string_view text) { return ExprParser(text).run(); }

Event eval_expr(const ModelDoc& doc, const Expr& e) {
  const auto& im = doc.model;
  const auto& sigma = im.sigma();
  switch (e.kind) {
    case Expr::Kind::kName: {
      const auto m = doc.event(e.name);
      if (!m) throw Error(ErrorKind::kUnknownEvent, "unknown event '" + e.name + "'", e.at);
      return Event(sigma, *m);
    }
    case Expr::Kind::kLiteral: {
      StateMask m = 0;
      for (const auto& s : e.states) {
        const auto idx = im.space().index_of(s);
        if (!idx) throw Error(ErrorKind::kUnknownState, "unknown state '" + s + "'", e.at);
        m |= StateMask{1} << *idx;
      }
      return at_location(e.at, [&] { return Event(sigma, m); });
    }
    case Expr::Kind::kNot: return complement(eval_expr(doc, *e.args[0]));
    case Expr::Kind::kAnd: return intersect(eval_expr(doc, *e.args[0]), eval_expr(doc, *e.args[1]));
    case Expr::Kind::kOr: return unite(eval_expr(doc, *e.args[0]), eval_expr(doc, *e.args[1]));
    case Expr::Kind::kKnows: return qualitative_belief(im.agent(agent_index(doc, e)), eval_expr(doc, *e.args[0]));
    case Expr::Kind::kBelieves: return p_belief(im.agent(agent_index(doc, e)), e.p, eval_expr(doc, *e.args[0]));
    case Expr::Kind::kCommon: return common_qualitative(im, eval_expr(doc, *e.args[0]));
    case Expr::Kind::kCommonP: return common_p_belief(im, e.p, eval_expr(doc, *e.args[0]));
  }
  throw Error(ErrorKind::kSyntax, "malformed expression", e.at);
}

Event eval_expr(const ModelDoc& doc, std::string_view text) { return eval_expr(doc, parse_expr(text)); }

}  // namespace emck
