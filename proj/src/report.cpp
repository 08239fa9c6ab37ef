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

#include "emck/report.hpp"

#include <sstream>

#include "emck/errors.hpp"
#include "json.hpp"

namespace emck {

using json = nlohmann::ordered_json;

const char* to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kHolds: return "holds";
    case ClaimStatus::kFalsified: return "falsified";
    case ClaimStatus::kHypothesisNotMet: return "hypothesis-not-met";
  }
  return "unknown";
}

const char* to_string(ClaimKind kind) { return kind == ClaimKind::kIff ? "iff" : "implication"; }

bool VerificationReport::hypotheses_hold() const noexcept {
  for (const auto& h : hypotheses) {
    if (!h.holds) return false;
  }
  return true;
}

bool VerificationReport::falsified() const noexcept {
  if (status == ClaimStatus::kFalsified) return true;
  if (status == ClaimStatus::kHypothesisNotMet) return false;
  for (const auto& p : parts) {
    if (p.falsified()) return true;
  }
  return false;
}

bool VerificationReport::conclusion_holds() const noexcept {
  if (kind == ClaimKind::kIff ? lhs != rhs : !rhs) return false;
  for (const auto& p : parts) {
    if (p.status != ClaimStatus::kHypothesisNotMet && !p.conclusion_holds()) return false;
  }
  return true;
}

void settle(VerificationReport& r) {
  if (r.kind == ClaimKind::kImplication) r.lhs = r.hypotheses_hold();
  if (!r.hypotheses_hold()) {
    r.status = ClaimStatus::kHypothesisNotMet;
    return;
  }
  bool ok = r.kind == ClaimKind::kIff ? r.lhs == r.rhs : r.rhs;
  for (const auto& p : r.parts) ok = ok && !p.falsified();
  r.status = ok ? ClaimStatus::kHolds : ClaimStatus::kFalsified;
  if (!ok && r.witnesses.empty()) {
    for (const auto& c : r.checks) {
      for (const auto& w : c.witnesses) {
        auto copy = w;
        copy.note = c.name + (w.note.empty() ? "" : ": " + w.note);
        r.witnesses.push_back(std::move(copy));
      }
    }
  }
}

namespace {

json event_json(StateMask m, const StateSpace& space) {
  json arr = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    if ((m >> i) & 1u) arr.push_back(space.name(i));
  }
  return arr;
}

std::size_t state_from(const json& j, const StateSpace& space) {
  const auto idx = space.index_of(j.get<std::string>());
  if (!idx) throw Error(ErrorKind::kUnknownState, "report names unknown state '" + j.get<std::string>() + "'");
  return *idx;
}

Rational rational_from(const json& j) {
  const auto r = Rational::parse(j.get<std::string>());
  if (!r) throw Error(ErrorKind::kSyntax, "bad rational '" + j.get<std::string>() + "' in report");
  return *r;
}

json witness_json(const Witness& w, const StateSpace& space) {
  json j = json::object();
  if (w.threshold) j["threshold"] = w.threshold->str();
  if (w.event) j["event"] = event_json(*w.event, space);
  if (w.state) j["state"] = space.name(*w.state);
  if (w.other_state) j["other_state"] = space.name(*w.other_state);
  if (w.value) j["value"] = w.value->str();
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

Witness witness_from(const json& j, const StateSpace& space) {
  Witness w;
  if (j.contains("threshold")) w.threshold = rational_from(j["threshold"]);
  if (j.contains("event")) {
    StateMask m = 0;
    for (const auto& s : j["event"]) m |= StateMask{1} << state_from(s, space);
    w.event = m;
  }
  if (j.contains("state")) w.state = state_from(j["state"], space);
  if (j.contains("other_state")) w.other_state = state_from(j["other_state"], space);
  if (j.contains("value")) w.value = rational_from(j["value"]);
  if (j.contains("note")) w.note = j["note"].get<std::string>();
  return w;
}

json check_json(const CheckReport& r, const StateSpace& space) {
  json j;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["witnesses"] = json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(witness_json(w, space));
  j["scope"] = r.scope;
  j["parts"] = json::array();
  for (const auto& p : r.parts) j["parts"].push_back(check_json(p, space));
  return j;
}

CheckReport check_from(const json& j, const StateSpace& space) {
  CheckReport r;
  r.name = j.at("name").get<std::string>();
  r.passed = j.at("passed").get<bool>();
  for (const auto& w : j.at("witnesses")) r.witnesses.push_back(witness_from(w, space));
  r.scope = j.at("scope").get<std::string>();
  if (j.contains("parts")) {
    for (const auto& p : j["parts"]) r.parts.push_back(check_from(p, space));
  }
  return r;
}

json verification_json(const VerificationReport& r, const StateSpace& space) {
  json j;
  j["claim"] = r.claim;
  j["kind"] = to_string(r.kind);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["equivalent"] = r.equivalent();
  j["status"] = to_string(r.status);
  j["hypotheses"] = json::array();
  for (const auto& h : r.hypotheses) j["hypotheses"].push_back({{"name", h.name}, {"holds", h.holds}});
  j["witnesses"] = json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(witness_json(w, space));
  j["checks"] = json::array();
  for (const auto& c : r.checks) j["checks"].push_back(check_json(c, space));
  j["parts"] = json::array();
  for (const auto& p : r.parts) j["parts"].push_back(verification_json(p, space));
  j["notes"] = json::object();
  for (const auto& [k, v] : r.notes) j["notes"][k] = v;
  return j;
}

ClaimStatus status_from(const std::string& s) {
  if (s == "holds") return ClaimStatus::kHolds;
  if (s == "falsified") return ClaimStatus::kFalsified;
  if (s == "hypothesis-not-met") return ClaimStatus::kHypothesisNotMet;
  throw Error(ErrorKind::kSyntax, "unknown claim status '" + s + "'");
}

VerificationReport verification_from(const json& j, const StateSpace& space) {
  VerificationReport r;
  r.claim = j.at("claim").get<std::string>();
  r.kind = j.at("kind").get<std::string>() == "iff" ? ClaimKind::kIff : ClaimKind::kImplication;
  r.lhs = j.at("lhs").get<bool>();
  r.rhs = j.at("rhs").get<bool>();
  r.status = status_from(j.at("status").get<std::string>());
  for (const auto& h : j.at("hypotheses")) r.hypotheses.push_back({h.at("name").get<std::string>(), h.at("holds").get<bool>()});
  for (const auto& w : j.at("witnesses")) r.witnesses.push_back(witness_from(w, space));
  for (const auto& c : j.at("checks")) r.checks.push_back(check_from(c, space));
  for (const auto& p : j.at("parts")) r.parts.push_back(verification_from(p, space));
  for (const auto& [k, v] : j.at("notes").items()) r.notes.emplace_back(k, v.get<std::string>());
  return r;
}

std::string witness_text(const Witness& w, const StateSpace& space) {
  std::ostringstream os;
  const char* sep = "";
  if (w.threshold) {
    os << "p=" << *w.threshold;
    sep = " ";
  }
  if (w.event) {
    os << sep << "E=" << space.format(*w.event);
    sep = " ";
  }
  if (w.state) {
    os << sep << "state=" << space.name(*w.state);
    sep = " ";
  }
  if (w.other_state) {
    os << sep << "other=" << space.name(*w.other_state);
    sep = " ";
  }
  if (w.value) {
    os << sep << "value=" << *w.value;
    sep = " ";
  }
  if (!w.note.empty()) os << sep << "(" << w.note << ")";
  return os.str();
}

void check_text(std::ostringstream& os, const CheckReport& r, const StateSpace& space, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  os << pad << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
  if (!r.scope.empty()) os << "  (" << r.scope << ")";
  os << "\n";
  for (const auto& w : r.witnesses) os << pad << "    witness: " << witness_text(w, space) << "\n";
  for (const auto& p : r.parts) check_text(os, p, space, depth + 1);
}

void verification_text(std::ostringstream& os, const VerificationReport& r, const StateSpace& space, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  os << pad << "claim " << r.claim << " (" << to_string(r.kind) << "): " << to_string(r.status) << "\n";
  os << pad << "  lhs=" << (r.lhs ? "true" : "false") << " rhs=" << (r.rhs ? "true" : "false")
     << (r.kind == ClaimKind::kIff ? " equivalent=" : " implication-holds=") << (r.equivalent() ? "true" : "false")
     << "\n";
  for (const auto& h : r.hypotheses) {
    os << pad << "  hypothesis " << h.name << ": " << (h.holds ? "true" : "false") << "\n";
  }
  for (const auto& [k, v] : r.notes) os << pad << "  note " << k << ": " << v << "\n";
  for (const auto& w : r.witnesses) os << pad << "  witness: " << witness_text(w, space) << "\n";
  for (const auto& c : r.checks) check_text(os, c, space, depth + 1);
  for (const auto& p : r.parts) verification_text(os, p, space, depth + 1);
}

}  // namespace

std::string to_json(const CheckReport& report, const StateSpace& space) {
  return check_json(report, space).dump(2);
}

std::string to_json(const VerificationReport& report, const StateSpace& space) {
  return verification_json(report, space).dump(2);
}

std::string to_text(const CheckReport& report, const StateSpace& space) {
  std::ostringstream os;
  check_text(os, report, space, 0);
  return os.str();
}

std::string to_text(const VerificationReport& report, const StateSpace& space) {
  std::ostringstream os;
  verification_text(os, report, space, 0);
  return os.str();
}

CheckReport check_report_from_json(std::string_view text, const StateSpace& space) {
  try {
    return check_from(json::parse(text), space);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kSyntax, std::string("malformed report JSON: ") + e.what());
  }
}

VerificationReport verification_report_from_json(std::string_view text, const StateSpace& space) {
  try {
    return verification_from(json::parse(text), space);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kSyntax, std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace emck
