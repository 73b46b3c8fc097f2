// Copyright 2026 The frlogic Authors
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

#include "logic/trace.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace frlogic::logic {

bool DerivationTrace::contains(const Formula& f) const {
  return std::any_of(steps.begin(), steps.end(), [&](const TraceStep& s) { return s.conclusion == f; });
}

const Formula& DerivationTrace::last() const {
  if (steps.empty()) throw std::logic_error("empty trace");
  return steps.back().conclusion;
}

std::string format_trace(const DerivationTrace& trace) {
  std::ostringstream os;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    os << i + 1 << ". " << s.conclusion.text() << " [" << to_string(s.app.rule) << ": ";
    if (s.app.rule == RuleId::premise) {
      os << s.source;
    } else {
      for (std::size_t j = 0; j < s.premises.size(); ++j) os << (j ? "," : "") << s.premises[j];
    }
    os << "]\n";
  }
  return os.str();
}

std::string trace_to_jsonl(const DerivationTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    nlohmann::ordered_json j;
    j["step"] = i + 1;
    j["formula"] = s.conclusion.text();
    j["rule"] = to_string(s.app.rule);
    j["premises"] = s.premises;
    j["position"] = s.app.position;
    if (s.app.target) {
      j["target"] = s.app.target->to_string();
    }
    if (s.app.rule == RuleId::and_elim) j["side"] = s.app.side;
    if (!s.source.empty()) j["source"] = s.source;
    out += j.dump() + '\n';
  }
  return out;
}

namespace {

AgentInstance parse_instance(const std::string& text) {
  // Reuse the formula parser on a throwaway body.
  Formula f = parse_formula("K[" + text + "](S1=phi)");
  return f.instance();
}

}  // namespace

DerivationTrace trace_from_jsonl(const std::string& text) {
  DerivationTrace trace;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      TraceStep step{parse_formula(j.at("formula").get<std::string>()), {}, {}, {}};
      auto rule = rule_from_string(j.at("rule").get<std::string>());
      if (!rule) throw std::invalid_argument("unknown rule " + j.at("rule").get<std::string>());
      step.app.rule = *rule;
      step.app.position = j.at("position").get<std::size_t>();
      if (j.contains("target")) step.app.target = parse_instance(j["target"].get<std::string>());
      if (j.contains("side")) step.app.side = j["side"].get<int>();
      if (j.contains("source")) step.source = j["source"].get<std::string>();
      step.premises = j.at("premises").get<std::vector<std::size_t>>();
      trace.steps.push_back(std::move(step));
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("bad trace record: ") + e.what());
    } catch (const ParseError& e) {
      throw std::invalid_argument(std::string("bad trace formula: ") + e.what());
    }
  }
  return trace;
}

DerivationTrace splice(const DerivationTrace& lemma, const DerivationTrace& main) {
  DerivationTrace out;
  std::map<std::string, std::size_t> seen;  // text -> 1-based step in out
  auto append = [&](const TraceStep& s, const std::vector<std::size_t>& remap) {
    auto it = seen.find(s.conclusion.text());
    if (it != seen.end()) return it->second;
    TraceStep copy = s;
    for (auto& k : copy.premises) k = remap.at(k - 1);
    out.steps.push_back(std::move(copy));
    seen.emplace(s.conclusion.text(), out.steps.size());
    return out.steps.size();
  };
  for (const auto* part : {&lemma, &main}) {
    std::vector<std::size_t> remap;
    for (const auto& s : part->steps) remap.push_back(append(s, remap));
  }
  return out;
}

TraceCheck check_trace(const DerivationTrace& trace, const std::vector<Formula>& premises,
                       const RuleContext& ctx) {
  auto fail = [](std::size_t n, std::string msg) { return TraceCheck{false, n, std::move(msg)}; };
  if (trace.steps.empty()) return fail(0, "empty trace");
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    const std::size_t n = i + 1;
    if (s.app.rule == RuleId::premise) {
      if (!s.premises.empty()) return fail(n, "premise step cites other steps");
      if (std::find(premises.begin(), premises.end(), s.conclusion) == premises.end()) {
        return fail(n, "not a premise: " + s.conclusion.text());
      }
      continue;
    }
    std::vector<Formula> inputs;
    for (std::size_t k : s.premises) {
      if (k < 1 || k >= n) return fail(n, "cites step " + std::to_string(k) + " out of order");
      inputs.push_back(trace.steps[k - 1].conclusion);
    }
    auto got = apply_rule(s.app, inputs, ctx);
    if (!got) return fail(n, std::string(to_string(s.app.rule)) + " does not apply");
    if (*got != s.conclusion) {
      return fail(n, "rule yields " + got->text() + " instead of " + s.conclusion.text());
    }
  }
  return {};
}

}  // namespace frlogic::logic
