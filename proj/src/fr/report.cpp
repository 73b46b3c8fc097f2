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

#include "fr/report.hpp"

#include <json.hpp>

#include <functional>
#include <sstream>

namespace frlogic::fr {

namespace {

using nlohmann::ordered_json;

IdentityCheck derivation_check(std::string name, std::string expected, const std::function<std::string()>& run) {
  std::string actual;
  try {
    actual = run();
  } catch (const std::exception& e) {
    actual = std::string("error: ") + e.what();
  }
  const bool pass = actual == expected;
  return {std::move(name), std::move(expected), std::move(actual), pass};
}

ordered_json block_json(std::size_t size, int depth, int rounds, bool fixpoint) {
  ordered_json j;
  j["verdict"] = "BLOCKED";
  j["fixpoint"] = fixpoint;
  j["fixpoint_size"] = size;
  j["depth"] = depth;
  j["rounds"] = rounds;
  return j;
}

}  // namespace

int block_depth() { return naive_closure().rounds + 4; }

std::vector<IdentityCheck> all_checks() {
  auto out = quantum_identities();
  out.push_back(derivation_check("naive contradiction", "W2@4", [] {
    return reproduce_contradiction().agent.to_string();
  }));
  out.push_back(derivation_check("agent variants", "F1@4,F2@4,W1@4", [] {
    std::string s;
    for (const auto& c : reproduce_agent_variants()) s += (s.empty() ? "" : ",") + c.agent.to_string();
    return s;
  }));
  std::vector<Formula> contextual;
  out.push_back(derivation_check("contextual search", "blocked", [&] {
    auto cert = certify_block(block_depth());
    if (!cert.fixpoint) return std::string("no fixpoint");
    contextual = std::move(cert.closure);
    return std::string("blocked");
  }));
  out.push_back(derivation_check("contextual closure outside naive closure", "0", [&] {
    if (contextual.empty()) return std::string("no contextual closure");
    return std::to_string(monotonicity_violations(contextual, naive_closure().closure).size());
  }));
  return out;
}

std::string format_check(const IdentityCheck& c) {
  std::string line = c.name + " = " + c.actual + (c.pass ? " PASS" : " FAIL");
  if (!c.pass) line += " (expected " + c.expected + ")";
  return line;
}

std::string format_checks(const std::vector<IdentityCheck>& checks, Format fmt) {
  std::string out;
  for (const auto& c : checks) {
    if (fmt == Format::text) {
      out += format_check(c) + '\n';
    } else {
      ordered_json j;
      j["name"] = c.name;
      j["expected"] = c.expected;
      j["actual"] = c.actual;
      j["pass"] = c.pass;
      out += j.dump() + '\n';
    }
  }
  return out;
}

std::string format_contradiction(const ContradictionCertificate& cert, Format fmt) {
  if (fmt == Format::json) return logic::trace_to_jsonl(cert.trace);
  return "CONTRADICTION for " + cert.agent.to_string() + '\n' + logic::format_trace(cert.trace);
}

std::string format_block(std::size_t fixpoint_size, int depth, int rounds, bool fixpoint, Format fmt) {
  if (fmt == Format::json) return block_json(fixpoint_size, depth, rounds, fixpoint).dump() + '\n';
  std::ostringstream os;
  os << (fixpoint ? "BLOCKED at fixpoint (no contradiction derivable)\n"
                  : "BLOCKED within depth bound (no fixpoint)\n")
     << "fixpoint size: " << fixpoint_size << " formulas\n"
     << "depth: " << depth << " (reached after " << rounds << " rounds)\n";
  return os.str();
}

std::string format_block(const BlockCertificate& cert, Format fmt) {
  return format_block(cert.closure.size(), cert.depth, cert.rounds, cert.fixpoint, fmt);
}

std::string verdict_report(Format fmt) {
  const auto identities = quantum_identities();
  const auto naive = reproduce_contradiction();
  const auto variants = reproduce_agent_variants();
  const auto naive_fix = naive_closure();
  const auto block = certify_block(naive_fix.rounds + 4);
  const auto violations = monotonicity_violations(block.closure, naive_fix.closure);

  if (fmt == Format::json) {
    std::string out;
    for (const auto& c : identities) {
      ordered_json j;
      j["section"] = "identity";
      j["name"] = c.name;
      j["actual"] = c.actual;
      j["pass"] = c.pass;
      out += j.dump() + '\n';
    }
    ordered_json n;
    n["section"] = "naive";
    n["verdict"] = "CONTRADICTION";
    n["agent"] = naive.agent.to_string();
    n["steps"] = naive.trace.steps.size();
    n["closure_size"] = naive_fix.closure.size();
    n["closure_rounds"] = naive_fix.rounds;
    out += n.dump() + '\n';
    for (const auto& v : variants) {
      ordered_json j;
      j["section"] = "variant";
      j["verdict"] = "CONTRADICTION";
      j["agent"] = v.agent.to_string();
      j["steps"] = v.trace.steps.size();
      out += j.dump() + '\n';
    }
    ordered_json c = block_json(block.closure.size(), block.depth, block.rounds, block.fixpoint);
    c["monotonicity_violations"] = violations.size();
    ordered_json head;
    head["section"] = "contextual";
    head.update(c);
    out += head.dump() + '\n';
    return out;
  }

  std::ostringstream os;
  os << "== Quantum identities ==\n" << format_checks(identities, Format::text) << '\n';
  os << "== Naive trust ==\n"
     << "CONTRADICTION for " << naive.agent.to_string() << " (" << naive.trace.steps.size() << " steps)\n"
     << logic::format_trace(naive.trace);
  for (const auto& v : variants) {
    os << "variant: CONTRADICTION for " << v.agent.to_string() << " (" << v.trace.steps.size() << " steps)\n";
  }
  os << "naive fixpoint: " << naive_fix.closure.size() << " formulas after " << naive_fix.rounds << " rounds\n\n";
  os << "== Contextual trust ==\n" << format_block(block, Format::text);
  os << "tag-erased contextual closure outside naive closure: " << violations.size() << '\n';
  return os.str();
}

}  // namespace frlogic::fr
