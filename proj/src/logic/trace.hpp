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

#pragma once

#include "logic/rules.hpp"

#include <string>
#include <vector>

namespace frlogic::logic {

struct TraceStep {
  Formula conclusion;
  RuleApplication app;
  std::vector<std::size_t> premises;  // 1-based step numbers
  std::string source;                 // premise steps only
};

struct DerivationTrace {
  std::vector<TraceStep> steps;

  bool contains(const Formula& f) const;
  const Formula& last() const;
};

// One line per step: "n. <formula> [rule-id: i,j]", premise steps as
// "n. <formula> [premise: tag]".
std::string format_trace(const DerivationTrace& trace);
// One JSON object per step with fields step, formula, rule, premises,
// position, and target / side / source when set.
std::string trace_to_jsonl(const DerivationTrace& trace);
// Inverse of trace_to_jsonl. Throws std::invalid_argument on malformed input.
DerivationTrace trace_from_jsonl(const std::string& text);

// Joins a lemma derivation to a derivation that used the lemma as a premise:
// `main`'s premise step for lemma.last() is replaced by the lemma's steps and
// steps repeating an earlier conclusion are merged into it.
DerivationTrace splice(const DerivationTrace& lemma, const DerivationTrace& main);

struct TraceCheck {
  bool ok = true;
  std::size_t failed_step = 0;  // 1-based, 0 when ok
  std::string message;
};

// Replays every step: premise steps must appear in `premises`, every other
// step must cite earlier steps and reproduce its conclusion through
// apply_rule exactly.
TraceCheck check_trace(const DerivationTrace& trace, const std::vector<Formula>& premises,
                       const RuleContext& ctx);

}  // namespace frlogic::logic
