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
#include "logic/trace.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace frlogic::logic {

struct Premise {
  Formula formula;
  std::string source;  // tag printed on premise steps
};

// Either one formula, or any formula of shape K_a p & !K_a p (optionally for
// one agent). An empty goal runs to fixpoint.
struct Goal {
  std::optional<Formula> formula;
  bool contradiction = false;
  std::optional<Agent> agent;

  static Goal none() { return {}; }
  static Goal of(Formula f) { return {std::move(f), false, std::nullopt}; }
  static Goal any_contradiction(std::optional<Agent> a = std::nullopt) { return {std::nullopt, true, a}; }

  bool matches(const Formula& f) const;
};

struct DeriveOptions {
  int depth = 32;                     // rounds of forward chaining
  std::size_t max_formulas = 200000;  // resource cap
  std::set<RuleId> rules;             // enabled rules
};

// Rule set for a mode: naive uses distribution and trust, contextual their
// contextual variants. Both include syllogism, k-and-merge, and-elim,
// positive-introspection and condition-s.
std::set<RuleId> default_rules(TrustMode mode);

enum class DeriveStatus { derived, not_derivable, aborted };
const char* to_string(DeriveStatus s);

struct DeriveResult {
  DeriveStatus status = DeriveStatus::not_derivable;
  DerivationTrace trace;          // derived only: ancestors of the goal, renumbered
  std::vector<Formula> closure;   // every formula known when the search stopped
  int rounds = 0;                 // rounds actually run
  bool fixpoint = false;          // last round added nothing
  std::size_t goal_index = 0;     // index into closure, derived only
};

// Breadth-first forward chaining. Round r applies every enabled rule to
// tuples containing at least one formula first added in round r-1. New
// conclusions are deduplicated by canonical text, first derivation wins, and
// become usable in the next round. Throws std::invalid_argument when depth < 1.
DeriveResult derive(const std::vector<Premise>& premises, const RuleContext& ctx, const Goal& goal,
                    const DeriveOptions& options);

}  // namespace frlogic::logic
