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

#include "logic/formula.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace frlogic::logic {

// Rules act on the subformula reached by peeling `position` leading K
// operators. Two-premise rules need both premises to share that prefix up to
// time sets; the conclusion keeps the prefix with intersected time sets.
enum class RuleId {
  premise,
  distribution,             // P[phi'], P[phi -> psi] |- P[psi], phi' subsumes phi, P nonempty
  contextual_distribution,  // same, every operator context-tagged
  syllogism,                // P[a -> b], P[b' -> c] |- P[a -> c], b subsumes b'
  k_and_merge,              // P[l1], P[l2] |- P[l1 & l2] for literals, P nonempty
  and_elim,                 // P[x & y] |- P[x] (side 0) or P[y] (side 1)
  trust,                    // P K_a K_b q |- P K_a q when a trusts b
  contextual_trust,         // same, a and b tagged with one context
  positive_introspection,   // P K_a q |- P K_a' K_a q, a' the same agent now or later
  negative_introspection,   // P !K_a q |- P K_a !K_a q
  knowledge_generalization, // tautology t |- K_a t
  condition_s,              // K_a(p & !p) |- K_a p & !K_a p, top level only
};

const char* to_string(RuleId r);
std::optional<RuleId> rule_from_string(std::string_view s);
std::size_t rule_arity(RuleId r);

enum class TrustMode { naive, contextual };
const char* to_string(TrustMode m);

struct TrustPair {
  AgentInstance outer;
  AgentInstance inner;
  friend bool operator==(const TrustPair&, const TrustPair&) = default;
};

// A pair outer > inner covers the operator pair K_a K_b when a and b carry the
// pair's agent names and
//   a.times lies within outer.times or after max(outer.times), and
//   b.times lies within inner.times or in (max(inner.times), max(outer.times)].
// Every instance also trusts itself, and an agent trusts its own earlier
// instances (a@T trusts a@T' when min T >= max T').
struct TrustRelation {
  std::vector<TrustPair> pairs;
  TrustMode mode = TrustMode::naive;

  bool covers(const AgentInstance& a, const AgentInstance& b) const;
  // In contextual mode additionally both contexts must be present and equal.
  bool trusts(const SpineLink& a, const SpineLink& b) const;
};

bool self_trust(const AgentInstance& a, const AgentInstance& b);

struct RuleContext {
  TrustRelation trust;
  // Formulas that knowledge-generalization may wrap.
  std::vector<Formula> tautologies;
};

struct RuleApplication {
  RuleId rule = RuleId::premise;
  std::size_t position = 0;
  std::optional<AgentInstance> target;  // introspection and generalization
  int side = 0;                         // and-elim

  friend bool operator==(const RuleApplication&, const RuleApplication&) = default;
};

// Conclusion of the rule on the premises, or nothing when the schema does not
// match. Never throws for non-matching input.
std::optional<Formula> apply_rule(const RuleApplication& app, std::span<const Formula> premises,
                                  const RuleContext& ctx);

// True when `stronger` entails `weaker` by widening knowledge time sets:
// K_{a@T} x subsumes K_{a@T'} y when T' is a subset of T and x subsumes y.
// Negation and the antecedent of an implication flip the direction.
bool subsumes(const Formula& stronger, const Formula& weaker);

std::optional<Formula> condition_s_lift(const Formula& f);

// Shape K_a p & !K_a p.
bool is_contradiction(const Formula& f);
std::optional<Agent> contradiction_agent(const Formula& f);

}  // namespace frlogic::logic
