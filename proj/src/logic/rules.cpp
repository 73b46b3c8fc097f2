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

#include "logic/rules.hpp"

#include <algorithm>
#include <array>

namespace frlogic::logic {

namespace {

constexpr std::array<std::pair<RuleId, const char*>, 12> kRuleNames{{
    {RuleId::premise, "premise"},
    {RuleId::distribution, "distribution"},
    {RuleId::contextual_distribution, "contextual-distribution"},
    {RuleId::syllogism, "syllogism"},
    {RuleId::k_and_merge, "k-and-merge"},
    {RuleId::and_elim, "and-elim"},
    {RuleId::trust, "trust"},
    {RuleId::contextual_trust, "contextual-trust"},
    {RuleId::positive_introspection, "positive-introspection"},
    {RuleId::negative_introspection, "negative-introspection"},
    {RuleId::knowledge_generalization, "knowledge-generalization"},
    {RuleId::condition_s, "condition-s"},
}};

// Prefix shared by x and y over the first p operators: equal agents and
// contexts, intersected nonempty time sets.
std::optional<std::vector<SpineLink>> shared_prefix(const std::vector<SpineLink>& x,
                                                    const std::vector<SpineLink>& y,
                                                    std::size_t p) {
  if (x.size() < p || y.size() < p) return std::nullopt;
  std::vector<SpineLink> out;
  out.reserve(p);
  for (std::size_t i = 0; i < p; ++i) {
    if (x[i].who.name != y[i].who.name || x[i].ctx != y[i].ctx) return std::nullopt;
    TimeSet t = x[i].who.times & y[i].who.times;
    if (t.empty()) return std::nullopt;
    out.push_back({{x[i].who.name, t}, x[i].ctx});
  }
  return out;
}

bool all_tagged(std::span<const Formula> premises) {
  return std::all_of(premises.begin(), premises.end(), [](const Formula& f) { return fully_tagged(f); });
}

std::optional<Formula> modus_ponens(std::size_t p, const Formula& x, const Formula& y) {
  if (p == 0) return std::nullopt;
  auto prefix = shared_prefix(spine(x), spine(y), p);
  if (!prefix) return std::nullopt;
  const Formula& fact = peel(x, p);
  const Formula& rule = peel(y, p);
  if (rule.kind() != NodeKind::implication || !subsumes(fact, rule.child(0))) return std::nullopt;
  return wrap(*prefix, rule.child(1));
}

std::optional<Formula> syllogism(std::size_t p, const Formula& x, const Formula& y) {
  auto prefix = shared_prefix(spine(x), spine(y), p);
  if (!prefix) return std::nullopt;
  const Formula& ab = peel(x, p);
  const Formula& bc = peel(y, p);
  if (ab.kind() != NodeKind::implication || bc.kind() != NodeKind::implication) return std::nullopt;
  if (!subsumes(ab.child(1), bc.child(0))) return std::nullopt;
  return wrap(*prefix, Formula::implication(ab.child(0), bc.child(1)));
}

std::optional<Formula> merge(std::size_t p, const Formula& x, const Formula& y) {
  if (p == 0) return std::nullopt;
  auto prefix = shared_prefix(spine(x), spine(y), p);
  if (!prefix) return std::nullopt;
  const Formula& l1 = peel(x, p);
  const Formula& l2 = peel(y, p);
  if (!l1.is_literal() || !l2.is_literal() || l1 == l2) return std::nullopt;
  return wrap(*prefix, Formula::conjunction(l1, l2));
}

std::optional<Formula> and_elim(std::size_t p, int side, const Formula& x) {
  auto sp = spine(x);
  if (sp.size() < p || (side != 0 && side != 1)) return std::nullopt;
  const Formula& body = peel(x, p);
  if (body.kind() != NodeKind::conjunction) return std::nullopt;
  sp.resize(p);
  return wrap(sp, body.child(side));
}

std::optional<Formula> trust_step(std::size_t p, const Formula& x, const TrustRelation& rel,
                                  bool contextual) {
  auto sp = spine(x);
  if (sp.size() < p + 2) return std::nullopt;
  const SpineLink& a = sp[p];
  const SpineLink& b = sp[p + 1];
  if (contextual) {
    if (!a.ctx || !b.ctx || *a.ctx != *b.ctx || !rel.covers(a.who, b.who)) return std::nullopt;
  } else if (!rel.trusts(a, b)) {
    return std::nullopt;
  }
  sp.resize(p + 1);
  return wrap(sp, peel(x, p + 2));
}

std::optional<Formula> positive_introspection(std::size_t p, const std::optional<AgentInstance>& target,
                                              const Formula& x) {
  auto sp = spine(x);
  if (!target || sp.size() <= p) return std::nullopt;
  const SpineLink src = sp[p];
  if (target->name != src.who.name) return std::nullopt;
  if (p > 0 && sp[p - 1].who.name == src.who.name) return std::nullopt;
  if (p + 1 < sp.size() && sp[p + 1].who.name == src.who.name) return std::nullopt;
  if (!(target->times == src.who.times || target->times.min() >= src.who.times.max())) {
    return std::nullopt;
  }
  std::vector<SpineLink> prefix(sp.begin(), sp.begin() + static_cast<std::ptrdiff_t>(p));
  prefix.push_back({*target, src.ctx});
  return wrap(prefix, peel(x, p));
}

std::optional<Formula> negative_introspection(std::size_t p, const Formula& x) {
  auto sp = spine(x);
  if (sp.size() < p) return std::nullopt;
  const Formula& body = peel(x, p);
  if (body.kind() != NodeKind::negation || !body.child(0).is_knows()) return std::nullopt;
  const Formula& k = body.child(0);
  sp.resize(p);
  return wrap(sp, Formula::knows(k.instance(), k.context(), body));
}

std::optional<Formula> generalize(const std::optional<AgentInstance>& target, const Formula& x,
                                  const RuleContext& ctx) {
  if (!target) return std::nullopt;
  if (std::find(ctx.tautologies.begin(), ctx.tautologies.end(), x) == ctx.tautologies.end()) {
    return std::nullopt;
  }
  std::optional<Context> c;
  if (ctx.trust.mode == TrustMode::contextual) c = default_context(target->name);
  return Formula::knows(*target, c, x);
}

}  // namespace

const char* to_string(RuleId r) {
  for (const auto& [id, name] : kRuleNames) {
    if (id == r) return name;
  }
  return "?";
}

std::optional<RuleId> rule_from_string(std::string_view s) {
  for (const auto& [id, name] : kRuleNames) {
    if (s == name) return id;
  }
  return std::nullopt;
}

std::size_t rule_arity(RuleId r) {
  switch (r) {
    case RuleId::premise: return 0;
    case RuleId::distribution:
    case RuleId::contextual_distribution:
    case RuleId::syllogism:
    case RuleId::k_and_merge: return 2;
    default: return 1;
  }
}

const char* to_string(TrustMode m) { return m == TrustMode::naive ? "naive" : "contextual"; }

bool self_trust(const AgentInstance& a, const AgentInstance& b) {
  return a.name == b.name && (a.times == b.times || a.times.min() >= b.times.max());
}

bool TrustRelation::covers(const AgentInstance& a, const AgentInstance& b) const {
  if (self_trust(a, b)) return true;
  for (const auto& pr : pairs) {
    if (a.name != pr.outer.name || b.name != pr.inner.name) continue;
    const int outer_max = pr.outer.times.max();
    const int inner_max = pr.inner.times.max();
    const TimeSet outer_window = pr.outer.times | (outer_max < kLastStep ? TimeSet::at_least(outer_max + 1) : TimeSet());
    TimeSet inner_window = pr.inner.times;
    for (int t = inner_max + 1; t <= outer_max; ++t) inner_window = inner_window | TimeSet::of({t});
    if (a.times.subset_of(outer_window) && b.times.subset_of(inner_window)) return true;
  }
  return false;
}

bool TrustRelation::trusts(const SpineLink& a, const SpineLink& b) const {
  if (mode == TrustMode::contextual && (!a.ctx || !b.ctx || *a.ctx != *b.ctx)) return false;
  return covers(a.who, b.who);
}

std::optional<Formula> apply_rule(const RuleApplication& app, std::span<const Formula> premises,
                                  const RuleContext& ctx) {
  if (premises.size() != rule_arity(app.rule)) return std::nullopt;
  const std::size_t p = app.position;
  switch (app.rule) {
    case RuleId::premise:
      return std::nullopt;
    case RuleId::distribution:
      return modus_ponens(p, premises[0], premises[1]);
    case RuleId::contextual_distribution:
      if (!all_tagged(premises)) return std::nullopt;
      return modus_ponens(p, premises[0], premises[1]);
    case RuleId::syllogism:
      return syllogism(p, premises[0], premises[1]);
    case RuleId::k_and_merge:
      return merge(p, premises[0], premises[1]);
    case RuleId::and_elim:
      return and_elim(p, app.side, premises[0]);
    case RuleId::trust:
      return trust_step(p, premises[0], ctx.trust, false);
    case RuleId::contextual_trust:
      if (!all_tagged(premises)) return std::nullopt;
      return trust_step(p, premises[0], ctx.trust, true);
    case RuleId::positive_introspection:
      return positive_introspection(p, app.target, premises[0]);
    case RuleId::negative_introspection:
      return negative_introspection(p, premises[0]);
    case RuleId::knowledge_generalization:
      return generalize(app.target, premises[0], ctx);
    case RuleId::condition_s:
      if (p != 0) return std::nullopt;
      return condition_s_lift(premises[0]);
  }
  return std::nullopt;
}

bool subsumes(const Formula& stronger, const Formula& weaker) {
  if (stronger == weaker) return true;
  if (stronger.kind() != weaker.kind()) return false;
  switch (stronger.kind()) {
    case NodeKind::atom:
      return false;
    case NodeKind::negation:
      return subsumes(weaker.child(0), stronger.child(0));
    case NodeKind::implication:
      return subsumes(weaker.child(0), stronger.child(0)) && subsumes(stronger.child(1), weaker.child(1));
    case NodeKind::conjunction:
      return (subsumes(stronger.child(0), weaker.child(0)) && subsumes(stronger.child(1), weaker.child(1))) ||
             (subsumes(stronger.child(0), weaker.child(1)) && subsumes(stronger.child(1), weaker.child(0)));
    case NodeKind::knows:
      return stronger.instance().name == weaker.instance().name &&
             stronger.context() == weaker.context() &&
             weaker.instance().times.subset_of(stronger.instance().times) &&
             subsumes(stronger.child(0), weaker.child(0));
  }
  return false;
}

std::optional<Formula> condition_s_lift(const Formula& f) {
  if (!f.is_knows()) return std::nullopt;
  const Formula& body = f.child(0);
  if (body.kind() != NodeKind::conjunction) return std::nullopt;
  const Formula& x = body.child(0);
  const Formula& y = body.child(1);
  std::optional<Atom> p;
  if (x.is_atom() && y.kind() == NodeKind::negation && y.child(0) == x) {
    p = x.atom_value();
  } else if (y.is_atom() && x.kind() == NodeKind::negation && x.child(0) == y) {
    p = y.atom_value();
  } else if (x.is_atom() && y.is_atom() && complementary(x.atom_value(), y.atom_value())) {
    p = std::min(x.atom_value(), y.atom_value());
  }
  if (!p) return std::nullopt;
  Formula k = Formula::knows(f.instance(), f.context(), Formula::atom(*p));
  return Formula::conjunction(k, Formula::negation(k));
}

std::optional<Agent> contradiction_agent(const Formula& f) {
  if (f.kind() != NodeKind::conjunction) return std::nullopt;
  for (int i = 0; i < 2; ++i) {
    const Formula& pos = f.child(i);
    const Formula& neg = f.child(1 - i);
    if (pos.is_knows() && neg.kind() == NodeKind::negation && neg.child(0) == pos) {
      return pos.instance().name;
    }
  }
  return std::nullopt;
}

bool is_contradiction(const Formula& f) { return contradiction_agent(f).has_value(); }

}  // namespace frlogic::logic
