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

#include <gtest/gtest.h>

using namespace frlogic;
using namespace frlogic::logic;

namespace {

Formula F(const char* s) { return parse_formula(s); }

RuleApplication app(RuleId r, std::size_t p = 0, std::optional<AgentInstance> target = std::nullopt, int side = 0) {
  RuleApplication a;
  a.rule = r;
  a.position = p;
  a.target = target;
  a.side = side;
  return a;
}

RuleContext hierarchy(TrustMode mode) {
  RuleContext ctx;
  ctx.trust.mode = mode;
  ctx.trust.pairs = {
      {{Agent::F1, TimeSet::of({4})}, {Agent::W2, TimeSet::of({3})}},
      {{Agent::W2, TimeSet::of({3})}, {Agent::W1, TimeSet::at_least(2)}},
      {{Agent::W1, TimeSet::at_least(2)}, {Agent::F2, TimeSet::of({2})}},
      {{Agent::F2, TimeSet::of({2})}, {Agent::F1, TimeSet::below(3)}},
  };
  return ctx;
}

std::optional<std::string> apply1(RuleApplication a, const char* x, const RuleContext& ctx = hierarchy(TrustMode::naive)) {
  const Formula f = F(x);
  auto r = apply_rule(a, std::span<const Formula>(&f, 1), ctx);
  if (!r) return std::nullopt;
  return r->text();
}

std::optional<std::string> apply2(RuleApplication a, const char* x, const char* y,
                                  const RuleContext& ctx = hierarchy(TrustMode::naive)) {
  const Formula f[2] = {F(x), F(y)};
  auto r = apply_rule(a, f, ctx);
  if (!r) return std::nullopt;
  return r->text();
}

}  // namespace

TEST(Rules, NamesRoundTrip) {
  for (RuleId r : {RuleId::premise, RuleId::distribution, RuleId::contextual_distribution, RuleId::syllogism,
                   RuleId::k_and_merge, RuleId::and_elim, RuleId::trust, RuleId::contextual_trust,
                   RuleId::positive_introspection, RuleId::negative_introspection,
                   RuleId::knowledge_generalization, RuleId::condition_s}) {
    EXPECT_EQ(rule_from_string(to_string(r)), r);
  }
  EXPECT_FALSE(rule_from_string("modus-tollens"));
  EXPECT_EQ(rule_arity(RuleId::distribution), 2u);
  EXPECT_EQ(rule_arity(RuleId::trust), 1u);
}

TEST(Rules, DistributionUnderSharedPrefix) {
  EXPECT_EQ(apply2(app(RuleId::distribution, 1), "K[W1@2,3](PchiL1!=0)",
                   "K[W1@<4](K[W1@3](PchiL1!=0) -> S2=psi)"),
            std::nullopt);  // the fact is not K[W1@3](...)
  EXPECT_EQ(apply2(app(RuleId::distribution, 1), "K[W1@3]K[W1@2,3](PchiL1!=0)",
                   "K[W1@<4](K[W1@3](PchiL1!=0) -> K[F2@1,2](S2=psi))"),
            "K[W1@3]K[F2@1,2](S2=psi)");
  // Position 0 is not knowledge and is refused.
  EXPECT_EQ(apply2(app(RuleId::distribution, 0), "S1=psi", "S1=psi -> S2=psi"), std::nullopt);
  // Disjoint time sets share no prefix.
  EXPECT_EQ(apply2(app(RuleId::distribution, 1), "K[F1@0](S1=psi)", "K[F1@1](S1=psi -> S2=psi)"), std::nullopt);
}

TEST(Rules, SyllogismChainsImplications) {
  EXPECT_EQ(apply2(app(RuleId::syllogism, 1), "K[F2@<3](S2=psi -> K[F1@<3](S1=psi))",
                   "K[F2@2](K[F1@1](S1=psi) -> PchiL2=0)"),
            "K[F2@2](S2=psi -> PchiL2=0)");
  EXPECT_EQ(apply2(app(RuleId::syllogism, 1), "K[F2@2](S2=psi -> S1=phi)", "K[F2@2](S1=psi -> PchiL2=0)"),
            std::nullopt);
}

TEST(Rules, MergeTakesLiteralsOnly) {
  EXPECT_EQ(apply2(app(RuleId::k_and_merge, 1), "K[W2@4](PchiL2=0)", "K[W2@3,4](PchiL2!=0)"),
            "K[W2@4](PchiL2!=0 & PchiL2=0)");
  EXPECT_EQ(apply2(app(RuleId::k_and_merge, 1), "K[W2@4](S1=psi -> PchiL2=0)", "K[W2@4](PchiL2!=0)"),
            std::nullopt);
  EXPECT_EQ(apply2(app(RuleId::k_and_merge, 0), "PchiL2=0", "PchiL2!=0"), std::nullopt);
}

TEST(Rules, AndElimEitherSide) {
  const char* f = "K[W2@3,4](K[W1@2,3](PchiL1!=0) & K[W2@3,4](PchiL2!=0))";
  EXPECT_EQ(apply1(app(RuleId::and_elim, 1, std::nullopt, 0), f), "K[W2@3,4]K[W1@2,3](PchiL1!=0)");
  EXPECT_EQ(apply1(app(RuleId::and_elim, 1, std::nullopt, 1), f), "K[W2@3,4]K[W2@3,4](PchiL2!=0)");
  EXPECT_EQ(apply1(app(RuleId::and_elim, 0), f), std::nullopt);
}

TEST(Rules, TrustFollowsHierarchy) {
  EXPECT_EQ(apply1(app(RuleId::trust, 0), "K[F2@2]K[F1@<3](S1=psi)"), "K[F2@2](S1=psi)");
  EXPECT_EQ(apply1(app(RuleId::trust, 0), "K[F1@<3]K[F2@2](S1=psi)"), std::nullopt);
  EXPECT_EQ(apply1(app(RuleId::trust, 1), "K[W2@4]K[W1@3]K[F2@2](S2=psi)"), "K[W2@4]K[W1@3](S2=psi)");
  // Later instances keep the trust of earlier ones.
  EXPECT_EQ(apply1(app(RuleId::trust, 0), "K[W2@4]K[W1@3](PchiL1!=0)"), "K[W2@4](PchiL1!=0)");
  // An agent trusts itself now and its earlier self.
  EXPECT_EQ(apply1(app(RuleId::trust, 0), "K[W2@4]K[W2@4](PchiL2=0)"), "K[W2@4](PchiL2=0)");
  EXPECT_EQ(apply1(app(RuleId::trust, 0), "K[W2@4]K[W2@3](PchiL2=0)"), "K[W2@4](PchiL2=0)");
  EXPECT_EQ(apply1(app(RuleId::trust, 0), "K[W2@3]K[W2@4](PchiL2=0)"), std::nullopt);
  // Not transitive: F1@4 trusts W2@3 only.
  EXPECT_EQ(apply1(app(RuleId::trust, 0), "K[F1@4]K[W1@3](PchiL1!=0)"), std::nullopt);
}

TEST(Rules, ContextualTrustNeedsMatchingTags) {
  const auto ctx = hierarchy(TrustMode::contextual);
  EXPECT_EQ(apply1(app(RuleId::contextual_trust, 0), "K[W2@3|C2]K[W1@3|C2](PchiL1!=0)", ctx),
            "K[W2@3|C2](PchiL1!=0)");
  EXPECT_EQ(apply1(app(RuleId::contextual_trust, 0), "K[W1@3|C2]K[F2@2|C1](S2=psi)", ctx), std::nullopt);
  EXPECT_EQ(apply1(app(RuleId::contextual_trust, 0), "K[W2@3]K[W1@3](PchiL1!=0)", ctx), std::nullopt);
  EXPECT_FALSE(ctx.trust.trusts({{Agent::W1, TimeSet::of({3})}, Context::C2},
                                {{Agent::F2, TimeSet::of({2})}, Context::C1}));
  EXPECT_TRUE(ctx.trust.covers({Agent::W1, TimeSet::of({3})}, {Agent::F2, TimeSet::of({2})}));
}

TEST(Rules, PositiveIntrospection) {
  const AgentInstance now{Agent::F1, TimeSet::below(5)};
  const AgentInstance later{Agent::F1, TimeSet::of({4})};
  EXPECT_EQ(apply1(app(RuleId::positive_introspection, 0, now), "K[F1@<5](S1=psi)"),
            "K[F1@<5]K[F1@<5](S1=psi)");
  EXPECT_EQ(apply1(app(RuleId::positive_introspection, 0, later), "K[F1@<3](S1=psi)"),
            "K[F1@4]K[F1@<3](S1=psi)");
  // Earlier instances cannot introspect later knowledge.
  EXPECT_EQ(apply1(app(RuleId::positive_introspection, 0, AgentInstance{Agent::F1, TimeSet::of({1})}),
                   "K[F1@2](S1=psi)"),
            std::nullopt);
  // No stacking on an existing self-reference.
  EXPECT_EQ(apply1(app(RuleId::positive_introspection, 0, now), "K[F1@<5]K[F1@<5](S1=psi)"), std::nullopt);
  EXPECT_EQ(apply1(app(RuleId::positive_introspection, 0, AgentInstance{Agent::F2, TimeSet::of({4})}),
                   "K[F1@<3](S1=psi)"),
            std::nullopt);
}

TEST(Rules, NegativeIntrospection) {
  EXPECT_EQ(apply1(app(RuleId::negative_introspection, 0), "!K[W1@3](S2=phi)"), "K[W1@3]!K[W1@3](S2=phi)");
  EXPECT_EQ(apply1(app(RuleId::negative_introspection, 0), "!S2=phi"), std::nullopt);
}

TEST(Rules, GeneralizationOnlyWrapsTautologies) {
  auto ctx = hierarchy(TrustMode::naive);
  ctx.tautologies = {F("K[F1@<3](S1=psi -> S1=psi)")};
  const AgentInstance w2{Agent::W2, TimeSet::of({4})};
  EXPECT_EQ(apply1(app(RuleId::knowledge_generalization, 0, w2), "K[F1@<3](S1=psi -> S1=psi)", ctx),
            "K[W2@4]K[F1@<3](S1=psi -> S1=psi)");
  EXPECT_EQ(apply1(app(RuleId::knowledge_generalization, 0, w2), "S1=psi", ctx), std::nullopt);
}

TEST(Rules, ConditionSLiftsAtTopLevelOnly) {
  EXPECT_EQ(apply1(app(RuleId::condition_s, 0), "K[W2@4](PchiL2!=0 & PchiL2=0)"),
            "!K[W2@4](PchiL2!=0) & K[W2@4](PchiL2!=0)");
  EXPECT_EQ(apply1(app(RuleId::condition_s, 0), "K[F1@4](S1=psi & !S1=psi)"), "!K[F1@4](S1=psi) & K[F1@4](S1=psi)");
  EXPECT_EQ(apply1(app(RuleId::condition_s, 1), "K[W1@3]K[W2@4](PchiL2!=0 & PchiL2=0)"), std::nullopt);
  EXPECT_EQ(apply1(app(RuleId::condition_s, 0), "K[W2@4](PchiL1!=0 & PchiL2=0)"), std::nullopt);
}

TEST(Rules, ContradictionShape) {
  EXPECT_EQ(contradiction_agent(F("!K[W2@4](PchiL2!=0) & K[W2@4](PchiL2!=0)")), Agent::W2);
  EXPECT_FALSE(is_contradiction(F("!K[W2@4](PchiL2!=0) & K[W2@3](PchiL2!=0)")));
  EXPECT_FALSE(is_contradiction(F("K[W2@4](PchiL2!=0 & PchiL2=0)")));
}

TEST(Rules, SubsumptionWidensTimesWithPolarity) {
  EXPECT_TRUE(subsumes(F("K[W2@3,4](PchiL2!=0)"), F("K[W2@4](PchiL2!=0)")));
  EXPECT_FALSE(subsumes(F("K[W2@4](PchiL2!=0)"), F("K[W2@3,4](PchiL2!=0)")));
  EXPECT_TRUE(subsumes(F("!K[W2@4](PchiL2!=0)"), F("!K[W2@3,4](PchiL2!=0)")));
  EXPECT_TRUE(subsumes(F("K[W1@3](PchiL1!=0) -> S2=psi"), F("K[W1@2,3](PchiL1!=0) -> S2=psi")));
  EXPECT_FALSE(subsumes(F("K[W1@3|C2](PchiL1!=0)"), F("K[W1@3](PchiL1!=0)")));
}

TEST(Rules, WrongArityNeverMatches) {
  const Formula f = F("K[W2@4](PchiL2=0)");
  EXPECT_FALSE(apply_rule(app(RuleId::distribution, 1), std::span<const Formula>(&f, 1), hierarchy(TrustMode::naive)));
  EXPECT_FALSE(apply_rule(app(RuleId::premise), std::span<const Formula>(), hierarchy(TrustMode::naive)));
}
