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

#include "fr/derivation.hpp"
#include "fr/report.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <json.hpp>

using namespace frlogic;
using namespace frlogic::fr;
using logic::parse_formula;
using logic::RuleId;

namespace {

bool has(const std::vector<Premise>& ps, const std::string& text) {
  return std::any_of(ps.begin(), ps.end(), [&](const Premise& p) { return p.formula.text() == text; });
}

const ContradictionCertificate& naive_cert() {
  static const ContradictionCertificate cert = reproduce_contradiction();
  return cert;
}

const std::vector<ContradictionCertificate>& variants() {
  static const std::vector<ContradictionCertificate> v = reproduce_agent_variants();
  return v;
}

}  // namespace

TEST(Premises, NaiveSetContents) {
  const auto set = encode_premises(TrustMode::naive);
  EXPECT_EQ(set.formulas.size(), 9u);
  EXPECT_TRUE(has(set.formulas, "K[F1@<3](K[F1@1](S1=psi) -> K[W2@4](PchiL2=0))"));
  EXPECT_TRUE(has(set.formulas, "K[F2@<3](K[F2@1](S2=psi) -> K[F1@<3](S1=psi))"));
  EXPECT_TRUE(has(set.formulas, "K[W1@<4](K[W1@3](PchiL1!=0) -> K[F2@1,2](S2=psi))"));
  EXPECT_TRUE(has(set.formulas, "K[W2@4]K[W1@3]K[F2@2]K[F1@<3](K[F1@1](S1=psi) -> K[W2@4](PchiL2=0))"));
  for (const auto& p : set.formulas) EXPECT_FALSE(p.source.empty());
}

TEST(Premises, HierarchyPairs) {
  const auto set = encode_premises(TrustMode::naive);
  const auto& pairs = set.trust.pairs;
  auto pair = [](Agent a, logic::TimeSet ta, Agent b, logic::TimeSet tb) {
    return logic::TrustPair{{a, ta}, {b, tb}};
  };
  using logic::TimeSet;
  const std::vector<logic::TrustPair> chain = {
      pair(Agent::F1, TimeSet::of({4}), Agent::W2, TimeSet::of({3})),
      pair(Agent::W2, TimeSet::of({3}), Agent::W1, TimeSet::at_least(2)),
      pair(Agent::W1, TimeSet::at_least(2), Agent::F2, TimeSet::of({2})),
      pair(Agent::F2, TimeSet::of({2}), Agent::F1, TimeSet::below(3)),
  };
  for (const auto& p : chain) EXPECT_NE(std::find(pairs.begin(), pairs.end(), p), pairs.end());
  EXPECT_EQ(pairs.size(), 6u);
}

TEST(Premises, ContextualSetDiffersOnlyByTags) {
  const auto naive = encode_premises(TrustMode::naive);
  const auto ctx = encode_premises(TrustMode::contextual);
  ASSERT_EQ(naive.formulas.size(), ctx.formulas.size());
  for (std::size_t i = 0; i < naive.formulas.size(); ++i) {
    EXPECT_TRUE(logic::fully_tagged(ctx.formulas[i].formula));
    EXPECT_EQ(logic::erase_contexts(ctx.formulas[i].formula), naive.formulas[i].formula);
    EXPECT_EQ(ctx.formulas[i].source, naive.formulas[i].source);
  }
  EXPECT_EQ(ctx.trust.pairs, naive.trust.pairs);
  EXPECT_TRUE(has(ctx.formulas, "K[F2@2|C1]K[F1@<3|C1](K[F1@1|C1](S1=psi) -> K[W2@4|C2](PchiL2=0))"));
  const auto nf = run_facts(TrustMode::naive);
  const auto cf = run_facts(TrustMode::contextual);
  for (std::size_t i = 0; i < nf.size(); ++i) EXPECT_EQ(logic::erase_contexts(cf[i].formula), nf[i].formula);
}

TEST(Premises, AgentFacts) {
  EXPECT_THROW(agent_facts(Agent::W2, TrustMode::naive), std::invalid_argument);
  EXPECT_THROW(agent_prediction(Agent::W2), std::invalid_argument);
  const auto f1 = agent_facts(Agent::F1, TrustMode::naive);
  ASSERT_EQ(f1.size(), 2u);
  EXPECT_EQ(f1[1].formula.text(), "K[F1@4]K[W2@3,4](PchiL2!=0)");
}

TEST(Contradiction, NaiveTracePassesThroughBridge) {
  const auto& cert = naive_cert();
  EXPECT_EQ(cert.agent.to_string(), "W2@4");
  EXPECT_TRUE(cert.trace.contains(bridge_formula()));
  EXPECT_EQ(cert.trace.last().text(), "!K[W2@4](PchiL2!=0) & K[W2@4](PchiL2!=0)");
  EXPECT_EQ(cert.trace.steps.back().app.rule, RuleId::condition_s);
  EXPECT_LE(cert.trace.steps.size(), 40u);
}

TEST(Contradiction, NaiveTraceChecksIndependently) {
  const auto set = encode_premises(TrustMode::naive);
  auto premises = set.plain();
  for (const auto& p : run_facts(TrustMode::naive)) premises.push_back(p.formula);
  const auto reread = logic::trace_from_jsonl(logic::trace_to_jsonl(naive_cert().trace));
  const auto check = logic::check_trace(reread, premises, set.rule_context());
  EXPECT_TRUE(check.ok) << check.message;
}

TEST(Contradiction, TrustStepsUseHierarchyPairs) {
  const auto set = encode_premises(TrustMode::naive);
  std::vector<logic::TrustPair> chain(set.trust.pairs.begin(), set.trust.pairs.begin() + 4);
  logic::TrustRelation hie{chain, TrustMode::naive};
  const auto& steps = naive_cert().trace.steps;
  int trust_steps = 0;
  for (const auto& s : steps) {
    if (s.app.rule != RuleId::trust) continue;
    ++trust_steps;
    const Formula& src = steps[s.premises[0] - 1].conclusion;
    const auto sp = logic::spine(src);
    EXPECT_TRUE(hie.covers(sp[s.app.position].who, sp[s.app.position + 1].who)) << src.text();
  }
  EXPECT_GE(trust_steps, 3);
}

TEST(Contradiction, GoldenNaiveTrace) {
  EXPECT_EQ(logic::format_trace(naive_cert().trace),
            "1. K[W2@4]K[W1@<4](K[W1@3](PchiL1!=0) -> K[F2@1,2](S2=psi)) [premise: w1-retrodiction@W2]\n"
            "2. K[W2@4]K[W1@3]K[F2@2]K[F1@<3](K[F1@1](S1=psi) -> K[W2@4](PchiL2=0)) [premise: f1-prediction@W2,W1,F2]\n"
            "3. K[W2@4]K[W1@3]K[F2@<3](K[F2@1](S2=psi) -> K[F1@<3](S1=psi)) [premise: f2-retrodiction@W2,W1]\n"
            "4. K[W2@4]K[W1@3]K[F2@2](K[F1@1](S1=psi) -> K[W2@4](PchiL2=0)) [trust: 2]\n"
            "5. K[W2@4]K[W1@3]K[F2@2](K[F2@1](S2=psi) -> K[W2@4](PchiL2=0)) [syllogism: 3,4]\n"
            "6. K[W2@4]K[W1@3](K[F2@1](S2=psi) -> K[W2@4](PchiL2=0)) [trust: 5]\n"
            "7. K[W2@4]K[W1@3](K[W1@3](PchiL1!=0) -> K[W2@4](PchiL2=0)) [syllogism: 1,6]\n"
            "8. K[W2@3,4](PchiL2!=0) [premise: run:w2-outcome]\n"
            "9. K[W2@3,4](K[W1@2,3](PchiL1!=0) & K[W2@3,4](PchiL2!=0)) [premise: run:w1-announcement]\n"
            "10. K[W2@4](K[W1@3](PchiL1!=0) -> K[W2@4](PchiL2=0)) [trust: 7]\n"
            "11. K[W2@3,4]K[W1@2,3](PchiL1!=0) [and-elim: 9]\n"
            "12. K[W2@4]K[W2@4](PchiL2=0) [distribution: 11,10]\n"
            "13. K[W2@4](PchiL2=0) [trust: 12]\n"
            "14. K[W2@4](PchiL2!=0 & PchiL2=0) [k-and-merge: 13,8]\n"
            "15. !K[W2@4](PchiL2!=0) & K[W2@4](PchiL2!=0) [condition-s: 14]\n");
}

TEST(Contradiction, AgentVariantsPassThroughPredictions) {
  const auto& v = variants();
  ASSERT_EQ(v.size(), 3u);
  const Agent agents[] = {Agent::F1, Agent::F2, Agent::W1};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(v[i].agent.name, agents[i]);
    EXPECT_TRUE(v[i].trace.contains(agent_prediction(agents[i]))) << logic::format_trace(v[i].trace);
    EXPECT_EQ(v[i].trace.steps.back().app.rule, RuleId::condition_s);
    EXPECT_TRUE(logic::is_contradiction(v[i].trace.last()));
  }
}

TEST(Contradiction, F2UsesHierarchyThenOwnTrust) {
  const auto& steps = variants()[1].trace.steps;
  auto pos = [&](const Formula& f) {
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i].conclusion == f) return i;
    }
    return steps.size();
  };
  // F2 first reduces F1's prediction through F2@2 > F1@<3, later trusts its
  // own earlier instance.
  const auto reduced = pos(parse_formula("K[F2@2](K[F1@1](S1=psi) -> K[W2@4](PchiL2=0))"));
  const auto prediction = pos(agent_prediction(Agent::F2));
  ASSERT_LT(reduced, steps.size());
  ASSERT_LT(prediction, steps.size());
  EXPECT_EQ(steps[reduced].app.rule, RuleId::trust);
  EXPECT_LT(reduced, prediction);
}

TEST(Contradiction, UnrestrictedSearchAlsoSucceeds) {
  for (Agent a : kAgents) {
    const auto cert = direct_contradiction(a);
    EXPECT_EQ(cert.agent.name, a);
    EXPECT_EQ(cert.trace.steps.back().app.rule, RuleId::condition_s);
  }
}

TEST(Block, ContextualSearchIsBlocked) {
  const int depth = block_depth();
  const auto naive = naive_closure();
  EXPECT_TRUE(naive.fixpoint);
  EXPECT_EQ(depth, naive.rounds + 4);
  const auto cert = certify_block(depth);
  EXPECT_TRUE(cert.fixpoint);
  EXPECT_FALSE(cert.contradiction_found);
  EXPECT_FALSE(cert.bridge_found);
  for (const auto& f : cert.closure) EXPECT_FALSE(logic::is_contradiction(f)) << f.text();
  // Every premise survives to the fixpoint.
  const auto set = encode_premises(TrustMode::contextual);
  for (const auto& p : set.formulas) {
    EXPECT_NE(std::find(cert.closure.begin(), cert.closure.end(), p.formula), cert.closure.end());
  }
  EXPECT_TRUE(monotonicity_violations(cert.closure, naive.closure).empty());
  // The naive closure contains the bridge formula; the contextual one does not.
  EXPECT_NE(std::find(naive.closure.begin(), naive.closure.end(), bridge_formula()), naive.closure.end());
}

TEST(Block, ViolationsAreReported) {
  const std::vector<Formula> naive = {parse_formula("K[W1@3](S2=psi)")};
  const std::vector<Formula> ctx = {parse_formula("K[W1@3|C2](S2=psi)"), parse_formula("K[W2@4|C2](S2=psi)")};
  const auto v = monotonicity_violations(ctx, naive);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].text(), "K[W2@4](S2=psi)");
}

TEST(Identities, AllPass) {
  for (const auto& c : quantum_identities()) EXPECT_TRUE(c.pass) << c.name << ": " << c.actual;
}

TEST(Report, CheckLines) {
  const auto checks = all_checks();
  const auto text = format_checks(checks, Format::text);
  EXPECT_NE(text.find("P(both nonnull) = 1/12 PASS\n"), std::string::npos);
  EXPECT_NE(text.find("P(W1 nonnull) = 1/6 PASS\n"), std::string::npos);
  EXPECT_NE(text.find("contextual search = blocked PASS\n"), std::string::npos);
  EXPECT_EQ(text.find("FAIL"), std::string::npos);
  EXPECT_EQ(format_check({"x", "1", "2", false}), "x = 2 FAIL (expected 1)");
  const auto json = format_checks(checks, Format::json);
  const auto first = nlohmann::json::parse(json.substr(0, json.find('\n')));
  EXPECT_TRUE(first["pass"].get<bool>());
}

TEST(Report, VerdictReport) {
  const auto text = verdict_report(Format::text);
  EXPECT_NE(text.find("CONTRADICTION for W2@4"), std::string::npos);
  EXPECT_NE(text.find("BLOCKED at fixpoint (no contradiction derivable)"), std::string::npos);
  EXPECT_NE(text.find("fixpoint size: "), std::string::npos);
  EXPECT_EQ(text, verdict_report(Format::text));
  const auto json = verdict_report(Format::json);
  EXPECT_NE(json.find(R"("section":"contextual","verdict":"BLOCKED")"), std::string::npos);
}
