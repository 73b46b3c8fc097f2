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

#include "protocol/protocol.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <unordered_set>

namespace frlogic::fr {

using logic::AgentInstance;
using logic::DeriveStatus;
using logic::TimeSet;
using protocol::Lab;
using quantum::FieldElement;

namespace {

const char* const kF1Prediction = "K[F1@<3](K[F1@1](S1=psi) -> K[W2@4](PchiL2=0))";
const char* const kF2Retrodiction = "K[F2@<3](K[F2@1](S2=psi) -> K[F1@0,1,2](S1=psi))";
const char* const kW1Retrodiction = "K[W1@<4](K[W1@3](PchiL1!=0) -> K[F2@1,2](S2=psi))";

Formula in_mode(const Formula& f, TrustMode mode) {
  return mode == TrustMode::contextual ? logic::tag_contexts(f) : f;
}

Formula parsed(const std::string& text, TrustMode mode) {
  return in_mode(logic::parse_formula(text), mode);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw VerificationError("quantum check failed: " + what);
}

// F1 recorded psi, so lab 2 was prepared in (phi + psi)/sqrt2 and its record
// state is orthogonal to chi.
void verify_f1_prediction() {
  const auto global = protocol::build_global_state();
  const auto branch = quantum::project(protocol::record_projector(Lab::L1, SValue::psi), global);
  require(branch.norm2() == FieldElement::frac(2, 3), "F1=psi branch weight is 2/3");
  const auto normalized = FieldElement::frac(1, 2) * FieldElement::sqrt6() * branch;
  require(normalized.is_normalized(), "F1=psi branch normalizes");
  require(quantum::born_probability(protocol::p_chi(Lab::L2), normalized).is_zero(),
          "P_chi on lab 2 vanishes in the F1=psi branch");
}

// F2 recorded psi only in the branch where S1 was psi.
void verify_f2_retrodiction() {
  const auto global = protocol::build_global_state();
  const auto f2psi = protocol::record_projector(Lab::L2, SValue::psi);
  const auto joint = quantum::tensor(protocol::record_projector(Lab::L1, SValue::phi), f2psi);
  require(quantum::born_probability(joint, global).is_zero(), "F2=psi excludes F1=phi");
}

// W1's non-null outcome leaves lab 2 in psi (x) zeta.
void verify_w1_retrodiction() {
  const auto global = protocol::build_global_state();
  const auto v = quantum::project(protocol::p_chi(Lab::L1), global);
  require(v.norm2() == FieldElement::frac(1, 6), "P_chi L1 branch weight is 1/6");
  for (const auto& [key, amp] : v.terms()) {
    require(key[2] == quantum::Symbol::psi && key[3] == quantum::Symbol::zeta,
            "P_chi L1 branch lies on S2=psi, F2=zeta");
  }
  const auto both = quantum::tensor(protocol::p_chi(Lab::L1), protocol::record_projector(Lab::L2, SValue::psi));
  require(quantum::born_probability(both, global) == quantum::born_probability(protocol::p_chi(Lab::L1), global),
          "P(F2=psi | W1 non-null) = 1");
}

void verify_run_possible() {
  require(!protocol::halting_scenario().probability.is_zero(), "both non-null outcomes are possible");
}

Premise premise(const std::string& text, const char* tag, TrustMode mode) {
  return {parsed(text, mode), tag};
}

logic::TrustRelation hierarchy(TrustMode mode) {
  logic::TrustRelation rel;
  rel.mode = mode;
  const AgentInstance f1_late{Agent::F1, TimeSet::of({4})};
  const AgentInstance w2{Agent::W2, TimeSet::of({3})};
  const AgentInstance w1{Agent::W1, TimeSet::at_least(2)};
  const AgentInstance f2{Agent::F2, TimeSet::of({2})};
  const AgentInstance f1{Agent::F1, TimeSet::below(3)};
  rel.pairs = {
      {f1_late, w2},
      {w2, w1},
      {w1, f2},
      {f2, f1},
      {{Agent::F2, TimeSet::of({4})}, w2},
      {{Agent::W1, TimeSet::of({4})}, w2},
  };
  return rel;
}

std::vector<Premise> with_facts(const PremiseSet& set, const std::vector<Premise>& facts) {
  std::vector<Premise> all = set.formulas;
  all.insert(all.end(), facts.begin(), facts.end());
  return all;
}

std::vector<Formula> plain(const std::vector<Premise>& ps) {
  std::vector<Formula> out;
  for (const auto& p : ps) out.push_back(p.formula);
  return out;
}

logic::DeriveOptions options(TrustMode mode, int depth) {
  logic::DeriveOptions opt;
  opt.depth = depth;
  opt.rules = logic::default_rules(mode);
  return opt;
}

logic::DeriveResult run(const std::vector<Premise>& premises, const logic::RuleContext& ctx,
                        const logic::Goal& goal, TrustMode mode, int depth) {
  return logic::derive(premises, ctx, goal, options(mode, depth));
}

ContradictionCertificate finish(logic::DerivationTrace trace, const std::vector<Premise>& all,
                                const logic::RuleContext& ctx, Agent agent) {
  const std::string who(to_string(agent));
  auto check = logic::check_trace(trace, plain(all), ctx);
  if (!check.ok) {
    throw DerivationError("trace for " + who + " fails at step " + std::to_string(check.failed_step) + ": " +
                          check.message);
  }
  if (trace.steps.back().app.rule != logic::RuleId::condition_s) {
    throw DerivationError("trace for " + who + " does not end in condition-s");
  }
  ContradictionCertificate cert;
  const Formula& last = trace.last();
  cert.agent = (last.child(0).is_knows() ? last.child(0) : last.child(1)).instance();
  cert.trace = std::move(trace);
  return cert;
}

// Two stages: the lemma from the protocol premises plus `own`, then the
// contradiction from the lemma plus `heard`. The spliced trace is checked
// against the union of all premises.
ContradictionCertificate certify(const PremiseSet& set, const std::vector<Premise>& own, const Formula& lemma,
                                 const std::vector<Premise>& heard, Agent agent, int depth) {
  const auto ctx = set.rule_context();
  const std::string who(to_string(agent));
  auto first = run(with_facts(set, own), ctx, logic::Goal::of(lemma), set.mode, depth);
  if (first.status != DeriveStatus::derived) {
    throw DerivationError("no derivation of " + lemma.text() + ": " + logic::to_string(first.status),
                          first.status);
  }
  std::vector<Premise> second_premises{{lemma, "lemma"}};
  second_premises.insert(second_premises.end(), heard.begin(), heard.end());
  auto second = run(second_premises, ctx, logic::Goal::any_contradiction(agent), set.mode, depth);
  if (second.status != DeriveStatus::derived) {
    throw DerivationError("no contradiction for " + who + " from " + lemma.text() + ": " +
                              logic::to_string(second.status),
                          second.status);
  }
  auto all = with_facts(set, own);
  all.insert(all.end(), heard.begin(), heard.end());
  auto cert = finish(logic::splice(first.trace, second.trace), all, ctx, agent);
  if (!cert.trace.contains(lemma)) throw DerivationError("trace for " + who + " skips " + lemma.text());
  cert.rounds = first.rounds + second.rounds;
  cert.closure_size = first.closure.size() + second.closure.size();
  spdlog::info("{} contradiction in {} rounds, {} formulas, {} trace steps", who, cert.rounds,
               cert.closure_size, cert.trace.steps.size());
  return cert;
}

std::vector<Premise> facts_for(Agent a) {
  return a == Agent::W2 ? run_facts(TrustMode::naive) : agent_facts(a, TrustMode::naive);
}

}  // namespace

std::vector<Formula> PremiseSet::plain() const { return fr::plain(formulas); }

logic::RuleContext PremiseSet::rule_context() const {
  logic::RuleContext ctx;
  ctx.trust = trust;
  ctx.tautologies = plain();
  return ctx;
}

PremiseSet encode_premises(TrustMode mode) {
  verify_f1_prediction();
  verify_f2_retrodiction();
  verify_w1_retrodiction();
  verify_run_possible();

  const std::string f1 = kF1Prediction;
  const std::string f2 = kF2Retrodiction;
  const std::string w1 = kW1Retrodiction;
  PremiseSet set{mode, {}, hierarchy(mode)};
  set.formulas = {
      premise(f1, "f1-prediction", mode),
      premise(f2, "f2-retrodiction", mode),
      premise(w1, "w1-retrodiction", mode),
      premise("K[F2@2]" + f1, "f1-prediction@F2", mode),
      premise("K[W1@3]" + f2, "f2-retrodiction@W1", mode),
      premise("K[W2@4]" + w1, "w1-retrodiction@W2", mode),
      premise("K[W1@3]K[F2@2]" + f1, "f1-prediction@W1,F2", mode),
      premise("K[W2@4]K[W1@3]K[F2@2]" + f1, "f1-prediction@W2,W1,F2", mode),
      premise("K[W2@4]K[W1@3]" + f2, "f2-retrodiction@W2,W1", mode),
  };
  return set;
}

Formula bridge_formula() {
  return logic::parse_formula("K[W2@4]K[W1@3](K[W1@3](PchiL1!=0) -> K[W2@4](PchiL2=0))");
}

Formula agent_prediction(Agent a) {
  switch (a) {
    case Agent::F1: return logic::parse_formula("K[F1@<3]K[W2@4](PchiL2=0)");
    case Agent::F2: return logic::parse_formula("K[F2@2]K[W2@4](PchiL2=0)");
    case Agent::W1: return logic::parse_formula("K[W1@3]K[W2@4](PchiL2=0)");
    case Agent::W2: break;
  }
  throw std::invalid_argument("W2 has no prediction lemma");
}

std::vector<Premise> run_facts(TrustMode mode) {
  return {
      premise("K[W1@2,3](PchiL1!=0)", "run:w1-outcome", mode),
      premise("K[W2@3,4](PchiL2!=0)", "run:w2-outcome", mode),
      premise("K[W2@3,4](K[W1@2,3](PchiL1!=0) & K[W2@3,4](PchiL2!=0))", "run:w1-announcement", mode),
  };
}

std::vector<Premise> agent_facts(Agent a, TrustMode mode) {
  std::string own;
  switch (a) {
    case Agent::F1: own = "K[F1@<5](S1=psi)"; break;
    case Agent::F2: own = "K[F2@1,2,3,4](S2=psi)"; break;
    case Agent::W1: own = "K[W1@2,3](PchiL1!=0)"; break;
    case Agent::W2: throw std::invalid_argument("W2 uses run_facts");
  }
  const std::string name(to_string(a));
  return {
      premise(own, "run:own-outcome", mode),
      premise("K[" + name + "@4]K[W2@3,4](PchiL2!=0)", "run:w2-announcement", mode),
  };
}

ContradictionCertificate reproduce_contradiction(int depth) {
  return certify(encode_premises(TrustMode::naive), {}, bridge_formula(), run_facts(TrustMode::naive), Agent::W2,
                 depth);
}

std::vector<ContradictionCertificate> reproduce_agent_variants(int depth) {
  const auto set = encode_premises(TrustMode::naive);
  std::vector<ContradictionCertificate> out;
  for (Agent a : {Agent::F1, Agent::F2, Agent::W1}) {
    const auto facts = agent_facts(a, TrustMode::naive);
    out.push_back(certify(set, {facts[0]}, agent_prediction(a), {facts[1]}, a, depth));
  }
  return out;
}

ContradictionCertificate direct_contradiction(Agent a, int depth) {
  const auto set = encode_premises(TrustMode::naive);
  const auto all = with_facts(set, facts_for(a));
  const auto ctx = set.rule_context();
  auto res = run(all, ctx, logic::Goal::any_contradiction(a), TrustMode::naive, depth);
  if (res.status != DeriveStatus::derived) {
    throw DerivationError(std::string("no contradiction for ") + std::string(to_string(a)) + ": " +
                              logic::to_string(res.status),
                          res.status);
  }
  auto cert = finish(std::move(res.trace), all, ctx, a);
  cert.rounds = res.rounds;
  cert.closure_size = res.closure.size();
  return cert;
}

BlockCertificate certify_block(int depth) {
  const auto set = encode_premises(TrustMode::contextual);
  const auto all = with_facts(set, run_facts(TrustMode::contextual));
  auto res = logic::derive(all, set.rule_context(), logic::Goal::any_contradiction(),
                           options(TrustMode::contextual, depth));
  BlockCertificate cert;
  cert.depth = depth;
  cert.rounds = res.rounds;
  cert.fixpoint = res.fixpoint;
  cert.contradiction_found = res.status == DeriveStatus::derived;
  const Formula bridge = bridge_formula();
  for (const auto& f : res.closure) {
    if (logic::subsumes(logic::erase_contexts(f), bridge)) cert.bridge_found = true;
  }
  cert.closure = std::move(res.closure);
  spdlog::info("contextual closure: {} formulas in {} rounds, fixpoint {}", cert.closure.size(), cert.rounds,
               cert.fixpoint);
  if (res.status == DeriveStatus::aborted) throw DerivationError("contextual search aborted", DeriveStatus::aborted);
  if (cert.contradiction_found) throw DerivationError("contextual premises derive a contradiction", DeriveStatus::derived);
  if (cert.bridge_found) throw DerivationError("contextual premises derive the bridge formula");
  return cert;
}

NaiveClosure naive_closure(int depth) {
  const auto set = encode_premises(TrustMode::naive);
  const auto all = with_facts(set, run_facts(TrustMode::naive));
  auto res = logic::derive(all, set.rule_context(), logic::Goal::none(), options(TrustMode::naive, depth));
  if (res.status == DeriveStatus::aborted) throw DerivationError("naive search aborted", DeriveStatus::aborted);
  return {std::move(res.closure), res.rounds, res.fixpoint};
}

std::vector<Formula> monotonicity_violations(const std::vector<Formula>& contextual,
                                             const std::vector<Formula>& naive) {
  std::unordered_set<std::string> known;
  for (const auto& f : naive) known.insert(f.text());
  std::vector<Formula> out;
  for (const auto& f : contextual) {
    Formula e = logic::erase_contexts(f);
    if (!known.count(e.text())) out.push_back(e);
  }
  return out;
}

std::vector<IdentityCheck> quantum_identities() {
  std::vector<IdentityCheck> out;
  auto add = [&](std::string name, const FieldElement& expected, const FieldElement& actual) {
    out.push_back({std::move(name), expected.to_pretty(), actual.to_pretty(), expected == actual});
  };
  auto add_bool = [&](std::string name, bool ok) {
    out.push_back({std::move(name), "true", ok ? "true" : "false", ok});
  };
  const auto global = protocol::build_global_state();
  add_bool("global state normalized", global.is_normalized());
  add_bool("factorized state equals global state", protocol::global_state_factorized() == global);
  for (Lab lab : {Lab::L1, Lab::L2}) {
    const auto basis = protocol::w_basis(lab);
    bool ortho = true;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        ortho = ortho && quantum::inner(basis[i], basis[j]) == FieldElement(i == j ? 1 : 0);
      }
    }
    add_bool(std::string("W basis orthonormal on ") + (lab == Lab::L1 ? "L1" : "L2"), ortho);
  }
  const auto both = quantum::tensor(protocol::p_chi(Lab::L1), protocol::p_chi(Lab::L2));
  add("P(both nonnull)", FieldElement::frac(1, 12), quantum::born_probability(both, global));
  add("P(W1 nonnull)", FieldElement::frac(1, 6), quantum::born_probability(protocol::p_chi(Lab::L1), global));
  add("P(W2 nonnull)", FieldElement::frac(1, 6), quantum::born_probability(protocol::p_chi(Lab::L2), global));

  const auto branch = quantum::project(protocol::record_projector(Lab::L1, SValue::psi), global);
  const auto normalized = FieldElement::frac(1, 2) * FieldElement::sqrt6() * branch;
  add("P(W2 nonnull | F1=psi)", FieldElement(0),
      normalized.is_normalized() ? quantum::born_probability(protocol::p_chi(Lab::L2), normalized)
                                 : FieldElement(-1));

  const auto w1_branch = quantum::project(protocol::p_chi(Lab::L1), global);
  bool on_psi_zeta = !w1_branch.is_zero();
  for (const auto& [key, amp] : w1_branch.terms()) {
    on_psi_zeta = on_psi_zeta && key[2] == quantum::Symbol::psi && key[3] == quantum::Symbol::zeta;
  }
  add_bool("W1 nonnull branch supported on S2=psi, F2=zeta", on_psi_zeta);
  add("norm^2 of W1 nonnull branch", FieldElement::frac(1, 6), w1_branch.norm2());
  const auto w1_f2 = quantum::tensor(protocol::p_chi(Lab::L1), protocol::record_projector(Lab::L2, SValue::psi));
  add("P(F2=psi | W1 nonnull)", FieldElement(1),
      quantum::born_probability(w1_f2, global) / quantum::born_probability(protocol::p_chi(Lab::L1), global));

  FieldElement total;
  for (const auto& s : protocol::enumerate_scenarios()) total += s.probability;
  add("scenario probabilities sum", FieldElement(1), total);

  bool noncommuting = false;
  for (const auto& e : quantum::product_basis(protocol::lab_roster(Lab::L1))) {
    for (const auto& w : protocol::w_basis(Lab::L1)) {
      noncommuting = noncommuting || !quantum::commute(quantum::Projector({e}), quantum::Projector({w}));
    }
  }
  add_bool("contexts C1 and C2 do not commute", noncommuting);
  return out;
}

}  // namespace frlogic::fr
