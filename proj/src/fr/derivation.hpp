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

#include "logic/engine.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frlogic::fr {

using logic::Formula;
using logic::Premise;
using logic::TrustMode;

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a derivation that must succeed fails, or one that must fail
// succeeds.
// status() holds the search outcome when a search caused the failure.
class DerivationError : public std::runtime_error {
 public:
  explicit DerivationError(const std::string& what, std::optional<logic::DeriveStatus> status = std::nullopt)
      : std::runtime_error(what), status_(status) {}
  std::optional<logic::DeriveStatus> status() const { return status_; }

 private:
  std::optional<logic::DeriveStatus> status_;
};

// Protocol premises: the three lab facts (F1's prediction, F2's and W1's
// retrodictions), the nested copies other agents hold after announcements,
// plus the trust hierarchy
//   F1@4 > W2@3 > W1@2,3,4 > F2@2 > F1@0,1,2
// extended with F2@4 > W2@3 and W1@4 > W2@3 (W2's announcement reaches every
// agent). The contextual set tags F operators with C1 and W operators with C2.
struct PremiseSet {
  TrustMode mode;
  std::vector<Premise> formulas;
  logic::TrustRelation trust;

  std::vector<Formula> plain() const;
  logic::RuleContext rule_context() const;
};

// Builds the premise set after checking its physical content exactly:
// the F1=psi branch of lab 2 is orthogonal to chi, W1's non-null outcome
// leaves lab 2 in psi (x) zeta, and the run where both super-observers see a
// non-null outcome has nonzero probability. Throws VerificationError when a
// check fails.
PremiseSet encode_premises(TrustMode mode);

// Intermediate conclusion: W2 knows W1 knows that W1's non-null
// outcome implies W2's null outcome.
Formula bridge_formula();
// K_a K_W2@4 (PchiL2=0) for F1@<3, F2@2 and W1@3.
Formula agent_prediction(Agent a);

// Facts of the run where both super-observers get a non-null outcome:
// W1 and W2 see their outcomes and W2 hears W1's announcement.
std::vector<Premise> run_facts(TrustMode mode);
// Facts an agent F1, F2 or W1 has in that run: its own outcome plus W2's
// announcement.
std::vector<Premise> agent_facts(Agent a, TrustMode mode);

struct ContradictionCertificate {
  logic::DerivationTrace trace;
  logic::AgentInstance agent;
  int rounds = 0;
  std::size_t closure_size = 0;
};

// Runs in two stages. First bridge_formula() is derived from the naive
// protocol premises alone, as every agent can before the run starts. Then the
// contradiction for W2 is derived from the bridge formula plus run_facts.
// The spliced trace is checked against all premises. Throws DerivationError
// if either stage fails or the trace does not check.
ContradictionCertificate reproduce_contradiction(int depth = 24);

// Same two stages for F1, F2 and W1: agent_prediction(a) from the premises
// and the agent's own outcome, then the contradiction from the prediction and
// W2's announcement. Throws DerivationError on failure.
std::vector<ContradictionCertificate> reproduce_agent_variants(int depth = 24);

// Single unrestricted search from the naive premises and the agent's facts
// (run_facts for W2, agent_facts otherwise). It may take a shorter route that
// skips the intermediate formulas.
ContradictionCertificate direct_contradiction(Agent a, int depth = 24);

struct BlockCertificate {
  std::vector<Formula> closure;
  int depth = 0;
  int rounds = 0;
  bool fixpoint = false;
  bool contradiction_found = false;
  bool bridge_found = false;  // after erasing context tags, by subsumption
};

// Contextual premises plus run_facts, run to fixpoint with a contradiction
// goal. Throws DerivationError when a contradiction or the bridge formula is
// derived, or when the search aborts.
BlockCertificate certify_block(int depth);

struct NaiveClosure {
  std::vector<Formula> closure;
  int rounds = 0;
  bool fixpoint = false;
};

// Naive premises plus run_facts with no goal, run to fixpoint.
NaiveClosure naive_closure(int depth = 64);

// Formulas of `contextual` that, with tags erased, are missing from `naive`.
std::vector<Formula> monotonicity_violations(const std::vector<Formula>& contextual,
                                             const std::vector<Formula>& naive);

struct IdentityCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

// Exact quantum identities behind the premises.
std::vector<IdentityCheck> quantum_identities();

}  // namespace frlogic::fr
