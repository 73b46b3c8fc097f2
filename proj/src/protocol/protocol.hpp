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

#include "core/types.hpp"
#include "quantum/ket.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace frlogic::protocol {

using quantum::FieldElement;
using quantum::Ket;
using quantum::Projector;

enum class Lab { L1, L2 };

enum class Action { prepare_measure_send, measure_record, measure_announce, halt_check };

struct ProtocolStep {
  int index;
  std::optional<Agent> actor;  // empty for the halt check
  Action action;
};

// The five steps of one round, in order.
const std::vector<ProtocolStep>& protocol_steps();
const char* to_string(Action a);

quantum::Roster lab_roster(Lab lab);

// Measurement of S by memory F as a recording isometry:
// phi -> phi (x) xi, psi -> psi (x) zeta. F is appended to the roster.
Ket record_measurement(const Ket& state, quantum::Subsystem system, quantum::Subsystem memory);

// State of S1 F1 S2 F2 after steps 0 and 1, built by running the
// preparation and both recording isometries:
//   (phi xi phi xi + psi zeta phi xi + psi zeta psi zeta) / sqrt3.
Ket build_global_state();

// The same state rebuilt from the three-term decomposition in the
// super-observers' basis.
Ket global_state_factorized();

// (phi xi + psi zeta)/sqrt2, chi = (phi xi - psi zeta)/sqrt2,
// (psi xi + phi zeta)/sqrt2, (psi xi - phi zeta)/sqrt2 on the lab roster.
std::vector<Ket> w_basis(Lab lab);
Ket chi(Lab lab);
Projector p_chi(Lab lab);
// 1 - P_chi on the lab, spanned by the other three W-basis vectors.
Projector p_chi_complement(Lab lab);
Projector w_outcome_projector(Lab lab, WOutcome w);

// Projector onto the memory record of F1 (lab L1) or F2 (lab L2) showing
// the given S-outcome (phi <-> xi, psi <-> zeta).
Projector record_projector(Lab lab, SValue v);

struct OutcomeCell {
  WOutcome w1;
  WOutcome w2;
  FieldElement probability;
};

// Joint distribution of the two super-observer outcomes on the global
// state, in the order (nn,nn), (nn,null), (null,nn), (null,null).
std::vector<OutcomeCell> outcome_distribution();

struct Scenario {
  SValue f1;
  SValue f2;
  WOutcome w1;
  WOutcome w2;
  FieldElement probability;

  bool same_outcomes(const Scenario& o) const {
    return f1 == o.f1 && f2 == o.f2 && w1 == o.w1 && w2 == o.w2;
  }
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Reachable outcome assignments with exact probabilities. The W-outcome
// marginal is outcome_distribution(); the F-outcomes are attached by
// retrodiction from W1's result: F2's record conditioned on W1's outcome
// (the two act on different labs and commute), then F1's record
// conditioned on F2's.
std::vector<Scenario> enumerate_scenarios();

// The scenario where both super-observers obtain a non-null outcome.
Scenario halting_scenario();

struct TrialRecord {
  std::uint64_t trial_index;
  Scenario scenario;
  bool halted;
  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

// Draws scenarios i.i.d. from enumerate_scenarios() using exact 64-bit
// thresholds floor(cumulative * 2^64) against a uniform 64-bit draw.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed);

  Scenario draw();
  const std::vector<Scenario>& scenarios() const { return scenarios_; }

 private:
  std::mt19937_64 rng_;
  std::vector<Scenario> scenarios_;
  // thresholds_[k] = floor(P(index <= k) * 2^64); the last bucket takes the
  // remainder so the top value 2^64 never needs to be represented.
  std::vector<std::uint64_t> thresholds_;
};

// Repeats rounds until one halts (both W outcomes non-null) or max_trials
// rounds have been run. Throws std::invalid_argument when max_trials < 1.
std::vector<TrialRecord> sample_until_halt(std::uint64_t seed, std::uint64_t max_trials);

std::string scenario_table(const std::vector<Scenario>& scenarios);
// One JSON object per line with fields f1, f2, w1, w2, probability.
std::string scenario_records(const std::vector<Scenario>& scenarios);

}  // namespace frlogic::protocol
