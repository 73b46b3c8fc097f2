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

#include "protocol/protocol.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace frlogic::protocol {

using quantum::BasisLabel;
using quantum::Rational;
using quantum::Subsystem;
using quantum::Symbol;

namespace {

Subsystem system_of(Lab lab) { return lab == Lab::L1 ? Subsystem::S1 : Subsystem::S2; }
Subsystem memory_of(Lab lab) { return lab == Lab::L1 ? Subsystem::F1 : Subsystem::F2; }

Ket lab_ket(Lab lab, Symbol s, Symbol f) {
  return Ket::basis({BasisLabel::make(system_of(lab), s), BasisLabel::make(memory_of(lab), f)});
}

FieldElement inv_sqrt2() { return FieldElement::frac(1, 2) * FieldElement::sqrt2(); }
FieldElement inv_sqrt3() { return FieldElement::frac(1, 3) * FieldElement::sqrt3(); }

}  // namespace

const std::vector<ProtocolStep>& protocol_steps() {
  static const std::vector<ProtocolStep> steps{
      {0, Agent::F1, Action::prepare_measure_send},
      {1, Agent::F2, Action::measure_record},
      {2, Agent::W1, Action::measure_announce},
      {3, Agent::W2, Action::measure_announce},
      {4, std::nullopt, Action::halt_check},
  };
  return steps;
}

const char* to_string(Action a) {
  switch (a) {
    case Action::prepare_measure_send: return "prepare_measure_send";
    case Action::measure_record: return "measure_record";
    case Action::measure_announce: return "measure_announce";
    case Action::halt_check: return "halt_check";
  }
  return "?";
}

quantum::Roster lab_roster(Lab lab) { return {system_of(lab), memory_of(lab)}; }

Ket record_measurement(const Ket& state, Subsystem system, Subsystem memory) {
  const auto& roster = state.roster();
  auto it = std::find(roster.begin(), roster.end(), system);
  if (it == roster.end()) throw quantum::RosterError("measured system not in roster");
  const auto pos = static_cast<std::size_t>(it - roster.begin());
  quantum::Roster out_roster = roster;
  out_roster.push_back(memory);
  Ket out(out_roster);
  for (const auto& [key, amp] : state.terms()) {
    auto k = key;
    k.push_back(key[pos] == Symbol::phi ? Symbol::xi : Symbol::zeta);
    out.add(k, amp);
  }
  return out;
}

Ket build_global_state() {
  // Step 0: prepare S1, F1 records it, then S2 is prepared conditioned on
  // F1's record: phi if xi, (phi + psi)/sqrt2 if zeta.
  Ket s1 = inv_sqrt3() * Ket::single(Subsystem::S1, Symbol::phi) +
           FieldElement::frac(1, 3) * FieldElement::sqrt6() * Ket::single(Subsystem::S1, Symbol::psi);
  Ket lab1 = record_measurement(s1, Subsystem::S1, Subsystem::F1);
  const Ket s2_if_phi = Ket::single(Subsystem::S2, Symbol::phi);
  const Ket s2_if_psi = inv_sqrt2() * (Ket::single(Subsystem::S2, Symbol::phi) +
                                       Ket::single(Subsystem::S2, Symbol::psi));
  Ket with_s2({Subsystem::S1, Subsystem::F1, Subsystem::S2});
  for (const auto& [key, amp] : lab1.terms()) {
    Ket branch(lab1.roster());
    branch.add(key, amp);
    with_s2 += tensor(branch, key[1] == Symbol::xi ? s2_if_phi : s2_if_psi);
  }
  // Step 1: F2 records S2.
  return record_measurement(with_s2, Subsystem::S2, Subsystem::F2);
}

Ket global_state_factorized() {
  const Ket a1 = lab_ket(Lab::L1, Symbol::phi, Symbol::xi);
  const Ket b1 = lab_ket(Lab::L1, Symbol::psi, Symbol::zeta);
  const Ket a2 = lab_ket(Lab::L2, Symbol::phi, Symbol::xi);
  const Ket b2 = lab_ket(Lab::L2, Symbol::psi, Symbol::zeta);
  const FieldElement third = inv_sqrt3();                                       // 1/sqrt3
  const FieldElement quarter = FieldElement::frac(1, 12) * FieldElement::sqrt3();  // 1/(4 sqrt3)
  const FieldElement half = FieldElement::frac(1, 6) * FieldElement::sqrt3();      // 1/(2 sqrt3)
  Ket line1 = third * tensor(a1 + b1, a2 + FieldElement::frac(1, 2) * b2);
  Ket line2 = quarter * tensor(a1 - b1, a2 + b2);
  Ket line3 = half * tensor(inv_sqrt2() * (a1 - b1), inv_sqrt2() * (a2 - b2));
  return line1 - line2 + line3;
}

std::vector<Ket> w_basis(Lab lab) {
  const Ket px = lab_ket(lab, Symbol::phi, Symbol::xi);
  const Ket pz = lab_ket(lab, Symbol::psi, Symbol::zeta);
  const Ket sx = lab_ket(lab, Symbol::psi, Symbol::xi);
  const Ket fz = lab_ket(lab, Symbol::phi, Symbol::zeta);
  const FieldElement h = inv_sqrt2();
  return {h * (px + pz), h * (px - pz), h * (sx + fz), h * (sx - fz)};
}

Ket chi(Lab lab) { return w_basis(lab)[1]; }

Projector p_chi(Lab lab) { return Projector({chi(lab)}); }

Projector p_chi_complement(Lab lab) {
  auto b = w_basis(lab);
  return Projector({b[0], b[2], b[3]});
}

Projector w_outcome_projector(Lab lab, WOutcome w) {
  return w == WOutcome::nonnull ? p_chi(lab) : p_chi_complement(lab);
}

Projector record_projector(Lab lab, SValue v) {
  return Projector({Ket::single(memory_of(lab), v == SValue::phi ? Symbol::xi : Symbol::zeta)});
}

std::vector<OutcomeCell> outcome_distribution() {
  const Ket global = build_global_state();
  std::vector<OutcomeCell> cells;
  for (WOutcome w1 : {WOutcome::nonnull, WOutcome::null}) {
    for (WOutcome w2 : {WOutcome::nonnull, WOutcome::null}) {
      auto joint = quantum::tensor(w_outcome_projector(Lab::L1, w1), w_outcome_projector(Lab::L2, w2));
      cells.push_back({w1, w2, quantum::born_probability(joint, global)});
    }
  }
  return cells;
}

std::vector<Scenario> enumerate_scenarios() {
  const Ket global = build_global_state();
  std::vector<Scenario> out;
  for (const auto& cell : outcome_distribution()) {
    if (cell.probability.is_zero()) continue;
    const auto w1_proj = w_outcome_projector(Lab::L1, cell.w1);
    const FieldElement p_w1 = quantum::born_probability(w1_proj, global);
    for (SValue f2 : {SValue::phi, SValue::psi}) {
      const FieldElement p_w1_f2 =
          quantum::born_probability(quantum::tensor(w1_proj, record_projector(Lab::L2, f2)), global);
      if (p_w1_f2.is_zero()) continue;
      const FieldElement p_f2 = quantum::born_probability(record_projector(Lab::L2, f2), global);
      for (SValue f1 : {SValue::phi, SValue::psi}) {
        const FieldElement p_f1_f2 = quantum::born_probability(
            quantum::tensor(record_projector(Lab::L1, f1), record_projector(Lab::L2, f2)), global);
        if (p_f1_f2.is_zero()) continue;
        FieldElement p = cell.probability * (p_w1_f2 / p_w1) * (p_f1_f2 / p_f2);
        out.push_back({f1, f2, cell.w1, cell.w2, std::move(p)});
      }
    }
  }
  return out;
}

Scenario halting_scenario() {
  for (const auto& s : enumerate_scenarios()) {
    if (s.w1 == WOutcome::nonnull && s.w2 == WOutcome::nonnull) return s;
  }
  throw std::logic_error("no halting scenario");
}

namespace {

struct SamplerTable {
  std::vector<Scenario> scenarios;
  std::vector<std::uint64_t> thresholds;
};

// Built once: the exact scenario probabilities do not depend on the seed.
const SamplerTable& sampler_table() {
  static const SamplerTable table = [] {
    using boost::multiprecision::cpp_int;
    SamplerTable t{enumerate_scenarios(), {}};
    const cpp_int two64 = cpp_int(1) << 64;
    Rational cumulative = 0;
    for (std::size_t k = 0; k + 1 < t.scenarios.size(); ++k) {
      const auto& p = t.scenarios[k].probability;
      if (!p.is_rational()) throw std::domain_error("scenario probability is irrational");
      cumulative += p.a();
      const cpp_int scaled = boost::multiprecision::numerator(cumulative) * two64 /
                             boost::multiprecision::denominator(cumulative);
      t.thresholds.push_back(scaled.convert_to<std::uint64_t>());
    }
    return t;
  }();
  return table;
}

}  // namespace

Sampler::Sampler(std::uint64_t seed)
    : rng_(seed), scenarios_(sampler_table().scenarios), thresholds_(sampler_table().thresholds) {}

Scenario Sampler::draw() {
  const std::uint64_t u = rng_();
  for (std::size_t k = 0; k < thresholds_.size(); ++k) {
    if (u < thresholds_[k]) return scenarios_[k];
  }
  return scenarios_.back();
}

std::vector<TrialRecord> sample_until_halt(std::uint64_t seed, std::uint64_t max_trials) {
  if (max_trials < 1) throw std::invalid_argument("max_trials must be at least 1");
  Sampler sampler(seed);
  std::vector<TrialRecord> records;
  for (std::uint64_t n = 1; n <= max_trials; ++n) {
    Scenario s = sampler.draw();
    const bool halted = s.w1 == WOutcome::nonnull && s.w2 == WOutcome::nonnull;
    records.push_back({n, std::move(s), halted});
    if (halted) break;
  }
  return records;
}

std::string scenario_table(const std::vector<Scenario>& scenarios) {
  std::ostringstream os;
  os << std::left << std::setw(5) << "F1" << std::setw(5) << "F2" << std::setw(9) << "W1"
     << std::setw(9) << "W2" << "probability\n";
  for (const auto& s : scenarios) {
    os << std::setw(5) << to_string(s.f1) << std::setw(5) << to_string(s.f2) << std::setw(9)
       << to_string(s.w1) << std::setw(9) << to_string(s.w2) << s.probability.to_pretty() << '\n';
  }
  return os.str();
}

std::string scenario_records(const std::vector<Scenario>& scenarios) {
  std::string out;
  for (const auto& s : scenarios) {
    nlohmann::ordered_json j;
    j["f1"] = to_string(s.f1);
    j["f2"] = to_string(s.f2);
    j["w1"] = to_string(s.w1);
    j["w2"] = to_string(s.w2);
    j["probability"] = s.probability.to_pretty();
    out += j.dump() + '\n';
  }
  return out;
}

}  // namespace frlogic::protocol
