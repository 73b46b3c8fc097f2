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

#include "logic/kripke.hpp"

#include <array>

namespace frlogic::logic {

bool evaluate(const KripkeModel& model, std::size_t state, const Formula& f) {
  if (state >= model.num_states || state >= model.interpretation.size()) {
    throw ModelError("state index out of range");
  }
  switch (f.kind()) {
    case NodeKind::atom: {
      const auto& pi = model.interpretation[state];
      auto it = pi.find(f.atom_value());
      if (it == pi.end()) throw ModelError("atom " + f.text() + " not interpreted");
      return it->second;
    }
    case NodeKind::negation:
      return !evaluate(model, state, f.child(0));
    case NodeKind::conjunction:
      return evaluate(model, state, f.child(0)) && evaluate(model, state, f.child(1));
    case NodeKind::implication:
      return !evaluate(model, state, f.child(0)) || evaluate(model, state, f.child(1));
    case NodeKind::knows: {
      auto it = model.access.find(f.instance());
      if (it == model.access.end()) {
        throw ModelError("no accessibility relation for " + f.instance().to_string());
      }
      for (const auto& [from, to] : it->second) {
        if (from == state && !evaluate(model, to, f.child(0))) return false;
      }
      return true;
    }
  }
  return false;
}

std::size_t ScenarioModel::index_of(const protocol::Scenario& s) const {
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    if (scenarios[i].same_outcomes(s)) return i;
  }
  throw ModelError("scenario not in model");
}

namespace {

// What agent a has observed by step t, as a tuple with -1 for unknown.
std::array<int, 4> view(const protocol::Scenario& s, Agent a, int t) {
  std::array<int, 4> v{-1, -1, -1, -1};
  const int own = measurement_step(a);
  if (t >= own) {
    switch (a) {
      case Agent::F1: v[0] = static_cast<int>(s.f1); break;
      case Agent::F2: v[1] = static_cast<int>(s.f2); break;
      case Agent::W1: v[2] = static_cast<int>(s.w1); break;
      case Agent::W2: v[3] = static_cast<int>(s.w2); break;
    }
  }
  if (t > measurement_step(Agent::W1)) v[2] = static_cast<int>(s.w1);
  if (t > measurement_step(Agent::W2)) v[3] = static_cast<int>(s.w2);
  return v;
}

}  // namespace

ScenarioModel scenario_model() {
  ScenarioModel out;
  out.scenarios = protocol::enumerate_scenarios();
  auto& m = out.model;
  m.num_states = out.scenarios.size();
  for (const auto& s : out.scenarios) {
    std::map<Atom, bool> pi;
    for (SValue v : {SValue::phi, SValue::psi}) {
      pi[Atom::s1(v)] = s.f1 == v;
      pi[Atom::s2(v)] = s.f2 == v;
    }
    pi[Atom::make(Pred::PchiL1_nonnull)] = s.w1 == WOutcome::nonnull;
    pi[Atom::make(Pred::PchiL1_null)] = s.w1 == WOutcome::null;
    pi[Atom::make(Pred::PchiL2_nonnull)] = s.w2 == WOutcome::nonnull;
    pi[Atom::make(Pred::PchiL2_null)] = s.w2 == WOutcome::null;
    m.interpretation.push_back(std::move(pi));
  }
  for (Agent a : kAgents) {
    for (unsigned bits = 1; bits < (1u << (kLastStep + 1)); ++bits) {
      const TimeSet ts = TimeSet::from_bits(static_cast<std::uint8_t>(bits));
      auto& rel = m.access[{a, ts}];
      for (std::size_t i = 0; i < m.num_states; ++i) {
        for (std::size_t j = 0; j < m.num_states; ++j) {
          for (int t = 0; t <= kLastStep; ++t) {
            if (ts.contains(t) && view(out.scenarios[i], a, t) == view(out.scenarios[j], a, t)) {
              rel.emplace_back(i, j);
              break;
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace frlogic::logic
