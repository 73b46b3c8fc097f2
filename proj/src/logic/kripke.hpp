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
#include "protocol/protocol.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace frlogic::logic {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite Kripke structure. States are indices 0..num_states-1. Context tags
// on knowledge operators carry no semantic weight here.
struct KripkeModel {
  std::size_t num_states = 0;
  // interpretation[s] holds the truth value of every atom at state s.
  std::vector<std::map<Atom, bool>> interpretation;
  std::map<AgentInstance, std::vector<std::pair<std::size_t, std::size_t>>> access;
};

// Throws ModelError for an unknown state, a missing atom or a missing
// accessibility relation.
bool evaluate(const KripkeModel& model, std::size_t state, const Formula& f);

// States are the reachable protocol scenarios in enumerate_scenarios()
// order. S1 and S2 read the F1 and F2 records, the projector atoms read the
// super-observers' outcomes. R for a@t relates two scenarios when they agree
// on everything a has seen by step t: its own outcome from its measurement
// step on, W1's announced outcome after step 2 and W2's after step 3. A set
// of steps takes the union of the per-step relations. Relations are built for
// every agent and every nonempty subset of 0..4.
struct ScenarioModel {
  std::vector<protocol::Scenario> scenarios;
  KripkeModel model;

  std::size_t index_of(const protocol::Scenario& s) const;
};

ScenarioModel scenario_model();

}  // namespace frlogic::logic
