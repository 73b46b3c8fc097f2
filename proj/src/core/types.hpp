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

#include <array>
#include <optional>
#include <string_view>

namespace frlogic {

enum class Agent { F1, F2, W1, W2 };
inline constexpr std::array<Agent, 4> kAgents{Agent::F1, Agent::F2, Agent::W1, Agent::W2};

// Outcome of an S-system measurement in the {phi, psi} basis.
enum class SValue { phi, psi };
// Outcome of a super-observer's P_chi measurement.
enum class WOutcome { nonnull, null };

constexpr std::string_view to_string(Agent a) {
  switch (a) {
    case Agent::F1: return "F1";
    case Agent::F2: return "F2";
    case Agent::W1: return "W1";
    case Agent::W2: return "W2";
  }
  return "?";
}

constexpr std::string_view to_string(SValue v) { return v == SValue::phi ? "phi" : "psi"; }
constexpr std::string_view to_string(WOutcome w) { return w == WOutcome::nonnull ? "nonnull" : "null"; }

constexpr std::optional<Agent> agent_from_string(std::string_view s) {
  for (Agent a : kAgents) {
    if (to_string(a) == s) return a;
  }
  return std::nullopt;
}

// Step of the canonical timeline at which each agent performs its
// measurement: F1 at 0, F2 at 1, W1 at 2, W2 at 3. Step 4 is the halt check.
constexpr int measurement_step(Agent a) {
  switch (a) {
    case Agent::F1: return 0;
    case Agent::F2: return 1;
    case Agent::W1: return 2;
    case Agent::W2: return 3;
  }
  return 0;
}

inline constexpr int kLastStep = 4;

}  // namespace frlogic
