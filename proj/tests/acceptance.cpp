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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include "fr/derivation.hpp"
#include "protocol/protocol.hpp"
#include "support/dense_oracle.hpp"
#include "support/properties.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

namespace {

using namespace frlogic;
using protocol::Lab;
using logic::Formula;
using logic::TrustMode;
using quantum::FieldElement;

// Pinned limits.
constexpr double kExactLimitSeconds = 1.0;
constexpr double kNaiveLimitSeconds = 10.0;
constexpr double kBlockLimitSeconds = 60.0;
constexpr double kStatsLimitSeconds = 30.0;
constexpr double kOracleTolerance = 1e-12;
constexpr int kBlockDepthMargin = 4;
constexpr std::uint64_t kFrequencyTrials = 240000;
constexpr double kFrequencySigmas = 3.0;
constexpr int kHaltingRuns = 10000;
constexpr double kHaltingRelTolerance = 0.05;
constexpr std::uint64_t kHaltingCap = 1000000;
constexpr std::uint64_t kFrequencySeed = 20240611;
constexpr std::uint64_t kHaltingSeed = 7;
constexpr std::size_t kMaxTraceSteps = 40;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int n, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("criterion %2d %s: %s (%s; %.3f s)\n", n, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), s);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string printf_str(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

}  // namespace

int main() {
  spdlog::set_level(spdlog::level::warn);  // one line per criterion on stdout
  criterion(1, "exact joint probability of two non-null outcomes", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto p = quantum::born_probability(quantum::tensor(protocol::p_chi(Lab::L1), protocol::p_chi(Lab::L2)),
                                             protocol::build_global_state());
    const double t = seconds_since(t0);
    const bool oracle = std::abs(p.to_double() - oracle::w_joint(1, 1)) < kOracleTolerance;
    return Outcome{p == FieldElement::frac(1, 12) && oracle && t < kExactLimitSeconds,
                   "P = " + p.to_pretty() + (oracle ? ", dense oracle agrees" : ", dense oracle disagrees")};
  });

  criterion(2, "factorized state equals the global state", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto g = protocol::build_global_state();
    const bool eq = protocol::global_state_factorized() == g;
    const double t = seconds_since(t0);
    const auto dense = oracle::global_state();
    bool oracle = true;
    for (const auto& [key, amp] : g.terms()) {
      const int i = oracle::index(key[0] == quantum::Symbol::psi, key[1] == quantum::Symbol::zeta,
                                  key[2] == quantum::Symbol::psi, key[3] == quantum::Symbol::zeta);
      oracle = oracle && std::abs(amp.to_double() - dense[static_cast<std::size_t>(i)]) < kOracleTolerance;
    }
    return Outcome{eq && oracle && t < kExactLimitSeconds, eq ? "exact kets equal" : "kets differ"};
  });

  criterion(3, "F1=psi branch gives W2 non-null with probability 0", [] {
    const auto branch = quantum::project(protocol::record_projector(Lab::L1, SValue::psi),
                                         protocol::build_global_state());
    // The branch has weight 2/3, so sqrt6/2 normalizes it.
    const auto v = FieldElement::frac(1, 2) * FieldElement::sqrt6() * branch;
    if (!v.is_normalized()) return Outcome{false, "branch weight " + branch.norm2().to_pretty()};
    const auto p = quantum::born_probability(protocol::p_chi(Lab::L2), v);
    return Outcome{p.is_zero(), "P = " + p.to_pretty()};
  });

  criterion(4, "W1 non-null branch lies on S2=psi, F2=zeta", [] {
    const auto g = protocol::build_global_state();
    const auto v = quantum::project(protocol::p_chi(Lab::L1), g);
    bool support = !v.is_zero();
    for (const auto& [key, amp] : v.terms()) {
      support = support && key[2] == quantum::Symbol::psi && key[3] == quantum::Symbol::zeta;
    }
    FieldElement expanded;  // oracle: weight in the full W basis of both labs
    for (const auto& a : protocol::w_basis(Lab::L1)) {
      for (const auto& b : protocol::w_basis(Lab::L2)) {
        const auto x = quantum::inner(quantum::tensor(a, b), v);
        expanded += x * x;
      }
    }
    const auto cond = quantum::born_probability(quantum::tensor(protocol::p_chi(Lab::L1),
                                                                protocol::record_projector(Lab::L2, SValue::psi)),
                                                g) /
                      quantum::born_probability(protocol::p_chi(Lab::L1), g);
    const bool ok = support && v.norm2() == FieldElement::frac(1, 6) && expanded == FieldElement::frac(1, 6) &&
                    cond == FieldElement(1);
    return Outcome{ok, "norm^2 = " + v.norm2().to_pretty() + ", W-basis weight = " + expanded.to_pretty() +
                           ", P(F2=psi | W1 nonnull) = " + cond.to_pretty()};
  });

  criterion(5, "naive derivation reaches the contradiction for W2", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto cert = fr::reproduce_contradiction();
    const double t = seconds_since(t0);
    const auto set = fr::encode_premises(TrustMode::naive);
    auto premises = set.plain();
    for (const auto& p : fr::run_facts(TrustMode::naive)) premises.push_back(p.formula);
    const auto check = logic::check_trace(cert.trace, premises, set.rule_context());
    const bool ok = check.ok && cert.trace.contains(fr::bridge_formula()) &&
                    cert.trace.steps.back().app.rule == logic::RuleId::condition_s &&
                    logic::contradiction_agent(cert.trace.last()) == Agent::W2 &&
                    cert.trace.steps.size() <= kMaxTraceSteps && t < kNaiveLimitSeconds;
    return Outcome{ok, std::to_string(cert.trace.steps.size()) + " steps, checker " +
                           (check.ok ? "accepts" : "rejects: " + check.message)};
  });

  criterion(6, "per-agent variants pass through their predictions", [] {
    const auto certs = fr::reproduce_agent_variants();
    std::string detail;
    bool ok = certs.size() == 3;
    for (const auto& c : certs) {
      const bool through = c.trace.contains(fr::agent_prediction(c.agent.name));
      ok = ok && through && logic::is_contradiction(c.trace.last());
      detail += (detail.empty() ? "" : ", ") + c.agent.to_string() + (through ? " ok" : " skips prediction");
    }
    return Outcome{ok, detail};
  });

  fr::NaiveClosure naive;
  fr::BlockCertificate block;
  criterion(7, "contextual search is blocked at its fixpoint", [&] {
    naive = fr::naive_closure();
    const int depth = naive.rounds + kBlockDepthMargin;
    const auto t0 = std::chrono::steady_clock::now();
    block = fr::certify_block(depth);
    const double t = seconds_since(t0);
    const bool any = std::any_of(block.closure.begin(), block.closure.end(),
                                 [](const Formula& f) { return logic::is_contradiction(f); });
    const bool ok = block.fixpoint && !any && !block.contradiction_found && !block.bridge_found && t < kBlockLimitSeconds;
    return Outcome{ok, std::to_string(block.closure.size()) + " formulas at depth " + std::to_string(depth) +
                           ", fixpoint after " + std::to_string(block.rounds) + " rounds"};
  });

  criterion(8, "tag-erased contextual fixpoint lies inside the naive fixpoint", [&] {
    if (block.closure.empty() || naive.closure.empty()) return Outcome{false, "no closures from criterion 7"};
    const auto v = fr::monotonicity_violations(block.closure, naive.closure);
    return Outcome{v.empty() && naive.fixpoint, std::to_string(v.size()) + " formulas outside, naive fixpoint " +
                                                    std::to_string(naive.closure.size())};
  });

  criterion(9, "sampled statistics", [] {
    const auto t0 = std::chrono::steady_clock::now();
    protocol::Sampler sampler(kFrequencySeed);
    const auto halt = protocol::halting_scenario();
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < kFrequencyTrials; ++i) hits += sampler.draw().same_outcomes(halt);
    const double p = 1.0 / 12;
    const double n = static_cast<double>(kFrequencyTrials);
    const double freq = static_cast<double>(hits) / n;
    const double sigma = std::sqrt(p * (1 - p) / n);
    double total = 0;
    bool all_halted = true;
    for (int r = 0; r < kHaltingRuns; ++r) {
      const auto recs = protocol::sample_until_halt(kHaltingSeed + static_cast<std::uint64_t>(r), kHaltingCap);
      all_halted = all_halted && recs.back().halted;
      total += static_cast<double>(recs.size());
    }
    const double mean = total / kHaltingRuns;
    const double t = seconds_since(t0);
    const bool ok = std::abs(freq - p) <= kFrequencySigmas * sigma && all_halted &&
                    std::abs(mean - 12.0) <= kHaltingRelTolerance * 12.0 && t < kStatsLimitSeconds;
    return Outcome{ok, "frequency " + printf_str("%.5f", freq) + " over " + std::to_string(kFrequencyTrials) +
                           " trials (" + printf_str("%.2f", std::abs(freq - p) / sigma) + " sigma), mean halting index " +
                           printf_str("%.3f", mean) + " over " + std::to_string(kHaltingRuns) + " runs"};
  });

  criterion(10, "property suites", [] {
    bool ok = true;
    std::string detail;
    for (const auto& r : props::all_suites()) {
      ok = ok && r.failures == 0 && r.cases >= props::kCases;
      detail += (detail.empty() ? "" : ", ") + r.name + " " + std::to_string(r.cases - r.failures) + "/" +
                std::to_string(r.cases);
      if (r.failures) detail += " [" + r.first_failure + "]";
    }
    return Outcome{ok, detail};
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures;
}
