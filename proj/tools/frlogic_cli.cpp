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

// frlogic-cli: simulate, derive, check and report on top of the C API.
//
// Exit codes: 0 success, 1 a check or derivation failed, 2 usage error.

#include <frlogic/frlogic.h>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Owns a string returned by the library.
struct LibString {
  char* p = nullptr;
  ~LibString() { frl_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int report_error(frl_status s) {
  std::cerr << "error: " << frl_last_error() << '\n';
  return s == FRL_ERR_ARG || s == FRL_ERR_PARSE ? kUsage : kFailure;
}

frl_format parse_format(const std::string& f) { return f == "json" ? FRL_FORMAT_JSON : FRL_FORMAT_TEXT; }

struct SimOptions {
  std::uint64_t seed = 1;
  std::uint64_t max_trials = 1000000;
  std::uint64_t runs = 1;
  unsigned jobs = 1;
  bool summary_only = false;
  bool table = false;
  std::string format = "text";
};

struct RunResult {
  std::string records;
  std::uint64_t trials = 0;
  bool halted = false;
  frl_status status = FRL_OK;
  std::string error;
};

RunResult simulate_one(std::uint64_t seed, const SimOptions& opt, frl_format fmt) {
  RunResult r;
  frl_sim* sim = nullptr;
  if ((r.status = frl_sim_create(seed, &sim)) != FRL_OK) {
    r.error = frl_last_error();
    return r;
  }
  frl_trial t{};
  while (r.trials < opt.max_trials && !r.halted) {
    if ((r.status = frl_sim_step(sim, &t)) != FRL_OK) break;
    ++r.trials;
    r.halted = t.halted != 0;
    if (opt.summary_only) continue;
    LibString line;
    if ((r.status = frl_trial_format(&t, fmt, &line.p)) != FRL_OK) break;
    std::string rec = line.str();
    if (fmt == FRL_FORMAT_JSON) {
      rec.insert(1, "\"seed\":" + std::to_string(seed) + ",");
    } else {
      rec = "seed " + std::to_string(seed) + " " + rec;
    }
    r.records += rec + '\n';
  }
  if (r.status != FRL_OK) r.error = frl_last_error();
  frl_sim_free(sim);
  return r;
}

int run_simulate(const SimOptions& opt) {
  const frl_format fmt = parse_format(opt.format);
  if (opt.table) {
    LibString table;
    if (auto s = frl_scenario_table(fmt, &table.p); s != FRL_OK) return report_error(s);
    std::cout << table.str();
  }
  std::vector<RunResult> results(opt.runs);
  const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(opt.runs)));
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      for (std::uint64_t r = j; r < opt.runs; r += jobs) results[r] = simulate_one(opt.seed + r, opt, fmt);
    });
  }
  for (auto& th : pool) th.join();

  std::uint64_t halted = 0, total = 0, halting_sum = 0;
  for (const auto& r : results) {
    if (r.status != FRL_OK) {
      std::cerr << "error: " << r.error << '\n';
      return kFailure;
    }
    std::cout << r.records;
    total += r.trials;
    if (r.halted) {
      ++halted;
      halting_sum += r.trials;
    }
  }
  const double freq = total ? static_cast<double>(halted) / static_cast<double>(total) : 0.0;
  // No halted run: the mean is undefined.
  char mean[32] = "n/a";
  if (halted) {
    std::snprintf(mean, sizeof mean, "%.6f", static_cast<double>(halting_sum) / static_cast<double>(halted));
  }
  char buf[320];
  if (fmt == FRL_FORMAT_JSON) {
    std::snprintf(buf, sizeof buf,
                  "{\"summary\":true,\"runs\":%llu,\"halted\":%llu,\"trials\":%llu,"
                  "\"mean_halting_index\":%s,\"both_nonnull_frequency\":%.6f}\n",
                  static_cast<unsigned long long>(opt.runs), static_cast<unsigned long long>(halted),
                  static_cast<unsigned long long>(total), halted ? mean : "null", freq);
  } else {
    std::snprintf(buf, sizeof buf,
                  "runs: %llu\nhalted: %llu\ntrials: %llu\nmean halting index: %s (expected 12)\n"
                  "(nonnull,nonnull) frequency: %.6f (expected 1/12 = 0.083333)\n",
                  static_cast<unsigned long long>(opt.runs), static_cast<unsigned long long>(halted),
                  static_cast<unsigned long long>(total), mean, freq);
  }
  std::cout << buf;
  return 0;
}

struct DeriveOpts {
  std::string mode = "naive";
  std::string agent = "W2";
  int depth = 0;
  bool direct = false;
  std::string format = "text";
};

int run_derive(const DeriveOpts& opt) {
  const frl_format fmt = parse_format(opt.format);
  if (opt.mode == "contextual") {
    frl_block_info info{};
    if (auto s = frl_certify_block(opt.depth, &info); s != FRL_OK) return report_error(s);
    LibString text;
    if (auto s = frl_block_format(&info, fmt, &text.p); s != FRL_OK) return report_error(s);
    std::cout << text.str();
    return 0;
  }
  frl_trace* trace = nullptr;
  if (auto s = frl_derive_contradiction(opt.agent.c_str(), opt.depth, opt.direct ? 1 : 0, &trace); s != FRL_OK) {
    return report_error(s);
  }
  LibString text;
  auto s = frl_trace_format(trace, fmt, &text.p);
  const std::size_t steps = frl_trace_length(trace);
  frl_trace_free(trace);
  if (s != FRL_OK) return report_error(s);
  if (fmt == FRL_FORMAT_TEXT) {
    std::cout << "CONTRADICTION for " << opt.agent << " (" << steps << " steps)\n";
  }
  std::cout << text.str();
  return 0;
}

struct CheckOpts {
  std::string trace_file;
  std::string mode = "naive";
  std::string format = "text";
};

int run_check(const CheckOpts& opt) {
  if (!opt.trace_file.empty()) {
    std::ifstream in(opt.trace_file);
    if (!in) {
      std::cerr << "error: cannot read " << opt.trace_file << '\n';
      return kUsage;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    frl_trace* trace = nullptr;
    if (auto s = frl_trace_parse_jsonl(ss.str().c_str(), &trace); s != FRL_OK) return report_error(s);
    std::size_t failed = 0;
    auto s = frl_trace_check(trace, opt.mode == "contextual" ? FRL_MODE_CONTEXTUAL : FRL_MODE_NAIVE, &failed);
    const std::size_t steps = frl_trace_length(trace);
    frl_trace_free(trace);
    if (s == FRL_CHECK_FAILED) {
      std::cout << "trace INVALID: " << frl_last_error() << '\n';
      return kFailure;
    }
    if (s != FRL_OK) return report_error(s);
    std::cout << "trace valid (" << steps << " steps)\n";
    return 0;
  }
  LibString text;
  int all_pass = 0;
  if (auto s = frl_run_checks(parse_format(opt.format), &text.p, &all_pass); s != FRL_OK) return report_error(s);
  std::cout << text.str();
  return all_pass ? 0 : kFailure;
}

int run_report(const std::string& format) {
  LibString text;
  if (auto s = frl_report(parse_format(format), &text.p); s != FRL_OK) return report_error(s);
  std::cout << text.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* lvl = std::getenv("FRLOGIC_LOG")) {
    if (frl_set_log_level(lvl) != FRL_OK) {
      std::cerr << "error: FRLOGIC_LOG: " << frl_last_error() << '\n';
      return kUsage;
    }
  }

  CLI::App app{"Wigner's-friend protocol simulator and epistemic derivation engine"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "json"});

  SimOptions sim;
  auto* simulate = app.add_subcommand("simulate", "sample rounds until both super-observers see a non-null outcome");
  simulate->add_option("--seed", sim.seed, "seed of the first run (run r uses seed + r)");
  simulate->add_option("--max-trials", sim.max_trials, "trial cap per run")->check(CLI::PositiveNumber);
  simulate->add_option("--runs", sim.runs, "independent runs")->check(CLI::PositiveNumber);
  simulate->add_option("--jobs", sim.jobs, "worker threads")->check(CLI::PositiveNumber);
  simulate->add_flag("--summary-only", sim.summary_only, "omit per-trial records");
  simulate->add_flag("--table", sim.table, "print the scenario table first");
  simulate->add_option("--format", sim.format)->check(formats);

  DeriveOpts der;
  auto* derive = app.add_subcommand("derive", "naive contradiction trace or contextual block certificate");
  derive->add_option("--mode", der.mode)->check(CLI::IsMember({"naive", "contextual"}));
  derive->add_option("--agent", der.agent, "agent reaching the contradiction (naive mode)")
      ->check(CLI::IsMember({"W2", "F1", "F2", "W1"}));
  derive->add_option("--depth", der.depth, "round bound, default chosen per mode")->check(CLI::NonNegativeNumber);
  derive->add_flag("--direct", der.direct, "single unrestricted search instead of the staged one");
  derive->add_option("--format", der.format)->check(formats);

  CheckOpts chk;
  auto* check = app.add_subcommand("check", "exact identities and certificates, PASS/FAIL per line");
  check->add_option("--trace", chk.trace_file, "validate a JSONL trace instead")->check(CLI::ExistingFile);
  check->add_option("--mode", chk.mode, "premise set for --trace")->check(CLI::IsMember({"naive", "contextual"}));
  check->add_option("--format", chk.format)->check(formats);

  std::string report_format = "text";
  auto* report = app.add_subcommand("report", "one-page verdict report");
  report->add_option("--format", report_format)->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (*simulate) return run_simulate(sim);
  if (*derive) return run_derive(der);
  if (*check) return run_check(chk);
  if (*report) return run_report(report_format);
  return kUsage;
}
