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

#include <frlogic/frlogic.h>

#include "fr/derivation.hpp"
#include "fr/report.hpp"
#include "protocol/protocol.hpp"

#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <optional>
#include <string>

struct frl_formula {
  frlogic::logic::Formula f;
};

struct frl_trace {
  frlogic::logic::DerivationTrace trace;
};

struct frl_sim {
  frlogic::protocol::Sampler sampler;
  std::uint64_t next_index = 1;
};

namespace {

using namespace frlogic;

thread_local std::string g_last_error;

void ensure_logger() {
  static std::once_flag once;
  std::call_once(once, [] {
    auto logger = spdlog::stderr_color_mt("frlogic");
    logger->set_level(spdlog::level::warn);
    spdlog::set_default_logger(logger);
  });
}

frl_status fail(frl_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

frl_status from_derivation(const fr::DerivationError& e) {
  auto s = e.status();
  if (s == logic::DeriveStatus::aborted) return fail(FRL_ERR_ABORTED, e.what());
  if (s == logic::DeriveStatus::not_derivable) return fail(FRL_NOT_DERIVABLE, e.what());
  return fail(FRL_CHECK_FAILED, e.what());
}

// Runs body with the logger set up and every exception mapped to a status.
template <class F>
frl_status guarded(F&& body) {
  try {
    ensure_logger();
    g_last_error.clear();
    return body();
  } catch (const logic::ParseError& e) {
    return fail(FRL_ERR_PARSE, e.what());
  } catch (const fr::DerivationError& e) {
    return from_derivation(e);
  } catch (const fr::VerificationError& e) {
    return fail(FRL_CHECK_FAILED, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(FRL_ERR_ARG, e.what());
  } catch (const std::exception& e) {
    return fail(FRL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FRL_ERR_INTERNAL, "unknown exception");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<fr::Format> format_of(frl_format fmt) {
  if (fmt == FRL_FORMAT_TEXT) return fr::Format::text;
  if (fmt == FRL_FORMAT_JSON) return fr::Format::json;
  return std::nullopt;
}

std::optional<logic::TrustMode> mode_of(frl_mode mode) {
  if (mode == FRL_MODE_NAIVE) return logic::TrustMode::naive;
  if (mode == FRL_MODE_CONTEXTUAL) return logic::TrustMode::contextual;
  return std::nullopt;
}

constexpr int kDefaultDepth = 24;

}  // namespace

extern "C" {

FRL_API const char* frl_version(void) { return "1.0.0"; }

FRL_API const char* frl_last_error(void) { return g_last_error.c_str(); }

FRL_API void frl_string_free(char* s) { std::free(s); }

FRL_API frl_status frl_set_log_level(const char* level) {
  return guarded([&] {
    if (!level) return fail(FRL_ERR_ARG, "null level");
    const std::string name(level);
    auto lvl = spdlog::level::from_str(name);
    if (lvl == spdlog::level::off && name != "off") return fail(FRL_ERR_ARG, "unknown log level " + name);
    spdlog::set_level(lvl);
    return FRL_OK;
  });
}

FRL_API frl_status frl_formula_parse(const char* text, frl_formula** out) {
  return guarded([&] {
    if (!text || !out) return fail(FRL_ERR_ARG, "null argument");
    *out = new frl_formula{logic::parse_formula(text)};
    return FRL_OK;
  });
}

FRL_API void frl_formula_free(frl_formula* f) { delete f; }

FRL_API frl_status frl_formula_text(const frl_formula* f, char** out) {
  return guarded([&] {
    if (!f || !out) return fail(FRL_ERR_ARG, "null argument");
    *out = dup(f->f.text());
    return FRL_OK;
  });
}

FRL_API frl_status frl_formula_size(const frl_formula* f, size_t* out) {
  return guarded([&] {
    if (!f || !out) return fail(FRL_ERR_ARG, "null argument");
    *out = f->f.size();
    return FRL_OK;
  });
}

FRL_API frl_status frl_formula_erase_contexts(const frl_formula* f, frl_formula** out) {
  return guarded([&] {
    if (!f || !out) return fail(FRL_ERR_ARG, "null argument");
    *out = new frl_formula{logic::erase_contexts(f->f)};
    return FRL_OK;
  });
}

FRL_API frl_status frl_derive_contradiction(const char* agent, int depth, int direct, frl_trace** out) {
  return guarded([&] {
    if (!agent || !out) return fail(FRL_ERR_ARG, "null argument");
    auto a = agent_from_string(agent);
    if (!a) return fail(FRL_ERR_ARG, std::string("unknown agent ") + agent);
    if (depth <= 0) depth = kDefaultDepth;
    fr::ContradictionCertificate cert;
    if (direct) {
      cert = fr::direct_contradiction(*a, depth);
    } else if (*a == Agent::W2) {
      cert = fr::reproduce_contradiction(depth);
    } else {
      for (auto& c : fr::reproduce_agent_variants(depth)) {
        if (c.agent.name == *a) cert = std::move(c);
      }
    }
    *out = new frl_trace{std::move(cert.trace)};
    return FRL_OK;
  });
}

FRL_API void frl_trace_free(frl_trace* t) { delete t; }

FRL_API size_t frl_trace_length(const frl_trace* t) { return t ? t->trace.steps.size() : 0; }

FRL_API frl_status frl_trace_format(const frl_trace* t, frl_format fmt, char** out) {
  return guarded([&] {
    if (!t || !out) return fail(FRL_ERR_ARG, "null argument");
    auto f = format_of(fmt);
    if (!f) return fail(FRL_ERR_ARG, "unknown format");
    *out = dup(*f == fr::Format::text ? logic::format_trace(t->trace) : logic::trace_to_jsonl(t->trace));
    return FRL_OK;
  });
}

FRL_API frl_status frl_trace_step(const frl_trace* t, size_t n, frl_formula** out) {
  return guarded([&] {
    if (!t || !out) return fail(FRL_ERR_ARG, "null argument");
    if (n < 1 || n > t->trace.steps.size()) return fail(FRL_ERR_ARG, "step out of range");
    *out = new frl_formula{t->trace.steps[n - 1].conclusion};
    return FRL_OK;
  });
}

FRL_API frl_status frl_trace_parse_jsonl(const char* text, frl_trace** out) {
  return guarded([&] {
    if (!text || !out) return fail(FRL_ERR_ARG, "null argument");
    try {
      *out = new frl_trace{logic::trace_from_jsonl(text)};
    } catch (const std::invalid_argument& e) {
      return fail(FRL_ERR_PARSE, e.what());
    }
    return FRL_OK;
  });
}

FRL_API frl_status frl_trace_check(const frl_trace* t, frl_mode mode, size_t* failed_step) {
  return guarded([&] {
    if (!t) return fail(FRL_ERR_ARG, "null argument");
    auto m = mode_of(mode);
    if (!m) return fail(FRL_ERR_ARG, "unknown mode");
    const auto set = fr::encode_premises(*m);
    auto premises = set.plain();
    for (const auto& p : fr::run_facts(*m)) premises.push_back(p.formula);
    for (Agent a : {Agent::F1, Agent::F2, Agent::W1}) {
      for (const auto& p : fr::agent_facts(a, *m)) premises.push_back(p.formula);
    }
    auto res = logic::check_trace(t->trace, premises, set.rule_context());
    if (failed_step) *failed_step = res.failed_step;
    if (!res.ok) return fail(FRL_CHECK_FAILED, "step " + std::to_string(res.failed_step) + ": " + res.message);
    return FRL_OK;
  });
}

FRL_API frl_status frl_block_depth(int* out) {
  return guarded([&] {
    if (!out) return fail(FRL_ERR_ARG, "null argument");
    *out = fr::block_depth();
    return FRL_OK;
  });
}

FRL_API frl_status frl_certify_block(int depth, frl_block_info* out) {
  return guarded([&] {
    if (!out) return fail(FRL_ERR_ARG, "null argument");
    if (depth <= 0) depth = fr::block_depth();
    auto cert = fr::certify_block(depth);
    *out = {cert.closure.size(), cert.depth, cert.rounds, cert.fixpoint ? 1 : 0};
    return FRL_OK;
  });
}

FRL_API frl_status frl_block_format(const frl_block_info* info, frl_format fmt, char** out) {
  return guarded([&] {
    if (!info || !out) return fail(FRL_ERR_ARG, "null argument");
    auto f = format_of(fmt);
    if (!f) return fail(FRL_ERR_ARG, "unknown format");
    *out = dup(fr::format_block(info->fixpoint_size, info->depth, info->rounds, info->fixpoint != 0, *f));
    return FRL_OK;
  });
}

FRL_API frl_status frl_run_checks(frl_format fmt, char** out, int* all_pass) {
  return guarded([&] {
    if (!out) return fail(FRL_ERR_ARG, "null argument");
    auto f = format_of(fmt);
    if (!f) return fail(FRL_ERR_ARG, "unknown format");
    const auto checks = fr::all_checks();
    bool ok = true;
    for (const auto& c : checks) ok = ok && c.pass;
    *out = dup(fr::format_checks(checks, *f));
    if (all_pass) *all_pass = ok ? 1 : 0;
    return FRL_OK;
  });
}

FRL_API frl_status frl_report(frl_format fmt, char** out) {
  return guarded([&] {
    if (!out) return fail(FRL_ERR_ARG, "null argument");
    auto f = format_of(fmt);
    if (!f) return fail(FRL_ERR_ARG, "unknown format");
    *out = dup(fr::verdict_report(*f));
    return FRL_OK;
  });
}

FRL_API frl_status frl_sim_create(uint64_t seed, frl_sim** out) {
  return guarded([&] {
    if (!out) return fail(FRL_ERR_ARG, "null argument");
    *out = new frl_sim{protocol::Sampler(seed)};
    return FRL_OK;
  });
}

FRL_API void frl_sim_free(frl_sim* s) { delete s; }

FRL_API frl_status frl_sim_step(frl_sim* s, frl_trial* out) {
  return guarded([&] {
    if (!s || !out) return fail(FRL_ERR_ARG, "null argument");
    const auto sc = s->sampler.draw();
    out->trial_index = s->next_index++;
    out->f1 = sc.f1 == SValue::phi ? 0 : 1;
    out->f2 = sc.f2 == SValue::phi ? 0 : 1;
    out->w1 = sc.w1 == WOutcome::nonnull ? 0 : 1;
    out->w2 = sc.w2 == WOutcome::nonnull ? 0 : 1;
    out->halted = sc.w1 == WOutcome::nonnull && sc.w2 == WOutcome::nonnull ? 1 : 0;
    std::snprintf(out->probability, sizeof out->probability, "%s", sc.probability.to_pretty().c_str());
    return FRL_OK;
  });
}

FRL_API frl_status frl_trial_format(const frl_trial* t, frl_format fmt, char** out) {
  return guarded([&] {
    if (!t || !out) return fail(FRL_ERR_ARG, "null argument");
    auto f = format_of(fmt);
    if (!f) return fail(FRL_ERR_ARG, "unknown format");
    const char* s[] = {"phi", "psi"};
    const char* w[] = {"nonnull", "null"};
    if (t->f1 < 0 || t->f1 > 1 || t->f2 < 0 || t->f2 > 1 || t->w1 < 0 || t->w1 > 1 || t->w2 < 0 || t->w2 > 1) {
      return fail(FRL_ERR_ARG, "outcome out of range");
    }
    std::string line;
    if (*f == fr::Format::json) {
      nlohmann::ordered_json j;
      j["trial"] = t->trial_index;
      j["f1"] = s[t->f1];
      j["f2"] = s[t->f2];
      j["w1"] = w[t->w1];
      j["w2"] = w[t->w2];
      j["probability"] = t->probability;
      j["halted"] = t->halted != 0;
      line = j.dump();
    } else {
      line = "trial " + std::to_string(t->trial_index) + ": F1=" + s[t->f1] + " F2=" + s[t->f2] +
             " W1=" + w[t->w1] + " W2=" + w[t->w2] + " p=" + t->probability +
             (t->halted ? " halted" : " unhalted");
    }
    *out = dup(line);
    return FRL_OK;
  });
}

FRL_API frl_status frl_scenario_table(frl_format fmt, char** out) {
  return guarded([&] {
    if (!out) return fail(FRL_ERR_ARG, "null argument");
    auto f = format_of(fmt);
    if (!f) return fail(FRL_ERR_ARG, "unknown format");
    const auto sc = protocol::enumerate_scenarios();
    *out = dup(*f == fr::Format::text ? protocol::scenario_table(sc) : protocol::scenario_records(sc));
    return FRL_OK;
  });
}

}  // extern "C"
