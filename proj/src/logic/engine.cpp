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

#include "logic/engine.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace frlogic::logic {

bool Goal::matches(const Formula& f) const {
  if (formula) return f == *formula;
  if (!contradiction) return false;
  auto who = contradiction_agent(f);
  return who && (!agent || *who == *agent);
}

std::set<RuleId> default_rules(TrustMode mode) {
  std::set<RuleId> r{RuleId::syllogism, RuleId::k_and_merge, RuleId::and_elim,
                     RuleId::positive_introspection, RuleId::condition_s};
  if (mode == TrustMode::naive) {
    r.insert({RuleId::distribution, RuleId::trust});
  } else {
    r.insert({RuleId::contextual_distribution, RuleId::contextual_trust});
  }
  return r;
}

const char* to_string(DeriveStatus s) {
  switch (s) {
    case DeriveStatus::derived: return "derived";
    case DeriveStatus::not_derivable: return "not-derivable";
    case DeriveStatus::aborted: return "aborted";
  }
  return "?";
}

namespace {

RuleApplication make_app(RuleId rule, std::size_t position = 0, std::optional<AgentInstance> target = std::nullopt,
                         int side = 0) {
  RuleApplication app;
  app.rule = rule;
  app.position = position;
  app.target = std::move(target);
  app.side = side;
  return app;
}

struct Entry {
  Formula formula;
  RuleApplication app;
  std::vector<std::size_t> parents;  // 0-based closure indices
  std::string source;
};

char body_kind(const Formula& f) {
  if (f.kind() == NodeKind::implication) return 'I';
  if (f.is_literal()) return 'L';
  return 'O';
}

std::string bucket_key(const std::vector<SpineLink>& sp, std::size_t p, char kind) {
  std::string key = std::to_string(p);
  key += '|';
  for (std::size_t i = 0; i < p; ++i) {
    key += to_string(sp[i].who.name);
    key += sp[i].ctx ? to_string(*sp[i].ctx) : "-";
  }
  key += '|';
  key += kind;
  return key;
}

class Search {
 public:
  Search(const RuleContext& ctx, const Goal& goal, const DeriveOptions& opt)
      : ctx_(ctx), goal_(goal), opt_(opt) {}

  DeriveResult run(const std::vector<Premise>& premises) {
    for (const auto& p : premises) collect_instances(p.formula, universe_);
    std::sort(universe_.begin(), universe_.end());
    for (const auto& p : premises) {
      emit(p.formula, make_app(RuleId::premise), {}, p.source);
      if (found_) break;
    }
    commit();
    DeriveResult res;
    std::size_t frontier_begin = 0;
    while (!found_ && !aborted_ && res.rounds < opt_.depth) {
      const std::size_t frontier_end = known_.size();
      if (frontier_begin == frontier_end) {
        res.fixpoint = true;
        break;
      }
      ++res.rounds;
      for (std::size_t i = frontier_begin; i < frontier_end && !found_ && !aborted_; ++i) {
        expand(i, frontier_begin);
      }
      commit();
      spdlog::debug("round {}: {} formulas", res.rounds, known_.size());
      frontier_begin = frontier_end;
    }
    if (!found_ && !aborted_ && frontier_begin == known_.size()) res.fixpoint = true;
    res.closure.reserve(known_.size());
    for (const auto& e : known_) res.closure.push_back(e.formula);
    if (found_) {
      res.status = DeriveStatus::derived;
      res.goal_index = goal_index_;
    } else {
      res.status = aborted_ ? DeriveStatus::aborted : DeriveStatus::not_derivable;
    }
    return res;
  }

  const std::vector<Entry>& entries() const { return known_; }

 private:
  void emit(const Formula& f, RuleApplication app, std::vector<std::size_t> parents, std::string source = {}) {
    if (found_ || aborted_) return;
    if (index_.count(f.text())) return;
    const std::size_t idx = known_.size() + pending_.size();
    index_.emplace(f.text(), idx);
    pending_.push_back({f, app, std::move(parents), std::move(source)});
    if (goal_.matches(f)) {
      found_ = true;
      goal_index_ = idx;
    }
    if (idx + 1 > opt_.max_formulas) aborted_ = true;
  }

  void commit() {
    for (auto& e : pending_) {
      const std::size_t idx = known_.size();
      const auto sp = spine(e.formula);
      for (std::size_t p = 0; p <= sp.size(); ++p) {
        buckets_[bucket_key(sp, p, body_kind(peel(e.formula, p)))].push_back(idx);
      }
      known_.push_back(std::move(e));
    }
    pending_.clear();
  }

  bool enabled(RuleId r) const { return opt_.rules.count(r) > 0; }

  void try_unary(RuleApplication app, std::size_t i) {
    const Formula* prem = &known_[i].formula;
    if (auto c = apply_rule(app, std::span<const Formula>(prem, 1), ctx_)) emit(*c, app, {i});
  }

  void try_binary(RuleApplication app, std::size_t i, std::size_t j) {
    const Formula prem[2] = {known_[i].formula, known_[j].formula};
    if (auto c = apply_rule(app, prem, ctx_)) emit(*c, app, {i, j});
  }

  void expand(std::size_t i, std::size_t frontier_begin) {
    const Formula f = known_[i].formula;
    const auto sp = spine(f);
    const std::size_t k = sp.size();

    for (std::size_t p = 0; p <= k; ++p) {
      if (enabled(RuleId::and_elim) && peel(f, p).kind() == NodeKind::conjunction) {
        try_unary(make_app(RuleId::and_elim, p, std::nullopt, 0), i);
        try_unary(make_app(RuleId::and_elim, p, std::nullopt, 1), i);
      }
      if (p + 2 <= k) {
        if (enabled(RuleId::trust)) try_unary(make_app(RuleId::trust, p), i);
        if (enabled(RuleId::contextual_trust)) try_unary(make_app(RuleId::contextual_trust, p), i);
      }
      if (p < k && enabled(RuleId::positive_introspection)) {
        for (const auto& target : universe_) {
          if (target.name == sp[p].who.name) try_unary(make_app(RuleId::positive_introspection, p, target), i);
        }
      }
      if (enabled(RuleId::negative_introspection)) try_unary(make_app(RuleId::negative_introspection, p), i);
    }
    if (enabled(RuleId::knowledge_generalization)) {
      for (const auto& target : universe_) try_unary(make_app(RuleId::knowledge_generalization, 0, target), i);
    }
    if (enabled(RuleId::condition_s)) try_unary(make_app(RuleId::condition_s), i);

    std::vector<RuleId> binary;
    for (RuleId r : {RuleId::distribution, RuleId::contextual_distribution, RuleId::syllogism,
                     RuleId::k_and_merge}) {
      if (enabled(r)) binary.push_back(r);
    }
    if (binary.empty()) return;
    for (std::size_t p = 0; p <= k; ++p) {
      const char kind = body_kind(peel(f, p));
      std::vector<char> kinds{'I'};
      if (kind == 'I') kinds = {'I', 'L', 'O'};
      if (kind == 'L') kinds.push_back('L');
      for (char pk : kinds) {
        auto it = buckets_.find(bucket_key(sp, p, pk));
        if (it == buckets_.end()) continue;
        // The bucket may grow only at commit time, so iterating by index is safe.
        const auto& partners = it->second;
        for (std::size_t n = 0; n < partners.size() && !found_ && !aborted_; ++n) {
          const std::size_t j = partners[n];
          if (j >= frontier_begin && j > i) continue;  // handled when j expands
          for (RuleId r : binary) {
            try_binary(make_app(r, p), i, j);
            if (j != i) try_binary(make_app(r, p), j, i);
          }
        }
      }
    }
  }

  const RuleContext& ctx_;
  const Goal& goal_;
  const DeriveOptions& opt_;
  std::vector<AgentInstance> universe_;
  std::vector<Entry> known_;
  std::vector<Entry> pending_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_map<std::string, std::vector<std::size_t>> buckets_;
  bool found_ = false;
  bool aborted_ = false;
  std::size_t goal_index_ = 0;
};

}  // namespace

DeriveResult derive(const std::vector<Premise>& premises, const RuleContext& ctx, const Goal& goal,
                    const DeriveOptions& options) {
  if (options.depth < 1) throw std::invalid_argument("derivation depth must be at least 1");
  Search search(ctx, goal, options);
  DeriveResult res = search.run(premises);
  if (res.status == DeriveStatus::derived) {
    // Rebuild the minimal trace from the search bookkeeping.
    const auto& entries = search.entries();
    std::vector<bool> keep(entries.size(), false);
    std::vector<std::size_t> stack{res.goal_index};
    while (!stack.empty()) {
      const std::size_t n = stack.back();
      stack.pop_back();
      if (keep[n]) continue;
      keep[n] = true;
      for (std::size_t p : entries[n].parents) stack.push_back(p);
    }
    std::map<std::size_t, std::size_t> renumber;
    for (std::size_t n = 0; n < entries.size(); ++n) {
      if (!keep[n]) continue;
      const std::size_t step = renumber.size() + 1;
      renumber[n] = step;
      TraceStep ts{entries[n].formula, entries[n].app, {}, entries[n].source};
      for (std::size_t p : entries[n].parents) ts.premises.push_back(renumber.at(p));
      res.trace.steps.push_back(std::move(ts));
    }
  }
  return res;
}

}  // namespace frlogic::logic
