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

#include "quantum/ket.hpp"

#include <algorithm>
#include <sstream>

namespace frlogic::quantum {

namespace {

bool symbol_fits(Subsystem s, Symbol sym) {
  const bool memory_symbol = sym == Symbol::xi || sym == Symbol::zeta;
  return memory_symbol == is_memory(s);
}

std::vector<std::size_t> positions_of(const Roster& sub, const Roster& full) {
  std::vector<std::size_t> pos;
  pos.reserve(sub.size());
  for (Subsystem s : sub) {
    auto it = std::find(full.begin(), full.end(), s);
    if (it == full.end()) {
      throw RosterError(std::string("subsystem ") + to_string(s) + " not in roster");
    }
    pos.push_back(static_cast<std::size_t>(it - full.begin()));
  }
  return pos;
}

// <e|_sub v : contracts the subsystems of e against v, leaving a ket on the
// remaining subsystems of v in v's order.
Ket partial_inner(const Ket& e, const Ket& v, const std::vector<std::size_t>& sub_pos,
                  const Roster& rest_roster, const std::vector<std::size_t>& rest_pos) {
  Ket out(rest_roster);
  for (const auto& [vkey, vamp] : v.terms()) {
    BasisKey sub_key(sub_pos.size());
    for (std::size_t i = 0; i < sub_pos.size(); ++i) sub_key[i] = vkey[sub_pos[i]];
    FieldElement eamp = e.amplitude(sub_key);
    if (eamp.is_zero()) continue;
    BasisKey rest_key(rest_pos.size());
    for (std::size_t i = 0; i < rest_pos.size(); ++i) rest_key[i] = vkey[rest_pos[i]];
    out.add(rest_key, eamp * vamp);
  }
  return out;
}

}  // namespace

const char* to_string(Subsystem s) {
  switch (s) {
    case Subsystem::S1: return "S1";
    case Subsystem::F1: return "F1";
    case Subsystem::S2: return "S2";
    case Subsystem::F2: return "F2";
  }
  return "?";
}

const char* to_string(Symbol s) {
  switch (s) {
    case Symbol::phi: return "phi";
    case Symbol::psi: return "psi";
    case Symbol::xi: return "xi";
    case Symbol::zeta: return "zeta";
  }
  return "?";
}

bool is_memory(Subsystem s) { return s == Subsystem::F1 || s == Subsystem::F2; }

BasisLabel BasisLabel::make(Subsystem subsystem, Symbol symbol) {
  if (!symbol_fits(subsystem, symbol)) {
    throw RosterError(std::string("symbol ") + to_string(symbol) + " cannot label " +
                      to_string(subsystem));
  }
  return {subsystem, symbol};
}

Ket::Ket(Roster roster) : roster_(std::move(roster)) {
  auto sorted = roster_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw RosterError("roster lists a subsystem twice");
  }
}

Ket Ket::basis(std::span<const BasisLabel> labels) {
  Roster roster;
  BasisKey key;
  for (const auto& l : labels) {
    BasisLabel::make(l.subsystem, l.symbol);
    roster.push_back(l.subsystem);
    key.push_back(l.symbol);
  }
  Ket k(std::move(roster));
  k.add(key, FieldElement(1));
  return k;
}

void Ket::check_key(const BasisKey& key) const {
  if (key.size() != roster_.size()) throw RosterError("basis key length does not match roster");
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (!symbol_fits(roster_[i], key[i])) {
      throw RosterError(std::string("symbol ") + quantum::to_string(key[i]) + " cannot label " +
                        quantum::to_string(roster_[i]));
    }
  }
}

FieldElement Ket::amplitude(const BasisKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? FieldElement() : it->second;
}

void Ket::add(const BasisKey& key, const FieldElement& amplitude) {
  check_key(key);
  if (amplitude.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, amplitude);
  if (!inserted) {
    it->second += amplitude;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FieldElement Ket::norm2() const {
  FieldElement acc;
  for (const auto& [key, amp] : terms_) acc += amp * amp;
  return acc;
}

Ket& Ket::operator+=(const Ket& o) {
  if (o.roster_ != roster_) throw RosterError("roster mismatch in ket addition");
  for (const auto& [key, amp] : o.terms_) add(key, amp);
  return *this;
}

Ket& Ket::operator-=(const Ket& o) {
  if (o.roster_ != roster_) throw RosterError("roster mismatch in ket subtraction");
  for (const auto& [key, amp] : o.terms_) add(key, -amp);
  return *this;
}

Ket& Ket::operator*=(const FieldElement& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, amp] : terms_) amp *= s;
  return *this;
}

Ket Ket::reordered(const Roster& order) const {
  if (order.size() != roster_.size()) throw RosterError("reorder target is not a permutation");
  auto pos = positions_of(order, roster_);
  Ket out(order);
  for (const auto& [key, amp] : terms_) {
    BasisKey k(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) k[i] = key[pos[i]];
    out.add(k, amp);
  }
  return out;
}

std::string Ket::to_string() const {
  std::ostringstream os;
  os << "roster: ";
  for (std::size_t i = 0; i < roster_.size(); ++i) {
    os << (i ? "," : "") << quantum::to_string(roster_[i]);
  }
  os << '\n';
  for (const auto& [key, amp] : terms_) {
    for (std::size_t i = 0; i < key.size(); ++i) os << (i ? "," : "") << quantum::to_string(key[i]);
    os << ": " << amp.to_string() << '\n';
  }
  return os.str();
}

Ket tensor(const Ket& u, const Ket& v) {
  Roster roster = u.roster();
  for (Subsystem s : v.roster()) {
    if (std::find(roster.begin(), roster.end(), s) != roster.end()) {
      throw RosterError(std::string("tensor of overlapping rosters at ") + to_string(s));
    }
    roster.push_back(s);
  }
  Ket out(std::move(roster));
  for (const auto& [ku, au] : u.terms()) {
    for (const auto& [kv, av] : v.terms()) {
      BasisKey k = ku;
      k.insert(k.end(), kv.begin(), kv.end());
      out.add(k, au * av);
    }
  }
  return out;
}

FieldElement inner(const Ket& u, const Ket& v) {
  if (u.roster() != v.roster()) throw RosterError("roster mismatch in inner product");
  FieldElement acc;
  const auto& small = u.terms().size() <= v.terms().size() ? u : v;
  const auto& large = &small == &u ? v : u;
  for (const auto& [key, amp] : small.terms()) {
    auto other = large.amplitude(key);
    if (!other.is_zero()) acc += amp * other;
  }
  return acc;
}

Projector::Projector(std::vector<Ket> span) : span_(std::move(span)) {
  if (span_.empty()) throw RosterError("projector needs a nonempty span");
  for (const auto& e : span_) {
    if (e.roster() != span_.front().roster()) throw RosterError("projector span mixes rosters");
  }
  for (std::size_t i = 0; i < span_.size(); ++i) {
    for (std::size_t j = i; j < span_.size(); ++j) {
      if (inner(span_[i], span_[j]) != FieldElement(i == j ? 1 : 0)) {
        throw RosterError("projector span is not orthonormal");
      }
    }
  }
}

Projector tensor(const Projector& p, const Projector& q) {
  std::vector<Ket> span;
  span.reserve(p.rank() * q.rank());
  for (const auto& e : p.span()) {
    for (const auto& f : q.span()) span.push_back(tensor(e, f));
  }
  return Projector(std::move(span));
}

Ket project(const Projector& p, const Ket& v) {
  const Roster& full = v.roster();
  auto sub_pos = positions_of(p.roster(), full);
  Roster rest_roster;
  std::vector<std::size_t> rest_pos;
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (std::find(sub_pos.begin(), sub_pos.end(), i) == sub_pos.end()) {
      rest_roster.push_back(full[i]);
      rest_pos.push_back(i);
    }
  }
  Ket out(full);
  for (const auto& e : p.span()) {
    Ket residual = partial_inner(e, v, sub_pos, rest_roster, rest_pos);
    for (const auto& [ekey, eamp] : e.terms()) {
      for (const auto& [rkey, ramp] : residual.terms()) {
        BasisKey k(full.size());
        for (std::size_t i = 0; i < sub_pos.size(); ++i) k[sub_pos[i]] = ekey[i];
        for (std::size_t i = 0; i < rest_pos.size(); ++i) k[rest_pos[i]] = rkey[i];
        out.add(k, eamp * ramp);
      }
    }
  }
  return out;
}

FieldElement born_probability(const Projector& p, const Ket& v) {
  if (!v.is_normalized()) throw RosterError("born probability of an unnormalized ket");
  return project(p, v).norm2();
}

std::vector<Ket> product_basis(const Roster& roster) {
  std::vector<BasisKey> keys{{}};
  for (Subsystem s : roster) {
    std::vector<BasisKey> next;
    for (const auto& k : keys) {
      for (Symbol sym : is_memory(s) ? std::vector{Symbol::xi, Symbol::zeta}
                                     : std::vector{Symbol::phi, Symbol::psi}) {
        auto nk = k;
        nk.push_back(sym);
        next.push_back(std::move(nk));
      }
    }
    keys = std::move(next);
  }
  std::vector<Ket> out;
  out.reserve(keys.size());
  for (const auto& k : keys) {
    Ket ket(roster);
    ket.add(k, FieldElement(1));
    out.push_back(std::move(ket));
  }
  return out;
}

bool commute(const Projector& p, const Projector& q) {
  Roster roster = p.roster();
  for (Subsystem s : q.roster()) {
    if (std::find(roster.begin(), roster.end(), s) == roster.end()) roster.push_back(s);
  }
  for (const auto& b : product_basis(roster)) {
    if (project(p, project(q, b)) != project(q, project(p, b))) return false;
  }
  return true;
}

}  // namespace frlogic::quantum
