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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frlogic::logic {

enum class Pred { S1_eq, S2_eq, PchiL1_nonnull, PchiL1_null, PchiL2_nonnull, PchiL2_null };

struct Atom {
  Pred pred;
  std::optional<SValue> value;  // set exactly for S1_eq / S2_eq

  // Throws std::invalid_argument when the value presence does not fit pred.
  static Atom make(Pred pred, std::optional<SValue> value = std::nullopt);
  static Atom s1(SValue v) { return make(Pred::S1_eq, v); }
  static Atom s2(SValue v) { return make(Pred::S2_eq, v); }

  std::string to_string() const;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

// True when the two atoms can never hold together and one of them always
// holds: S=phi / S=psi on the same system, or the two projector outcomes on
// the same lab.
bool complementary(const Atom& x, const Atom& y);

// Subset of the steps 0..4, one bit per step.
class TimeSet {
 public:
  TimeSet() = default;
  static TimeSet of(std::initializer_list<int> steps);
  static TimeSet below(int n);          // {0 .. n-1}
  static TimeSet at_least(int n);       // {n .. 4}
  static TimeSet from_bits(std::uint8_t bits);

  std::uint8_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  bool contains(int t) const { return t >= 0 && t <= kLastStep && (bits_ >> t) & 1; }
  bool subset_of(const TimeSet& o) const { return (bits_ & ~o.bits_) == 0; }
  int min() const;
  int max() const;
  TimeSet operator&(const TimeSet& o) const { return from_bits(bits_ & o.bits_); }
  TimeSet operator|(const TimeSet& o) const { return from_bits(bits_ | o.bits_); }

  // "<k" for {0..k-1} with k >= 2, otherwise a comma list.
  std::string to_string() const;
  friend auto operator<=>(const TimeSet&, const TimeSet&) = default;

 private:
  std::uint8_t bits_ = 0;
};

struct AgentInstance {
  Agent name;
  TimeSet times;

  std::string to_string() const;  // "F1@<3"
  friend auto operator<=>(const AgentInstance&, const AgentInstance&) = default;
};

// C1: product basis {phi,psi} (x) {xi,zeta}. C2: the super-observer basis.
enum class Context { C1, C2 };
const char* to_string(Context c);

enum class NodeKind { atom, negation, conjunction, implication, knows };

// Immutable formula tree in canonical form: conjunction children are kept
// ordered by their printed text, so equal formulas print identically.
class Formula {
 public:
  static Formula atom(Atom a);
  static Formula negation(Formula f);
  static Formula conjunction(Formula x, Formula y);
  static Formula implication(Formula x, Formula y);
  static Formula knows(AgentInstance who, std::optional<Context> ctx, Formula body);

  NodeKind kind() const;
  const Atom& atom_value() const;        // atom only
  const Formula& child(int i) const;     // negation: 0; binary: 0, 1; knows: 0 is the body
  const AgentInstance& instance() const;  // knows only
  std::optional<Context> context() const;  // knows only

  bool is_atom() const { return kind() == NodeKind::atom; }
  bool is_knows() const { return kind() == NodeKind::knows; }
  // An atom or the negation of an atom.
  bool is_literal() const;

  // Canonical concrete syntax.
  const std::string& text() const;
  std::size_t size() const;  // node count

  friend bool operator==(const Formula& x, const Formula& y) {
    return x.node_ == y.node_ || x.text() == y.text();
  }
  friend bool operator<(const Formula& x, const Formula& y) { return x.text() < y.text(); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct SpineLink {
  AgentInstance who;
  std::optional<Context> ctx;
  friend bool operator==(const SpineLink&, const SpineLink&) = default;
};

// Leading chain of knowledge operators of f, outermost first.
std::vector<SpineLink> spine(const Formula& f);
// Subformula after peeling `depth` leading K operators. Throws
// std::out_of_range when f has fewer.
const Formula& peel(const Formula& f, std::size_t depth);
// Wraps body in the given operators, outermost first.
Formula wrap(const std::vector<SpineLink>& prefix, Formula body);

// Same formula with every context tag removed.
Formula erase_contexts(const Formula& f);
// Every knowledge operator tagged: F agents with C1, W agents with C2.
Formula tag_contexts(const Formula& f);
bool fully_tagged(const Formula& f);
// Every knowledge operator instance occurring in f.
void collect_instances(const Formula& f, std::vector<AgentInstance>& out);

Context default_context(Agent a);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar (whitespace is insignificant):
//   formula := conj [ "->" formula ]
//   conj    := unary { "&" unary }
//   unary   := "!" unary | "K[" agent "@" times [ "|" ctx ] "]" unary
//            | "(" formula ")" | atom
//   times   := "<" n | ">=" n | n { "," n }
//   atom    := ("S1" | "S2") "=" ("phi" | "psi")
//            | ("PchiL1" | "PchiL2") ("=0" | "!=0")
Formula parse_formula(std::string_view text);

}  // namespace frlogic::logic
