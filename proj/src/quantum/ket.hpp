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

#include "quantum/field.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace frlogic::quantum {

class RosterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The two labs are S1 (x) F1 and S2 (x) F2. S-systems live in span{phi, psi},
// agent memories in span{xi, zeta}.
enum class Subsystem { S1, F1, S2, F2 };
enum class Symbol { phi, psi, xi, zeta };

const char* to_string(Subsystem s);
const char* to_string(Symbol s);
bool is_memory(Subsystem s);

struct BasisLabel {
  Subsystem subsystem;
  Symbol symbol;

  // Throws RosterError when a memory symbol labels an S-system or vice versa.
  static BasisLabel make(Subsystem subsystem, Symbol symbol);
};

using Roster = std::vector<Subsystem>;
using BasisKey = std::vector<Symbol>;

// Sparse state vector over a roster of subsystems. Absent keys are zero and
// zero amplitudes are never stored.
class Ket {
 public:
  explicit Ket(Roster roster);

  static Ket basis(std::span<const BasisLabel> labels);
  static Ket basis(std::initializer_list<BasisLabel> labels) {
    return basis(std::span<const BasisLabel>(labels.begin(), labels.size()));
  }
  static Ket single(Subsystem s, Symbol sym) { return basis({BasisLabel::make(s, sym)}); }

  const Roster& roster() const { return roster_; }
  const std::map<BasisKey, FieldElement>& terms() const { return terms_; }

  FieldElement amplitude(const BasisKey& key) const;
  void add(const BasisKey& key, const FieldElement& amplitude);

  bool is_zero() const { return terms_.empty(); }
  FieldElement norm2() const;
  bool is_normalized() const { return norm2() == FieldElement(1); }

  Ket& operator+=(const Ket& o);
  Ket& operator-=(const Ket& o);
  Ket& operator*=(const FieldElement& s);
  friend Ket operator+(Ket x, const Ket& y) { return x += y; }
  friend Ket operator-(Ket x, const Ket& y) { return x -= y; }
  friend Ket operator*(const FieldElement& s, Ket x) { return x *= s; }
  friend Ket operator*(Ket x, const FieldElement& s) { return x *= s; }
  friend bool operator==(const Ket& x, const Ket& y) {
    return x.roster_ == y.roster_ && x.terms_ == y.terms_;
  }

  // Same state with subsystems listed in `order` (a permutation of roster()).
  Ket reordered(const Roster& order) const;

  // "roster: S1,F1\n" followed by one "phi,xi: <scalar>" line per nonzero
  // amplitude, sorted by basis key.
  std::string to_string() const;

 private:
  void check_key(const BasisKey& key) const;

  Roster roster_;
  std::map<BasisKey, FieldElement> terms_;
};

Ket tensor(const Ket& u, const Ket& v);
FieldElement inner(const Ket& u, const Ket& v);

// Orthogonal projector given by an orthonormal spanning list. Acts as
// P (x) Identity on any ket whose roster contains the span's roster.
class Projector {
 public:
  // Throws RosterError on empty or mixed-roster spans and when the span is
  // not exactly orthonormal.
  explicit Projector(std::vector<Ket> span);

  const std::vector<Ket>& span() const { return span_; }
  const Roster& roster() const { return span_.front().roster(); }
  std::size_t rank() const { return span_.size(); }

 private:
  std::vector<Ket> span_;
};

Projector tensor(const Projector& p, const Projector& q);

Ket project(const Projector& p, const Ket& v);

// <v, P v> for normalized v. Throws RosterError when v is not normalized.
FieldElement born_probability(const Projector& p, const Ket& v);

// Exact commutation test on the product basis of the union roster.
bool commute(const Projector& p, const Projector& q);

// All 2^n product-basis kets of a roster.
std::vector<Ket> product_basis(const Roster& roster);

}  // namespace frlogic::quantum
