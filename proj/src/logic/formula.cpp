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

#include "logic/formula.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace frlogic::logic {

Atom Atom::make(Pred pred, std::optional<SValue> value) {
  const bool needs_value = pred == Pred::S1_eq || pred == Pred::S2_eq;
  if (needs_value != value.has_value()) {
    throw std::invalid_argument(needs_value ? "S-equality atom needs a value"
                                            : "projector atom takes no value");
  }
  return {pred, value};
}

std::string Atom::to_string() const {
  switch (pred) {
    case Pred::S1_eq: return std::string("S1=") + std::string(frlogic::to_string(*value));
    case Pred::S2_eq: return std::string("S2=") + std::string(frlogic::to_string(*value));
    case Pred::PchiL1_nonnull: return "PchiL1!=0";
    case Pred::PchiL1_null: return "PchiL1=0";
    case Pred::PchiL2_nonnull: return "PchiL2!=0";
    case Pred::PchiL2_null: return "PchiL2=0";
  }
  return "?";
}

bool complementary(const Atom& x, const Atom& y) {
  auto pair = [&](Pred a, Pred b) {
    return (x.pred == a && y.pred == b) || (x.pred == b && y.pred == a);
  };
  if (x.pred == y.pred && x.value && y.value) return *x.value != *y.value;
  return pair(Pred::PchiL1_nonnull, Pred::PchiL1_null) || pair(Pred::PchiL2_nonnull, Pred::PchiL2_null);
}

// ---- TimeSet ---------------------------------------------------------------

namespace {
constexpr std::uint8_t kAllSteps = (1u << (kLastStep + 1)) - 1;
}

TimeSet TimeSet::from_bits(std::uint8_t bits) {
  TimeSet t;
  t.bits_ = bits & kAllSteps;
  return t;
}

TimeSet TimeSet::of(std::initializer_list<int> steps) {
  std::uint8_t bits = 0;
  for (int s : steps) {
    if (s < 0 || s > kLastStep) throw std::out_of_range("time step outside 0..4");
    bits |= static_cast<std::uint8_t>(1u << s);
  }
  return from_bits(bits);
}

TimeSet TimeSet::below(int n) {
  if (n < 1 || n > kLastStep + 1) throw std::out_of_range("bound for <n outside 1..5");
  return from_bits(static_cast<std::uint8_t>((1u << n) - 1));
}

TimeSet TimeSet::at_least(int n) {
  if (n < 0 || n > kLastStep) throw std::out_of_range("bound for >=n outside 0..4");
  return from_bits(static_cast<std::uint8_t>(kAllSteps & ~((1u << n) - 1)));
}

int TimeSet::min() const {
  if (empty()) throw std::logic_error("min of empty time set");
  return std::countr_zero(bits_);
}

int TimeSet::max() const {
  if (empty()) throw std::logic_error("max of empty time set");
  return 7 - std::countl_zero(bits_);
}

std::string TimeSet::to_string() const {
  const int n = std::popcount(bits_);
  if (n >= 2 && bits_ == static_cast<std::uint8_t>((1u << n) - 1)) return "<" + std::to_string(n);
  std::string out;
  for (int t = 0; t <= kLastStep; ++t) {
    if (contains(t)) {
      if (!out.empty()) out += ',';
      out += std::to_string(t);
    }
  }
  return out;
}

std::string AgentInstance::to_string() const {
  return std::string(frlogic::to_string(name)) + "@" + times.to_string();
}

const char* to_string(Context c) { return c == Context::C1 ? "C1" : "C2"; }

Context default_context(Agent a) {
  return (a == Agent::F1 || a == Agent::F2) ? Context::C1 : Context::C2;
}

// ---- Formula ---------------------------------------------------------------

struct Formula::Node {
  NodeKind kind;
  std::optional<Atom> atom;
  std::vector<Formula> children;
  std::optional<AgentInstance> who;
  std::optional<Context> ctx;
  std::string text;
  std::size_t size = 1;
};

namespace {

// Operand of "!" and of a K operator.
std::string unary_text(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::knows:
    case NodeKind::negation:
      return f.text();
    default:
      return "(" + f.text() + ")";
  }
}

// Operand of "&" and "->".
std::string binary_operand_text(const Formula& f) {
  if (f.kind() == NodeKind::conjunction || f.kind() == NodeKind::implication) {
    return "(" + f.text() + ")";
  }
  return f.text();
}

}  // namespace

Formula Formula::atom(Atom a) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::atom;
  n->text = a.to_string();
  n->atom = a;
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::negation;
  n->text = "!" + unary_text(f);
  n->size = 1 + f.size();
  n->children.push_back(std::move(f));
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula x, Formula y) {
  if (y.text() < x.text()) std::swap(x, y);
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::conjunction;
  n->text = binary_operand_text(x) + " & " + binary_operand_text(y);
  n->size = 1 + x.size() + y.size();
  n->children = {std::move(x), std::move(y)};
  return Formula(std::move(n));
}

Formula Formula::implication(Formula x, Formula y) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::implication;
  n->text = binary_operand_text(x) + " -> " + binary_operand_text(y);
  n->size = 1 + x.size() + y.size();
  n->children = {std::move(x), std::move(y)};
  return Formula(std::move(n));
}

Formula Formula::knows(AgentInstance who, std::optional<Context> ctx, Formula body) {
  if (who.times.empty()) throw std::invalid_argument("knowledge operator with empty time set");
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::knows;
  n->text = "K[" + who.to_string() + (ctx ? std::string("|") + to_string(*ctx) : "") + "]" +
            unary_text(body);
  n->size = 1 + body.size();
  n->who = who;
  n->ctx = ctx;
  n->children.push_back(std::move(body));
  return Formula(std::move(n));
}

NodeKind Formula::kind() const { return node_->kind; }

const Atom& Formula::atom_value() const {
  if (!node_->atom) throw std::logic_error("not an atom");
  return *node_->atom;
}

const Formula& Formula::child(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= node_->children.size()) {
    throw std::out_of_range("formula child index");
  }
  return node_->children[static_cast<std::size_t>(i)];
}

const AgentInstance& Formula::instance() const {
  if (!node_->who) throw std::logic_error("not a knowledge formula");
  return *node_->who;
}

std::optional<Context> Formula::context() const { return node_->ctx; }

bool Formula::is_literal() const {
  return is_atom() || (kind() == NodeKind::negation && child(0).is_atom());
}

const std::string& Formula::text() const { return node_->text; }
std::size_t Formula::size() const { return node_->size; }

std::vector<SpineLink> spine(const Formula& f) {
  std::vector<SpineLink> out;
  const Formula* cur = &f;
  while (cur->is_knows()) {
    out.push_back({cur->instance(), cur->context()});
    cur = &cur->child(0);
  }
  return out;
}

const Formula& peel(const Formula& f, std::size_t depth) {
  const Formula* cur = &f;
  for (std::size_t i = 0; i < depth; ++i) {
    if (!cur->is_knows()) throw std::out_of_range("peel past the knowledge prefix");
    cur = &cur->child(0);
  }
  return *cur;
}

Formula wrap(const std::vector<SpineLink>& prefix, Formula body) {
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    body = Formula::knows(it->who, it->ctx, std::move(body));
  }
  return body;
}

namespace {

template <typename F>
Formula map_knows(const Formula& f, F&& relabel) {
  switch (f.kind()) {
    case NodeKind::atom: return f;
    case NodeKind::negation: return Formula::negation(map_knows(f.child(0), relabel));
    case NodeKind::conjunction:
      return Formula::conjunction(map_knows(f.child(0), relabel), map_knows(f.child(1), relabel));
    case NodeKind::implication:
      return Formula::implication(map_knows(f.child(0), relabel), map_knows(f.child(1), relabel));
    case NodeKind::knows:
      return Formula::knows(f.instance(), relabel(f.instance()), map_knows(f.child(0), relabel));
  }
  return f;
}

}  // namespace

Formula erase_contexts(const Formula& f) {
  return map_knows(f, [](const AgentInstance&) -> std::optional<Context> { return std::nullopt; });
}

Formula tag_contexts(const Formula& f) {
  return map_knows(f, [](const AgentInstance& a) -> std::optional<Context> {
    return default_context(a.name);
  });
}

bool fully_tagged(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::atom: return true;
    case NodeKind::negation: return fully_tagged(f.child(0));
    case NodeKind::conjunction:
    case NodeKind::implication: return fully_tagged(f.child(0)) && fully_tagged(f.child(1));
    case NodeKind::knows: return f.context().has_value() && fully_tagged(f.child(0));
  }
  return false;
}

void collect_instances(const Formula& f, std::vector<AgentInstance>& out) {
  switch (f.kind()) {
    case NodeKind::atom: return;
    case NodeKind::negation: collect_instances(f.child(0), out); return;
    case NodeKind::conjunction:
    case NodeKind::implication:
      collect_instances(f.child(0), out);
      collect_instances(f.child(1), out);
      return;
    case NodeKind::knows:
      if (std::find(out.begin(), out.end(), f.instance()) == out.end()) out.push_back(f.instance());
      collect_instances(f.child(0), out);
      return;
  }
}

// ---- parser ----------------------------------------------------------------

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Formula parse_all() {
    Formula f = formula();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  Formula formula() {
    Formula lhs = conj();
    if (accept("->")) return Formula::implication(std::move(lhs), formula());
    return lhs;
  }

  Formula conj() {
    Formula acc = unary();
    while (accept("&")) acc = Formula::conjunction(std::move(acc), unary());
    return acc;
  }

  Formula unary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept("!")) return Formula::negation(unary());
    if (accept("(")) {
      Formula f = formula();
      expect(")");
      return f;
    }
    if (accept("K[")) return knows();
    return atom();
  }

  int number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a time step");
    if (pos_ - start > 2) fail("time step out of range");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  TimeSet times() {
    const std::size_t at = pos_;
    try {
      if (accept("<")) return TimeSet::below(number());
      if (accept(">=")) return TimeSet::at_least(number());
      std::uint8_t bits = 0;
      do {
        const int t = number();
        bits |= TimeSet::of({t}).bits();
      } while (accept(","));
      return TimeSet::from_bits(bits);
    } catch (const std::out_of_range&) {
      pos_ = at;
      fail("time step outside 0..4");
    }
  }

  Formula knows() {
    skip_ws();
    std::optional<Agent> who;
    for (Agent a : kAgents) {
      if (accept(to_string(a))) {
        who = a;
        break;
      }
    }
    if (!who) fail("unknown agent");
    expect("@");
    TimeSet ts = times();
    std::optional<Context> ctx;
    if (accept("|")) {
      if (accept("C1")) {
        ctx = Context::C1;
      } else if (accept("C2")) {
        ctx = Context::C2;
      } else {
        fail("unknown context");
      }
    }
    expect("]");
    Formula body = unary();
    return Formula::knows({*who, ts}, ctx, std::move(body));
  }

  Formula atom() {
    skip_ws();
    static const std::pair<std::string_view, Atom> table[] = {
        {"S1=phi", Atom::s1(SValue::phi)},
        {"S1=psi", Atom::s1(SValue::psi)},
        {"S2=phi", Atom::s2(SValue::phi)},
        {"S2=psi", Atom::s2(SValue::psi)},
        {"PchiL1!=0", Atom::make(Pred::PchiL1_nonnull)},
        {"PchiL1=0", Atom::make(Pred::PchiL1_null)},
        {"PchiL2!=0", Atom::make(Pred::PchiL2_nonnull)},
        {"PchiL2=0", Atom::make(Pred::PchiL2_null)},
    };
    for (const auto& [tok, a] : table) {
      if (s_.substr(pos_, tok.size()) == tok) {
        pos_ += tok.size();
        return Formula::atom(a);
      }
    }
    fail("unknown atom");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace frlogic::logic
