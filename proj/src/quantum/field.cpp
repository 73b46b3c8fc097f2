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

#include "quantum/field.hpp"

#include <array>
#include <ostream>
#include <sstream>
#include <vector>

namespace frlogic::quantum {

namespace {

using boost::multiprecision::cpp_int;

int rsign(const Rational& q) { return q.sign(); }

// Sign of p + q*sqrt2.
int sign_q2(const Rational& p, const Rational& q) {
  const int sp = rsign(p);
  const int sq = rsign(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  return (p * p > 2 * q * q) ? sp : sq;
}

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(cpp_int(std::string(s)));
    cpp_int num(std::string(s.substr(0, slash)));
    cpp_int den(std::string(s.substr(slash + 1)));
    if (den == 0) throw FieldError("zero denominator in \"" + std::string(s) + "\"");
    return Rational(num, den);
  } catch (const FieldError&) {
    throw;
  } catch (const std::exception&) {
    throw FieldError("malformed rational \"" + std::string(s) + "\"");
  }
}

}  // namespace

std::string rational_to_string(const Rational& q) {
  std::string out = boost::multiprecision::numerator(q).str();
  const auto den = boost::multiprecision::denominator(q);
  if (den != 1) out += "/" + den.str();
  return out;
}

FieldElement FieldElement::frac(long long num, long long den) {
  if (den == 0) throw FieldError("division by zero in field");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return FieldElement(Rational(num, den));
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  const Rational& e = o.a_;
  const Rational& f = o.b_;
  const Rational& g = o.c_;
  const Rational& h = o.d_;
  Rational na = a_ * e + 2 * b_ * f + 3 * c_ * g + 6 * d_ * h;
  Rational nb = a_ * f + b_ * e + 3 * c_ * h + 3 * d_ * g;
  Rational nc = a_ * g + c_ * e + 2 * b_ * h + 2 * d_ * f;
  Rational nd = a_ * h + d_ * e + b_ * g + c_ * f;
  a_ = std::move(na);
  b_ = std::move(nb);
  c_ = std::move(nc);
  d_ = std::move(nd);
  return *this;
}

// Write x = u + v*sqrt3 with u, v in Q(sqrt2). Then
// 1/x = (u - v*sqrt3) / (u^2 - 3v^2), and the norm u^2 - 3v^2 = p + q*sqrt2
// is inverted in Q(sqrt2) the same way.
FieldElement FieldElement::inverse() const {
  if (is_zero()) throw FieldError("division by zero in field");
  const Rational p = a_ * a_ + 2 * b_ * b_ - 3 * c_ * c_ - 6 * d_ * d_;
  const Rational q = 2 * a_ * b_ - 6 * c_ * d_;
  const Rational den = p * p - 2 * q * q;
  FieldElement conj(a_, b_, -c_, -d_);
  return conj * FieldElement(p / den, -q / den, 0, 0);
}

int FieldElement::sign() const {
  // x = u + v*sqrt3, u = a + b*sqrt2, v = c + d*sqrt2.
  const int su = sign_q2(a_, b_);
  const int sv = sign_q2(c_, d_);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // Opposite signs: compare u^2 against 3v^2 inside Q(sqrt2).
  const Rational p = a_ * a_ + 2 * b_ * b_ - 3 * c_ * c_ - 6 * d_ * d_;
  const Rational q = 2 * a_ * b_ - 6 * c_ * d_;
  return sign_q2(p, q) > 0 ? su : sv;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  os << rational_to_string(a_) << " + " << rational_to_string(b_) << "*sqrt2 + "
     << rational_to_string(c_) << "*sqrt3 + " << rational_to_string(d_) << "*sqrt6";
  return os.str();
}

std::string FieldElement::to_pretty() const {
  if (is_zero()) return "0";
  const std::array<std::pair<const Rational*, const char*>, 4> terms{{
      {&a_, ""}, {&b_, "sqrt2"}, {&c_, "sqrt3"}, {&d_, "sqrt6"}}};
  std::string out;
  for (const auto& [coef, radical] : terms) {
    if (*coef == 0) continue;
    Rational mag = *coef < 0 ? Rational(-*coef) : *coef;
    if (out.empty()) {
      if (*coef < 0) out += "-";
    } else {
      out += *coef < 0 ? " - " : " + ";
    }
    if (*radical == '\0') {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += radical;
    } else {
      out += rational_to_string(mag) + "*" + radical;
    }
  }
  return out;
}

FieldElement FieldElement::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    auto next = text.find(" + ", pos);
    parts.push_back(text.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  if (parts.size() != 4) throw FieldError("expected four terms in \"" + std::string(text) + "\"");
  const std::array<std::string_view, 3> suffix{"*sqrt2", "*sqrt3", "*sqrt6"};
  std::array<Rational, 4> coef;
  coef[0] = parse_rational(parts[0]);
  for (std::size_t i = 1; i < 4; ++i) {
    auto part = parts[i];
    if (part.size() <= suffix[i - 1].size() ||
        part.substr(part.size() - suffix[i - 1].size()) != suffix[i - 1]) {
      throw FieldError("malformed term \"" + std::string(part) + "\"");
    }
    coef[i] = parse_rational(part.substr(0, part.size() - suffix[i - 1].size()));
  }
  return {coef[0], coef[1], coef[2], coef[3]};
}

double FieldElement::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * 1.4142135623730951 +
         c_.convert_to<double>() * 1.7320508075688772 + d_.convert_to<double>() * 2.449489742783178;
}

FieldElement field_arith(const FieldElement& x, const FieldElement& y, FieldOp op) {
  switch (op) {
    case FieldOp::add:
      return x + y;
    case FieldOp::mul:
      return x * y;
    case FieldOp::inv:
      return x.inverse();
    case FieldOp::neg:
      return -x;
  }
  throw FieldError("unknown field operation");
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_pretty(); }

}  // namespace frlogic::quantum
