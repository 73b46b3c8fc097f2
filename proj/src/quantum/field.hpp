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

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frlogic::quantum {

using Rational = boost::multiprecision::cpp_rational;

class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact element a + b*sqrt2 + c*sqrt3 + d*sqrt6 of Q(sqrt2, sqrt3).
//
// {1, sqrt2, sqrt3, sqrt6} is a Q-basis of the field, so equality and the
// zero test are component-wise. Every element is real; conjugation is the
// identity.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  FieldElement(long long n) : a_(n) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  FieldElement(Rational q) : a_(std::move(q)) {}

  static FieldElement frac(long long num, long long den);
  static FieldElement sqrt2() { return {0, 1, 0, 0}; }
  static FieldElement sqrt3() { return {0, 0, 1, 0}; }
  static FieldElement sqrt6() { return {0, 0, 0, 1}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

  // Throws FieldError on zero.
  FieldElement inverse() const;

  // -1, 0 or +1, decided exactly.
  int sign() const;

  FieldElement operator-() const { return {-a_, -b_, -c_, -d_}; }
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
  friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
  friend FieldElement operator*(FieldElement x, const FieldElement& y) { return x *= y; }
  friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }

  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator<(const FieldElement& x, const FieldElement& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const FieldElement& x, const FieldElement& y) { return (x - y).sign() <= 0; }

  // Canonical form "a + b*sqrt2 + c*sqrt3 + d*sqrt6", each coefficient "p/q"
  // or "p" when integral. All four terms are always present.
  std::string to_string() const;
  // Short human form with zero terms dropped, e.g. "1/12" or "1/6*sqrt3".
  std::string to_pretty() const;
  // Inverse of to_string(). Throws FieldError on malformed input.
  static FieldElement parse(std::string_view text);

  double to_double() const;

 private:
  Rational a_{0};
  Rational b_{0};
  Rational c_{0};
  Rational d_{0};
};

enum class FieldOp { add, mul, inv, neg };

// Single entry point over the four field operations; y is ignored for the
// unary ones.
FieldElement field_arith(const FieldElement& x, const FieldElement& y, FieldOp op);

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

std::string rational_to_string(const Rational& q);

}  // namespace frlogic::quantum
