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

// Independent floating-point model of the two labs, written against the
// closed-form states only. Index bit 3..0 = S1, F1, S2, F2 with phi / xi = 0
// and psi / zeta = 1.
#pragma once

#include <array>
#include <cmath>

namespace oracle {

using Vec16 = std::array<double, 16>;
using Vec4 = std::array<double, 4>;  // one lab: bit 1 = S, bit 0 = F

inline int index(int s1, int f1, int s2, int f2) { return s1 << 3 | f1 << 2 | s2 << 1 | f2; }

// (phi xi phi xi + psi zeta phi xi + psi zeta psi zeta) / sqrt3
inline Vec16 global_state() {
  Vec16 v{};
  const double a = 1.0 / std::sqrt(3.0);
  v[index(0, 0, 0, 0)] = a;
  v[index(1, 1, 0, 0)] = a;
  v[index(1, 1, 1, 1)] = a;
  return v;
}

// W basis of one lab, chi second.
inline std::array<Vec4, 4> w_basis() {
  const double h = 1.0 / std::sqrt(2.0);
  // lab index: S << 1 | F
  return {{
      {h, 0, 0, h},    // (phi xi + psi zeta)/sqrt2
      {h, 0, 0, -h},   // chi
      {0, h, h, 0},    // (psi xi + phi zeta)/sqrt2
      {0, -h, h, 0},   // (psi xi - phi zeta)/sqrt2
  }};
}

// Amplitude of |u1> (x) |u2> in v.
inline double overlap(const Vec4& u1, const Vec4& u2, const Vec16& v) {
  double s = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) s += u1[i] * u2[j] * v[i << 2 | j];
  }
  return s;
}

// P(W1 = a, W2 = b) with a, b indexing w_basis().
inline double w_joint(int a, int b) {
  const auto w = w_basis();
  const double x = overlap(w[a], w[b], global_state());
  return x * x;
}

inline double w1_nonnull() {
  double p = 0;
  for (int b = 0; b < 4; ++b) p += w_joint(1, b);
  return p;
}

}  // namespace oracle
