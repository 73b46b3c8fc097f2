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

#include "support/properties.hpp"

#include <gtest/gtest.h>

namespace {

void expect_clean(const props::SuiteResult& r) {
  EXPECT_GE(r.cases, 1000);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
}

}  // namespace

TEST(Properties, FieldAxioms) { expect_clean(props::field_axioms()); }
TEST(Properties, ProjectorIdempotence) { expect_clean(props::projector_idempotence()); }
TEST(Properties, BasisCompleteness) { expect_clean(props::basis_completeness()); }
TEST(Properties, ParsePrintRoundTrip) { expect_clean(props::parse_print_round_trip()); }
TEST(Properties, TraceReplay) { expect_clean(props::trace_replay()); }

// Different seeds exercise different cases.
TEST(Properties, OtherSeeds) {
  expect_clean(props::field_axioms(101));
  expect_clean(props::parse_print_round_trip(102));
}
