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

#include "fr/derivation.hpp"

#include <string>
#include <vector>

namespace frlogic::fr {

enum class Format { text, json };

// The depth used for the contextual search: rounds the naive closure needs to
// reach its fixpoint, plus 4.
int block_depth();

// quantum_identities() followed by the derivation checks: the naive
// contradiction and the three agent variants re-validate, the contextual
// search is blocked, and the contextual closure lies inside the naive one.
std::vector<IdentityCheck> all_checks();

// "P(both nonnull) = 1/12 PASS", or "... = 1/6 FAIL (expected 1/12)".
std::string format_check(const IdentityCheck& c);
// Text: one format_check line each. JSON: one record per check with fields
// name, expected, actual, pass.
std::string format_checks(const std::vector<IdentityCheck>& checks, Format fmt);

// "CONTRADICTION for W2@4" followed by the trace, or the trace as JSONL.
std::string format_contradiction(const ContradictionCertificate& cert, Format fmt);
// "BLOCKED at fixpoint (no contradiction derivable)" plus size and depth.
std::string format_block(const BlockCertificate& cert, Format fmt);
std::string format_block(std::size_t fixpoint_size, int depth, int rounds, bool fixpoint, Format fmt);

// One-page verdict report: identities, the naive verdict with its trace and
// the agent variants, the contextual verdict with fixpoint size and depth.
// Throws DerivationError if a certificate cannot be produced.
std::string verdict_report(Format fmt);

}  // namespace frlogic::fr
