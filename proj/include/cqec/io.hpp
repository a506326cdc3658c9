// Copyright 2026 The cqec developers
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

#include <string>

#include "json.hpp"

#include "cqec/channels.hpp"
#include "cqec/circuit.hpp"
#include "cqec/codes.hpp"
#include "cqec/linalg.hpp"
#include "cqec/su2.hpp"
#include "cqec/verify.hpp"

namespace cqec {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// All parsers are strict: a missing or unknown field is an error, never
// silently ignored. Complex numbers are [re, im] pairs throughout.

// {"rows": R, "cols": C, "data": [[re, im], ...]} row-major
ordered_json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// {"dim": N, "amplitudes": [[re, im], ...]}
ordered_json state_to_json(const Vector& v);
Vector state_from_json(const json& j);

// Accepts either a state (turned into its projector, must be normalized
// within 1e-9) or a density matrix (validated).
Matrix density_from_json(const json& j);

// {"n": N, "terms": [{"p": .., "kind": "identity"|"x"|"y"|"z"|"euler"|"matrix",
//   "angle": .. | "angles": [..,..,..] | "matrix": {..}}]}
// x/y/z/euler kinds produce collective (n-fold replicated) rotations; the
// matrix kind embeds a raw 2^n unitary as given.
MixedUnitaryChannel channel_from_json(const json& j);

// {"n": N, "gates": [{"kind": .., "controls": [{"wire": i, "polarity":
//   "filled"|"empty"}], "targets": [..], "payload": {..}?}]}
ordered_json gatelist_to_json(const GateList& list);
GateList gatelist_from_json(const json& j);

ordered_json report_to_json(const VerificationReport& report);

ordered_json logical_basis_to_json(const LabeledVectors& basis);

// CSV, '.' decimal, header line included, '\n' terminated.
std::string multiplicities_csv(const IrrepDecomposition& d);
std::string rate_csv(const std::vector<RateRow>& rows);

// %.17g, enough digits to round-trip a double exactly.
std::string format_double(double x);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace cqec
