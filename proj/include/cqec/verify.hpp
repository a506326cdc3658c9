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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "cqec/channels.hpp"
#include "cqec/codes.hpp"
#include "cqec/linalg.hpp"

namespace cqec {

// Outcome of one verification suite. pass is equivalent to
// max_residual < tolerance; details holds one record per trial or per check.
// For the negative control the scalar is the minimum recovered fidelity and
// the tolerance is the detection threshold (the run passes when corruption
// is visible, i.e. the fidelity dips below it).
struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  nlohmann::ordered_json details = nlohmann::ordered_json::array();
};

// Residual of the gauge-factorization identity for the 3-qubit code: decode
// the channel output and compare with the predicted product state, where the
// gauge factor absorbs the single-qubit images of the channel terms.
double check_theorem1(const std::array<double, 4>& p, double alpha, double beta,
                      double gamma, const Matrix& rho_a, const Matrix& rho_data,
                      Basis3Variant variant = Basis3Variant::original);

VerificationReport suite_theorem1(int trials, std::uint64_t seed);
VerificationReport suite_ns3(int trials, std::uint64_t seed);
VerificationReport suite_dfs4(int trials, std::uint64_t seed);
VerificationReport suite_ns5(int trials, std::uint64_t seed);
VerificationReport suite_blocks(int trials, std::uint64_t seed);
VerificationReport suite_entropy(int trials, std::uint64_t seed);
VerificationReport suite_gatelist(int trials, std::uint64_t seed);
VerificationReport suite_rate(int trials, std::uint64_t seed);
VerificationReport suite_structural(int trials, std::uint64_t seed);

// Deliberately non-collective noise (a bit flip on the data wire half the
// time). Passes when the corruption is detected: minimum recovered fidelity
// over the trials falls below 0.99.
VerificationReport negative_control(int trials, std::uint64_t seed);

std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& name, int trials,
                             std::uint64_t seed);

std::string summary_line(const VerificationReport& report);

struct RateRow {
  int n = 0;
  int m = 0;
  long long dim = 0;  // C(n,m) - C(n,m-1)
  int k = 0;          // floor(log2(dim))
  bool k_exceeds_m = false;
};

// One row per odd n = 2m+1, 3 <= n <= n_max (n_max <= 40).
std::vector<RateRow> code_rate_table(int n_max);

}  // namespace cqec
