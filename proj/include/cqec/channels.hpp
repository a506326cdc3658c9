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
#include <vector>

#include "cqec/linalg.hpp"
#include "cqec/su2.hpp"

namespace cqec {

struct ChannelTerm {
  double p = 0.0;
  Matrix u;
};

// A probabilistic mixture of unitaries, rho -> sum_i p_i u_i rho u_i^dagger.
// Probabilities may sum to less than 1 (trace-decreasing map); that case is
// flagged so downstream validity checks can relax the trace requirement.
struct MixedUnitaryChannel {
  int n = 0;
  std::vector<ChannelTerm> terms;
  double total_probability = 0.0;
  bool subnormalized = false;
};

// Validates probabilities (each >= 0, sum <= 1) and unitarity of every term.
MixedUnitaryChannel make_channel(int n, std::vector<ChannelTerm> terms);

// Four-term collective channel: identity plus collective x, y, z rotations
// by the given angles. Terms with probability exactly 0 are dropped.
MixedUnitaryChannel theorem1_channel(const std::array<double, 4>& p, double alpha,
                                     double beta, double gamma, int n);

// Arbitrary mixture of collective rotations given by Euler angle triples.
MixedUnitaryChannel collective_channel(
    const std::vector<std::pair<double, EulerAngles>>& entries, int n);

Matrix apply_channel(const MixedUnitaryChannel& ch, const Matrix& rho);

// Product channel: apply_channel(compose(a, b), rho) = apply_channel(a, apply_channel(b, rho)).
MixedUnitaryChannel compose(const MixedUnitaryChannel& a,
                            const MixedUnitaryChannel& b);

}  // namespace cqec
