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

#include <cstdint>
#include <random>

#include "cqec/linalg.hpp"

namespace cqec {

// All sampling is built on mt19937_64 (whose output sequence is fixed by the
// standard) with hand-rolled transforms, so seeded results are reproducible
// bit-for-bit across platforms. std::*_distribution is implementation
// defined and deliberately avoided.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, 1).
  double uniform();
  // Uniform in [lo, hi).
  double uniform(double lo, double hi);
  // Standard normal via Box-Muller.
  double gauss();
  cdouble cgauss();

  // Haar-distributed element of SU(2).
  Matrix haar_su2();
  // Normalized random pure state of dimension dim.
  Vector random_pure(int dim);
  // Random full-rank density matrix (Wishart / trace normalized).
  Matrix random_density(int dim);
  Matrix random_pure_density(int dim);

 private:
  std::mt19937_64 eng_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Deterministic per-trial seed derivation for a run seeded with `seed`.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace cqec
