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
#include <vector>

#include "cqec/linalg.hpp"

namespace cqec {

enum class Axis { x, y, z };

Matrix pauli(Axis axis);

// rot(axis, theta) = exp(i theta sigma_axis) = cos(theta) I + i sin(theta) sigma.
// Note the +i convention: rot(x, pi/2) = i sigma_x.
Matrix rot(Axis axis, double theta);

struct EulerAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
};

// W = rot(x, theta1) rot(y, theta2) rot(x, theta3).
Matrix euler_recompose(const EulerAngles& e);

// Inverse of euler_recompose on SU(2), canonical branch:
// theta2 in [0, pi/2], theta1 and theta3 in (-pi, pi]. When theta2 is 0 or
// pi/2 the x rotations merge; the degenerate branch puts everything in
// theta1 and fixes theta3 = 0. Requires det = 1 within 1e-10.
EulerAngles euler_decompose(const Matrix& w);

// Divides out the global phase (principal root of det) of a 2x2 unitary,
// returning an SU(2) representative.
Matrix to_su2(const Matrix& w);

// w tensored with itself n times (collective rotation on n qubits).
Matrix collective(const Matrix& w, int n);

struct IrrepBlock {
  int j = 0;             // integer block index, 0 <= j <= n/2
  long long r = 0;       // multiplicity
  int dim = 0;           // irrep dimension n + 1 - 2j  (spin (n - 2j)/2)
};

struct IrrepDecomposition {
  int n = 0;
  std::vector<IrrepBlock> blocks;
};

// Decomposition of (C^2)^{tensor n} under collective SU(2):
// r_0 = 1, dim_0 = n + 1, r_j = C(n,j) - C(n,j-1), dim_j = n + 1 - 2j.
// Valid for 1 <= n <= 30.
IrrepDecomposition multiplicities(int n);

long long binomial(int n, int k);

// Collective lowering operator sum_i |1><0|_i with |0> = spin up (m = +1/2).
Matrix collective_lowering(int n);

// Column bookkeeping for block-structure checks: copies[c][w] is the
// (0-based) column of t holding weight slot w of copy c of the block.
struct BlockLayout {
  struct Entry {
    int j = 0;
    std::vector<std::vector<int>> copies;
  };
  std::vector<Entry> blocks;
};

struct BlockCheckResult {
  bool ok = false;
  double max_off_block = 0.0;       // largest matrix element outside the blocks
  double max_copy_deviation = 0.0;  // largest spread between copies of a block
};

// Checks that t^dagger w^{tensor n} t is block diagonal with identical
// blocks across the copies listed in the layout (the I_r tensor M_d
// pattern). Every column of t must appear exactly once in the layout.
BlockCheckResult verify_block_structure(const Matrix& t, const Matrix& w,
                                        const BlockLayout& layout, double tol);

}  // namespace cqec
