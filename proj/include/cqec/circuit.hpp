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
#include <vector>

#include "cqec/linalg.hpp"

namespace cqec {

// Gate vocabulary. H, G1, G2 carry fixed 2x2 payloads; X flips every target
// bit; CNOT and CNNN are X with one control (CNNN fans out to several
// targets); CU applies an explicit 2x2 payload to a single target.
enum class GateKind { H, X, G1, G2, CNOT, CNNN, CU };

// A control fires on |1> when filled, on |0> when empty.
struct Control {
  int wire = 0;  // 1-based, wire 1 = top = most significant bit
  bool filled = true;
};

struct Gate {
  GateKind kind = GateKind::X;
  std::vector<Control> controls;
  std::vector<int> targets;
  Matrix payload;  // 2x2, CU only
};

// Gates are listed in temporal order: gates[0] acts first, so the composite
// matrix is gates.back() * ... * gates[0].
struct GateList {
  int n = 0;
  std::vector<Gate> gates;
};

Matrix hadamard();
Matrix g1_matrix();  // (1/sqrt3) [[1, sqrt2], [-sqrt2, 1]]
Matrix g2_matrix();  // (1/sqrt2) [[1, 1], [-1, 1]]

Gate make_gate(GateKind kind, std::vector<Control> controls,
               std::vector<int> targets, Matrix payload = Matrix());

// Throws invalid_argument if the gate is malformed for an n-wire circuit.
void validate_gate(int n, const Gate& gate);

Matrix gate_matrix(int n, const Gate& gate);

Matrix composite(const GateList& list);

std::string gate_kind_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

struct ColumnPhaseMatch {
  bool ok = false;
  double max_residual = 0.0;
  std::vector<cdouble> phases;  // phase per column, a(:,j) = phase_j * b(:,j)
};

// Checks a = b up to a unit-modulus phase per column.
ColumnPhaseMatch column_phase_match(const Matrix& a, const Matrix& b, double tol);

}  // namespace cqec
