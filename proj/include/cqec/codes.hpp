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
#include <utility>
#include <vector>

#include "cqec/circuit.hpp"
#include "cqec/linalg.hpp"
#include "cqec/su2.hpp"

namespace cqec {

enum class CodeFamily { NS3, DFS4, NS5 };

// Wire roles at encode time. A gauge wire accepts an arbitrary input state
// that the collective noise may scramble; a zero wire must enter as |0>;
// data wires carry the protected payload.
enum class WireRole { gauge, zero, data };

// The two symmetry-adapted 3-qubit bases. They span the same irrep copies;
// the redefined one is arranged so that the paired vectors are images of
// each other under -X X X bit reversal, which is what the 3-qubit gate
// list and the 4-qubit construction exploit.
enum class Basis3Variant { original, redefined };

using LabeledVectors = std::vector<std::pair<std::string, Vector>>;

struct CodeSpec {
  CodeFamily family = CodeFamily::NS3;
  std::string name;  // "ns3", "dfs4", "ns5"
  int n = 0;
  int logical_qubits = 0;
  Matrix encoder;
  std::vector<WireRole> layout;     // layout[i] is the role of wire i+1
  LabeledVectors logical_columns;   // logical basis label -> encoder column
  BlockLayout block_layout;         // filled for NS3 only
};

// The eight 3-qubit basis vectors, labeled and listed in encoder column
// order: e_a1, e_b1, e_42, e_41, e_a2, e_b2, e_43, e_44.
LabeledVectors basis3(Basis3Variant variant);

// 8x8 encoder over wires (gauge, zero, data); column k of the matrix is the
// k-th basis3 vector, so |v>|0>|psi> encodes psi into the a/b pair selected
// by v.
CodeSpec build_ue3(Basis3Variant variant);

// 16x16 encoder (X x I8) * CNNN * (H x U_E3), original basis variant inside.
// All of wires 1..3 are zero ancillas, wire 4 is data. Logical columns are
// the two 4-qubit singlet-type states.
CodeSpec build_ue4();

// The four 32-dim logical vectors |00>_L .. |11>_L.
LabeledVectors logical_basis5();

// 32x32 encoder over wires (gauge, zero, zero, data, data). Columns at
// inputs |v>|00>|xy> are the logical vectors (v=0) and their lowering
// partners (v=1); the remaining 24 columns are a deterministic
// Gram-Schmidt completion over computational basis vectors in index order.
CodeSpec build_ue5();

struct GateListPair {
  GateList full;     // matches the 8x8 encoder on every column up to phase
  GateList reduced;  // valid when wire 1 enters as |0>
};

// Gate realizations. Each builder certifies its list against the matrix
// encoder and throws std::runtime_error if the check fails.
GateListPair build_ue3_gatelists();   // against build_ue3(redefined)
GateList build_ue4_gatelist();        // exact on inputs |000psi>
GateList build_ue5_gatelist();        // per-column sign on inputs |v,0,0,x,y>

Matrix encode(const CodeSpec& code, const Matrix& gauge, const Matrix& data);

struct DecodeResult {
  Matrix gauge_out;  // 1x1 trace factor when the code has no gauge wire
  Matrix data_out;
  double product_residual = 0.0;
};

DecodeResult decode(const CodeSpec& code, const Matrix& rho);

std::vector<int> wires_with_role(const CodeSpec& code, WireRole role);

}  // namespace cqec
