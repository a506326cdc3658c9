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

#include "cqec/circuit.hpp"

#include <cmath>
#include <stdexcept>

namespace cqec {

namespace {

bool is_flip_kind(GateKind k) {
  return k == GateKind::X || k == GateKind::CNOT || k == GateKind::CNNN;
}

Matrix fixed_payload(GateKind k) {
  switch (k) {
    case GateKind::H:
      return hadamard();
    case GateKind::G1:
      return g1_matrix();
    case GateKind::G2:
      return g2_matrix();
    default:
      throw std::logic_error("fixed_payload: kind has no fixed payload");
  }
}

}  // namespace

Matrix hadamard() {
  Matrix m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

Matrix g1_matrix() {
  Matrix m(2, 2);
  const double s = 1.0 / std::sqrt(3.0);
  m << s, std::sqrt(2.0) * s, -std::sqrt(2.0) * s, s;
  return m;
}

Matrix g2_matrix() {
  Matrix m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, -s, s;
  return m;
}

Gate make_gate(GateKind kind, std::vector<Control> controls,
               std::vector<int> targets, Matrix payload) {
  Gate g;
  g.kind = kind;
  g.controls = std::move(controls);
  g.targets = std::move(targets);
  g.payload = std::move(payload);
  return g;
}

void validate_gate(int n, const Gate& gate) {
  if (n < 1) throw std::invalid_argument("gate: wire count must be positive");
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto claim = [&](int wire) {
    if (wire < 1 || wire > n) {
      throw std::invalid_argument("gate: wire index out of range");
    }
    if (used[wire]) {
      throw std::invalid_argument("gate: wire used more than once");
    }
    used[wire] = true;
  };
  for (const auto& c : gate.controls) claim(c.wire);
  for (int t : gate.targets) claim(t);

  if (gate.targets.empty()) {
    throw std::invalid_argument("gate: at least one target required");
  }
  switch (gate.kind) {
    case GateKind::H:
    case GateKind::G1:
    case GateKind::G2:
      if (gate.targets.size() != 1) {
        throw std::invalid_argument("gate: single-target kind with several targets");
      }
      break;
    case GateKind::X:
      break;
    case GateKind::CNOT:
      if (gate.controls.size() != 1 || gate.targets.size() != 1) {
        throw std::invalid_argument("gate: CNOT takes one control and one target");
      }
      break;
    case GateKind::CNNN:
      if (gate.controls.size() != 1) {
        throw std::invalid_argument("gate: CNNN takes exactly one control");
      }
      break;
    case GateKind::CU:
      if (gate.targets.size() != 1) {
        throw std::invalid_argument("gate: CU takes exactly one target");
      }
      if (gate.payload.rows() != 2 || gate.payload.cols() != 2) {
        throw std::invalid_argument("gate: CU payload must be 2x2");
      }
      if (!is_unitary(gate.payload, 1e-12)) {
        throw std::invalid_argument("gate: CU payload must be unitary");
      }
      break;
  }
  if (gate.kind != GateKind::CU && gate.payload.size() != 0) {
    throw std::invalid_argument("gate: payload only allowed on controlled-U");
  }
}

Matrix gate_matrix(int n, const Gate& gate) {
  validate_gate(n, gate);
  const long dim = 1L << n;
  Matrix out = Matrix::Zero(dim, dim);

  long flip_mask = 0;
  Matrix payload;
  long target_mask = 0;
  if (is_flip_kind(gate.kind)) {
    for (int t : gate.targets) flip_mask |= 1L << (n - t);
  } else {
    payload = gate.kind == GateKind::CU ? gate.payload : fixed_payload(gate.kind);
    target_mask = 1L << (n - gate.targets.front());
  }

  for (long b = 0; b < dim; ++b) {
    bool fire = true;
    for (const auto& c : gate.controls) {
      const bool bit = (b >> (n - c.wire)) & 1;
      if (bit != c.filled) {
        fire = false;
        break;
      }
    }
    if (!fire) {
      out(b, b) = 1.0;
    } else if (is_flip_kind(gate.kind)) {
      out(b ^ flip_mask, b) = 1.0;
    } else {
      const int in_bit = (b & target_mask) ? 1 : 0;
      out(b & ~target_mask, b) += payload(0, in_bit);
      out(b | target_mask, b) += payload(1, in_bit);
    }
  }
  return out;
}

Matrix composite(const GateList& list) {
  if (list.n < 1) throw std::invalid_argument("composite: wire count must be positive");
  const long dim = 1L << list.n;
  Matrix m = Matrix::Identity(dim, dim);
  for (const auto& g : list.gates) m = gate_matrix(list.n, g) * m;
  return m;
}

std::string gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "H";
    case GateKind::X:
      return "X";
    case GateKind::G1:
      return "G1";
    case GateKind::G2:
      return "G2";
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::CNNN:
      return "CNNN";
    case GateKind::CU:
      return "controlled-U";
  }
  throw std::logic_error("gate_kind_name: unreachable");
}

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "H") return GateKind::H;
  if (name == "X") return GateKind::X;
  if (name == "G1") return GateKind::G1;
  if (name == "G2") return GateKind::G2;
  if (name == "CNOT") return GateKind::CNOT;
  if (name == "CNNN") return GateKind::CNNN;
  if (name == "controlled-U") return GateKind::CU;
  throw std::invalid_argument("unknown gate kind: " + name);
}

ColumnPhaseMatch column_phase_match(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("column_phase_match: dimension mismatch");
  }
  ColumnPhaseMatch res;
  res.phases.resize(b.cols());
  for (long j = 0; j < b.cols(); ++j) {
    long ref = 0;
    double best = 0.0;
    for (long i = 0; i < b.rows(); ++i) {
      const double mag = std::abs(b(i, j));
      if (mag > best) {
        best = mag;
        ref = i;
      }
    }
    cdouble phase(1.0, 0.0);
    double residual;
    if (best < 1e-12) {
      residual = a.col(j).norm();
    } else {
      phase = a(ref, j) / b(ref, j);
      residual = (a.col(j) - phase * b.col(j)).norm();
      residual = std::max(residual, std::abs(std::abs(phase) - 1.0));
    }
    res.phases[j] = phase;
    res.max_residual = std::max(res.max_residual, residual);
  }
  res.ok = res.max_residual < tol;
  return res;
}

}  // namespace cqec
