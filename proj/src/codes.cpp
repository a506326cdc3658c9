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

#include "cqec/codes.hpp"

#include <cmath>
#include <stdexcept>

namespace cqec {

namespace {

Vector ket(int dim, std::initializer_list<std::pair<int, double>> amps) {
  Vector v = Vector::Zero(dim);
  for (const auto& [index, amp] : amps) v(index) = amp;
  return v;
}

const double kS2 = 1.0 / std::sqrt(2.0);
const double kS3 = 1.0 / std::sqrt(3.0);
const double kS6 = 1.0 / std::sqrt(6.0);

Vector find_label(const LabeledVectors& vectors, const std::string& label) {
  for (const auto& [name, v] : vectors) {
    if (name == label) return v;
  }
  throw std::logic_error("label not found: " + label);
}

void place_columns(Matrix& u, const std::vector<int>& cols,
                   const LabeledVectors& vectors) {
  for (std::size_t k = 0; k < cols.size(); ++k) u.col(cols[k]) = vectors[k].second;
}

// The full 3-wire list realizes the redefined-basis encoder up to per-column
// phases; this wrapper pins those phases down on the inputs |b1, 0, b3>.
// A sign flip on the |0,0,x> inputs first, then the full list, then a swap
// of the last two wires. The result acts as the original-variant encoder,
// with phase exactly +1, on every input whose middle wire is |0>. That
// exactness is what lets the wrapped block sit inside a larger circuit where
// its first wire carries a superposition.
std::vector<Gate> module_gates(int w1, int w2, int w3);

std::vector<Gate> ue3_full_gates(int w1, int w2, int w3) {
  std::vector<Gate> g;
  auto cnot = [](int c, int t, bool filled = true) {
    return make_gate(GateKind::CNOT, {{c, filled}}, {t});
  };
  // The first two gates only matter when wire 1 starts in |1>; the reduced
  // list drops them together with the trailing sign fix.
  g.push_back(cnot(w1, w2));
  g.push_back(cnot(w1, w3));
  g.push_back(cnot(w3, w1));
  g.push_back(cnot(w1, w3));
  g.push_back(make_gate(GateKind::G1, {{w1, true}}, {w2}));
  g.push_back(cnot(w2, w1));
  g.push_back(cnot(w2, w3, false));
  g.push_back(make_gate(GateKind::G2, {{w3, true}}, {w1}));
  g.push_back(cnot(w1, w3));
  // H / doubly controlled X / H: flips the sign of the |011> component,
  // which no output reachable from the wire-1 = |0> slice contains.
  g.push_back(make_gate(GateKind::H, {}, {w3}));
  g.push_back(make_gate(GateKind::X, {{w1, false}, {w2, true}}, {w3}));
  g.push_back(make_gate(GateKind::H, {}, {w3}));
  return g;
}

std::vector<Gate> module_gates(int w1, int w2, int w3) {
  Matrix sign_fix(2, 2);
  sign_fix << -1.0, 0.0, 0.0, 1.0;
  std::vector<Gate> g;
  g.push_back(make_gate(GateKind::CU, {{w1, false}, {w2, false}}, {w3}, sign_fix));
  auto core = ue3_full_gates(w1, w2, w3);
  g.insert(g.end(), core.begin(), core.end());
  g.push_back(make_gate(GateKind::CNOT, {{w2, true}}, {w3}));
  g.push_back(make_gate(GateKind::CNOT, {{w3, true}}, {w2}));
  g.push_back(make_gate(GateKind::CNOT, {{w2, true}}, {w3}));
  return g;
}

}  // namespace

LabeledVectors basis3(Basis3Variant variant) {
  LabeledVectors v;
  if (variant == Basis3Variant::original) {
    v.emplace_back("e_a1", ket(8, {{4, kS2}, {2, -kS2}}));
    v.emplace_back("e_b1", ket(8, {{4, kS6}, {2, kS6}, {1, -2.0 * kS6}}));
    v.emplace_back("e_42", ket(8, {{4, kS3}, {2, kS3}, {1, kS3}}));
    v.emplace_back("e_41", ket(8, {{0, 1.0}}));
    v.emplace_back("e_a2", ket(8, {{5, kS2}, {3, -kS2}}));
    v.emplace_back("e_b2", ket(8, {{6, 2.0 * kS6}, {3, -kS6}, {5, -kS6}}));
    v.emplace_back("e_43", ket(8, {{3, kS3}, {5, kS3}, {6, kS3}}));
    v.emplace_back("e_44", ket(8, {{7, 1.0}}));
  } else {
    v.emplace_back("e_a1", ket(8, {{4, kS2}, {1, -kS2}}));
    v.emplace_back("e_b1", ket(8, {{4, kS6}, {1, kS6}, {2, -2.0 * kS6}}));
    v.emplace_back("e_42", ket(8, {{7, 1.0}}));
    v.emplace_back("e_41", ket(8, {{4, kS3}, {1, kS3}, {2, kS3}}));
    v.emplace_back("e_a2", ket(8, {{6, kS2}, {3, -kS2}}));
    v.emplace_back("e_b2", ket(8, {{5, 2.0 * kS6}, {3, -kS6}, {6, -kS6}}));
    v.emplace_back("e_43", ket(8, {{0, -1.0}}));
    v.emplace_back("e_44", ket(8, {{3, -kS3}, {6, -kS3}, {5, -kS3}}));
  }
  return v;
}

CodeSpec build_ue3(Basis3Variant variant) {
  const LabeledVectors vectors = basis3(variant);
  Matrix u(8, 8);
  for (int k = 0; k < 8; ++k) u.col(k) = vectors[k].second;
  if (!is_unitary(u, 1e-12)) {
    throw std::logic_error("build_ue3: basis is not orthonormal");
  }

  CodeSpec spec;
  spec.family = CodeFamily::NS3;
  spec.name = "ns3";
  spec.n = 3;
  spec.logical_qubits = 1;
  spec.encoder = u;
  spec.layout = {WireRole::gauge, WireRole::zero, WireRole::data};
  spec.logical_columns.emplace_back("0_L", find_label(vectors, "e_a1"));
  spec.logical_columns.emplace_back("1_L", find_label(vectors, "e_b1"));
  spec.block_layout.blocks.push_back({0, {{3, 2, 6, 7}}});
  spec.block_layout.blocks.push_back({1, {{0, 4}, {1, 5}}});
  return spec;
}

CodeSpec build_ue4() {
  const CodeSpec inner = build_ue3(Basis3Variant::original);
  const Matrix h = hadamard();
  const Matrix cnnn =
      gate_matrix(4, make_gate(GateKind::CNNN, {{1, true}}, {2, 3, 4}));
  Matrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  const Matrix u = kron(x, Matrix::Identity(8, 8)) * cnnn * kron(h, inner.encoder);
  if (!is_unitary(u, 1e-12)) {
    throw std::logic_error("build_ue4: encoder is not unitary");
  }

  // Logical states built directly: an equal split of |1>|e1> and the
  // bit-reversed |0> branch. e1 runs over the pair vectors e_a1, e_b1.
  const LabeledVectors vectors = basis3(Basis3Variant::original);
  const Matrix flip3 = collective(x, 3);
  LabeledVectors logical;
  const Vector one = ket(2, {{1, 1.0}});
  const Vector zero = ket(2, {{0, 1.0}});
  for (const auto& [data_label, e1] :
       {std::pair<std::string, std::string>{"0_L", "e_a1"}, {"1_L", "e_b1"}}) {
    const Vector e = find_label(vectors, e1);
    Vector l = kS2 * (kron(one, e) + kron(zero, Vector(flip3 * e)));
    logical.emplace_back(data_label, l);
  }
  if ((u.col(0) - logical[0].second).norm() > 1e-12 ||
      (u.col(1) - logical[1].second).norm() > 1e-12) {
    throw std::logic_error("build_ue4: logical columns disagree with encoder");
  }

  CodeSpec spec;
  spec.family = CodeFamily::DFS4;
  spec.name = "dfs4";
  spec.n = 4;
  spec.logical_qubits = 1;
  spec.encoder = u;
  spec.layout = {WireRole::zero, WireRole::zero, WireRole::zero, WireRole::data};
  spec.logical_columns = std::move(logical);
  return spec;
}

LabeledVectors logical_basis5() {
  const LabeledVectors vectors = basis3(Basis3Variant::original);
  const Vector ea1 = find_label(vectors, "e_a1");
  const Vector eb1 = find_label(vectors, "e_b1");
  const Vector ea2 = find_label(vectors, "e_a2");
  const Vector eb2 = find_label(vectors, "e_b2");
  const Vector p00 = ket(4, {{0, 1.0}});
  const Vector p01 = ket(4, {{1, 1.0}});
  const Vector p10 = ket(4, {{2, 1.0}});

  LabeledVectors basis;
  basis.emplace_back("00_L", Vector(kS2 * (kron(p01, ea1) - kron(p10, ea1))));
  basis.emplace_back("01_L", Vector(kS2 * (kron(p01, eb1) - kron(p10, eb1))));
  basis.emplace_back(
      "10_L", Vector(kS6 * (kron(p01, ea1) + kron(p10, ea1) - 2.0 * kron(p00, ea2))));
  basis.emplace_back(
      "11_L", Vector(kS6 * (kron(p01, eb1) + kron(p10, eb1) - 2.0 * kron(p00, eb2))));
  return basis;
}

CodeSpec build_ue5() {
  const LabeledVectors logical = logical_basis5();
  const Matrix lowering = collective_lowering(5);

  Matrix u = Matrix::Zero(32, 32);
  const std::vector<int> logical_cols = {0, 1, 2, 3};
  const std::vector<int> partner_cols = {16, 17, 18, 19};
  place_columns(u, logical_cols, logical);
  for (int k = 0; k < 4; ++k) {
    Vector partner = lowering * logical[k].second;
    partner.normalize();
    u.col(partner_cols[k]) = partner;
  }

  // Deterministic completion: sweep computational basis vectors in index
  // order, keep what survives projection, fill free columns in ascending
  // order; a second orthogonalization sweep scrubs roundoff.
  std::vector<int> placed = {0, 1, 2, 3, 16, 17, 18, 19};
  std::vector<int> free_slots;
  for (int c = 0; c < 32; ++c) {
    bool taken = false;
    for (int p : placed) taken = taken || p == c;
    if (!taken) free_slots.push_back(c);
  }
  std::size_t next = 0;
  for (int i = 0; i < 32 && next < free_slots.size(); ++i) {
    Vector r = basis_ket(5, i);
    for (int p : placed) r -= u.col(p).dot(r) * u.col(p);
    if (r.norm() > 1e-6) {
      r.normalize();
      const int slot = free_slots[next++];
      u.col(slot) = r;
      placed.push_back(slot);
    }
  }
  if (next != free_slots.size()) {
    throw std::logic_error("build_ue5: completion did not fill the basis");
  }
  for (std::size_t k = 8; k < placed.size(); ++k) {
    Vector r = u.col(placed[k]);
    for (std::size_t p = 0; p < k; ++p) {
      r -= u.col(placed[p]).dot(r) * u.col(placed[p]);
    }
    r.normalize();
    u.col(placed[k]) = r;
  }
  if (!is_unitary(u, 1e-12)) {
    throw std::logic_error("build_ue5: encoder is not unitary");
  }

  CodeSpec spec;
  spec.family = CodeFamily::NS5;
  spec.name = "ns5";
  spec.n = 5;
  spec.logical_qubits = 2;
  spec.encoder = u;
  spec.layout = {WireRole::gauge, WireRole::zero, WireRole::zero,
                 WireRole::data, WireRole::data};
  spec.logical_columns = logical;
  return spec;
}

GateListPair build_ue3_gatelists() {
  GateListPair pair;
  pair.full.n = 3;
  pair.full.gates = ue3_full_gates(1, 2, 3);
  pair.reduced.n = 3;
  const auto& g = pair.full.gates;
  pair.reduced.gates.assign(g.begin() + 2, g.end() - 3);

  const Matrix reference = build_ue3(Basis3Variant::redefined).encoder;
  const Matrix full = composite(pair.full);
  const auto match = column_phase_match(full, reference, 1e-10);
  if (!match.ok) {
    throw std::runtime_error("build_ue3_gatelists: full list fails column check");
  }
  const Matrix reduced = composite(pair.reduced);
  for (int col = 0; col < 4; ++col) {
    if ((reduced.col(col) - full.col(col)).norm() > 1e-12) {
      throw std::runtime_error("build_ue3_gatelists: reduced list disagrees on the |0> slice");
    }
  }
  return pair;
}

GateList build_ue4_gatelist() {
  GateList list;
  list.n = 4;
  list.gates = module_gates(2, 3, 4);
  list.gates.push_back(make_gate(GateKind::H, {}, {1}));
  list.gates.push_back(make_gate(GateKind::CNNN, {{1, true}}, {2, 3, 4}));
  list.gates.push_back(make_gate(GateKind::X, {}, {1}));

  const CodeSpec ref = build_ue4();
  const Matrix u = composite(list);
  for (int col = 0; col < 2; ++col) {
    if ((u.col(col) - ref.encoder.col(col)).norm() > 1e-12) {
      throw std::runtime_error("build_ue4_gatelist: encoding columns disagree");
    }
  }
  return list;
}

GateList build_ue5_gatelist() {
  GateList list;
  list.n = 5;
  list.gates.push_back(make_gate(GateKind::CNOT, {{4, true}}, {3}));
  list.gates.push_back(make_gate(GateKind::CNOT, {{3, true}}, {4}));
  const auto first = module_gates(1, 2, 3);
  const auto second = module_gates(3, 4, 5);
  list.gates.insert(list.gates.end(), first.begin(), first.end());
  list.gates.insert(list.gates.end(), second.begin(), second.end());

  const CodeSpec ref = build_ue5();
  const Matrix u = composite(list);
  for (int v = 0; v < 2; ++v) {
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        const int col = v * 16 + x * 2 + y;
        const double sign = x == 0 ? -1.0 : 1.0;
        if ((u.col(col) - sign * ref.encoder.col(col)).norm() > 1e-12) {
          throw std::runtime_error("build_ue5_gatelist: encoding columns disagree");
        }
      }
    }
  }
  return list;
}

std::vector<int> wires_with_role(const CodeSpec& code, WireRole role) {
  std::vector<int> wires;
  for (int i = 0; i < code.n; ++i) {
    if (code.layout[i] == role) wires.push_back(i + 1);
  }
  return wires;
}

Matrix encode(const CodeSpec& code, const Matrix& gauge, const Matrix& data) {
  const auto gauge_wires = wires_with_role(code, WireRole::gauge);
  const auto zero_wires = wires_with_role(code, WireRole::zero);
  const auto data_wires = wires_with_role(code, WireRole::data);

  // All layouts group the wires as gauge*, zero*, data* from the top.
  for (std::size_t i = 1; i < code.layout.size(); ++i) {
    if (code.layout[i] < code.layout[i - 1]) {
      throw std::logic_error("encode: unsupported wire layout");
    }
  }

  Matrix input = Matrix::Identity(1, 1);
  if (gauge_wires.empty()) {
    const bool trivial =
        gauge.size() == 0 ||
        (gauge.rows() == 1 && gauge.cols() == 1 &&
         std::abs(gauge(0, 0) - cdouble(1.0, 0.0)) <= 1e-9);
    if (!trivial) {
      throw std::invalid_argument(
          "encode: this code has no gauge wire; pass an empty gauge state");
    }
  } else {
    const long want = 1L << gauge_wires.size();
    if (gauge.rows() != want || gauge.cols() != want) {
      throw std::invalid_argument("encode: gauge state has the wrong dimension");
    }
    require_valid_density(gauge, "encode gauge state");
    input = gauge;
  }
  if (!zero_wires.empty()) {
    input = kron(input, zero_projector(static_cast<int>(zero_wires.size())));
  }
  const long want_data = 1L << data_wires.size();
  if (data.rows() != want_data || data.cols() != want_data) {
    throw std::invalid_argument("encode: data state has the wrong dimension");
  }
  require_valid_density(data, "encode data state");
  input = kron(input, data);

  return code.encoder * input * dagger(code.encoder);
}

DecodeResult decode(const CodeSpec& code, const Matrix& rho) {
  const long dim = 1L << code.n;
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("decode: state has the wrong dimension");
  }
  const Matrix m = dagger(code.encoder) * rho * code.encoder;

  const auto gauge_wires = wires_with_role(code, WireRole::gauge);
  const auto zero_wires = wires_with_role(code, WireRole::zero);
  const auto data_wires = wires_with_role(code, WireRole::data);

  DecodeResult out;
  out.gauge_out = partial_trace(m, gauge_wires, code.n);
  out.data_out = partial_trace(m, data_wires, code.n);

  Matrix expected = gauge_wires.empty() ? Matrix::Identity(1, 1) : out.gauge_out;
  if (!zero_wires.empty()) {
    expected = kron(expected, zero_projector(static_cast<int>(zero_wires.size())));
  }
  expected = kron(expected, out.data_out);
  out.product_residual = frobenius_distance(m, expected);
  return out;
}

}  // namespace cqec
