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

#include <cmath>
#include <complex>

#include <catch2/catch_amalgamated.hpp>

#include "cqec/circuit.hpp"
#include "cqec/codes.hpp"
#include "cqec/rng.hpp"
#include "cqec/su2.hpp"

using namespace cqec;

namespace {

Matrix proj(int bit) {
  Matrix p = Matrix::Zero(2, 2);
  p(bit, bit) = 1.0;
  return p;
}

}  // namespace

TEST_CASE("fixed gate payloads") {
  const double s2 = 1.0 / std::sqrt(2.0), s3 = 1.0 / std::sqrt(3.0);
  const Matrix h = hadamard();
  CHECK(std::abs(h(0, 0) - s2) < 1e-15);
  CHECK(std::abs(h(1, 1) + s2) < 1e-15);
  const Matrix g1 = g1_matrix();
  CHECK(std::abs(g1(0, 0) - s3) < 1e-15);
  CHECK(std::abs(g1(0, 1) - s3 * std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(g1(1, 0) + s3 * std::sqrt(2.0)) < 1e-15);
  const Matrix g2 = g2_matrix();
  CHECK(std::abs(g2(0, 0) - s2) < 1e-15);
  CHECK(std::abs(g2(1, 0) + s2) < 1e-15);
  for (const Matrix& m : {g1, g2, h}) {
    CHECK(is_unitary(m, 1e-13));
  }
  // Both derived payloads are real rotations, and conjugating by a bit flip
  // inverts them.
  const Matrix x = pauli(Axis::x);
  CHECK((dagger(g1) - x * g1 * x).norm() < 1e-14);
  CHECK((dagger(g2) - x * g2 * x).norm() < 1e-14);
}

TEST_CASE("single-target gates act on the addressed wire only") {
  const Matrix i2 = Matrix::Identity(2, 2);
  const Matrix h = hadamard();
  CHECK((gate_matrix(2, make_gate(GateKind::H, {}, {2})) - kron(i2, h)).norm() < 1e-14);
  CHECK((gate_matrix(2, make_gate(GateKind::H, {}, {1})) - kron(h, i2)).norm() < 1e-14);
  CHECK((gate_matrix(3, make_gate(GateKind::G1, {}, {2})) -
         kron(i2, kron(g1_matrix(), i2)))
            .norm() < 1e-14);
}

TEST_CASE("bit-flip gates permute basis states") {
  const Matrix x1 = gate_matrix(2, make_gate(GateKind::X, {}, {1}));
  // |00> -> |10>, so column 0 has its 1 in row 2.
  CHECK(std::abs(x1(2, 0) - 1.0) < 1e-15);
  CHECK(std::abs(x1(0, 2) - 1.0) < 1e-15);
  CHECK(std::abs(x1(3, 1) - 1.0) < 1e-15);

  const Matrix cnot = gate_matrix(2, make_gate(GateKind::CNOT, {{1, true}}, {2}));
  CHECK(std::abs(cnot(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(cnot(1, 1) - 1.0) < 1e-15);
  CHECK(std::abs(cnot(3, 2) - 1.0) < 1e-15);  // |10> -> |11>
  CHECK(std::abs(cnot(2, 3) - 1.0) < 1e-15);

  const Matrix cnot0 = gate_matrix(2, make_gate(GateKind::CNOT, {{1, false}}, {2}));
  CHECK(std::abs(cnot0(1, 0) - 1.0) < 1e-15);  // fires on |0> control
  CHECK(std::abs(cnot0(2, 2) - 1.0) < 1e-15);
}

TEST_CASE("controlled payloads match their kron expansions") {
  Rng rng(19);
  const Matrix r = rng.haar_su2();
  const Matrix i2 = Matrix::Identity(2, 2);

  const Matrix cu_f = gate_matrix(2, make_gate(GateKind::CU, {{1, true}}, {2}, r));
  CHECK((cu_f - (kron(proj(0), i2) + kron(proj(1), r))).norm() < 1e-14);

  const Matrix cu_e = gate_matrix(2, make_gate(GateKind::CU, {{1, false}}, {2}, r));
  CHECK((cu_e - (kron(proj(0), r) + kron(proj(1), i2))).norm() < 1e-14);

  // Control below the target.
  const Matrix cu_up = gate_matrix(2, make_gate(GateKind::CU, {{2, true}}, {1}, r));
  CHECK((cu_up - (kron(i2, proj(0)) + kron(r, proj(1)))).norm() < 1e-14);

  // Two controls of mixed polarity on a three-wire register.
  const Matrix cc = gate_matrix(
      3, make_gate(GateKind::X, {{1, false}, {2, true}}, {3}));
  const Matrix x = pauli(Axis::x);
  const Matrix want = kron(proj(0), kron(proj(1), x)) +
                      (Matrix::Identity(8, 8) - kron(proj(0), kron(proj(1), i2)));
  CHECK((cc - want).norm() < 1e-14);
}

TEST_CASE("fan-out flips every target when its control fires") {
  const Matrix fan =
      gate_matrix(3, make_gate(GateKind::CNNN, {{1, true}}, {2, 3}));
  const Matrix x = pauli(Axis::x);
  const Matrix want =
      kron(proj(0), Matrix::Identity(4, 4)) + kron(proj(1), kron(x, x));
  CHECK((fan - want).norm() < 1e-14);
}

TEST_CASE("composites multiply in temporal order") {
  GateList bell;
  bell.n = 2;
  bell.gates.push_back(make_gate(GateKind::H, {}, {1}));
  bell.gates.push_back(make_gate(GateKind::CNOT, {{1, true}}, {2}));
  const Vector out = composite(bell) * basis_ket(2, 0);
  const double s2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(out(0) - s2) < 1e-14);
  CHECK(std::abs(out(3) - s2) < 1e-14);
  CHECK(std::abs(out(1)) < 1e-14);

  GateList xh;
  xh.n = 1;
  xh.gates.push_back(make_gate(GateKind::X, {}, {1}));
  xh.gates.push_back(make_gate(GateKind::H, {}, {1}));
  CHECK((composite(xh) - hadamard() * pauli(Axis::x)).norm() < 1e-14);
}

TEST_CASE("gate validation rejects malformed gates") {
  CHECK_THROWS_AS(validate_gate(2, make_gate(GateKind::H, {}, {3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_gate(2, make_gate(GateKind::H, {}, {1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_gate(2, make_gate(GateKind::CNOT, {{1, true}}, {1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_gate(2, make_gate(GateKind::CNOT, {}, {2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_gate(3, make_gate(GateKind::CNNN, {{1, true}, {2, true}}, {3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_gate(2, make_gate(GateKind::CU, {}, {1})),
                  std::invalid_argument);  // missing payload
  CHECK_THROWS_AS(
      validate_gate(2, make_gate(GateKind::X, {}, {1}, pauli(Axis::x))),
      std::invalid_argument);  // payload on a fixed gate
  Matrix notu = Matrix::Zero(2, 2);
  notu(0, 0) = 2.0;
  CHECK_THROWS_AS(validate_gate(2, make_gate(GateKind::CU, {}, {1}, notu)),
                  std::invalid_argument);
}

TEST_CASE("gate kind names round trip") {
  for (GateKind k : {GateKind::H, GateKind::X, GateKind::G1, GateKind::G2,
                     GateKind::CNOT, GateKind::CNNN, GateKind::CU}) {
    CHECK(gate_kind_from_name(gate_kind_name(k)) == k);
  }
  CHECK(gate_kind_name(GateKind::CU) == "controlled-U");
  CHECK_THROWS_AS(gate_kind_from_name("NOPE"), std::invalid_argument);
}

TEST_CASE("column phase matching recovers per-column phases") {
  Rng rng(37);
  Matrix b(4, 4);
  for (int c = 0; c < 4; ++c) b.col(c) = rng.random_pure(4);
  Matrix a = b;
  const cdouble im(0.0, 1.0);
  a.col(1) *= -1.0;
  a.col(2) *= im;
  const ColumnPhaseMatch m = column_phase_match(a, b, 1e-10);
  REQUIRE(m.ok);
  CHECK(std::abs(m.phases[0] - cdouble(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(m.phases[1] - cdouble(-1.0, 0.0)) < 1e-12);
  CHECK(std::abs(m.phases[2] - im) < 1e-12);

  a.col(3)(0) += 0.3;  // no longer a pure phase difference
  CHECK(!column_phase_match(a, b, 1e-10).ok);
}

TEST_CASE("three-qubit gate list realizes the encoder up to column signs") {
  const GateListPair pair = build_ue3_gatelists();
  CHECK(pair.full.n == 3);
  CHECK(pair.full.gates.size() == 12);
  CHECK(pair.reduced.gates.size() == 7);

  const Matrix encoder = build_ue3(Basis3Variant::redefined).encoder;
  const ColumnPhaseMatch m = column_phase_match(composite(pair.full), encoder, 1e-10);
  REQUIRE(m.ok);
  CHECK(m.max_residual < 1e-12);
  const double want_sign[8] = {-1, 1, 1, 1, 1, 1, -1, -1};
  for (int c = 0; c < 8; ++c) {
    INFO("column " << c);
    CHECK(std::abs(m.phases[c] - cdouble(want_sign[c], 0.0)) < 1e-10);
  }
}

TEST_CASE("reduced three-qubit list agrees on the zero slice of wire one") {
  const GateListPair pair = build_ue3_gatelists();
  const Matrix full = composite(pair.full);
  const Matrix reduced = composite(pair.reduced);
  for (int c = 0; c < 4; ++c) {
    CHECK((full.col(c) - reduced.col(c)).norm() < 1e-12);
  }
  // The trimmed prefix/suffix only matters when wire 1 starts in |1>.
  CHECK((full.col(4) - reduced.col(4)).norm() > 0.1);

  // Every remaining gate touches at most two wires.
  int two_wire = 0;
  for (const auto& g : pair.reduced.gates) {
    CHECK(g.controls.size() + g.targets.size() <= 2);
    if (g.controls.size() + g.targets.size() == 2) ++two_wire;
  }
  CHECK(two_wire <= 8);
}

TEST_CASE("four-qubit gate list reproduces the encoder on its input slice") {
  const GateList list = build_ue4_gatelist();
  CHECK(list.n == 4);
  CHECK(list.gates.size() == 19);
  const Matrix got = composite(list);
  const Matrix encoder = build_ue4().encoder;
  CHECK((got.col(0) - encoder.col(0)).norm() < 1e-12);
  CHECK((got.col(1) - encoder.col(1)).norm() < 1e-12);
}

TEST_CASE("five-qubit gate list reproduces the encoder up to column signs") {
  const GateList list = build_ue5_gatelist();
  CHECK(list.n == 5);
  CHECK(list.gates.size() == 34);
  const Matrix got = composite(list);
  const Matrix encoder = build_ue5().encoder;
  for (int v = 0; v < 2; ++v) {
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        const int col = 16 * v + 2 * x + y;
        const double sign = x == 0 ? -1.0 : 1.0;
        INFO("column " << col);
        CHECK((got.col(col) - sign * encoder.col(col)).norm() < 1e-12);
      }
    }
  }
}
