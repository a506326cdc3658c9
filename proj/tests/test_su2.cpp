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
#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "cqec/linalg.hpp"
#include "cqec/rng.hpp"
#include "cqec/su2.hpp"

using namespace cqec;

namespace {

constexpr double kPi = std::numbers::pi;

// Entrywise closed form of rot(x,t1) rot(y,t2) rot(x,t3), derived by
// multiplying the three 2x2 factors symbolically. Used as an oracle for
// both composition and decomposition.
Matrix euler_entries(double t1, double t2, double t3) {
  const double c2 = std::cos(t2), s2 = std::sin(t2);
  Matrix w(2, 2);
  w(0, 0) = cdouble(c2 * std::cos(t1 + t3), -s2 * std::sin(t1 - t3));
  w(0, 1) = cdouble(s2 * std::cos(t1 - t3), c2 * std::sin(t1 + t3));
  w(1, 0) = cdouble(-s2 * std::cos(t1 - t3), c2 * std::sin(t1 + t3));
  w(1, 1) = cdouble(c2 * std::cos(t1 + t3), s2 * std::sin(t1 - t3));
  return w;
}

}  // namespace

TEST_CASE("pauli matrices have their textbook entries") {
  const Matrix x = pauli(Axis::x), y = pauli(Axis::y), z = pauli(Axis::z);
  CHECK(x(0, 1) == cdouble(1.0, 0.0));
  CHECK(x(1, 0) == cdouble(1.0, 0.0));
  CHECK(y(0, 1) == cdouble(0.0, -1.0));
  CHECK(y(1, 0) == cdouble(0.0, 1.0));
  CHECK(z(0, 0) == cdouble(1.0, 0.0));
  CHECK(z(1, 1) == cdouble(-1.0, 0.0));
  CHECK((x * y - cdouble(0.0, 1.0) * z).norm() < 1e-15);
}

TEST_CASE("rot uses the +i sign convention") {
  const Matrix rx = rot(Axis::x, kPi / 2.0);
  CHECK((rx - cdouble(0.0, 1.0) * pauli(Axis::x)).norm() < 1e-14);
  const Matrix rz = rot(Axis::z, 0.3);
  CHECK(std::abs(rz(0, 0) - std::polar(1.0, 0.3)) < 1e-15);
  CHECK(std::abs(rz(1, 1) - std::polar(1.0, -0.3)) < 1e-15);
  CHECK(std::abs(rz(0, 1)) < 1e-15);
}

TEST_CASE("rotations about one axis compose additively") {
  for (Axis a : {Axis::x, Axis::y, Axis::z}) {
    const Matrix lhs = rot(a, 0.4) * rot(a, 0.9);
    CHECK((lhs - rot(a, 1.3)).norm() < 1e-14);
    CHECK(is_unitary(rot(a, 2.7), 1e-13));
    CHECK(std::abs(rot(a, 2.7).determinant() - cdouble(1.0, 0.0)) < 1e-13);
  }
}

TEST_CASE("euler recomposition matches the symbolic product") {
  for (double t1 : {-2.5, -0.3, 0.0, 1.1, 3.0}) {
    for (double t2 : {0.0, 0.4, 1.2, kPi / 2.0}) {
      for (double t3 : {-3.0, -1.0, 0.0, 0.8, 2.2}) {
        EulerAngles e{t1, t2, t3};
        CHECK((euler_recompose(e) - euler_entries(t1, t2, t3)).norm() < 1e-13);
      }
    }
  }
}

TEST_CASE("euler decomposition of axis rotations") {
  const EulerAngles id = euler_decompose(Matrix::Identity(2, 2));
  CHECK(std::abs(id.theta1) < 1e-12);
  CHECK(std::abs(id.theta2) < 1e-12);
  CHECK(std::abs(id.theta3) < 1e-12);

  const EulerAngles ey = euler_decompose(rot(Axis::y, 0.7));
  CHECK(std::abs(ey.theta1) < 1e-12);
  CHECK(ey.theta2 == Catch::Approx(0.7));
  CHECK(std::abs(ey.theta3) < 1e-12);

  // theta2 = 0 is degenerate: everything lands in theta1.
  const EulerAngles ex = euler_decompose(rot(Axis::x, 0.3));
  CHECK(ex.theta1 == Catch::Approx(0.3));
  CHECK(std::abs(ex.theta2) < 1e-12);
  CHECK(std::abs(ex.theta3) < 1e-12);
}

TEST_CASE("euler round trip over Haar-random SU(2)") {
  Rng rng(101);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Matrix w = rng.haar_su2();
    const EulerAngles e = euler_decompose(w);
    CHECK(e.theta2 >= 0.0);
    CHECK(e.theta2 <= kPi / 2.0 + 1e-12);
    CHECK(e.theta1 > -kPi - 1e-12);
    CHECK(e.theta1 <= kPi + 1e-12);
    CHECK(e.theta3 > -kPi - 1e-12);
    CHECK(e.theta3 <= kPi + 1e-12);
    worst = std::max(worst, (euler_recompose(e) - w).norm());
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("euler round trip on the degenerate branches") {
  // Both merged-rotation cases: theta2 = 0 and theta2 = pi/2.
  const Matrix w0 = rot(Axis::x, 1.9) * rot(Axis::x, -0.4);
  const EulerAngles e0 = euler_decompose(w0);
  CHECK((euler_recompose(e0) - w0).norm() < 1e-12);
  CHECK(std::abs(e0.theta3) < 1e-12);

  const Matrix w1 = rot(Axis::x, 0.8) * rot(Axis::y, kPi / 2.0) * rot(Axis::x, 0.5);
  const EulerAngles e1 = euler_decompose(w1);
  CHECK((euler_recompose(e1) - w1).norm() < 1e-12);
  CHECK(std::abs(e1.theta3) < 1e-12);
}

TEST_CASE("euler decomposition rejects non-special matrices") {
  CHECK_THROWS_AS(euler_decompose(pauli(Axis::x)), std::invalid_argument);  // det -1
  const Matrix phased = std::polar(1.0, kPi / 4.0) * Matrix::Identity(2, 2);
  CHECK_THROWS_AS(euler_decompose(phased), std::invalid_argument);
  CHECK_THROWS_AS(euler_decompose(Matrix::Zero(2, 2)), std::invalid_argument);
}

TEST_CASE("to_su2 strips a global phase") {
  Rng rng(7);
  const Matrix w = rng.haar_su2();
  const Matrix g = std::polar(1.0, 0.3) * w;
  CHECK((to_su2(g) - w).norm() < 1e-12);
  CHECK(std::abs(to_su2(g).determinant() - cdouble(1.0, 0.0)) < 1e-12);
}

TEST_CASE("collective powers agree with explicit kron folds") {
  Rng rng(13);
  const Matrix w = rng.haar_su2();
  CHECK((collective(w, 1) - w).norm() < 1e-15);
  CHECK((collective(w, 2) - kron(w, w)).norm() < 1e-14);
  const Matrix left = kron(kron(w, w), w);
  const Matrix right = kron(w, kron(w, w));
  CHECK((collective(w, 3) - left).norm() < 1e-14);
  CHECK((collective(w, 3) - right).norm() < 1e-14);
  CHECK_THROWS_AS(collective(w, 0), std::invalid_argument);
  CHECK_THROWS_AS(collective(w, 13), std::invalid_argument);
}

TEST_CASE("multiplicity table for three, four, and five qubits") {
  const IrrepDecomposition d3 = multiplicities(3);
  REQUIRE(d3.blocks.size() == 2);
  CHECK(d3.blocks[0].j == 0);
  CHECK(d3.blocks[0].r == 1);
  CHECK(d3.blocks[0].dim == 4);
  CHECK(d3.blocks[1].j == 1);
  CHECK(d3.blocks[1].r == 2);
  CHECK(d3.blocks[1].dim == 2);

  const IrrepDecomposition d4 = multiplicities(4);
  REQUIRE(d4.blocks.size() == 3);
  CHECK(d4.blocks[0].r == 1);
  CHECK(d4.blocks[0].dim == 5);
  CHECK(d4.blocks[1].r == 3);
  CHECK(d4.blocks[1].dim == 3);
  CHECK(d4.blocks[2].r == 2);
  CHECK(d4.blocks[2].dim == 1);

  const IrrepDecomposition d5 = multiplicities(5);
  REQUIRE(d5.blocks.size() == 3);
  CHECK(d5.blocks[0].r == 1);
  CHECK(d5.blocks[0].dim == 6);
  CHECK(d5.blocks[1].r == 4);
  CHECK(d5.blocks[1].dim == 4);
  CHECK(d5.blocks[2].r == 5);
  CHECK(d5.blocks[2].dim == 2);
}

TEST_CASE("multiplicities account for the whole space") {
  for (int n = 1; n <= 20; ++n) {
    long long total = 0;
    for (const auto& b : multiplicities(n).blocks) total += b.r * b.dim;
    CHECK(total == (1LL << n));
  }
  CHECK_THROWS_AS(multiplicities(0), std::invalid_argument);
  CHECK_THROWS_AS(multiplicities(31), std::invalid_argument);
}

TEST_CASE("binomial agrees with a Pascal-triangle table") {
  long long pascal[31][31] = {};
  for (int n = 0; n <= 30; ++n) {
    pascal[n][0] = 1;
    for (int k = 1; k <= n; ++k)
      pascal[n][k] = pascal[n - 1][k - 1] + (k <= n - 1 ? pascal[n - 1][k] : 0);
  }
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 4) == 0);
}

TEST_CASE("collective lowering on small registers") {
  const Matrix s1 = collective_lowering(1);
  CHECK(std::abs(s1(1, 0) - 1.0) < 1e-15);  // |0> -> |1>
  CHECK(std::abs(s1(0, 1)) < 1e-15);

  const Matrix s3 = collective_lowering(3);
  const Vector top = basis_ket(3, 0);
  const Vector lowered = s3 * top;
  // One step down from |000> hits each single-excitation state once.
  CHECK(std::abs(lowered(4) - 1.0) < 1e-14);
  CHECK(std::abs(lowered(2) - 1.0) < 1e-14);
  CHECK(std::abs(lowered(1) - 1.0) < 1e-14);
  CHECK(lowered.cwiseAbs().sum() == Catch::Approx(3.0));

  CHECK((s3 * basis_ket(3, 7)).norm() < 1e-15);  // bottom state annihilates
  CHECK((s3 * s3 * s3 * s3).norm() < 1e-14);     // nilpotent after n+1 steps
}

TEST_CASE("block-structure check on a hand-built two-qubit basis") {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix t = Matrix::Zero(4, 4);
  t.col(0) = basis_ket(2, 0);                                  // |00>
  t.col(1) = s * (basis_ket(2, 1) + basis_ket(2, 2));          // sym
  t.col(2) = basis_ket(2, 3);                                  // |11>
  t.col(3) = s * (basis_ket(2, 1) - basis_ket(2, 2));          // antisym
  BlockLayout layout;
  layout.blocks.push_back({0, {{0, 1, 2}}});
  layout.blocks.push_back({1, {{3}}});

  Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    const BlockCheckResult res = verify_block_structure(t, rng.haar_su2(), layout, 1e-10);
    CHECK(res.ok);
    CHECK(res.max_off_block < 1e-12);
  }

  // Mixing the singlet into the triplet block must light up off-block terms.
  BlockLayout wrong;
  wrong.blocks.push_back({0, {{0, 1, 3}}});
  wrong.blocks.push_back({1, {{2}}});
  const Matrix w = rot(Axis::y, 0.9);
  CHECK(!verify_block_structure(t, w, wrong, 1e-10).ok);
}

TEST_CASE("block-structure check verifies copies against each other") {
  // Two spin-1/2 copies of the three-qubit space, constructed from scratch:
  // {e1, f1} and {e2, f2} transform identically under any collective W.
  const double s2 = 1.0 / std::sqrt(2.0), s6 = 1.0 / std::sqrt(6.0);
  Matrix t = Matrix::Zero(8, 8);
  t.col(0) = s2 * (basis_ket(3, 4) - basis_ket(3, 2));
  t.col(1) = s2 * (basis_ket(3, 5) - basis_ket(3, 3));
  t.col(2) = s6 * (basis_ket(3, 4) + basis_ket(3, 2) - 2.0 * basis_ket(3, 1));
  t.col(3) = s6 * (2.0 * basis_ket(3, 6) - basis_ket(3, 3) - basis_ket(3, 5));
  t.col(4) = basis_ket(3, 0);
  const double s3 = 1.0 / std::sqrt(3.0);
  t.col(5) = s3 * (basis_ket(3, 4) + basis_ket(3, 2) + basis_ket(3, 1));
  t.col(6) = s3 * (basis_ket(3, 3) + basis_ket(3, 5) + basis_ket(3, 6));
  t.col(7) = basis_ket(3, 7);
  REQUIRE(is_unitary(t, 1e-12));

  BlockLayout layout;
  layout.blocks.push_back({1, {{0, 1}, {2, 3}}});
  layout.blocks.push_back({0, {{4, 5, 6, 7}}});
  Rng rng(43);
  for (int i = 0; i < 20; ++i) {
    const BlockCheckResult res = verify_block_structure(t, rng.haar_su2(), layout, 1e-10);
    CHECK(res.ok);
    CHECK(res.max_copy_deviation < 1e-12);
  }
}

TEST_CASE("block-structure check rejects malformed layouts") {
  Matrix t = Matrix::Identity(4, 4);
  BlockLayout missing;
  missing.blocks.push_back({0, {{0, 1, 2}}});  // column 3 unaccounted
  CHECK_THROWS_AS(verify_block_structure(t, rot(Axis::x, 0.2), missing, 1e-10),
                  std::invalid_argument);
  BlockLayout dup;
  dup.blocks.push_back({0, {{0, 1, 2}}});
  dup.blocks.push_back({1, {{2}}});
  CHECK_THROWS_AS(verify_block_structure(t, rot(Axis::x, 0.2), dup, 1e-10),
                  std::invalid_argument);
  BlockLayout ragged;
  ragged.blocks.push_back({0, {{0, 1}, {2}}});
  ragged.blocks.push_back({1, {{3}}});
  CHECK_THROWS_AS(verify_block_structure(t, rot(Axis::x, 0.2), ragged, 1e-10),
                  std::invalid_argument);
}
