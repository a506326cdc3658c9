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

#include "cqec/su2.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace cqec {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegenerate = 1e-12;

// Wraps into (-pi, pi].
double wrap_angle(double x) {
  double y = std::fmod(x + kPi, 2.0 * kPi);
  if (y <= 0.0) y += 2.0 * kPi;
  return y - kPi;
}

void require_2x2(const Matrix& w, const char* who) {
  if (w.rows() != 2 || w.cols() != 2) {
    throw std::invalid_argument(std::string(who) + ": matrix must be 2x2");
  }
}

}  // namespace

Matrix pauli(Axis axis) {
  Matrix m = Matrix::Zero(2, 2);
  const cdouble i(0.0, 1.0);
  switch (axis) {
    case Axis::x:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Axis::y:
      m(0, 1) = -i;
      m(1, 0) = i;
      break;
    case Axis::z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

Matrix rot(Axis axis, double theta) {
  const cdouble i(0.0, 1.0);
  return std::cos(theta) * Matrix::Identity(2, 2) +
         i * std::sin(theta) * pauli(axis);
}

Matrix euler_recompose(const EulerAngles& e) {
  return rot(Axis::x, e.theta1) * rot(Axis::y, e.theta2) * rot(Axis::x, e.theta3);
}

EulerAngles euler_decompose(const Matrix& w) {
  require_2x2(w, "euler_decompose");
  if (!is_unitary(w, 1e-9)) {
    throw std::invalid_argument("euler_decompose: matrix is not unitary");
  }
  const cdouble det = w(0, 0) * w(1, 1) - w(0, 1) * w(1, 0);
  if (std::abs(det - cdouble(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument(
        "euler_decompose: determinant must be 1 (use to_su2 first)");
  }

  // An SU(2) element is [[a, b], [-conj(b), conj(a)]]; averaging the two
  // copies of a and b suppresses roundoff asymmetry in the input.
  const cdouble a = (w(0, 0) + std::conj(w(1, 1))) / 2.0;
  const cdouble b = (w(0, 1) - std::conj(w(1, 0))) / 2.0;

  // a = cos(t2) cos(t1+t3) - i sin(t2) sin(t1-t3)
  // b = sin(t2) cos(t1-t3) + i cos(t2) sin(t1+t3)
  const double c2 = std::hypot(a.real(), b.imag());
  const double s2 = std::hypot(b.real(), a.imag());

  EulerAngles e;
  e.theta2 = std::atan2(s2, c2);
  if (s2 <= kDegenerate) {
    e.theta1 = std::atan2(b.imag(), a.real());
    e.theta3 = 0.0;
  } else if (c2 <= kDegenerate) {
    e.theta1 = std::atan2(-a.imag(), b.real());
    e.theta3 = 0.0;
  } else {
    const double sum = std::atan2(b.imag(), a.real());
    const double diff = std::atan2(-a.imag(), b.real());
    e.theta1 = wrap_angle((sum + diff) / 2.0);
    e.theta3 = wrap_angle((sum - diff) / 2.0);
  }
  return e;
}

Matrix to_su2(const Matrix& w) {
  require_2x2(w, "to_su2");
  if (!is_unitary(w, 1e-9)) {
    throw std::invalid_argument("to_su2: matrix is not unitary");
  }
  const cdouble det = w(0, 0) * w(1, 1) - w(0, 1) * w(1, 0);
  return w / std::sqrt(det);
}

Matrix collective(const Matrix& w, int n) {
  require_2x2(w, "collective");
  if (n < 1 || n > 12) {
    throw std::invalid_argument("collective: n must be in 1..12");
  }
  Matrix out = w;
  for (int q = 1; q < n; ++q) out = kron(out, w);
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: r*(n-k+i) is divisible by i here
  }
  return r;
}

IrrepDecomposition multiplicities(int n) {
  if (n < 1 || n > 30) {
    throw std::invalid_argument("multiplicities: n must be in 1..30");
  }
  IrrepDecomposition d;
  d.n = n;
  long long total = 0;
  for (int j = 0; 2 * j <= n; ++j) {
    IrrepBlock blk;
    blk.j = j;
    blk.r = binomial(n, j) - binomial(n, j - 1);
    blk.dim = n + 1 - 2 * j;
    total += blk.r * static_cast<long long>(blk.dim);
    d.blocks.push_back(blk);
  }
  if (total != (1LL << n)) {
    throw std::logic_error("multiplicities: dimension count failed");
  }
  return d;
}

Matrix collective_lowering(int n) {
  if (n < 1 || n > 12) {
    throw std::invalid_argument("collective_lowering: n must be in 1..12");
  }
  const long dim = 1L << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (long b = 0; b < dim; ++b) {
    for (int q = 1; q <= n; ++q) {
      const long mask = 1L << (n - q);
      if ((b & mask) == 0) m(b | mask, b) += 1.0;  // |0> = spin up, lowered to |1>
    }
  }
  return m;
}

BlockCheckResult verify_block_structure(const Matrix& t, const Matrix& w,
                                        const BlockLayout& layout, double tol) {
  if (t.rows() != t.cols() || t.rows() < 2) {
    throw std::invalid_argument("verify_block_structure: t must be square");
  }
  int n = 0;
  while ((1L << n) < t.rows()) ++n;
  if ((1L << n) != t.rows()) {
    throw std::invalid_argument(
        "verify_block_structure: dimension of t is not a power of 2");
  }
  if (!is_unitary(t, 1e-10)) {
    throw std::invalid_argument("verify_block_structure: t is not unitary");
  }

  // Each column of t must be claimed by exactly one (block, copy, slot).
  std::vector<int> owner_block(t.rows(), -1);
  std::vector<int> owner_copy(t.rows(), -1);
  for (std::size_t e = 0; e < layout.blocks.size(); ++e) {
    const auto& entry = layout.blocks[e];
    if (entry.copies.empty()) {
      throw std::invalid_argument("verify_block_structure: block with no copies");
    }
    const std::size_t dim = entry.copies.front().size();
    if (dim == 0) {
      throw std::invalid_argument("verify_block_structure: empty copy");
    }
    for (const auto& copy : entry.copies) {
      if (copy.size() != dim) {
        throw std::invalid_argument(
            "verify_block_structure: copies of one block differ in size");
      }
      for (int col : copy) {
        if (col < 0 || col >= t.rows() || owner_block[col] != -1) {
          throw std::invalid_argument(
              "verify_block_structure: column claimed twice or out of range");
        }
        owner_block[col] = static_cast<int>(e);
      }
    }
  }
  for (int col = 0; col < t.rows(); ++col) {
    if (owner_block[col] == -1) {
      throw std::invalid_argument(
          "verify_block_structure: column not covered by layout");
    }
  }
  for (std::size_t e = 0; e < layout.blocks.size(); ++e) {
    const auto& entry = layout.blocks[e];
    for (std::size_t c = 0; c < entry.copies.size(); ++c) {
      for (int col : entry.copies[c]) owner_copy[col] = static_cast<int>(c);
    }
  }

  const Matrix m = dagger(t) * collective(w, n) * t;

  BlockCheckResult res;
  for (long i = 0; i < m.rows(); ++i) {
    for (long j = 0; j < m.cols(); ++j) {
      const bool same_block = owner_block[i] == owner_block[j] &&
                              owner_copy[i] == owner_copy[j];
      if (!same_block) {
        res.max_off_block = std::max(res.max_off_block, std::abs(m(i, j)));
      }
    }
  }
  for (const auto& entry : layout.blocks) {
    const auto& first = entry.copies.front();
    const std::size_t dim = first.size();
    for (std::size_t c = 1; c < entry.copies.size(); ++c) {
      const auto& copy = entry.copies[c];
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t s = 0; s < dim; ++s) {
          const double dev = std::abs(m(copy[r], copy[s]) - m(first[r], first[s]));
          res.max_copy_deviation = std::max(res.max_copy_deviation, dev);
        }
      }
    }
  }
  res.ok = res.max_off_block < tol && res.max_copy_deviation < tol;
  return res;
}

}  // namespace cqec
