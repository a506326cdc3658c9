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

#include "cqec/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cqec {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kEigTol = 1e-9;
constexpr double kTraceTol = 1e-9;

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Matrix dagger(const Matrix& a) { return a.adjoint(); }

bool is_unitary(const Matrix& a, double tol) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("is_unitary: matrix is not square");
  Matrix id = Matrix::Identity(a.rows(), a.cols());
  return (a.adjoint() * a - id).norm() <= tol;
}

Vector basis_ket(int n, int index) {
  if (n < 0 || index < 0 || index >= (1 << n))
    throw std::invalid_argument("basis_ket: index out of range");
  Vector v = Vector::Zero(Eigen::Index(1) << n);
  v(index) = 1.0;
  return v;
}

Matrix zero_projector(int n) {
  Matrix p = Matrix::Zero(Eigen::Index(1) << n, Eigen::Index(1) << n);
  p(0, 0) = 1.0;
  return p;
}

Matrix partial_trace(const Matrix& rho, const std::vector<int>& keep, int n) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("partial_trace: matrix is not square");
  if (rho.rows() != (Eigen::Index(1) << n))
    throw std::invalid_argument("partial_trace: dimension does not match qubit count");
  int prev = 0;
  for (int q : keep) {
    if (q < 1 || q > n || q <= prev)
      throw std::invalid_argument(
          "partial_trace: keep list must be strictly increasing and within 1..n");
    prev = q;
  }

  const int k = static_cast<int>(keep.size());
  const int t = n - k;
  std::vector<int> traced;
  traced.reserve(t);
  {
    std::size_t ki = 0;
    for (int q = 1; q <= n; ++q) {
      if (ki < keep.size() && keep[ki] == q)
        ++ki;
      else
        traced.push_back(q);
    }
  }
  // Qubit q occupies bit (n - q) of a basis index.
  auto bit_of = [n](int q) { return n - q; };

  const Eigen::Index dk = Eigen::Index(1) << k;
  const Eigen::Index dt = Eigen::Index(1) << t;
  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      cdouble acc = 0.0;
      for (Eigen::Index a = 0; a < dt; ++a) {
        Eigen::Index fi = 0, fj = 0;
        for (int bi = 0; bi < k; ++bi) {
          Eigen::Index bit = (i >> (k - 1 - bi)) & 1;
          fi |= bit << bit_of(keep[bi]);
          bit = (j >> (k - 1 - bi)) & 1;
          fj |= bit << bit_of(keep[bi]);
        }
        for (int bt = 0; bt < t; ++bt) {
          Eigen::Index bit = (a >> (t - 1 - bt)) & 1;
          fi |= bit << bit_of(traced[bt]);
          fj |= bit << bit_of(traced[bt]);
        }
        acc += rho(fi, fj);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

Matrix hermitian_sqrt(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_sqrt: eigendecomposition failed");
  Eigen::VectorXd vals = es.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    vals(i) = vals(i) > 0.0 ? std::sqrt(vals(i)) : 0.0;
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

double fidelity(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("fidelity: dimension mismatch");
  Matrix sa = hermitian_sqrt(a);
  Eigen::SelfAdjointEigenSolver<Matrix> es(sa * b * sa);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("fidelity: eigendecomposition failed");
  double root_sum = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double v = es.eigenvalues()(i);
    if (v > 0.0) root_sum += std::sqrt(v);
  }
  return root_sum * root_sum;
}

double von_neumann_entropy(const Matrix& rho) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("von_neumann_entropy: matrix is not square");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("von_neumann_entropy: eigendecomposition failed");
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double v = es.eigenvalues()(i);
    if (v < -kEigTol)
      throw std::invalid_argument("von_neumann_entropy: input is not PSD within tolerance");
    if (v > 0.0) s -= v * std::log2(v);
  }
  return s;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("frobenius_distance: dimension mismatch");
  return (a - b).norm();
}

bool is_valid_density(const Matrix& rho, bool allow_subnormalized) {
  if (rho.rows() != rho.cols() || rho.rows() < 1) return false;
  if ((rho.rows() & (rho.rows() - 1)) != 0) return false;
  if ((rho - rho.adjoint()).norm() > kHermTol) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) return false;
  if (es.eigenvalues().minCoeff() < -kEigTol) return false;
  double tr = rho.trace().real();
  if (allow_subnormalized) return tr <= 1.0 + kTraceTol && tr >= -kTraceTol;
  return std::abs(tr - 1.0) <= kTraceTol;
}

void require_valid_density(const Matrix& rho, const char* what,
                           bool allow_subnormalized) {
  if (!is_valid_density(rho, allow_subnormalized))
    throw std::invalid_argument(std::string(what) + ": not a valid density matrix");
}

}  // namespace cqec
