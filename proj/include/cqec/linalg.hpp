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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace cqec {

using cdouble = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Qubit convention used throughout: qubit 1 is the left-most ket symbol, the
// top-most circuit wire and the most significant bit of a basis index.

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

Matrix dagger(const Matrix& a);

// Frobenius-norm test of a^dagger a = I. Throws on non-square input.
bool is_unitary(const Matrix& a, double tol);

// Computational basis ket |index> on n qubits.
Vector basis_ket(int n, int index);

// Projector |0...0><0...0| on n qubits.
Matrix zero_projector(int n);

// Trace out every qubit not listed in keep (1-based, strictly increasing).
// The reduced matrix keeps the listed qubits in their original relative
// order. keep = {} returns trace(rho) as a 1x1 matrix.
Matrix partial_trace(const Matrix& rho, const std::vector<int>& keep, int n);

// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2. For pure b it reduces to
// <psi|a|psi>.
double fidelity(const Matrix& a, const Matrix& b);

// Von Neumann entropy in bits. Eigenvalues in [-1e-9, 0) are clamped to 0;
// anything below -1e-9 is an error. 0 log 0 = 0.
double von_neumann_entropy(const Matrix& rho);

double frobenius_distance(const Matrix& a, const Matrix& b);

// Density-matrix validity: Hermitian within 1e-10, eigenvalues >= -1e-9,
// trace 1 within 1e-9 (trace < 1 allowed when allow_subnormalized is set).
bool is_valid_density(const Matrix& rho, bool allow_subnormalized = false);
void require_valid_density(const Matrix& rho, const char* what,
                           bool allow_subnormalized = false);

// Principal square root of a Hermitian PSD matrix (small negative
// eigenvalues are clamped to zero).
Matrix hermitian_sqrt(const Matrix& a);

}  // namespace cqec
