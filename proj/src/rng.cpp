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

#include "cqec/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cqec {

double Rng::uniform() {
  // 53 random bits -> [0, 1).
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gauss() {
  double u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

cdouble Rng::cgauss() {
  double re = gauss();
  double im = gauss();
  return {re, im};
}

Matrix Rng::haar_su2() {
  double norm2 = 0.0;
  double x[4];
  do {
    norm2 = 0.0;
    for (double& v : x) {
      v = gauss();
      norm2 += v * v;
    }
  } while (norm2 < 1e-12);
  double inv = 1.0 / std::sqrt(norm2);
  cdouble a(x[0] * inv, x[1] * inv);
  cdouble b(x[2] * inv, x[3] * inv);
  Matrix w(2, 2);
  w << a, b, -std::conj(b), std::conj(a);
  return w;
}

Vector Rng::random_pure(int dim) {
  if (dim < 1) throw std::invalid_argument("random_pure: dim must be positive");
  Vector v(dim);
  double norm2 = 0.0;
  do {
    for (int i = 0; i < dim; ++i) {
      v(i) = cgauss();
    }
    norm2 = v.squaredNorm();
  } while (norm2 < 1e-12);
  return v / std::sqrt(norm2);
}

Matrix Rng::random_density(int dim) {
  if (dim < 1) throw std::invalid_argument("random_density: dim must be positive");
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = cgauss();
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Symmetrize away the last ulps of drift.
  return 0.5 * (rho + Matrix(rho.adjoint()));
}

Matrix Rng::random_pure_density(int dim) {
  Vector v = random_pure(dim);
  return v * v.adjoint();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t trial) {
  return seed ^ splitmix64(trial + 1);
}

}  // namespace cqec
