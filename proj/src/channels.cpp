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

#include "cqec/channels.hpp"

#include <stdexcept>

namespace cqec {

namespace {
constexpr double kProbTol = 1e-12;
constexpr std::size_t kMaxTerms = 10000;
}  // namespace

MixedUnitaryChannel make_channel(int n, std::vector<ChannelTerm> terms) {
  if (n < 1 || n > 12) {
    throw std::invalid_argument("channel: qubit count must be in 1..12");
  }
  if (terms.empty()) {
    throw std::invalid_argument("channel: at least one term required");
  }
  if (terms.size() > kMaxTerms) {
    throw std::invalid_argument("channel: too many terms");
  }
  const long dim = 1L << n;
  double total = 0.0;
  for (const auto& t : terms) {
    if (!(t.p >= 0.0)) {
      throw std::invalid_argument("channel: probabilities must be nonnegative");
    }
    total += t.p;
    if (t.u.rows() != dim || t.u.cols() != dim) {
      throw std::invalid_argument("channel: term dimension mismatch");
    }
    if (!is_unitary(t.u, 1e-12)) {
      throw std::invalid_argument("channel: term is not unitary");
    }
  }
  if (total > 1.0 + kProbTol) {
    throw std::invalid_argument("channel: probabilities must sum to at most 1");
  }

  MixedUnitaryChannel ch;
  ch.n = n;
  ch.terms = std::move(terms);
  ch.total_probability = total;
  ch.subnormalized = total < 1.0 - kProbTol;
  return ch;
}

MixedUnitaryChannel theorem1_channel(const std::array<double, 4>& p, double alpha,
                                     double beta, double gamma, int n) {
  if (n < 3 || n > 5) {
    throw std::invalid_argument("theorem1_channel: qubit count must be 3, 4, or 5");
  }
  const long dim = 1L << n;
  std::vector<ChannelTerm> terms;
  if (p[0] != 0.0) terms.push_back({p[0], Matrix::Identity(dim, dim)});
  if (p[1] != 0.0) terms.push_back({p[1], collective(rot(Axis::x, alpha), n)});
  if (p[2] != 0.0) terms.push_back({p[2], collective(rot(Axis::y, beta), n)});
  if (p[3] != 0.0) terms.push_back({p[3], collective(rot(Axis::z, gamma), n)});
  if (terms.empty()) {
    throw std::invalid_argument("theorem1_channel: all probabilities are zero");
  }
  for (double q : p) {
    if (!(q >= 0.0)) {
      throw std::invalid_argument("theorem1_channel: probabilities must be nonnegative");
    }
  }
  return make_channel(n, std::move(terms));
}

MixedUnitaryChannel collective_channel(
    const std::vector<std::pair<double, EulerAngles>>& entries, int n) {
  std::vector<ChannelTerm> terms;
  terms.reserve(entries.size());
  for (const auto& [p, angles] : entries) {
    terms.push_back({p, collective(euler_recompose(angles), n)});
  }
  return make_channel(n, std::move(terms));
}

Matrix apply_channel(const MixedUnitaryChannel& ch, const Matrix& rho) {
  const long dim = 1L << ch.n;
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("apply: state dimension mismatch");
  }
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& t : ch.terms) out += t.p * t.u * rho * dagger(t.u);
  return out;
}

MixedUnitaryChannel compose(const MixedUnitaryChannel& a,
                            const MixedUnitaryChannel& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("compose: channels act on different qubit counts");
  }
  if (a.terms.size() * b.terms.size() > kMaxTerms) {
    throw std::invalid_argument("compose: term count would exceed 10000");
  }
  std::vector<ChannelTerm> terms;
  terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms) {
    for (const auto& tb : b.terms) {
      terms.push_back({ta.p * tb.p, Matrix(ta.u * tb.u)});
    }
  }
  return make_channel(a.n, std::move(terms));
}

}  // namespace cqec
