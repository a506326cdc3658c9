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

#include "cqec/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cqec/circuit.hpp"
#include "cqec/rng.hpp"

namespace cqec {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

VerificationReport new_report(const std::string& suite, std::uint64_t seed,
                              int trials, double tolerance) {
  if (trials < 1) throw std::invalid_argument("suite: trials must be positive");
  VerificationReport r;
  r.suite = suite;
  r.seed = seed;
  r.trials = trials;
  r.tolerance = tolerance;
  return r;
}

void record(VerificationReport& r, ordered_json rec, double residual) {
  r.max_residual = std::max(r.max_residual, residual);
  rec["residual"] = residual;
  r.details.push_back(std::move(rec));
}

void finish(VerificationReport& r) { r.pass = r.max_residual < r.tolerance; }

Matrix maximally_mixed(int dim) {
  return Matrix::Identity(dim, dim) / static_cast<double>(dim);
}

// Stagger pure and full-rank inputs so both populations are covered.
Matrix draw_density(Rng& rng, int dim, int trial) {
  return trial % 2 == 0 ? rng.random_pure_density(dim) : rng.random_density(dim);
}

}  // namespace

double check_theorem1(const std::array<double, 4>& p, double alpha, double beta,
                      double gamma, const Matrix& rho_a, const Matrix& rho_data,
                      Basis3Variant variant) {
  const CodeSpec code = build_ue3(variant);
  const Matrix enc = encode(code, rho_a, rho_data);
  const MixedUnitaryChannel ch = theorem1_channel(p, alpha, beta, gamma, 3);
  const Matrix out = dagger(code.encoder) * apply_channel(ch, enc) * code.encoder;

  const Matrix factors[4] = {Matrix::Identity(2, 2), rot(Axis::x, alpha),
                             rot(Axis::y, beta), rot(Axis::z, gamma)};
  Matrix gauge = Matrix::Zero(2, 2);
  for (int j = 0; j < 4; ++j) gauge += p[j] * factors[j] * rho_a * dagger(factors[j]);
  const Matrix rhs = kron(kron(gauge, zero_projector(1)), rho_data);
  return frobenius_distance(out, rhs);
}

VerificationReport suite_theorem1(int trials, std::uint64_t seed) {
  VerificationReport r = new_report("theorem1", seed, trials, 1e-10);
  for (int t = 0; t < trials; ++t) {
    Rng rng(sub_seed(seed, t));
    const double total = t % 2 == 0 ? 1.0 : 0.8;
    std::array<double, 4> p{};
    double s = 0.0;
    for (double& q : p) {
      q = rng.uniform();
      s += q;
    }
    for (double& q : p) q *= total / s;
    const double alpha = rng.uniform(-kPi, kPi);
    const double beta = rng.uniform(-kPi, kPi);
    const double gamma = rng.uniform(-kPi, kPi);
    const Matrix rho_a = draw_density(rng, 2, t);
    const Matrix rho_data = draw_density(rng, 2, t + 1);

    const double res = std::max(
        check_theorem1(p, alpha, beta, gamma, rho_a, rho_data, Basis3Variant::original),
        check_theorem1(p, alpha, beta, gamma, rho_a, rho_data, Basis3Variant::redefined));
    ordered_json rec;
    rec["trial"] = t;
    rec["sum_p"] = total;
    rec["alpha"] = alpha;
    rec["beta"] = beta;
    rec["gamma"] = gamma;
    record(r, std::move(rec), res);
  }
  finish(r);
  return r;
}

VerificationReport suite_ns3(int trials, std::uint64_t seed) {
  VerificationReport r = new_report("ns3", seed, trials, 1e-10);
  const CodeSpec codes[2] = {build_ue3(Basis3Variant::original),
                             build_ue3(Basis3Variant::redefined)};
  for (int t = 0; t < trials; ++t) {
    Rng rng(sub_seed(seed, t));
    const Matrix w = rng.haar_su2();
    const Matrix rho_a = rng.random_density(2);
    const Matrix rho_data = draw_density(rng, 2, t);
    const Matrix w3 = collective(w, 3);
    double res = 0.0;
    for (const auto& code : codes) {
      const Matrix enc = encode(code, rho_a, rho_data);
      const Matrix noisy = w3 * enc * dagger(w3);
      const DecodeResult dec = decode(code, noisy);
      res = std::max(res, std::max(0.0, 1.0 - fidelity(dec.data_out, rho_data)));
      res = std::max(res, dec.product_residual);
      res = std::max(res, frobenius_distance(dec.gauge_out, w * rho_a * dagger(w)));
    }
    ordered_json rec;
    rec["trial"] = t;
    record(r, std::move(rec), res);
  }
  finish(r);
  return r;
}

VerificationReport suite_dfs4(int trials, std::uint64_t seed) {
  VerificationReport r = new_report("dfs4", seed, trials, 1e-10);
  const CodeSpec code = build_ue4();
  for (int t = 0; t < trials; ++t) {
    Rng rng(sub_seed(seed, t));
    const Matrix w = rng.haar_su2();
    const Matrix rho_data = draw_density(rng, 2, t);
    const Matrix enc = encode(code, Matrix(), rho_data);
    const Matrix w4 = collective(w, 4);
    const double res = frobenius_distance(w4 * enc * dagger(w4), enc);
    ordered_json rec;
    rec["trial"] = t;
    record(r, std::move(rec), res);
  }
  finish(r);
  return r;
}

VerificationReport suite_ns5(int trials, std::uint64_t seed) {
  VerificationReport r = new_report("ns5", seed, trials, 1e-10);
  const CodeSpec code = build_ue5();
  for (int t = 0; t < trials; ++t) {
    Rng rng(sub_seed(seed, t));
    const Matrix w = rng.haar_su2();
    const Matrix rho_a = t % 4 == 0 ? maximally_mixed(2) : rng.random_density(2);
    const Matrix rho_data = draw_density(rng, 4, t);
    const Matrix enc = encode(code, rho_a, rho_data);
    const Matrix w5 = collective(w, 5);
    const DecodeResult dec = decode(code, w5 * enc * dagger(w5));
    double res = std::max(0.0, 1.0 - fidelity(dec.data_out, rho_data));
    res = std::max(res, dec.product_residual);
    res = std::max(res, frobenius_distance(dec.gauge_out, w * rho_a * dagger(w)));
    ordered_json rec;
    rec["trial"] = t;
    rec["gauge_maximally_mixed"] = (t % 4 == 0);
    record(r, std::move(rec), res);
  }
  finish(r);
  return r;
}

VerificationReport suite_blocks(int trials, std::uint64_t seed) {
  VerificationReport r = new_report("blocks", seed, trials, 1e-10);
  const CodeSpec codes[2] = {build_ue3(Basis3Variant::original),
                             build_ue3(Basis3Variant::redefined)};
  for (int t = 0; t < trials; ++t) {
    Rng rng(sub_seed(seed, t));
    const Matrix w = rng.haar_su2();
    double res = 0.0;
    for (const auto& code : codes) {
      const BlockCheckResult chk =
          verify_block_structure(code.encoder, w, code.block_layout, 1e-10);
      res = std::max(res, std::max(chk.max_off_block, chk.max_copy_deviation));
    }
    ordered_json rec;
    rec["trial"] = t;
    record(r, std::move(rec), res);
  }
  finish(r);
  return r;
}

VerificationReport suite_entropy(int trials, std::uint64_t seed) {
  VerificationReport r = new_report("entropy", seed, trials, 1e-9);
  const CodeSpec code = build_ue3(Basis3Variant::original);
  const Matrix half = maximally_mixed(2);
  for (int t = 0; t < trials; ++t) {
    Rng rng(sub_seed(seed, t));
    std::array<double, 4> p{};
    double s = 0.0;
    for (double& q : p) {
      q = rng.uniform();
      s += q;
    }
    for (double& q : p) q /= s;
    const MixedUnitaryChannel ch = theorem1_channel(
        p, rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi), 3);
    const Matrix rho_data = draw_density(rng, 2, t);
    const Matrix enc = encode(code, half, rho_data);
    const Matrix out = apply_channel(ch, enc);
    const double before = von_neumann_entropy(enc);
    const double after = von_neumann_entropy(out);
    double res = std::abs(after - before);
    const DecodeResult dec = decode(code, out);
    res = std::max(res, frobenius_distance(dec.gauge_out, half));
    ordered_json rec;
    rec["trial"] = t;
    rec["entropy_before_bits"] = before;
    rec["entropy_after_bits"] = after;
    record(r, std::move(rec), res);
  }

  // Contrast: a pure gauge input under genuine mixing gains entropy.
  {
    Matrix pure = Matrix::Zero(2, 2);
    pure(0, 0) = 1.0;
    const MixedUnitaryChannel ch =
        theorem1_channel({0.5, 0.5, 0.0, 0.0}, kPi / 4.0, 0.0, 0.0, 3);
    const Matrix enc = encode(code, pure, pure);
    const double delta = von_neumann_entropy(apply_channel(ch, enc)) - von_neumann_entropy(enc);
    ordered_json rec;
    rec["contrast"] = true;
    rec["delta_entropy_bits"] = delta;
    record(r, std::move(rec), std::max(0.0, -delta));
  }
  finish(r);
  return r;
}

VerificationReport suite_gatelist(int trials, std::uint64_t seed) {
  (void)trials;
  VerificationReport r = new_report("gatelist", seed, 1, 1e-10);

  const GateListPair lists = build_ue3_gatelists();
  const Matrix full = composite(lists.full);
  const Matrix reference = build_ue3(Basis3Variant::redefined).encoder;
  const auto match = column_phase_match(full, reference, 1e-10);
  double phase_mod = 0.0;
  for (const auto& ph : match.phases) {
    phase_mod = std::max(phase_mod, std::abs(std::abs(ph) - 1.0));
  }
  ordered_json rec1;
  rec1["check"] = "ns3-full-vs-encoder-column-phases";
  record(r, std::move(rec1), std::max(match.max_residual, phase_mod));

  const Matrix reduced = composite(lists.reduced);
  double slice = 0.0;
  for (int col = 0; col < 4; ++col) {
    slice = std::max(slice, (reduced.col(col) - full.col(col)).norm());
  }
  ordered_json rec2;
  rec2["check"] = "ns3-reduced-slice-agreement";
  record(r, std::move(rec2), slice);

  const Matrix u4 = composite(build_ue4_gatelist());
  const CodeSpec dfs = build_ue4();
  double res4 = 0.0;
  for (int col = 0; col < 2; ++col) {
    res4 = std::max(res4, (u4.col(col) - dfs.encoder.col(col)).norm());
  }
  ordered_json rec3;
  rec3["check"] = "dfs4-encoding-columns";
  record(r, std::move(rec3), res4);

  const Matrix u5 = composite(build_ue5_gatelist());
  const CodeSpec ns5 = build_ue5();
  double res5 = 0.0;
  for (int v = 0; v < 2; ++v) {
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        const int col = v * 16 + x * 2 + y;
        const double sign = x == 0 ? -1.0 : 1.0;
        res5 = std::max(res5, (u5.col(col) - sign * ns5.encoder.col(col)).norm());
      }
    }
  }
  ordered_json rec4;
  rec4["check"] = "ns5-encoding-columns-signed";
  record(r, std::move(rec4), res5);

  finish(r);
  return r;
}

VerificationReport suite_rate(int trials, std::uint64_t seed) {
  (void)trials;
  VerificationReport r = new_report("rate", seed, 1, 0.5);
  const auto table = code_rate_table(39);
  bool ok = true;
  int first_flagged = 0;
  for (const auto& row : table) {
    if (row.k_exceeds_m && first_flagged == 0) first_flagged = row.n;
    if (row.n >= 9 && !row.k_exceeds_m) ok = false;
    if (row.n <= 30) {
      const auto dec = multiplicities(row.n);
      if (dec.blocks.back().r != row.dim || dec.blocks.back().dim != 2) ok = false;
      long long total = 0;
      for (const auto& b : dec.blocks) total += b.r * b.dim;
      if (total != (1LL << row.n)) ok = false;
    }
    ordered_json rec;
    rec["n"] = row.n;
    rec["m"] = row.m;
    rec["dim"] = row.dim;
    rec["k"] = row.k;
    rec["k_exceeds_m"] = row.k_exceeds_m;
    record(r, std::move(rec), 0.0);
  }
  auto expect = [&](int n, long long dim, int k) {
    for (const auto& row : table) {
      if (row.n == n) return row.dim == dim && row.k == k;
    }
    return false;
  };
  ok = ok && expect(3, 2, 1) && expect(5, 5, 2) && expect(7, 14, 3) &&
       expect(9, 42, 5) && first_flagged == 9;
  r.max_residual = ok ? 0.0 : 1.0;
  finish(r);
  return r;
}

VerificationReport suite_structural(int trials, std::uint64_t seed) {
  (void)trials;
  VerificationReport r = new_report("structural", seed, 1, 1e-12);

  auto unitarity = [](const Matrix& u) {
    return (dagger(u) * u - Matrix::Identity(u.rows(), u.cols())).norm();
  };

  const CodeSpec ns3o = build_ue3(Basis3Variant::original);
  const CodeSpec ns3r = build_ue3(Basis3Variant::redefined);
  const CodeSpec dfs = build_ue4();
  const CodeSpec ns5 = build_ue5();

  ordered_json rec1;
  rec1["check"] = "encoder-unitarity";
  record(r, std::move(rec1),
         std::max({unitarity(ns3o.encoder), unitarity(ns3r.encoder),
                   unitarity(dfs.encoder), unitarity(ns5.encoder)}));

  double gram = 0.0;
  for (const auto& code : {ns3o, ns3r}) {
    const Matrix g = dagger(code.encoder) * code.encoder;
    gram = std::max(gram, (g - Matrix::Identity(8, 8)).norm());
  }
  ordered_json rec2;
  rec2["check"] = "basis-orthonormality";
  record(r, std::move(rec2), gram);

  double dfs_cols = 0.0;
  for (int col = 0; col < 2; ++col) {
    dfs_cols = std::max(
        dfs_cols, (dfs.encoder.col(col) - dfs.logical_columns[col].second).norm());
  }
  ordered_json rec3;
  rec3["check"] = "dfs4-logical-columns";
  record(r, std::move(rec3), dfs_cols);

  const LabeledVectors logical = logical_basis5();
  double ns5_cols = 0.0;
  for (int col = 0; col < 4; ++col) {
    ns5_cols =
        std::max(ns5_cols, (ns5.encoder.col(col) - logical[col].second).norm());
  }
  ordered_json rec4;
  rec4["check"] = "ns5-logical-columns";
  record(r, std::move(rec4), ns5_cols);

  finish(r);
  return r;
}

VerificationReport negative_control(int trials, std::uint64_t seed) {
  VerificationReport r = new_report("negative-control", seed, trials, 0.99);
  const CodeSpec code = build_ue3(Basis3Variant::original);
  Matrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  const Matrix flip_data = kron(Matrix::Identity(4, 4), x);
  const MixedUnitaryChannel ch = make_channel(
      3, {{0.5, Matrix::Identity(8, 8)}, {0.5, flip_data}});

  double min_fidelity = 1.0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(sub_seed(seed, t));
    const Matrix rho_a = rng.random_density(2);
    const Matrix rho_data = rng.random_pure_density(2);
    const DecodeResult dec = decode(code, apply_channel(ch, encode(code, rho_a, rho_data)));
    const double fid = fidelity(dec.data_out, rho_data);
    min_fidelity = std::min(min_fidelity, fid);
    ordered_json rec;
    rec["trial"] = t;
    rec["fidelity"] = fid;
    r.details.push_back(std::move(rec));
  }
  r.max_residual = min_fidelity;
  finish(r);
  return r;
}

std::vector<std::string> suite_names() {
  return {"theorem1", "ns3", "dfs4", "ns5", "blocks",
          "entropy",  "gatelist", "rate", "structural"};
}

VerificationReport run_suite(const std::string& name, int trials,
                             std::uint64_t seed) {
  if (name == "theorem1") return suite_theorem1(trials, seed);
  if (name == "ns3") return suite_ns3(trials, seed);
  if (name == "dfs4") return suite_dfs4(trials, seed);
  if (name == "ns5") return suite_ns5(trials, seed);
  if (name == "blocks") return suite_blocks(trials, seed);
  if (name == "entropy") return suite_entropy(trials, seed);
  if (name == "gatelist") return suite_gatelist(trials, seed);
  if (name == "rate") return suite_rate(trials, seed);
  if (name == "structural") return suite_structural(trials, seed);
  throw std::invalid_argument("unknown suite: " + name);
}

std::string summary_line(const VerificationReport& report) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "suite=%s seed=%llu trials=%d max_residual=%.3e %s",
                report.suite.c_str(),
                static_cast<unsigned long long>(report.seed), report.trials,
                report.max_residual, report.pass ? "PASS" : "FAIL");
  return std::string(buf);
}

std::vector<RateRow> code_rate_table(int n_max) {
  if (n_max < 1 || n_max > 40) {
    throw std::invalid_argument("code_rate_table: n_max must be in 1..40");
  }
  std::vector<RateRow> rows;
  for (int n = 3; n <= n_max; n += 2) {
    RateRow row;
    row.n = n;
    row.m = (n - 1) / 2;
    row.dim = binomial(n, row.m) - binomial(n, row.m - 1);
    row.k = std::bit_width(static_cast<unsigned long long>(row.dim)) - 1;
    row.k_exceeds_m = row.k > row.m;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cqec
