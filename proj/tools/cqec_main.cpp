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
//
// cqec command-line front end.
//
// Exit codes: 0 success / all claims hold, 1 a verified claim fails,
// 2 usage or configuration error. Identical invocations (same flags and
// seed) produce byte-identical primary outputs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cqec/channels.hpp"
#include "cqec/codes.hpp"
#include "cqec/io.hpp"
#include "cqec/rng.hpp"
#include "cqec/su2.hpp"
#include "cqec/verify.hpp"

namespace {

using namespace cqec;

CodeSpec build_code(const std::string& code, const std::string& variant) {
  if (code == "ns3") {
    if (variant == "original") return build_ue3(Basis3Variant::original);
    if (variant == "redefined") return build_ue3(Basis3Variant::redefined);
    throw std::invalid_argument("unknown basis variant: " + variant);
  }
  if (variant != "original") {
    throw std::invalid_argument("--variant applies to ns3 only");
  }
  if (code == "dfs4") return build_ue4();
  if (code == "ns5") return build_ue5();
  throw std::invalid_argument("unknown code: " + code);
}

json load_json(const std::string& path) {
  return json::parse(read_text_file(path));
}

// A state argument is either a named ket or "@file.json" holding a state or
// density matrix in the documented schema.
Matrix state_from_spec(const std::string& spec, int qubits, const char* what) {
  const long dim = 1L << qubits;
  if (!spec.empty() && spec[0] == '@') {
    const Matrix rho = density_from_json(load_json(spec.substr(1)));
    if (rho.rows() != dim) {
      throw std::invalid_argument(std::string(what) + ": state file has dimension " +
                                  std::to_string(rho.rows()) + ", expected " +
                                  std::to_string(dim));
    }
    return rho;
  }
  if (spec == "mixed") {
    return Matrix::Identity(dim, dim) / static_cast<double>(dim);
  }
  Vector v;
  if (qubits == 1) {
    const double s = 1.0 / std::sqrt(2.0);
    if (spec == "0") {
      v = basis_ket(1, 0);
    } else if (spec == "1") {
      v = basis_ket(1, 1);
    } else if (spec == "+") {
      v = s * (basis_ket(1, 0) + basis_ket(1, 1));
    } else if (spec == "-") {
      v = s * (basis_ket(1, 0) - basis_ket(1, 1));
    } else {
      throw std::invalid_argument(std::string(what) + ": unknown one-qubit state '" +
                                  spec + "' (use 0, 1, +, -, mixed, or @file.json)");
    }
  } else if (qubits == 2) {
    if (spec.size() == 2 && (spec[0] == '0' || spec[0] == '1') &&
        (spec[1] == '0' || spec[1] == '1')) {
      v = basis_ket(2, (spec[0] - '0') * 2 + (spec[1] - '0'));
    } else {
      throw std::invalid_argument(std::string(what) + ": unknown two-qubit state '" +
                                  spec + "' (use 00, 01, 10, 11, mixed, or @file.json)");
    }
  } else {
    throw std::invalid_argument(std::string(what) + ": unsupported wire count");
  }
  return Matrix(v * v.adjoint());
}

// Primary output goes to --out when given, otherwise to stdout.
void write_primary(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_text_file(out_path, content);
  }
}

// Human summary lines must not corrupt a JSON stream on stdout, so they move
// to stderr whenever the primary output is already using stdout.
void emit_summary(const std::string& out_path, const std::string& line) {
  if (out_path.empty()) {
    std::cerr << line << "\n";
  } else {
    std::cout << line << "\n";
  }
}

void check_format(const std::string& format, const std::string& expected) {
  if (!format.empty() && format != expected) {
    throw std::invalid_argument("this output is " + expected + " only");
  }
}

struct DecomposeArgs {
  int n = 0;
  std::string out;
  std::string format;
};

int run_decompose(const DecomposeArgs& a) {
  check_format(a.format, "csv");
  write_primary(a.out, multiplicities_csv(multiplicities(a.n)));
  return 0;
}

struct EncodeArgs {
  std::string code;
  std::string variant = "original";
  std::string data;
  std::string gauge;
  bool gauge_given = false;
  std::string out;
  std::string export_encoder;
  std::string export_gatelist;
};

int run_encode(const EncodeArgs& a) {
  const CodeSpec code = build_code(a.code, a.variant);
  const int data_qubits = static_cast<int>(wires_with_role(code, WireRole::data).size());
  const int gauge_qubits =
      static_cast<int>(wires_with_role(code, WireRole::gauge).size());

  if (gauge_qubits == 0 && a.gauge_given) {
    throw std::invalid_argument(a.code + " has no gauge wire; --gauge not allowed");
  }
  const Matrix data = state_from_spec(a.data, data_qubits, "--data");
  const Matrix gauge = gauge_qubits == 0
                           ? Matrix::Identity(1, 1)
                           : state_from_spec(a.gauge_given ? a.gauge : "0",
                                             gauge_qubits, "--gauge");

  const Matrix rho = encode(code, gauge, data);

  // Build every export before writing anything, so a failure cannot leave
  // a partial set of files behind.
  const std::string rho_text = matrix_to_json(rho).dump(2) + "\n";
  std::string encoder_text;
  if (!a.export_encoder.empty()) {
    encoder_text = matrix_to_json(code.encoder).dump(2) + "\n";
  }
  std::string gatelist_text;
  if (!a.export_gatelist.empty()) {
    GateList list;
    if (a.code == "ns3") {
      list = build_ue3_gatelists().full;
    } else if (a.code == "dfs4") {
      list = build_ue4_gatelist();
    } else {
      list = build_ue5_gatelist();
    }
    gatelist_text = gatelist_to_json(list).dump(2) + "\n";
  }

  write_primary(a.out, rho_text);
  if (!a.export_encoder.empty()) write_text_file(a.export_encoder, encoder_text);
  if (!a.export_gatelist.empty()) write_text_file(a.export_gatelist, gatelist_text);
  return 0;
}

struct SimulateArgs {
  std::string code;
  std::string variant = "original";
  std::string channel_path;
  std::string data;
  bool data_given = false;
  std::string gauge;
  bool gauge_given = false;
  int trials = 20;
  std::uint64_t seed = 0;
  std::string out;
};

int run_simulate(const SimulateArgs& a) {
  const CodeSpec code = build_code(a.code, a.variant);
  const MixedUnitaryChannel channel = channel_from_json(load_json(a.channel_path));
  if (channel.n != code.n) {
    throw std::invalid_argument("channel acts on " + std::to_string(channel.n) +
                                " qubits but " + a.code + " uses " +
                                std::to_string(code.n));
  }
  const int data_qubits = static_cast<int>(wires_with_role(code, WireRole::data).size());
  const int gauge_qubits =
      static_cast<int>(wires_with_role(code, WireRole::gauge).size());
  if (gauge_qubits == 0 && a.gauge_given) {
    throw std::invalid_argument(a.code + " has no gauge wire; --gauge not allowed");
  }
  Matrix fixed_data, fixed_gauge;
  if (a.data_given) fixed_data = state_from_spec(a.data, data_qubits, "--data");
  if (a.gauge_given) fixed_gauge = state_from_spec(a.gauge, gauge_qubits, "--gauge");

  double min_fidelity = 1.0;
  double max_product_residual = 0.0;
  ordered_json details = ordered_json::array();
  for (int t = 0; t < a.trials; ++t) {
    Rng rng(sub_seed(a.seed, static_cast<std::uint64_t>(t)));
    // Draw order (data first, then gauge) is part of the determinism
    // contract; unset inputs are redrawn every trial.
    const Matrix data =
        a.data_given ? fixed_data : rng.random_pure_density(1 << data_qubits);
    Matrix gauge = Matrix::Identity(1, 1);
    if (gauge_qubits > 0) {
      gauge = a.gauge_given ? fixed_gauge : rng.random_density(1 << gauge_qubits);
    }

    Matrix rho = apply_channel(channel, encode(code, gauge, data));
    const double trace = rho.trace().real();
    if (trace <= 1e-12) {
      throw std::invalid_argument("channel output has vanishing trace");
    }
    rho /= trace;

    const DecodeResult dec = decode(code, rho);
    const double fid = fidelity(dec.data_out, data);
    const Matrix gauge_out = dec.gauge_out / dec.gauge_out.trace().real();
    const double entropy = von_neumann_entropy(gauge_out);

    min_fidelity = std::min(min_fidelity, fid);
    max_product_residual = std::max(max_product_residual, dec.product_residual);
    ordered_json rec;
    rec["trial"] = t;
    rec["fidelity"] = fid;
    rec["product_residual"] = dec.product_residual;
    rec["gauge_entropy_bits"] = entropy;
    details.push_back(std::move(rec));
  }

  const bool pass = min_fidelity > 1.0 - 1e-9;
  ordered_json report;
  report["command"] = "simulate";
  report["code"] = a.code;
  if (a.code == "ns3") report["variant"] = a.variant;
  report["channel"] = a.channel_path;
  report["seed"] = a.seed;
  report["trials"] = a.trials;
  report["min_fidelity"] = min_fidelity;
  report["max_product_residual"] = max_product_residual;
  report["pass"] = pass;
  report["details"] = std::move(details);

  char line[192];
  std::snprintf(line, sizeof(line),
                "simulate code=%s seed=%llu trials=%d min_fidelity=%.12g %s",
                a.code.c_str(), static_cast<unsigned long long>(a.seed), a.trials,
                min_fidelity, pass ? "PASS" : "FAIL");
  write_primary(a.out, report.dump(2) + "\n");
  emit_summary(a.out, line);
  return pass ? 0 : 1;
}

struct VerifyArgs {
  std::string suite;
  int trials = 100;
  std::uint64_t seed = 7;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  const VerificationReport report = run_suite(a.suite, a.trials, a.seed);
  write_primary(a.out, report_to_json(report).dump(2) + "\n");
  emit_summary(a.out, summary_line(report));
  return report.pass ? 0 : 1;
}

struct ExportArgs {
  std::string what;
  std::string code;
  std::string variant = "original";
  bool reduced = false;
  int n = 0;
  bool n_given = false;
  std::string out;
  std::string format;
};

int run_export(const ExportArgs& a) {
  if (a.what == "multiplicities") {
    check_format(a.format, "csv");
    if (!a.n_given) throw std::invalid_argument("--what multiplicities requires --n");
    write_primary(a.out, multiplicities_csv(multiplicities(a.n)));
    return 0;
  }
  if (a.what == "rate") {
    check_format(a.format, "csv");
    write_primary(a.out, rate_csv(code_rate_table(a.n_given ? a.n : 39)));
    return 0;
  }
  check_format(a.format, "json");
  if (a.code.empty()) {
    throw std::invalid_argument("--what " + a.what + " requires --code");
  }
  if (a.reduced && (a.what != "gatelist" || a.code != "ns3")) {
    throw std::invalid_argument("--reduced applies to the ns3 gate list only");
  }
  if (a.what == "encoder") {
    const CodeSpec code = build_code(a.code, a.variant);
    write_primary(a.out, matrix_to_json(code.encoder).dump(2) + "\n");
    return 0;
  }
  if (a.what == "logical-basis") {
    const CodeSpec code = build_code(a.code, a.variant);
    write_primary(a.out, logical_basis_to_json(code.logical_columns).dump(2) + "\n");
    return 0;
  }
  if (a.what == "gatelist") {
    if (a.variant != "original" && a.code != "ns3") {
      throw std::invalid_argument("--variant applies to ns3 only");
    }
    GateList list;
    if (a.code == "ns3") {
      const GateListPair pair = build_ue3_gatelists();
      list = a.reduced ? pair.reduced : pair.full;
    } else if (a.code == "dfs4") {
      list = build_ue4_gatelist();
    } else if (a.code == "ns5") {
      list = build_ue5_gatelist();
    } else {
      throw std::invalid_argument("unknown code: " + a.code);
    }
    write_primary(a.out, gatelist_to_json(list).dump(2) + "\n");
    return 0;
  }
  throw std::invalid_argument("unknown export target: " + a.what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator and verifier for collective-error qubit codes"};
  app.require_subcommand(1);

  DecomposeArgs dec;
  auto* cmd_decompose =
      app.add_subcommand("decompose", "Angular-momentum block multiplicities as CSV");
  cmd_decompose->add_option("--n", dec.n, "Number of qubits (1..30)")->required();
  cmd_decompose->add_option("--out", dec.out, "Output file (default stdout)");
  cmd_decompose->add_option("--format", dec.format, "Output format (csv)");

  EncodeArgs enc;
  auto* cmd_encode =
      app.add_subcommand("encode", "Encode a data state and write the density matrix");
  cmd_encode->add_option("--code", enc.code, "Code: ns3, dfs4, ns5")->required();
  cmd_encode->add_option("--variant", enc.variant,
                         "ns3 basis variant: original or redefined");
  cmd_encode->add_option("--data", enc.data, "Data state (named ket or @file.json)")
      ->required();
  auto* enc_gauge = cmd_encode->add_option(
      "--gauge", enc.gauge, "Gauge state (named ket or @file.json, default 0)");
  cmd_encode->add_option("--out", enc.out, "Output file (default stdout)");
  cmd_encode->add_option("--export-encoder", enc.export_encoder,
                         "Also write the encoder matrix JSON here");
  cmd_encode->add_option("--export-gatelist", enc.export_gatelist,
                         "Also write the gate-list JSON here");

  SimulateArgs sim;
  auto* cmd_simulate = app.add_subcommand(
      "simulate", "Encode, apply a channel from file, decode, and report fidelity");
  cmd_simulate->add_option("--code", sim.code, "Code: ns3, dfs4, ns5")->required();
  cmd_simulate->add_option("--variant", sim.variant,
                           "ns3 basis variant: original or redefined");
  cmd_simulate->add_option("--channel", sim.channel_path, "Channel JSON file")
      ->required();
  auto* sim_data = cmd_simulate->add_option(
      "--data", sim.data, "Data state (default: random pure state per trial)");
  auto* sim_gauge = cmd_simulate->add_option(
      "--gauge", sim.gauge, "Gauge state (default: random density per trial)");
  cmd_simulate->add_option("--trials", sim.trials, "Number of trials")
      ->check(CLI::PositiveNumber);
  cmd_simulate->add_option("--seed", sim.seed, "Base seed");
  cmd_simulate->add_option("--out", sim.out, "Report file (default stdout)");

  VerifyArgs ver;
  auto* cmd_verify =
      app.add_subcommand("verify", "Run a verification suite and write its report");
  cmd_verify->add_option("--suite", ver.suite, "Suite name (see README)")->required();
  cmd_verify->add_option("--trials", ver.trials, "Number of trials")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--seed", ver.seed, "Base seed");
  cmd_verify->add_option("--out", ver.out, "Report file (default stdout)");

  ExportArgs exp;
  auto* cmd_export = app.add_subcommand("export", "Write tables and code artifacts");
  cmd_export
      ->add_option("--what", exp.what,
                   "encoder, gatelist, logical-basis, multiplicities, rate")
      ->required();
  cmd_export->add_option("--code", exp.code, "Code: ns3, dfs4, ns5");
  cmd_export->add_option("--variant", exp.variant,
                         "ns3 basis variant: original or redefined");
  cmd_export->add_flag("--reduced", exp.reduced,
                       "Export the reduced ns3 gate list instead of the full one");
  auto* exp_n = cmd_export->add_option(
      "--n", exp.n, "Qubit count (multiplicities) or table limit (rate)");
  cmd_export->add_option("--out", exp.out, "Output file (default stdout)");
  cmd_export->add_option("--format", exp.format, "Output format (json or csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  enc.gauge_given = enc_gauge->count() > 0;
  sim.data_given = sim_data->count() > 0;
  sim.gauge_given = sim_gauge->count() > 0;
  exp.n_given = exp_n->count() > 0;

  try {
    if (cmd_decompose->parsed()) return run_decompose(dec);
    if (cmd_encode->parsed()) return run_encode(enc);
    if (cmd_simulate->parsed()) return run_simulate(sim);
    if (cmd_verify->parsed()) return run_verify(ver);
    if (cmd_export->parsed()) return run_export(exp);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
