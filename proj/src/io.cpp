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

#include "cqec/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cqec {

namespace {

void require_keys(const json& j, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const char* what) {
  if (!j.is_object()) {
    throw std::invalid_argument(std::string(what) + ": expected a JSON object");
  }
  for (const auto& key : required) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string(what) + ": missing field '" + key + "'");
    }
  }
  for (const auto& item : j.items()) {
    if (!required.count(item.key()) && !optional.count(item.key())) {
      throw std::invalid_argument(std::string(what) + ": unknown field '" +
                                  item.key() + "'");
    }
  }
}

cdouble complex_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument(std::string(what) +
                                ": complex entries must be [re, im] pairs");
  }
  return cdouble(j[0].get<double>(), j[1].get<double>());
}

ordered_json complex_to_json(const cdouble& z) {
  return ordered_json::array({z.real(), z.imag()});
}

long positive_int(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long>() < 1) {
    throw std::invalid_argument(std::string(what) + ": expected a positive integer");
  }
  return j.get<long>();
}

}  // namespace

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  ordered_json data = ordered_json::array();
  for (long r = 0; r < m.rows(); ++r) {
    for (long c = 0; c < m.cols(); ++c) data.push_back(complex_to_json(m(r, c)));
  }
  j["data"] = std::move(data);
  return j;
}

Matrix matrix_from_json(const json& j) {
  require_keys(j, {"rows", "cols", "data"}, {}, "matrix");
  const long rows = positive_int(j["rows"], "matrix rows");
  const long cols = positive_int(j["cols"], "matrix cols");
  const auto& data = j["data"];
  if (!data.is_array() || static_cast<long>(data.size()) != rows * cols) {
    throw std::invalid_argument("matrix: data must hold rows*cols entries");
  }
  Matrix m(rows, cols);
  long k = 0;
  for (long r = 0; r < rows; ++r) {
    for (long c = 0; c < cols; ++c) m(r, c) = complex_from_json(data[k++], "matrix");
  }
  return m;
}

ordered_json state_to_json(const Vector& v) {
  ordered_json j;
  j["dim"] = v.size();
  ordered_json amps = ordered_json::array();
  for (long i = 0; i < v.size(); ++i) amps.push_back(complex_to_json(v(i)));
  j["amplitudes"] = std::move(amps);
  return j;
}

Vector state_from_json(const json& j) {
  require_keys(j, {"dim", "amplitudes"}, {}, "state");
  const long dim = positive_int(j["dim"], "state dim");
  const auto& amps = j["amplitudes"];
  if (!amps.is_array() || static_cast<long>(amps.size()) != dim) {
    throw std::invalid_argument("state: amplitudes must hold dim entries");
  }
  Vector v(dim);
  for (long i = 0; i < dim; ++i) v(i) = complex_from_json(amps[i], "state");
  return v;
}

Matrix density_from_json(const json& j) {
  if (j.is_object() && j.contains("amplitudes")) {
    const Vector v = state_from_json(j);
    if (std::abs(v.norm() - 1.0) > 1e-9) {
      throw std::invalid_argument("state: amplitudes are not normalized");
    }
    return Matrix(v * v.adjoint());
  }
  const Matrix m = matrix_from_json(j);
  require_valid_density(m, "density matrix");
  return m;
}

MixedUnitaryChannel channel_from_json(const json& j) {
  require_keys(j, {"n", "terms"}, {}, "channel");
  const int n = static_cast<int>(positive_int(j["n"], "channel n"));
  const auto& jterms = j["terms"];
  if (!jterms.is_array() || jterms.empty()) {
    throw std::invalid_argument("channel: terms must be a non-empty array");
  }
  std::vector<ChannelTerm> terms;
  const long dim = 1L << n;
  for (const auto& jt : jterms) {
    require_keys(jt, {"p", "kind"}, {"angle", "angles", "matrix"}, "channel term");
    if (!jt["p"].is_number()) {
      throw std::invalid_argument("channel term: p must be a number");
    }
    ChannelTerm term;
    term.p = jt["p"].get<double>();
    const std::string kind = jt["kind"].get<std::string>();

    auto forbid = [&](const char* key) {
      if (jt.contains(key)) {
        throw std::invalid_argument("channel term: field '" + std::string(key) +
                                    "' not allowed for kind '" + kind + "'");
      }
    };
    auto need_angle = [&]() {
      if (!jt.contains("angle") || !jt["angle"].is_number()) {
        throw std::invalid_argument("channel term: kind '" + kind +
                                    "' requires a numeric 'angle'");
      }
      return jt["angle"].get<double>();
    };

    if (kind == "identity") {
      forbid("angle");
      forbid("angles");
      forbid("matrix");
      term.u = Matrix::Identity(dim, dim);
    } else if (kind == "x" || kind == "y" || kind == "z") {
      forbid("angles");
      forbid("matrix");
      const Axis axis = kind == "x" ? Axis::x : kind == "y" ? Axis::y : Axis::z;
      term.u = collective(rot(axis, need_angle()), n);
    } else if (kind == "euler") {
      forbid("angle");
      forbid("matrix");
      if (!jt.contains("angles") || !jt["angles"].is_array() ||
          jt["angles"].size() != 3) {
        throw std::invalid_argument(
            "channel term: kind 'euler' requires 'angles' with three entries");
      }
      EulerAngles e;
      e.theta1 = jt["angles"][0].get<double>();
      e.theta2 = jt["angles"][1].get<double>();
      e.theta3 = jt["angles"][2].get<double>();
      term.u = collective(euler_recompose(e), n);
    } else if (kind == "matrix") {
      forbid("angle");
      forbid("angles");
      if (!jt.contains("matrix")) {
        throw std::invalid_argument("channel term: kind 'matrix' requires 'matrix'");
      }
      term.u = matrix_from_json(jt["matrix"]);
    } else {
      throw std::invalid_argument("channel term: unknown kind '" + kind + "'");
    }
    terms.push_back(std::move(term));
  }
  return make_channel(n, std::move(terms));
}

ordered_json gatelist_to_json(const GateList& list) {
  ordered_json j;
  j["n"] = list.n;
  ordered_json gates = ordered_json::array();
  for (const auto& g : list.gates) {
    ordered_json jg;
    jg["kind"] = gate_kind_name(g.kind);
    ordered_json controls = ordered_json::array();
    for (const auto& c : g.controls) {
      ordered_json jc;
      jc["wire"] = c.wire;
      jc["polarity"] = c.filled ? "filled" : "empty";
      controls.push_back(std::move(jc));
    }
    jg["controls"] = std::move(controls);
    jg["targets"] = g.targets;
    if (g.kind == GateKind::CU) jg["payload"] = matrix_to_json(g.payload);
    gates.push_back(std::move(jg));
  }
  j["gates"] = std::move(gates);
  return j;
}

GateList gatelist_from_json(const json& j) {
  require_keys(j, {"n", "gates"}, {}, "gatelist");
  GateList list;
  list.n = static_cast<int>(positive_int(j["n"], "gatelist n"));
  if (!j["gates"].is_array()) {
    throw std::invalid_argument("gatelist: gates must be an array");
  }
  for (const auto& jg : j["gates"]) {
    require_keys(jg, {"kind", "controls", "targets"}, {"payload"}, "gate");
    Gate g;
    g.kind = gate_kind_from_name(jg["kind"].get<std::string>());
    if (!jg["controls"].is_array() || !jg["targets"].is_array()) {
      throw std::invalid_argument("gate: controls and targets must be arrays");
    }
    for (const auto& jc : jg["controls"]) {
      require_keys(jc, {"wire", "polarity"}, {}, "gate control");
      Control c;
      c.wire = static_cast<int>(positive_int(jc["wire"], "gate control wire"));
      const std::string pol = jc["polarity"].get<std::string>();
      if (pol == "filled") {
        c.filled = true;
      } else if (pol == "empty") {
        c.filled = false;
      } else {
        throw std::invalid_argument("gate control: polarity must be filled or empty");
      }
      g.controls.push_back(c);
    }
    for (const auto& jt : jg["targets"]) {
      g.targets.push_back(static_cast<int>(positive_int(jt, "gate target")));
    }
    if (jg.contains("payload")) g.payload = matrix_from_json(jg["payload"]);
    validate_gate(list.n, g);
    list.gates.push_back(std::move(g));
  }
  return list;
}

ordered_json report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["max_residual"] = report.max_residual;
  j["pass"] = report.pass;
  j["details"] = report.details;
  return j;
}

ordered_json logical_basis_to_json(const LabeledVectors& basis) {
  ordered_json j;
  for (const auto& [label, v] : basis) j[label] = state_to_json(v);
  return j;
}

std::string multiplicities_csv(const IrrepDecomposition& d) {
  std::ostringstream out;
  out << "n,j,r,dim\n";
  for (const auto& b : d.blocks) {
    out << d.n << ',' << b.j << ',' << b.r << ',' << b.dim << '\n';
  }
  return out.str();
}

std::string rate_csv(const std::vector<RateRow>& rows) {
  std::ostringstream out;
  out << "n,m,dim,k,k_exceeds_m\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.m << ',' << row.dim << ',' << row.k << ','
        << (row.k_exceeds_m ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace cqec
