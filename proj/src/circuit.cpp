// Copyright 2026 The qfc Authors
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

#include "qfc/circuit.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <numbers>
#include <sstream>

#include "qfc/gf2.hpp"

namespace qfc::circuit {

namespace {

using std::complex;
constexpr double kPi = std::numbers::pi;
constexpr complex<double> kI{0.0, 1.0};

const std::map<std::string, int>& kind_table() {
  static const std::map<std::string, int> table = {
      {"h", 0},  {"x", 0},  {"y", 0},  {"z", 0},  {"s", 0},   {"t", 0},
      {"p", 1},  {"rx", 1}, {"ry", 1}, {"rz", 1}, {"u", 2},   {"u3", 3},
      {"m2", 8},
  };
  return table;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Mat2 mat2_mul(const Mat2& v, const Mat2& u) {
  return Mat2{v.m00 * u.m00 + v.m01 * u.m10, v.m00 * u.m01 + v.m01 * u.m11,
              v.m10 * u.m00 + v.m11 * u.m10, v.m10 * u.m01 + v.m11 * u.m11};
}

bool is_known_kind(const std::string& kind) {
  return kind_table().count(kind) != 0;
}

int param_count(const std::string& kind) {
  auto it = kind_table().find(kind);
  if (it == kind_table().end())
    throw std::invalid_argument("unknown gate kind '" + kind + "'");
  return it->second;
}

Mat2 gate_matrix(const OneQubitGate& g) {
  const auto& p = g.params;
  if (static_cast<int>(p.size()) != param_count(g.kind))
    throw std::invalid_argument("gate '" + g.kind + "' expects " +
                                std::to_string(param_count(g.kind)) +
                                " parameters");
  const double s2 = 1.0 / std::sqrt(2.0);
  if (g.kind == "h") return {s2, s2, s2, -s2};
  if (g.kind == "x") return {0, 1, 1, 0};
  if (g.kind == "y") return {0, -kI, kI, 0};
  if (g.kind == "z") return {1, 0, 0, -1};
  if (g.kind == "s") return {1, 0, 0, kI};
  if (g.kind == "t") return {1, 0, 0, std::exp(kI * (kPi / 4))};
  if (g.kind == "p") return {1, 0, 0, std::exp(kI * p[0])};
  if (g.kind == "rx") {
    double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
    return {c, -kI * s, -kI * s, c};
  }
  if (g.kind == "ry") {
    double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
    return {c, -s, s, c};
  }
  if (g.kind == "rz") {
    return {std::exp(-kI * (p[0] / 2)), 0, 0, std::exp(kI * (p[0] / 2))};
  }
  if (g.kind == "u") return {p[0], p[1], p[1], -p[0]};
  if (g.kind == "u3") {
    double c = std::cos(p[0] / 2), s = std::sin(p[0] / 2);
    return {c, -std::exp(kI * p[2]) * s, std::exp(kI * p[1]) * s,
            std::exp(kI * (p[1] + p[2])) * c};
  }
  // m2: row-major complex entries as (re, im) pairs.
  return {complex<double>{p[0], p[1]}, complex<double>{p[2], p[3]},
          complex<double>{p[4], p[5]}, complex<double>{p[6], p[7]}};
}

void validate(const Circuit& c) {
  if (c.n < 1 || c.n > gf2::kMaxQubits)
    throw std::invalid_argument("qubit count must be in [1, 64]");
  for (const Gate& g : c.gates) {
    if (const auto* one = std::get_if<OneQubitGate>(&g)) {
      if (!is_known_kind(one->kind))
        throw std::invalid_argument("unknown gate kind '" + one->kind + "'");
      if (one->qubit < 1 || one->qubit > c.n)
        throw std::invalid_argument("qubit index " +
                                    std::to_string(one->qubit) +
                                    " out of range");
      if (static_cast<int>(one->params.size()) != param_count(one->kind))
        throw std::invalid_argument("gate '" + one->kind +
                                    "' has wrong parameter count");
      if (one->kind == "u") {
        double norm = one->params[0] * one->params[0] +
                      one->params[1] * one->params[1];
        if (std::abs(norm - 1.0) > 1e-9)
          throw std::invalid_argument("u gate parameters are not normalized");
      }
    } else {
      const auto& cx = std::get<CnotGate>(g);
      if (cx.control < 1 || cx.control > c.n || cx.target < 1 ||
          cx.target > c.n)
        throw std::invalid_argument("cx index out of range");
      if (cx.control == cx.target)
        throw std::invalid_argument("cx control equals target");
    }
  }
}

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + msg),
      line(line),
      column(column) {}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_index(const Token& tok, int line_no, const char* what) {
  int v = 0;
  std::size_t used = 0;
  try {
    v = std::stoi(tok.text, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("malformed ") + what + " '" + tok.text + "'",
                     line_no, tok.column);
  }
  if (used != tok.text.size())
    throw ParseError(std::string("malformed ") + what + " '" + tok.text + "'",
                     line_no, tok.column);
  return v;
}

double parse_number(const Token& tok, int line_no) {
  char* end = nullptr;
  double v = std::strtod(tok.text.c_str(), &end);
  if (end != tok.text.c_str() + tok.text.size() || tok.text.empty())
    throw ParseError("malformed number '" + tok.text + "'", line_no,
                     tok.column);
  return v;
}

}  // namespace

Circuit parse_circuit(std::istream& in) {
  Circuit c;
  bool have_header = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks[0].text != "qubits")
        throw ParseError("expected 'qubits <n>' header, got '" + toks[0].text +
                             "'",
                         line_no, toks[0].column);
      if (toks.size() != 2)
        throw ParseError("'qubits' takes exactly one argument", line_no,
                         toks[0].column);
      int n = parse_index(toks[1], line_no, "qubit count");
      if (n < 1 || n > gf2::kMaxQubits)
        throw ParseError("qubit count must be in [1, 64]", line_no,
                         toks[1].column);
      c.n = n;
      have_header = true;
      continue;
    }
    const std::string& kind = toks[0].text;
    if (kind == "cx") {
      if (toks.size() != 3)
        throw ParseError("cx takes control and target", line_no,
                         toks[0].column);
      int control = parse_index(toks[1], line_no, "control");
      int target = parse_index(toks[2], line_no, "target");
      if (control < 1 || control > c.n)
        throw ParseError("control out of range", line_no, toks[1].column);
      if (target < 1 || target > c.n)
        throw ParseError("target out of range", line_no, toks[2].column);
      if (control == target)
        throw ParseError("control equals target", line_no, toks[2].column);
      c.gates.emplace_back(CnotGate{control, target});
      continue;
    }
    if (!is_known_kind(kind))
      throw ParseError("unknown gate '" + kind + "'", line_no, toks[0].column);
    int want = param_count(kind);
    if (static_cast<int>(toks.size()) != 2 + want)
      throw ParseError("gate '" + kind + "' expects qubit plus " +
                           std::to_string(want) + " parameter(s)",
                       line_no, toks[0].column);
    OneQubitGate g;
    g.kind = kind;
    g.qubit = parse_index(toks[1], line_no, "qubit");
    if (g.qubit < 1 || g.qubit > c.n)
      throw ParseError("qubit out of range", line_no, toks[1].column);
    for (int i = 0; i < want; ++i)
      g.params.push_back(parse_number(toks[2 + i], line_no));
    if (kind == "u") {
      double norm = g.params[0] * g.params[0] + g.params[1] * g.params[1];
      if (std::abs(norm - 1.0) > 1e-9)
        throw ParseError("u parameters are not normalized", line_no,
                         toks[2].column);
    }
    c.gates.push_back(std::move(g));
  }
  if (!have_header)
    throw ParseError("missing 'qubits <n>' header", line_no + 1, 1);
  return c;
}

Circuit parse_circuit_text(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.n << "\n";
  for (const Gate& g : c.gates) {
    if (const auto* one = std::get_if<OneQubitGate>(&g)) {
      out << one->kind << ' ' << one->qubit;
      for (double p : one->params) out << ' ' << format_double(p);
      out << "\n";
    } else {
      const auto& cx = std::get<CnotGate>(g);
      out << "cx " << cx.control << ' ' << cx.target << "\n";
    }
  }
  return out.str();
}

Circuit fuse_one_qubit_runs(const Circuit& c) {
  validate(c);
  Circuit out;
  out.n = c.n;
  out.name = c.name;

  std::vector<int> span_order;                    // qubits in first-gate order
  std::vector<std::vector<OneQubitGate>> pending(c.n + 1);

  auto flush = [&]() {
    for (int q : span_order) {
      auto& run = pending[q];
      if (run.size() == 1) {
        out.gates.emplace_back(run[0]);
      } else {
        Mat2 w = gate_matrix(run[0]);
        for (std::size_t i = 1; i < run.size(); ++i)
          w = mat2_mul(gate_matrix(run[i]), w);
        OneQubitGate fused;
        fused.kind = "m2";
        fused.qubit = q;
        fused.params = {w.m00.real(), w.m00.imag(), w.m01.real(), w.m01.imag(),
                        w.m10.real(), w.m10.imag(), w.m11.real(), w.m11.imag()};
        out.gates.emplace_back(std::move(fused));
      }
      run.clear();
    }
    span_order.clear();
  };

  for (const Gate& g : c.gates) {
    if (const auto* one = std::get_if<OneQubitGate>(&g)) {
      if (pending[one->qubit].empty()) span_order.push_back(one->qubit);
      pending[one->qubit].push_back(*one);
    } else {
      flush();
      out.gates.push_back(g);
    }
  }
  flush();
  return out;
}

QftGateSet qft_gate_set(int h) {
  if (h < 1 || h > 60) throw std::invalid_argument("level out of range");
  QftGateSet set;
  set.h = h;
  set.alpha = 2.0 * kPi / std::pow(2.0, h + 1);
  set.a = OneQubitGate{"rz", 0, {2.0 * set.alpha}};
  set.b = OneQubitGate{"rz", 0, {-set.alpha}};
  set.c = OneQubitGate{"rz", 0, {set.alpha}};
  set.p = OneQubitGate{"p", 0, {set.alpha}};
  return set;
}

Circuit gen_qft(int n) {
  if (n < 2 || n > 16)
    throw std::invalid_argument("qft size must be in [2, 16], got " +
                                std::to_string(n));
  Circuit c;
  c.n = n;
  c.name = "qft" + std::to_string(n);
  for (int t = 1; t <= n; ++t) {
    c.gates.emplace_back(OneQubitGate{"h", t, {}});
    for (int d = 1; d <= n - t; ++d) {
      int ctrl = t + d;
      QftGateSet set = qft_gate_set(d + 1);
      set.b.qubit = t;
      set.c.qubit = t;
      set.p.qubit = ctrl;
      c.gates.emplace_back(CnotGate{ctrl, t});
      c.gates.emplace_back(set.b);
      c.gates.emplace_back(CnotGate{ctrl, t});
      c.gates.emplace_back(set.c);
      c.gates.emplace_back(set.p);
    }
  }
  return c;
}

Circuit gen_fixture(const std::string& name) {
  std::vector<CnotGate> block;
  if (name == "ladder-wrap-6") {
    block = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}};
  } else if (name == "kandala-6") {
    block = {{2, 1}, {1, 3}, {4, 5}, {6, 5}, {2, 4}};
  } else {
    throw std::invalid_argument("unknown fixture '" + name + "'");
  }
  Circuit c;
  c.n = 6;
  c.name = name;
  for (int q = 1; q <= 6; ++q)
    c.gates.emplace_back(OneQubitGate{"rz", q, {0.1 * q}});
  for (const CnotGate& g : block) c.gates.emplace_back(g);
  for (int q = 1; q <= 6; ++q)
    c.gates.emplace_back(OneQubitGate{"rz", q, {0.2 * q}});
  return c;
}

}  // namespace qfc::circuit
