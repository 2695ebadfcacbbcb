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

#pragma once

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qfc::circuit {

struct OneQubitGate {
  std::string kind;
  int qubit = 0;  // 1-based
  std::vector<double> params;

  bool operator==(const OneQubitGate&) const = default;
};

struct CnotGate {
  int control = 0;
  int target = 0;

  bool operator==(const CnotGate&) const = default;
};

using Gate = std::variant<OneQubitGate, CnotGate>;

struct Circuit {
  int n = 0;
  std::vector<Gate> gates;
  std::string name;
};

/// Row-major 2x2 complex matrix of a 1-qubit gate.
struct Mat2 {
  std::complex<double> m00, m01, m10, m11;
};

Mat2 mat2_mul(const Mat2& v, const Mat2& u);  // v * u

/// True for the supported gate vocabulary: h x y z s t p rx ry rz u u3 m2.
bool is_known_kind(const std::string& kind);
int param_count(const std::string& kind);
Mat2 gate_matrix(const OneQubitGate& g);

/// Checks indices, kinds, parameter counts and the normalization of `u`
/// gates; throws std::invalid_argument on violation.
void validate(const Circuit& c);

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int column);
  int line;
  int column;
};

/// Reads the line-oriented circuit format: a `qubits <n>` header, then one
/// gate per line (`<kind> <qubit> [params...]` or `cx <control> <target>`);
/// `#` starts a comment. Throws ParseError with line/column on failure.
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit_text(const std::string& text);

/// Inverse of parse_circuit on the gate list; numeric parameters are written
/// with 17 significant digits so round-trips are bit-exact.
std::string serialize_circuit(const Circuit& c);

/// Within each CNOT-free span, replaces every run of two or more gates on
/// the same qubit by a single `m2` gate carrying their 2x2 product. Spans
/// containing a single gate on a qubit are left untouched.
Circuit fuse_one_qubit_runs(const Circuit& c);

/// The 1-qubit ingredients of one controlled-phase decomposition at level h:
/// the controlled gate is diag(1, exp(2i*alpha)) with alpha = 2*pi/2^(h+1).
/// b sits on the target between the two CNOTs, c on the target after them,
/// p on the control; a is the Rz form of the full control phase.
struct QftGateSet {
  int h = 0;
  double alpha = 0;
  OneQubitGate a, b, c, p;
};
QftGateSet qft_gate_set(int h);

/// The decomposed n-qubit Fourier transform circuit (bit-reversed output,
/// no trailing swaps): H on each wire in order, with each controlled phase
/// expanded to CNOT, b, CNOT, c, p from qft_gate_set. 2 <= n <= 16.
Circuit gen_qft(int n);

/// Named example circuits: "ladder-wrap-6" and "kandala-6", six-qubit
/// entangler blocks wrapped in one rz per qubit on both sides.
Circuit gen_fixture(const std::string& name);

}  // namespace qfc::circuit
