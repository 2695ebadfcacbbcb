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
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qfc/circuit.hpp"
#include "qfc/gf2.hpp"

namespace qfc::simulate {

/// Hard library cap on dense state size; CLI paths use kMaxCliQubits.
constexpr int kMaxQubits = 26;
constexpr int kMaxCliQubits = 12;

/// Dense state: 2^n complex amplitudes, index bit layout as in gf2 (wire 1
/// is the most significant bit).
struct StateVector {
  int n = 0;
  std::vector<std::complex<double>> amps;
};

StateVector basis_state(int n, std::uint64_t index);
StateVector random_state(int n, std::mt19937_64& rng);
double norm(const StateVector& s);
double max_abs_diff(const StateVector& a, const StateVector& b);

/// In-place gate application. These are the parallel production kernels;
/// qfc::reference keeps plain serial versions for cross-checking.
void apply_gate(StateVector& s, const circuit::OneQubitGate& g);
void apply_gate(StateVector& s, int qubit, const circuit::Mat2& m);
void apply_cnot(StateVector& s, int control, int target);

/// Runs every gate of c in order on a copy of the initial state.
StateVector run(const circuit::Circuit& c, const StateVector& initial);

/// The amplitude permutation of any CNOT block realizing c: entry i is
/// gf2::basis_map(c, i). Applying the block sends amplitude i to entry pi(i).
std::vector<std::uint64_t> cnot_block_permutation(const gf2::Configuration& c);

/// How a 1-qubit gate on wire k mixes amplitudes under configuration c:
/// entries pair as {i, i ^ offset}, and the member with zero_functional
/// evaluating to 0 takes the "0" role of the 2x2 mix.
struct PairingRule {
  int k = 0;
  std::uint64_t offset = 0;  // column k of the inverse configuration
  gf2::Functional zero_functional;
};

PairingRule predict_pairing(const gf2::Configuration& c, int k);

/// State after (CNOT block realizing c, then the gate on wire k), built
/// directly from the pairing rule instead of gate-by-gate simulation.
StateVector predict_after_gate(const gf2::Configuration& c, int k,
                               const circuit::Mat2& m, const StateVector& a);

/// Same, for a gate with matrix rows (u1, u2) / (u2, -u1); u1^2 + u2^2 = 1
/// within 1e-9.
StateVector predict_after_u(const gf2::Configuration& c, int k, double u1,
                            double u2, const StateVector& a);

struct ConsistencyReport {
  int trials = 0;
  int gates_checked = 0;
  double max_deviation = 0;
  double tolerance = 0;
  bool pass = false;
};

/// For every layer of c and every 1-qubit gate in it, compares the pairing
/// prediction against direct simulation on random normalized states.
/// Requires n <= 8.
ConsistencyReport consistency_check(const circuit::Circuit& c, int trials,
                                    double tol, std::uint64_t seed);

/// One line per amplitude: index, real, imaginary, 17 significant digits.
std::string dump_state(const StateVector& s);

}  // namespace qfc::simulate
