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

#include <cstddef>
#include <string>
#include <vector>

#include "qfc/circuit.hpp"
#include "qfc/gf2.hpp"

namespace qfc::layering {

/// One alternating block of a circuit: the configuration reached by a CNOT
/// run measured from a reset-to-identity baseline, plus the 1-qubit gates
/// applied under it. A terminal layer has no 1-qubit gates.
struct Layer {
  gf2::Configuration config;
  std::vector<circuit::CnotGate> cnot_gates;
  std::vector<circuit::OneQubitGate> oneq_gates;
  bool terminal = false;
};

struct LayerDecomposition {
  int n = 0;
  std::vector<Layer> layers;
  std::size_t layer_count = 0;  // N
  std::size_t oneq_count = 0;   // N_U
  std::size_t cnot_count = 0;   // N_CNOT
  std::vector<std::string> warnings;
};

/// Single-pass segmentation. The first layer is the identity configuration
/// when the circuit starts with a 1-qubit gate (or is empty); otherwise it
/// is the configuration of the leading CNOT run. Every later maximal CNOT
/// run starts a fresh accumulation from identity. A run composing to the
/// identity is appended to the previous layer instead of opening a new one
/// (recorded as a warning); a trailing run with no following 1-qubit gate
/// becomes a terminal layer.
LayerDecomposition decompose(const circuit::Circuit& c);

struct BoundsReport {
  std::size_t layer_count = 0;
  std::size_t oneq_count = 0;
  std::size_t cnot_count = 0;
  std::size_t oneq_upper = 0;  // n * N
  std::size_t cnot_upper = 0;  // (n^2 + n) * N
  bool unitary_lower_violated = false;  // some layer has no 1-qubit gate
  bool unitary_upper_exceeded = false;  // some layer exceeds n after fusion
};

/// Computes the count bounds for a decomposition and checks that
/// N - 1 <= N_CNOT (guaranteed for decompose output; throws otherwise).
BoundsReport bounds_report(const LayerDecomposition& d);

/// Human-readable report: per layer the row bitstrings, then the gate lists.
std::string format_report(const LayerDecomposition& d);

}  // namespace qfc::layering
