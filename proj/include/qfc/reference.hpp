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

#include "qfc/circuit.hpp"
#include "qfc/simulate.hpp"

namespace qfc::reference {

// Plain serial simulator written straight from the gate definitions, kept
// alongside the parallel kernels for tests and the benchmark.

simulate::StateVector apply_gate_serial(const simulate::StateVector& s,
                                        int qubit, const circuit::Mat2& m);
simulate::StateVector apply_cnot_serial(const simulate::StateVector& s,
                                        int control, int target);
simulate::StateVector run_serial(const circuit::Circuit& c,
                                 const simulate::StateVector& initial);

}  // namespace qfc::reference
