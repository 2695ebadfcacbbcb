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

#include "qfc/reference.hpp"

#include <stdexcept>

#include "qfc/gf2.hpp"

namespace qfc::reference {

using simulate::StateVector;

StateVector apply_gate_serial(const StateVector& s, int qubit,
                              const circuit::Mat2& m) {
  std::uint64_t mask = gf2::qubit_mask(s.n, qubit);
  StateVector out;
  out.n = s.n;
  out.amps.resize(s.amps.size());
  for (std::uint64_t i = 0; i < s.amps.size(); ++i) {
    std::uint64_t i0 = i & ~mask;
    std::uint64_t i1 = i | mask;
    out.amps[i] = (i & mask) ? m.m10 * s.amps[i0] + m.m11 * s.amps[i1]
                             : m.m00 * s.amps[i0] + m.m01 * s.amps[i1];
  }
  return out;
}

StateVector apply_cnot_serial(const StateVector& s, int control, int target) {
  if (control == target)
    throw std::invalid_argument("cx control equals target");
  std::uint64_t cmask = gf2::qubit_mask(s.n, control);
  std::uint64_t tmask = gf2::qubit_mask(s.n, target);
  StateVector out;
  out.n = s.n;
  out.amps.resize(s.amps.size());
  for (std::uint64_t i = 0; i < s.amps.size(); ++i) {
    std::uint64_t j = (i & cmask) ? (i ^ tmask) : i;
    out.amps[j] = s.amps[i];
  }
  return out;
}

StateVector run_serial(const circuit::Circuit& c, const StateVector& initial) {
  circuit::validate(c);
  if (c.n != initial.n)
    throw std::invalid_argument("circuit and state dimensions differ");
  StateVector s = initial;
  for (const circuit::Gate& g : c.gates) {
    if (const auto* one = std::get_if<circuit::OneQubitGate>(&g))
      s = apply_gate_serial(s, one->qubit, circuit::gate_matrix(*one));
    else {
      const auto& cx = std::get<circuit::CnotGate>(g);
      s = apply_cnot_serial(s, cx.control, cx.target);
    }
  }
  return s;
}

}  // namespace qfc::reference
