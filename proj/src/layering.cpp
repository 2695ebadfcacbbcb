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

#include "qfc/layering.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace qfc::layering {

LayerDecomposition decompose(const circuit::Circuit& c) {
  circuit::validate(c);
  LayerDecomposition d;
  d.n = c.n;

  gf2::Configuration ident = gf2::Configuration::identity(c.n);
  gf2::Configuration acc = ident;
  std::vector<circuit::CnotGate> pending;
  bool accumulating = false;

  auto close_run = [&]() {
    if (!accumulating) return;
    if (acc == ident && !d.layers.empty()) {
      // The run is unitarily a no-op; keep its gates with the previous layer.
      auto& prev = d.layers.back().cnot_gates;
      prev.insert(prev.end(), pending.begin(), pending.end());
      d.warnings.push_back("identity-composing CNOT run of " +
                           std::to_string(pending.size()) +
                           " gate(s) merged into layer " +
                           std::to_string(d.layers.size()));
    } else {
      d.layers.push_back(Layer{acc, pending, {}, false});
    }
    pending.clear();
    acc = ident;
    accumulating = false;
  };

  for (const circuit::Gate& g : c.gates) {
    if (const auto* cx = std::get_if<circuit::CnotGate>(&g)) {
      accumulating = true;
      acc = gf2::apply_cnot_row(acc, cx->control, cx->target);
      pending.push_back(*cx);
    } else {
      close_run();
      if (d.layers.empty()) d.layers.push_back(Layer{ident, {}, {}, false});
      d.layers.back().oneq_gates.push_back(std::get<circuit::OneQubitGate>(g));
    }
  }
  close_run();
  if (d.layers.empty()) d.layers.push_back(Layer{ident, {}, {}, false});

  for (Layer& layer : d.layers) {
    layer.terminal = layer.oneq_gates.empty();
    d.oneq_count += layer.oneq_gates.size();
    d.cnot_count += layer.cnot_gates.size();
  }
  d.layer_count = d.layers.size();
  return d;
}

BoundsReport bounds_report(const LayerDecomposition& d) {
  BoundsReport r;
  r.layer_count = d.layer_count;
  r.oneq_count = d.oneq_count;
  r.cnot_count = d.cnot_count;
  std::size_t n = static_cast<std::size_t>(d.n);
  r.oneq_upper = n * d.layer_count;
  r.cnot_upper = (n * n + n) * d.layer_count;
  for (const Layer& layer : d.layers) {
    if (layer.oneq_gates.empty()) r.unitary_lower_violated = true;
    std::set<int> qubits;
    for (const auto& g : layer.oneq_gates) qubits.insert(g.qubit);
    if (qubits.size() > n) r.unitary_upper_exceeded = true;
  }
  if (d.layer_count >= 1 && d.cnot_count + 1 < d.layer_count)
    throw std::logic_error("layer decomposition violates N-1 <= N_CNOT");
  return r;
}

std::string format_report(const LayerDecomposition& d) {
  std::ostringstream out;
  BoundsReport b = bounds_report(d);
  out << "qubits " << d.n << "\n";
  out << "layers " << b.layer_count << " oneq " << b.oneq_count << " cnot "
      << b.cnot_count << "\n";
  out << "bounds oneq [" << b.layer_count << ", " << b.oneq_upper
      << "] cnot [" << (b.layer_count - 1) << ", " << b.cnot_upper << "]\n";
  if (b.unitary_lower_violated) out << "note: terminal layer(s) present\n";
  for (const std::string& w : d.warnings) out << "warning: " << w << "\n";
  for (std::size_t i = 0; i < d.layers.size(); ++i) {
    const Layer& layer = d.layers[i];
    out << "layer " << (i + 1) << (layer.terminal ? " (terminal)" : "")
        << "\n";
    out << "  rows:";
    for (const std::string& row : gf2::to_bitstrings(layer.config))
      out << ' ' << row;
    out << "\n  cnot:";
    if (layer.cnot_gates.empty()) out << " -";
    for (const auto& g : layer.cnot_gates)
      out << ' ' << g.control << '>' << g.target;
    out << "\n  oneq:";
    if (layer.oneq_gates.empty()) out << " -";
    for (const auto& g : layer.oneq_gates) {
      out << ' ' << g.kind << '(' << g.qubit << ')';
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace qfc::layering
