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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qfc/circuit.hpp"
#include "qfc/gf2.hpp"

namespace qfc::synthesis {

enum class Method { ancilla, gauss, exact };

std::string method_name(Method m);

/// A CNOT sequence realizing a target configuration when applied from the
/// initial configuration. The ancilla method uses wires n+1..2n in addition
/// to the computational wires 1..n.
struct SynthesisResult {
  std::vector<circuit::CnotGate> gates;
  Method method = Method::gauss;
  std::size_t length = 0;
  bool optimal = false;
};

/// Copies the initial configuration onto n ancilla wires, then builds each
/// target row by XOR-ing from the copies: CNOT(k, n+k) for k = 1..n, then
/// for each row k the gates CNOT(n+j, k) over the symmetric difference of
/// the row support and {k}, ancilla indices ascending. The identity target
/// yields an empty sequence. Length is at most n^2 + n. The result is
/// checked internally by GF(2) tracking over all 2n wires.
SynthesisResult synth_ancilla(const gf2::Configuration& target);

/// Reduces the target to identity by row additions (columns left to right,
/// eliminating below then above the pivot) and emits the recorded operation
/// list reversed. Uses computational wires only; length is at most n^2.
SynthesisResult synth_gauss(const gf2::Configuration& target);

/// A provably shortest CNOT sequence (graph distance under row-addition
/// generators). Up to n = 5 answers come from a precomputed distance table;
/// n = 6 runs a bidirectional level search per query. Throws for n > 6.
SynthesisResult synth_exact(const gf2::Configuration& target);

/// The per-query bidirectional route on its own (any n <= 6). synth_exact
/// uses it for n = 6; tests cross-check it against the table route.
SynthesisResult synth_exact_search(const gf2::Configuration& target);

/// Distances from the identity to every invertible n x n GF(2) matrix,
/// indexed by the n^2-bit packed code (row k in bits [k*n, k*n+n), row 1
/// lowest; bit layout inside a row as in gf2::Functional). 255 marks
/// singular matrices.
class DistanceTable {
 public:
  /// Process-wide table, built on first use (n <= 5). When the environment
  /// variable QFC_CACHE_DIR is set, the table is loaded from / saved to
  /// "<dir>/qfc-bfs-<n>.bin".
  static const DistanceTable& instance(int n);

  /// Level-synchronous scan over the packed code space; the parallel
  /// production builder.
  static DistanceTable build(int n);
  /// Queue-based reference builder, kept for tests.
  static DistanceTable build_serial(int n);

  static std::uint64_t pack(const gf2::Configuration& c);
  static gf2::Configuration unpack(int n, std::uint64_t code);

  int n() const { return n_; }
  std::uint8_t distance(std::uint64_t code) const { return dist_[code]; }
  const std::vector<std::uint8_t>& distances() const { return dist_; }

  void save(const std::filesystem::path& file) const;
  static DistanceTable load(const std::filesystem::path& file);

 private:
  int n_ = 0;
  std::vector<std::uint8_t> dist_;
};

struct DictionaryEntry {
  std::string digest;  // canonical digest of the single-layer type
  gf2::Configuration config;
  std::size_t minimal_length = 0;
  std::vector<circuit::CnotGate> gates;
};

/// One entry per valid configuration, in packed-code order, each carrying
/// the exact minimal length and one witness sequence. n <= 4 unless
/// allow_large permits n = 5.
std::vector<DictionaryEntry> build_dictionary(int n, bool allow_large = false);

/// One line per entry: digest, comma-separated row bitstrings, length, and
/// the gates as `control>target` tokens.
std::string format_dictionary(const std::vector<DictionaryEntry>& entries);

struct MinimizeResult {
  circuit::Circuit circuit;
  bool optimal = true;  // false when a layer fell back to synth_gauss
};

/// Rebuilds the circuit layer by layer with a minimal CNOT sequence per
/// configuration and fused 1-qubit runs; the unitary is preserved and the
/// CNOT count never increases. Beyond n = 6 layers fall back to synth_gauss.
MinimizeResult minimize_circuit(const circuit::Circuit& c);

}  // namespace qfc::synthesis
