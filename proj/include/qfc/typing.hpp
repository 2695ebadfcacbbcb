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

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "qfc/gf2.hpp"
#include "qfc/layering.hpp"

namespace qfc::typing {

using BigInt = boost::multiprecision::cpp_int;

/// The sequence of layer configurations of a circuit, in layer order.
struct CircuitType {
  int n = 0;
  std::vector<gf2::Configuration> configs;
};

/// Exhaustive canonicalization is limited to this many wires (n! candidates).
constexpr int kMaxExhaustiveCanon = 10;

struct CanonicalType {
  std::vector<gf2::Configuration> configs;
  /// Row i of every canonical layer is row perm[i] (1-based) of the input.
  std::vector<int> perm;
  /// Lowercase hex SHA-256 of canonical_serialization of the configs.
  std::string digest;
  /// False when n exceeds kMaxExhaustiveCanon and the identity permutation
  /// was used instead of the exhaustive minimum.
  bool canonical = true;
};

CircuitType circuit_type(const layering::LayerDecomposition& d);

/// The fingerprinted encoding: "n=<n>;L=<N>;" then per layer "|" followed by
/// the n row bitstrings concatenated.
std::string canonical_serialization(int n,
                                    const std::vector<gf2::Configuration>& configs);

/// Selects, over all row permutations applied simultaneously to every layer,
/// the sequence with the lexicographically smallest concatenated row
/// encoding.
CanonicalType canonicalize(const CircuitType& t);

/// True iff the canonical digests agree. A layer-count or wire-count
/// mismatch yields false rather than an error.
bool equivalent(const CircuitType& a, const CircuitType& b);

/// Number of admissible functionals for row k of a valid configuration:
/// 2^n - 2^(k-1).
BigInt count_nf(int k, int n);

/// Number of valid configurations on one layer: the product of count_nf
/// over k = 1..n (the order of GL(n, 2)).
BigInt count_nc(int n);

/// Number of types over the given layer count:
/// N_c * (N_c - 1)^(layers-1) / n!, computed exactly.
BigInt count_nt(int n, int layers);

}  // namespace qfc::typing
