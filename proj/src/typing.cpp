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

#include "qfc/typing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sha256.hpp"

namespace qfc::typing {

CircuitType circuit_type(const layering::LayerDecomposition& d) {
  CircuitType t;
  t.n = d.n;
  t.configs.reserve(d.layers.size());
  for (const auto& layer : d.layers) t.configs.push_back(layer.config);
  return t;
}

std::string canonical_serialization(
    int n, const std::vector<gf2::Configuration>& configs) {
  std::string out =
      "n=" + std::to_string(n) + ";L=" + std::to_string(configs.size()) + ";";
  for (const auto& c : configs) {
    out += '|';
    for (const std::string& row : gf2::to_bitstrings(c)) out += row;
  }
  return out;
}

namespace {

// Flattened row words of every layer under the permutation perm (0-based):
// compares lexicographically like the concatenated bitstrings, row words
// being fixed-width with q_1 highest.
bool permuted_less(const std::vector<gf2::Configuration>& configs,
                   const std::vector<int>& perm,
                   const std::vector<int>& best) {
  for (const auto& c : configs) {
    const auto& rows = c.rows();
    for (std::size_t i = 0; i < perm.size(); ++i) {
      std::uint64_t a = rows[perm[i]];
      std::uint64_t b = rows[best[i]];
      if (a != b) return a < b;
    }
  }
  return false;
}

}  // namespace

CanonicalType canonicalize(const CircuitType& t) {
  if (t.n < 1) throw std::invalid_argument("empty type");
  for (const auto& c : t.configs)
    if (c.n() != t.n)
      throw std::invalid_argument("layer wire count mismatch in type");

  CanonicalType out;
  std::vector<int> best(t.n);
  std::iota(best.begin(), best.end(), 0);

  if (t.n <= kMaxExhaustiveCanon) {
    std::vector<int> perm = best;
    while (std::next_permutation(perm.begin(), perm.end()))
      if (permuted_less(t.configs, perm, best)) best = perm;
  } else {
    out.canonical = false;
  }

  out.configs.reserve(t.configs.size());
  for (const auto& c : t.configs) {
    std::vector<std::uint64_t> rows(t.n);
    for (int i = 0; i < t.n; ++i) rows[i] = c.rows()[best[i]];
    out.configs.emplace_back(t.n, std::move(rows));
  }
  out.perm.resize(t.n);
  for (int i = 0; i < t.n; ++i) out.perm[i] = best[i] + 1;
  out.digest =
      detail::sha256_hex(canonical_serialization(t.n, out.configs));
  return out;
}

bool equivalent(const CircuitType& a, const CircuitType& b) {
  if (a.n != b.n || a.configs.size() != b.configs.size()) return false;
  return canonicalize(a).digest == canonicalize(b).digest;
}

BigInt count_nf(int k, int n) {
  if (n < 1) throw std::invalid_argument("qubit count must be positive");
  if (k < 1 || k > n)
    throw std::out_of_range("row index " + std::to_string(k) +
                            " out of range [1, " + std::to_string(n) + "]");
  return (BigInt(1) << n) - (BigInt(1) << (k - 1));
}

BigInt count_nc(int n) {
  if (n < 1) throw std::invalid_argument("qubit count must be positive");
  BigInt total = 1;
  for (int k = 1; k <= n; ++k) total *= count_nf(k, n);
  return total;
}

BigInt count_nt(int n, int layers) {
  if (n < 1) throw std::invalid_argument("qubit count must be positive");
  if (layers < 1) throw std::invalid_argument("layer count must be positive");
  BigInt nc = count_nc(n);
  BigInt numerator = nc;
  for (int i = 1; i < layers; ++i) numerator *= nc - 1;
  BigInt fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(numerator, fact, quotient, remainder);
  if (remainder != 0)
    throw std::logic_error("type count is not divisible by n!");
  return quotient;
}

}  // namespace qfc::typing
