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
#include <string>
#include <vector>

namespace qfc::gf2 {

/// Largest wire count representable with one machine word per functional.
constexpr int kMaxQubits = 64;

/// Index mask of wire j (1-based) in an n-bit basis index. Wire 1 is the
/// most significant of the low n bits, matching the textual 000..111
/// enumeration of basis states.
std::uint64_t qubit_mask(int n, int j);

/// A GF(2) linear form over the wire variables q_1..q_n. Bit layout matches
/// basis-state indices: bit (n - j) holds the coefficient of q_j, bits at or
/// above n are zero.
struct Functional {
  int n = 0;
  std::uint64_t bits = 0;

  bool operator==(const Functional&) const = default;
};

/// Evaluates f at the basis index x (the parity of the selected bits of x).
bool functional_eval(const Functional& f, std::uint64_t x);

/// Parses either the bitstring form ("110", length n, q_1 first) or the
/// caret form ("q1^q2", 1-based indices, any order, no duplicates).
Functional functional_from_string(const std::string& text, int n);

/// Canonical textual form: the bitstring with q_1 first.
std::string to_bitstring(const Functional& f);

/// Reader-friendly form, e.g. "q1^q3"; the zero functional prints as "0".
std::string to_symbolic(const Functional& f);

/// An ordered tuple of n functionals, one per wire; equivalently an n x n
/// GF(2) matrix with row k holding the functional on wire k. Arbitrary row
/// contents are representable; validity (invertibility) is a separate check.
class Configuration {
 public:
  Configuration() = default;
  Configuration(int n, std::vector<std::uint64_t> rows);

  static Configuration identity(int n);
  /// Builds a configuration from one textual row per wire; n = rows.size().
  static Configuration from_rows(const std::vector<std::string>& rows);

  int n() const { return n_; }
  /// Row k, 1-based.
  Functional row(int k) const;
  std::uint64_t row_bits(int k) const;
  const std::vector<std::uint64_t>& rows() const { return rows_; }

  bool operator==(const Configuration&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Row bitstrings of c, q_1 first, one per wire.
std::vector<std::string> to_bitstrings(const Configuration& c);

/// The configuration after CNOT with the given control j and target h
/// (1-based): row h becomes row h XOR row j. Input is not modified.
Configuration apply_cnot_row(const Configuration& c, int control, int target);

/// True iff the rows are linearly independent over GF(2) (and hence no row
/// is zero): the matrix is invertible.
bool is_valid_configuration(const Configuration& c);

/// GF(2) rank via Gauss-Jordan; pivots chosen left to right by first set
/// bit, ties broken by lowest row index.
int rank(const Configuration& c);

/// Matrix product over GF(2).
Configuration multiply(const Configuration& a, const Configuration& b);

/// Inverse over GF(2). Throws std::domain_error on singular input.
Configuration invert(const Configuration& c);

/// The basis-state permutation induced by any CNOT block realizing c:
/// bit k of the result is row k of c evaluated at the input index.
std::uint64_t basis_map(const Configuration& c, std::uint64_t index);

}  // namespace qfc::gf2
