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

#include "qfc/gf2.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace qfc::gf2 {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument("qubit count must be in [1, 64], got " +
                                std::to_string(n));
}

void check_wire(int n, int j, const char* what) {
  if (j < 1 || j > n)
    throw std::out_of_range(std::string(what) + " index " + std::to_string(j) +
                            " out of range [1, " + std::to_string(n) + "]");
}

std::uint64_t low_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

std::uint64_t qubit_mask(int n, int j) {
  check_n(n);
  check_wire(n, j, "wire");
  return std::uint64_t{1} << (n - j);
}

bool functional_eval(const Functional& f, std::uint64_t x) {
  check_n(f.n);
  if (f.n < 64 && x >> f.n)
    throw std::out_of_range("basis index out of range for n=" +
                            std::to_string(f.n));
  return std::popcount(f.bits & x) & 1;
}

Functional functional_from_string(const std::string& text, int n) {
  check_n(n);
  if (text.empty()) throw std::invalid_argument("empty functional");
  if (text[0] == '0' || text[0] == '1') {
    if (static_cast<int>(text.size()) != n)
      throw std::invalid_argument("bitstring '" + text + "' must have length " +
                                  std::to_string(n));
    std::uint64_t bits = 0;
    for (int j = 1; j <= n; ++j) {
      char ch = text[j - 1];
      if (ch == '1')
        bits |= qubit_mask(n, j);
      else if (ch != '0')
        throw std::invalid_argument("bitstring '" + text +
                                    "' has non-binary character");
    }
    return Functional{n, bits};
  }
  // Caret form: q<j>^q<k>^... Terms may appear in any order.
  std::uint64_t bits = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'q')
      throw std::invalid_argument("expected 'q' in functional '" + text + "'");
    ++pos;
    int j = 0;
    auto res = std::from_chars(text.data() + pos, text.data() + text.size(), j);
    if (res.ec != std::errc{} || res.ptr == text.data() + pos)
      throw std::invalid_argument("malformed wire index in '" + text + "'");
    pos = res.ptr - text.data();
    check_wire(n, j, "wire");
    std::uint64_t m = qubit_mask(n, j);
    if (bits & m)
      throw std::invalid_argument("duplicate term q" + std::to_string(j) +
                                  " in '" + text + "'");
    bits |= m;
    if (pos < text.size()) {
      if (text[pos] != '^')
        throw std::invalid_argument("expected '^' in functional '" + text + "'");
      ++pos;
      if (pos == text.size())
        throw std::invalid_argument("trailing '^' in functional '" + text + "'");
    }
  }
  return Functional{n, bits};
}

std::string to_bitstring(const Functional& f) {
  check_n(f.n);
  std::string s(f.n, '0');
  for (int j = 1; j <= f.n; ++j)
    if (f.bits & qubit_mask(f.n, j)) s[j - 1] = '1';
  return s;
}

std::string to_symbolic(const Functional& f) {
  check_n(f.n);
  std::string s;
  for (int j = 1; j <= f.n; ++j) {
    if (f.bits & qubit_mask(f.n, j)) {
      if (!s.empty()) s += '^';
      s += 'q';
      s += std::to_string(j);
    }
  }
  return s.empty() ? "0" : s;
}

Configuration::Configuration(int n, std::vector<std::uint64_t> rows)
    : n_(n), rows_(std::move(rows)) {
  check_n(n);
  if (rows_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("expected " + std::to_string(n) + " rows, got " +
                                std::to_string(rows_.size()));
  for (std::uint64_t r : rows_)
    if (r & ~low_mask(n))
      throw std::invalid_argument("row has bits beyond wire count");
}

Configuration Configuration::identity(int n) {
  check_n(n);
  std::vector<std::uint64_t> rows(n);
  for (int k = 1; k <= n; ++k) rows[k - 1] = qubit_mask(n, k);
  return Configuration(n, std::move(rows));
}

Configuration Configuration::from_rows(const std::vector<std::string>& rows) {
  int n = static_cast<int>(rows.size());
  check_n(n);
  std::vector<std::uint64_t> bits(n);
  for (int k = 0; k < n; ++k)
    bits[k] = functional_from_string(rows[k], n).bits;
  return Configuration(n, std::move(bits));
}

Functional Configuration::row(int k) const {
  check_wire(n_, k, "row");
  return Functional{n_, rows_[k - 1]};
}

std::uint64_t Configuration::row_bits(int k) const {
  check_wire(n_, k, "row");
  return rows_[k - 1];
}

std::vector<std::string> to_bitstrings(const Configuration& c) {
  std::vector<std::string> out;
  out.reserve(c.n());
  for (int k = 1; k <= c.n(); ++k) out.push_back(to_bitstring(c.row(k)));
  return out;
}

Configuration apply_cnot_row(const Configuration& c, int control, int target) {
  check_wire(c.n(), control, "control");
  check_wire(c.n(), target, "target");
  if (control == target)
    throw std::invalid_argument("control and target must differ, got " +
                                std::to_string(control));
  std::vector<std::uint64_t> rows = c.rows();
  rows[target - 1] ^= rows[control - 1];
  return Configuration(c.n(), std::move(rows));
}

namespace {

// Gauss-Jordan over the row words. Optionally carries an augmented identity
// to produce the inverse. Returns the rank.
int eliminate(int n, std::vector<std::uint64_t>& rows,
              std::vector<std::uint64_t>* aug) {
  int pivot_row = 0;
  for (int col = 1; col <= n && pivot_row < n; ++col) {
    std::uint64_t mask = std::uint64_t{1} << (n - col);
    int found = -1;
    for (int r = pivot_row; r < n; ++r) {
      if (rows[r] & mask) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    std::swap(rows[pivot_row], rows[found]);
    if (aug) std::swap((*aug)[pivot_row], (*aug)[found]);
    for (int r = 0; r < n; ++r) {
      if (r != pivot_row && (rows[r] & mask)) {
        rows[r] ^= rows[pivot_row];
        if (aug) (*aug)[r] ^= (*aug)[pivot_row];
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

int rank(const Configuration& c) {
  std::vector<std::uint64_t> rows = c.rows();
  return eliminate(c.n(), rows, nullptr);
}

bool is_valid_configuration(const Configuration& c) {
  for (std::uint64_t r : c.rows())
    if (r == 0) return false;
  return rank(c) == c.n();
}

Configuration multiply(const Configuration& a, const Configuration& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("dimension mismatch in GF(2) product");
  int n = a.n();
  std::vector<std::uint64_t> out(n, 0);
  for (int i = 1; i <= n; ++i) {
    std::uint64_t acc = 0;
    std::uint64_t arow = a.row_bits(i);
    for (int j = 1; j <= n; ++j)
      if (arow & qubit_mask(n, j)) acc ^= b.row_bits(j);
    out[i - 1] = acc;
  }
  return Configuration(n, std::move(out));
}

Configuration invert(const Configuration& c) {
  int n = c.n();
  std::vector<std::uint64_t> rows = c.rows();
  std::vector<std::uint64_t> aug = Configuration::identity(n).rows();
  if (eliminate(n, rows, &aug) != n)
    throw std::domain_error("configuration is singular (rank " +
                            std::to_string(rank(c)) + " < " +
                            std::to_string(n) + ")");
  return Configuration(n, std::move(aug));
}

std::uint64_t basis_map(const Configuration& c, std::uint64_t index) {
  int n = c.n();
  if (n < 64 && index >> n)
    throw std::out_of_range("basis index out of range for n=" +
                            std::to_string(n));
  std::uint64_t out = 0;
  for (int k = 1; k <= n; ++k)
    if (std::popcount(c.row_bits(k) & index) & 1) out |= qubit_mask(n, k);
  return out;
}

}  // namespace qfc::gf2
