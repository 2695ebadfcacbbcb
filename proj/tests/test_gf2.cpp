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

#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

using namespace qfc;
using gf2::Configuration;
using gf2::Functional;

namespace {

Functional f(const std::string& text, int n) {
  return gf2::functional_from_string(text, n);
}

Configuration random_cnot_config(int n, int moves, std::mt19937_64& rng) {
  Configuration c = Configuration::identity(n);
  std::uniform_int_distribution<int> wire(1, n);
  for (int i = 0; i < moves; ++i) {
    int j = wire(rng), h = wire(rng);
    while (h == j) h = wire(rng);
    c = gf2::apply_cnot_row(c, j, h);
  }
  return c;
}

}  // namespace

TEST_CASE("functional evaluation matches the bit-parity definition") {
  // Index 6 = 110 has q1=1, q2=1, q3=0.
  CHECK(gf2::functional_eval(f("q1^q2", 3), 0b110) == 0);
  CHECK(gf2::functional_eval(f("q1", 3), 0b000) == 0);
  CHECK(gf2::functional_eval(f("q1^q2^q3", 3), 0b101) == 0);
  CHECK(gf2::functional_eval(f("q1^q2", 3), 0b100) == 1);
  CHECK(gf2::functional_eval(f("q3", 3), 0b001) == 1);
  CHECK_THROWS_AS(gf2::functional_eval(f("q1", 3), 8), std::out_of_range);
}

TEST_CASE("functional parsing accepts both forms and rejects junk") {
  CHECK(f("110", 3) == f("q1^q2", 3));
  CHECK(f("q2^q1", 3) == f("q1^q2", 3));
  CHECK(gf2::to_bitstring(f("q3^q1", 3)) == "101");
  CHECK(gf2::to_symbolic(f("101", 3)) == "q1^q3");
  CHECK(gf2::to_symbolic(Functional{3, 0}) == "0");
  CHECK_THROWS(f("11", 3));      // wrong length
  CHECK_THROWS(f("1a1", 3));     // non-binary
  CHECK_THROWS(f("q4", 3));      // out of range
  CHECK_THROWS(f("q1^q1", 3));   // duplicate term
  CHECK_THROWS(f("q1^", 3));     // trailing separator
  CHECK_THROWS(f("", 3));
}

TEST_CASE("apply_cnot_row reproduces the running example") {
  Configuration c = Configuration::identity(3);
  c = gf2::apply_cnot_row(c, 1, 2);
  CHECK(gf2::to_bitstrings(c) ==
        std::vector<std::string>{"100", "110", "001"});
  c = gf2::apply_cnot_row(c, 2, 3);
  CHECK(gf2::to_bitstrings(c) ==
        std::vector<std::string>{"100", "110", "111"});

  // The same move twice restores the input.
  Configuration again = gf2::apply_cnot_row(gf2::apply_cnot_row(c, 3, 1), 3, 1);
  CHECK(again == c);

  CHECK_THROWS_AS(gf2::apply_cnot_row(c, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(gf2::apply_cnot_row(c, 0, 1), std::out_of_range);
}

TEST_CASE("validity requires full rank") {
  CHECK(gf2::is_valid_configuration(
      Configuration::from_rows({"100", "110", "111"})));
  CHECK_FALSE(gf2::is_valid_configuration(
      Configuration::from_rows({"100", "100", "001"})));
  CHECK_FALSE(gf2::is_valid_configuration(
      Configuration::from_rows({"100", "010", "110"})));
  CHECK_FALSE(gf2::is_valid_configuration(
      Configuration::from_rows({"000", "010", "001"})));
  CHECK(gf2::rank(Configuration::from_rows({"100", "010", "110"})) == 2);
}

TEST_CASE("inverse is exact over GF(2)") {
  Configuration ident = Configuration::identity(3);
  CHECK(gf2::invert(ident) == ident);

  Configuration c = Configuration::from_rows({"100", "110", "111"});
  Configuration inv = gf2::invert(c);
  CHECK(gf2::to_bitstrings(inv) ==
        std::vector<std::string>{"100", "110", "011"});
  CHECK(gf2::multiply(c, inv) == ident);
  CHECK(gf2::multiply(inv, c) == ident);

  CHECK_THROWS_AS(gf2::invert(Configuration::from_rows({"100", "010", "110"})),
                  std::domain_error);
}

TEST_CASE("basis_map transcribes the permutation example") {
  Configuration c = Configuration::from_rows({"100", "110", "111"});
  CHECK(gf2::basis_map(c, 0b100) == 0b111);
  CHECK(gf2::basis_map(c, 0b010) == 0b011);
  Configuration ident = Configuration::identity(4);
  for (std::uint64_t i = 0; i < 16; ++i) CHECK(gf2::basis_map(ident, i) == i);
  CHECK_THROWS_AS(gf2::basis_map(c, 8), std::out_of_range);
}

TEST_CASE("random CNOT sequences keep configurations invertible") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> size(2, 8);
  for (int trial = 0; trial < 10'000; ++trial) {
    int n = size(rng);
    Configuration c = random_cnot_config(n, 3 * n, rng);
    REQUIRE(gf2::is_valid_configuration(c));
  }
}

TEST_CASE("basis_map is a bijection and inverts through the matrix inverse") {
  std::mt19937_64 rng(99);
  for (int n : {2, 3, 5, 8, 10}) {
    Configuration c = random_cnot_config(n, 4 * n, rng);
    Configuration inv = gf2::invert(c);
    std::set<std::uint64_t> image;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      std::uint64_t j = gf2::basis_map(c, i);
      image.insert(j);
      CHECK(gf2::basis_map(inv, j) == i);
    }
    CHECK(image.size() == (std::uint64_t{1} << n));
  }
}

TEST_CASE("full-width functionals fit in one word") {
  Configuration c = Configuration::identity(64);
  c = gf2::apply_cnot_row(c, 1, 64);
  CHECK(gf2::functional_eval(c.row(64), (std::uint64_t{1} << 63) | 1) == 0);
  CHECK(gf2::is_valid_configuration(c));
}
