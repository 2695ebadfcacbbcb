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

#include "qfc/simulate.hpp"

#include "qfc/layering.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qfc::simulate {

namespace {

// Below this pair count the parallel-for overhead outweighs the work.
constexpr std::uint64_t kParallelCutoff = std::uint64_t{1} << 11;

bool worth_forking(std::uint64_t iterations) {
#ifdef _OPENMP
  return iterations >= kParallelCutoff && omp_get_max_threads() > 1;
#else
  (void)iterations;
  return false;
#endif
}

void check_state(const StateVector& s) {
  if (s.n < 1 || s.n > kMaxQubits)
    throw std::invalid_argument("state size out of range (1 <= n <= 26)");
  if (s.amps.size() != (std::uint64_t{1} << s.n))
    throw std::invalid_argument("state has wrong amplitude count");
}

}  // namespace

StateVector basis_state(int n, std::uint64_t index) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument("state size out of range (1 <= n <= 26)");
  if (index >> n) throw std::out_of_range("basis index out of range");
  StateVector s;
  s.n = n;
  s.amps.assign(std::uint64_t{1} << n, 0.0);
  s.amps[index] = 1.0;
  return s;
}

StateVector random_state(int n, std::mt19937_64& rng) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument("state size out of range (1 <= n <= 26)");
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector s;
  s.n = n;
  s.amps.resize(std::uint64_t{1} << n);
  double sum = 0;
  for (auto& a : s.amps) {
    a = {gauss(rng), gauss(rng)};
    sum += std::norm(a);
  }
  double scale = 1.0 / std::sqrt(sum);
  for (auto& a : s.amps) a *= scale;
  return s;
}

double norm(const StateVector& s) {
  double sum = 0;
  for (const auto& a : s.amps) sum += std::norm(a);
  return std::sqrt(sum);
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) throw std::invalid_argument("state dimension mismatch");
  double m = 0;
  for (std::size_t i = 0; i < a.amps.size(); ++i)
    m = std::max(m, std::abs(a.amps[i] - b.amps[i]));
  return m;
}

void apply_gate(StateVector& s, int qubit, const circuit::Mat2& m) {
  check_state(s);
  const std::uint64_t mask = gf2::qubit_mask(s.n, qubit);
  const std::uint64_t half = s.amps.size() >> 1;
  const std::uint64_t low_bits = mask - 1;
  auto* const amps = s.amps.data();
  // Plain local copies (no address taken) so the entries stay in registers
  // despite the in-place writes through amps.
  const std::complex<double> m00 = m.m00, m01 = m.m01, m10 = m.m10,
                             m11 = m.m11;
  if (worth_forking(half)) {
#pragma omp parallel for schedule(static)
    for (std::int64_t p = 0; p < static_cast<std::int64_t>(half); ++p) {
      std::uint64_t low = p & low_bits;
      std::uint64_t i0 = ((p ^ low) << 1) | low;
      std::uint64_t i1 = i0 | mask;
      std::complex<double> a0 = amps[i0], a1 = amps[i1];
      amps[i0] = m00 * a0 + m01 * a1;
      amps[i1] = m10 * a0 + m11 * a1;
    }
  } else {
    for (std::uint64_t p = 0; p < half; ++p) {
      std::uint64_t low = p & low_bits;
      std::uint64_t i0 = ((p ^ low) << 1) | low;
      std::uint64_t i1 = i0 | mask;
      std::complex<double> a0 = amps[i0], a1 = amps[i1];
      amps[i0] = m00 * a0 + m01 * a1;
      amps[i1] = m10 * a0 + m11 * a1;
    }
  }
}

void apply_gate(StateVector& s, const circuit::OneQubitGate& g) {
  apply_gate(s, g.qubit, circuit::gate_matrix(g));
}

void apply_cnot(StateVector& s, int control, int target) {
  check_state(s);
  if (control == target)
    throw std::invalid_argument("cx control equals target");
  std::uint64_t cmask = gf2::qubit_mask(s.n, control);
  std::uint64_t tmask = gf2::qubit_mask(s.n, target);
  std::uint64_t size = s.amps.size();
  auto* amps = s.amps.data();
  if (worth_forking(size)) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(size); ++i) {
      if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
    }
  } else {
    for (std::uint64_t i = 0; i < size; ++i) {
      if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
    }
  }
}

StateVector run(const circuit::Circuit& c, const StateVector& initial) {
  circuit::validate(c);
  check_state(initial);
  if (c.n != initial.n)
    throw std::invalid_argument("circuit and state dimensions differ");
  StateVector s = initial;
  for (const circuit::Gate& g : c.gates) {
    if (const auto* one = std::get_if<circuit::OneQubitGate>(&g))
      apply_gate(s, *one);
    else {
      const auto& cx = std::get<circuit::CnotGate>(g);
      apply_cnot(s, cx.control, cx.target);
    }
  }
  return s;
}

std::vector<std::uint64_t> cnot_block_permutation(const gf2::Configuration& c) {
  if (c.n() > kMaxQubits)
    throw std::invalid_argument("permutation table too large");
  if (!gf2::is_valid_configuration(c))
    throw std::domain_error("configuration is not invertible");
  std::uint64_t size = std::uint64_t{1} << c.n();
  std::vector<std::uint64_t> perm(size);
  for (std::uint64_t i = 0; i < size; ++i) perm[i] = gf2::basis_map(c, i);
  return perm;
}

PairingRule predict_pairing(const gf2::Configuration& c, int k) {
  gf2::Configuration inv = gf2::invert(c);
  int n = c.n();
  std::uint64_t col = gf2::qubit_mask(n, k);
  PairingRule rule;
  rule.k = k;
  for (int j = 1; j <= n; ++j)
    if (inv.row_bits(j) & col) rule.offset |= gf2::qubit_mask(n, j);
  rule.zero_functional = c.row(k);
  return rule;
}

StateVector predict_after_gate(const gf2::Configuration& c, int k,
                               const circuit::Mat2& m, const StateVector& a) {
  check_state(a);
  if (c.n() != a.n)
    throw std::invalid_argument("configuration and state dimensions differ");
  gf2::Configuration inv = gf2::invert(c);
  PairingRule rule = predict_pairing(c, k);
  std::uint64_t kmask = gf2::qubit_mask(a.n, k);
  StateVector out;
  out.n = a.n;
  out.amps.resize(a.amps.size());
  for (std::uint64_t j = 0; j < out.amps.size(); ++j) {
    std::uint64_t i0 = gf2::basis_map(inv, j & ~kmask);
    std::uint64_t i1 = i0 ^ rule.offset;
    out.amps[j] = (j & kmask) ? m.m10 * a.amps[i0] + m.m11 * a.amps[i1]
                              : m.m00 * a.amps[i0] + m.m01 * a.amps[i1];
  }
  return out;
}

StateVector predict_after_u(const gf2::Configuration& c, int k, double u1,
                            double u2, const StateVector& a) {
  if (std::abs(u1 * u1 + u2 * u2 - 1.0) > 1e-9)
    throw std::invalid_argument("u parameters are not normalized");
  return predict_after_gate(c, k, circuit::Mat2{u1, u2, u2, -u1}, a);
}

ConsistencyReport consistency_check(const circuit::Circuit& c, int trials,
                                    double tol, std::uint64_t seed) {
  circuit::validate(c);
  if (c.n > 8)
    throw std::invalid_argument("consistency check is limited to n <= 8");
  if (trials < 1) throw std::invalid_argument("trials must be positive");

  layering::LayerDecomposition d = layering::decompose(c);
  std::mt19937_64 rng(seed);
  ConsistencyReport report;
  report.trials = trials;
  report.tolerance = tol;

  for (int trial = 0; trial < trials; ++trial) {
    StateVector state = random_state(c.n, rng);
    for (const auto& layer : d.layers) {
      StateVector blocked = state;
      for (const auto& cx : layer.cnot_gates)
        apply_cnot(blocked, cx.control, cx.target);
      for (const auto& g : layer.oneq_gates) {
        circuit::Mat2 m = circuit::gate_matrix(g);
        StateVector direct = blocked;
        apply_gate(direct, g.qubit, m);
        StateVector predicted =
            predict_after_gate(layer.config, g.qubit, m, state);
        report.max_deviation =
            std::max(report.max_deviation, max_abs_diff(direct, predicted));
        ++report.gates_checked;
      }
      // Advance through the layer for real before moving on.
      for (const auto& g : layer.oneq_gates) apply_gate(blocked, g);
      state = std::move(blocked);
    }
  }
  report.pass = report.max_deviation <= tol;
  return report;
}

std::string dump_state(const StateVector& s) {
  std::ostringstream out;
  char buf[96];
  for (std::uint64_t i = 0; i < s.amps.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%llu %.17g %.17g\n",
                  static_cast<unsigned long long>(i), s.amps[i].real(),
                  s.amps[i].imag());
    out << buf;
  }
  return out.str();
}

}  // namespace qfc::simulate
