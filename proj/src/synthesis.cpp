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

#include "qfc/synthesis.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "qfc/layering.hpp"
#include "qfc/typing.hpp"

namespace qfc::synthesis {

namespace {

constexpr char kCacheMagic[] = "QFCBFS1";
constexpr std::size_t kCacheMagicLen = 7;

// Cap on codes held by one bidirectional query before giving up.
constexpr std::size_t kBidirCapacity = 150'000'000;

std::uint64_t row_mask(int n) { return (std::uint64_t{1} << n) - 1; }

// Row h of the packed code gains row j (0-based rows).
inline std::uint64_t toggle(std::uint64_t code, int j, int h, int n,
                            std::uint64_t rmask) {
  std::uint64_t rj = (code >> (j * n)) & rmask;
  return code ^ (rj << (h * n));
}

void check_target(const gf2::Configuration& target) {
  if (!gf2::is_valid_configuration(target))
    throw std::domain_error("target configuration is not invertible");
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::ancilla: return "ancilla";
    case Method::gauss: return "gauss";
    case Method::exact: return "exact";
  }
  return "?";
}

SynthesisResult synth_ancilla(const gf2::Configuration& target) {
  check_target(target);
  int n = target.n();

  std::vector<circuit::CnotGate> creation;
  for (int k = 1; k <= n; ++k) {
    std::uint64_t diff = target.row_bits(k) ^ gf2::qubit_mask(n, k);
    for (int j = 1; j <= n; ++j)
      if (diff & gf2::qubit_mask(n, j)) creation.push_back({n + j, k});
  }

  SynthesisResult res;
  res.method = Method::ancilla;
  if (!creation.empty()) {
    for (int k = 1; k <= n; ++k) res.gates.push_back({k, n + k});
    res.gates.insert(res.gates.end(), creation.begin(), creation.end());
  }
  res.length = res.gates.size();

  // Track all 2n wires over GF(2); ancillas start as the zero functional.
  std::vector<std::uint64_t> wires(2 * n, 0);
  for (int k = 1; k <= n; ++k) wires[k - 1] = gf2::qubit_mask(n, k);
  for (const auto& g : res.gates)
    wires[g.target - 1] ^= wires[g.control - 1];
  for (int k = 1; k <= n; ++k) {
    if (wires[k - 1] != target.row_bits(k))
      throw std::logic_error("ancilla synthesis failed verification");
    if (!creation.empty() && wires[n + k - 1] != gf2::qubit_mask(n, k))
      throw std::logic_error("ancilla synthesis modified an ancilla wire");
  }
  if (res.length > static_cast<std::size_t>(n) * n + n)
    throw std::logic_error("ancilla synthesis exceeded the length bound");
  return res;
}

SynthesisResult synth_gauss(const gf2::Configuration& target) {
  check_target(target);
  int n = target.n();
  std::vector<std::uint64_t> rows = target.rows();
  std::vector<circuit::CnotGate> moves;
  auto row_add = [&](int j, int h) {  // 0-based: row h += row j
    rows[h] ^= rows[j];
    moves.push_back({j + 1, h + 1});
  };
  for (int col = 0; col < n; ++col) {
    std::uint64_t mask = std::uint64_t{1} << (n - 1 - col);
    if (!(rows[col] & mask)) {
      int found = -1;
      for (int r = col + 1; r < n; ++r)
        if (rows[r] & mask) {
          found = r;
          break;
        }
      if (found < 0) throw std::logic_error("elimination lost full rank");
      row_add(found, col);
    }
    for (int r = col + 1; r < n; ++r)
      if (rows[r] & mask) row_add(col, r);
    for (int r = 0; r < col; ++r)
      if (rows[r] & mask) row_add(col, r);
  }
  SynthesisResult res;
  res.method = Method::gauss;
  res.gates.assign(moves.rbegin(), moves.rend());
  res.length = res.gates.size();
  return res;
}

std::uint64_t DistanceTable::pack(const gf2::Configuration& c) {
  int n = c.n();
  std::uint64_t code = 0;
  for (int k = 0; k < n; ++k) code |= c.rows()[k] << (k * n);
  return code;
}

gf2::Configuration DistanceTable::unpack(int n, std::uint64_t code) {
  std::vector<std::uint64_t> rows(n);
  for (int k = 0; k < n; ++k) rows[k] = (code >> (k * n)) & row_mask(n);
  return gf2::Configuration(n, std::move(rows));
}

DistanceTable DistanceTable::build(int n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("distance table limited to n <= 5");
  DistanceTable table;
  table.n_ = n;
  std::uint64_t size = std::uint64_t{1} << (n * n);
  std::uint64_t rmask = row_mask(n);
  table.dist_.assign(size, 255);
  table.dist_[pack(gf2::Configuration::identity(n))] = 0;
  auto* dist = table.dist_.data();

  for (int d = 0; d < 254; ++d) {
    bool advanced = false;
#pragma omp parallel for schedule(static) reduction(|| : advanced)
    for (std::int64_t code = 0; code < static_cast<std::int64_t>(size);
         ++code) {
      std::atomic_ref<std::uint8_t> cell(dist[code]);
      if (cell.load(std::memory_order_relaxed) != d) continue;
      for (int j = 0; j < n; ++j) {
        for (int h = 0; h < n; ++h) {
          if (h == j) continue;
          std::uint64_t nb = toggle(code, j, h, n, rmask);
          std::uint8_t expected = 255;
          std::atomic_ref<std::uint8_t> other(dist[nb]);
          if (other.compare_exchange_strong(expected,
                                            static_cast<std::uint8_t>(d + 1),
                                            std::memory_order_relaxed))
            advanced = true;
        }
      }
    }
    if (!advanced) break;
  }
  return table;
}

DistanceTable DistanceTable::build_serial(int n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("distance table limited to n <= 5");
  DistanceTable table;
  table.n_ = n;
  std::uint64_t size = std::uint64_t{1} << (n * n);
  std::uint64_t rmask = row_mask(n);
  table.dist_.assign(size, 255);
  std::uint64_t start = pack(gf2::Configuration::identity(n));
  table.dist_[start] = 0;
  std::queue<std::uint64_t> frontier;
  frontier.push(start);
  while (!frontier.empty()) {
    std::uint64_t code = frontier.front();
    frontier.pop();
    std::uint8_t d = table.dist_[code];
    for (int j = 0; j < n; ++j) {
      for (int h = 0; h < n; ++h) {
        if (h == j) continue;
        std::uint64_t nb = toggle(code, j, h, n, rmask);
        if (table.dist_[nb] == 255) {
          table.dist_[nb] = d + 1;
          frontier.push(nb);
        }
      }
    }
  }
  return table;
}

void DistanceTable::save(const std::filesystem::path& file) const {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out.write(kCacheMagic, kCacheMagicLen);
  char nb = static_cast<char>(n_);
  out.write(&nb, 1);
  out.write(reinterpret_cast<const char*>(dist_.data()),
            static_cast<std::streamsize>(dist_.size()));
  if (!out) throw std::runtime_error("failed writing " + file.string());
}

DistanceTable DistanceTable::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  char magic[kCacheMagicLen];
  in.read(magic, kCacheMagicLen);
  if (!in || !std::equal(magic, magic + kCacheMagicLen, kCacheMagic))
    throw std::runtime_error("bad cache magic in " + file.string());
  char nb = 0;
  in.read(&nb, 1);
  int n = nb;
  if (n < 1 || n > 5)
    throw std::runtime_error("bad cache dimension in " + file.string());
  DistanceTable table;
  table.n_ = n;
  table.dist_.resize(std::uint64_t{1} << (n * n));
  in.read(reinterpret_cast<char*>(table.dist_.data()),
          static_cast<std::streamsize>(table.dist_.size()));
  if (!in || in.gcount() != static_cast<std::streamsize>(table.dist_.size()))
    throw std::runtime_error("truncated cache file " + file.string());
  return table;
}

const DistanceTable& DistanceTable::instance(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<DistanceTable>> tables;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = tables.find(n);
  if (it != tables.end()) return *it->second;

  const char* dir = std::getenv("QFC_CACHE_DIR");
  std::filesystem::path file;
  if (dir && *dir)
    file = std::filesystem::path(dir) / ("qfc-bfs-" + std::to_string(n) +
                                         ".bin");
  std::unique_ptr<DistanceTable> table;
  if (!file.empty() && std::filesystem::exists(file)) {
    try {
      table = std::make_unique<DistanceTable>(load(file));
    } catch (const std::exception&) {
      table.reset();  // stale or corrupt cache; rebuild below
    }
  }
  if (!table) {
    table = std::make_unique<DistanceTable>(build(n));
    if (!file.empty()) {
      try {
        table->save(file);
      } catch (const std::exception&) {
        // Cache writes are best effort.
      }
    }
  }
  auto [pos, inserted] = tables.emplace(n, std::move(table));
  return *pos->second;
}

namespace {

// Walks from `code` (at table distance d) down to the identity, collecting
// the lexicographically smallest (control, target) move at each step; the
// reversed walk is the forward witness.
std::vector<circuit::CnotGate> table_witness(const DistanceTable& table,
                                             std::uint64_t code) {
  int n = table.n();
  std::uint64_t rmask = row_mask(n);
  std::vector<circuit::CnotGate> walk;
  std::uint8_t d = table.distance(code);
  while (d > 0) {
    bool stepped = false;
    for (int j = 1; j <= n && !stepped; ++j) {
      for (int h = 1; h <= n && !stepped; ++h) {
        if (h == j) continue;
        std::uint64_t nb = toggle(code, j - 1, h - 1, n, rmask);
        if (table.distance(nb) == d - 1) {
          walk.push_back({j, h});
          code = nb;
          --d;
          stepped = true;
        }
      }
    }
    if (!stepped) throw std::logic_error("distance table is inconsistent");
  }
  std::reverse(walk.begin(), walk.end());
  return walk;
}

// Sorted unique codes at each exact distance from one endpoint.
struct SearchSide {
  std::vector<std::vector<std::uint64_t>> levels;
  std::size_t stored = 0;

  bool contains(std::uint64_t code, int* depth) const {
    for (std::size_t d = 0; d < levels.size(); ++d) {
      if (std::binary_search(levels[d].begin(), levels[d].end(), code)) {
        if (depth) *depth = static_cast<int>(d);
        return true;
      }
    }
    return false;
  }
};

struct Meet {
  bool found = false;
  std::uint64_t code = 0;
  int left_depth = 0;
  int right_depth = 0;
  int length() const { return left_depth + right_depth; }
};

// Expands `side` by one level; any new code present in `other` becomes a
// meet candidate. Neighbors can only sit one level away, so membership in
// the top two levels filters duplicates exactly.
void expand_side(SearchSide& side, const SearchSide& other, bool side_is_left,
                 int n, Meet& best) {
  std::uint64_t rmask = row_mask(n);
  const auto& top = side.levels.back();
  const auto* prev = side.levels.size() > 1
                         ? &side.levels[side.levels.size() - 2]
                         : nullptr;
  std::vector<std::uint64_t> next;
  next.reserve(top.size() * n);
  for (std::uint64_t code : top) {
    for (int j = 0; j < n; ++j) {
      for (int h = 0; h < n; ++h) {
        if (h == j) continue;
        std::uint64_t nb = toggle(code, j, h, n, rmask);
        if (std::binary_search(top.begin(), top.end(), nb)) continue;
        if (prev && std::binary_search(prev->begin(), prev->end(), nb))
          continue;
        next.push_back(nb);
      }
    }
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());

  int new_depth = static_cast<int>(side.levels.size());
  for (std::uint64_t code : next) {
    int other_depth = 0;
    if (other.contains(code, &other_depth)) {
      Meet candidate;
      candidate.found = true;
      candidate.code = code;
      candidate.left_depth = side_is_left ? new_depth : other_depth;
      candidate.right_depth = side_is_left ? other_depth : new_depth;
      if (!best.found || candidate.length() < best.length()) best = candidate;
    }
  }
  side.stored += next.size();
  side.levels.push_back(std::move(next));
}

// Moves from `code` at depth d to some code at depth d-1 within the side.
circuit::CnotGate step_down(const SearchSide& side, std::uint64_t& code,
                            int depth, int n) {
  std::uint64_t rmask = row_mask(n);
  const auto& below = side.levels[depth - 1];
  for (int j = 1; j <= n; ++j) {
    for (int h = 1; h <= n; ++h) {
      if (h == j) continue;
      std::uint64_t nb = toggle(code, j - 1, h - 1, n, rmask);
      if (std::binary_search(below.begin(), below.end(), nb)) {
        code = nb;
        return {j, h};
      }
    }
  }
  throw std::logic_error("bidirectional search levels are inconsistent");
}

std::vector<circuit::CnotGate> bidirectional_witness(
    const gf2::Configuration& target) {
  int n = target.n();
  std::uint64_t start = DistanceTable::pack(gf2::Configuration::identity(n));
  std::uint64_t goal = DistanceTable::pack(target);
  if (start == goal) return {};

  SearchSide left, right;
  left.levels.push_back({start});
  right.levels.push_back({goal});
  Meet best;
  if (std::binary_search(right.levels[0].begin(), right.levels[0].end(),
                         start)) {
    best = Meet{true, start, 0, 0};
  }

  while (!best.found ||
         best.length() > static_cast<int>(left.levels.size() +
                                          right.levels.size() - 2)) {
    SearchSide& smaller =
        left.levels.back().size() <= right.levels.back().size() ? left : right;
    const SearchSide& other = (&smaller == &left) ? right : left;
    expand_side(smaller, other, &smaller == &left, n, best);
    if (smaller.levels.back().empty() && !best.found)
      throw std::logic_error("bidirectional search exhausted the group");
    if (left.stored + right.stored > kBidirCapacity)
      throw std::runtime_error(
          "target is too deep for the per-query search at n = 6");
  }

  // Forward gates: identity -> meet (left walk reversed), then the right
  // walk in step order carries meet -> target.
  std::vector<circuit::CnotGate> gates;
  std::uint64_t code = best.code;
  std::vector<circuit::CnotGate> left_walk;
  for (int d = best.left_depth; d > 0; --d)
    left_walk.push_back(step_down(left, code, d, n));
  gates.assign(left_walk.rbegin(), left_walk.rend());
  code = best.code;
  for (int d = best.right_depth; d > 0; --d)
    gates.push_back(step_down(right, code, d, n));
  return gates;
}

}  // namespace

SynthesisResult synth_exact(const gf2::Configuration& target) {
  check_target(target);
  int n = target.n();
  if (n > 6)
    throw std::invalid_argument("exact synthesis is limited to n <= 6");
  if (n > 5) return synth_exact_search(target);
  SynthesisResult res;
  res.method = Method::exact;
  res.optimal = true;
  const DistanceTable& table = DistanceTable::instance(n);
  res.gates = table_witness(table, DistanceTable::pack(target));
  res.length = res.gates.size();
  return res;
}

SynthesisResult synth_exact_search(const gf2::Configuration& target) {
  check_target(target);
  if (target.n() > 6)
    throw std::invalid_argument("exact synthesis is limited to n <= 6");
  SynthesisResult res;
  res.method = Method::exact;
  res.optimal = true;
  res.gates = bidirectional_witness(target);
  res.length = res.gates.size();
  return res;
}

std::vector<DictionaryEntry> build_dictionary(int n, bool allow_large) {
  if (n < 1 || n > 5 || (n == 5 && !allow_large))
    throw std::invalid_argument(
        n == 5 ? "n = 5 builds a 33 MiB table; pass the size acknowledgment"
               : "dictionary is limited to n <= 4 (n = 5 behind a flag)");
  const DistanceTable& table = DistanceTable::instance(n);
  std::vector<DictionaryEntry> entries;
  std::uint64_t size = std::uint64_t{1} << (n * n);
  for (std::uint64_t code = 0; code < size; ++code) {
    if (table.distance(code) == 255) continue;
    DictionaryEntry e;
    e.config = DistanceTable::unpack(n, code);
    e.gates = table_witness(table, code);
    e.minimal_length = e.gates.size();
    e.digest = typing::canonicalize(typing::CircuitType{n, {e.config}}).digest;
    entries.push_back(std::move(e));
  }
  return entries;
}

std::string format_dictionary(const std::vector<DictionaryEntry>& entries) {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << e.digest << ' ';
    const auto rows = gf2::to_bitstrings(e.config);
    for (std::size_t i = 0; i < rows.size(); ++i)
      out << (i ? "," : "") << rows[i];
    out << ' ' << e.minimal_length;
    for (const auto& g : e.gates) out << ' ' << g.control << '>' << g.target;
    out << '\n';
  }
  return out.str();
}

MinimizeResult minimize_circuit(const circuit::Circuit& c) {
  layering::LayerDecomposition d = layering::decompose(c);
  gf2::Configuration ident = gf2::Configuration::identity(c.n);
  MinimizeResult out;
  out.circuit.n = c.n;
  out.circuit.name = c.name;
  for (const auto& layer : d.layers) {
    if (!(layer.config == ident)) {
      SynthesisResult synth;
      if (c.n <= 6) {
        synth = synth_exact(layer.config);
      } else {
        synth = synth_gauss(layer.config);
        out.optimal = false;
      }
      for (const auto& g : synth.gates) out.circuit.gates.emplace_back(g);
    }
    for (const auto& g : layer.oneq_gates) out.circuit.gates.emplace_back(g);
  }
  out.circuit = circuit::fuse_one_qubit_runs(out.circuit);
  return out;
}

}  // namespace qfc::synthesis
