#pragma once

// Seeded Erdos-Renyi sampling, the Rado extension property on finite graphs,
// and a deterministic extension-rich fixture graph.

#include <cstdint>

#include "fwb/catalog.hpp"

namespace fwb {

// SplitMix64; the update constants are pinned so samples reproduce
// bit-identically across platforms.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // uniform in [0,1) with 53 bits
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct GnpSample {
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  FinStructure graph;
};

// One draw per pair (i,j), i<j, in row-major order.
inline GnpSample sample_gnp(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0,1]");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_unit() < p) edges.emplace_back(i, j);
  return GnpSample{n, p, seed, graph_from_edges(n, edges)};
}

// Least vertex outside A and B adjacent to everything in A and nothing in B.
inline std::optional<int> extension_witness(const FinStructure& g, const std::vector<int>& a,
                                            const std::vector<int>& b) {
  for (int x : a)
    for (int y : b)
      if (x == y) throw std::invalid_argument("A and B must be disjoint");
  for (int v = 0; v < g.size; ++v) {
    if (std::find(a.begin(), a.end(), v) != a.end()) continue;
    if (std::find(b.begin(), b.end(), v) != b.end()) continue;
    bool ok = true;
    for (int x : a)
      if (!graph_adjacent(g, v, x)) { ok = false; break; }
    for (int y : b)
      if (ok && graph_adjacent(g, v, y)) ok = false;
    if (ok) return v;
  }
  return std::nullopt;
}

struct ExtensionLevelReport {
  bool pass = true;
  long checked = 0;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> failures;
};

// Checks all disjoint (A,B) with |A| <= a_max, |B| <= b_max.
inline ExtensionLevelReport extension_property_level(const FinStructure& g, int a_max, int b_max) {
  ExtensionLevelReport rep;
  std::vector<int> a, b;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == g.size) {
      ++rep.checked;
      if (!extension_witness(g, a, b)) {
        rep.pass = false;
        rep.failures.emplace_back(a, b);
      }
      return;
    }
    self(self, v + 1);
    if (static_cast<int>(a.size()) < a_max) {
      a.push_back(v);
      self(self, v + 1);
      a.pop_back();
    }
    if (static_cast<int>(b.size()) < b_max) {
      b.push_back(v);
      self(self, v + 1);
      b.pop_back();
    }
  };
  rec(rec, 0);
  return rep;
}

// Deterministic fixture: i < j adjacent iff bit i of j is set.
inline FinStructure bit_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j && i < 63; ++i)
      if (static_cast<std::uint64_t>(j) >> i & 1) edges.emplace_back(i, j);
  return graph_from_edges(n, edges);
}

}  // namespace fwb
