#pragma once

// Finite approximations of the G0 graph on bit strings: the canonical
// sparse-dense generating set, the copy-and-link doubling step, the direct
// edge definition, greedy coloring and structural validation.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fwb {

using BitString = std::string;  // characters '0' and '1'

struct SparseSet {
  // levels[n] is the unique s_n of length n
  std::vector<BitString> levels;

  const BitString& at(int n) const {
    if (n < 0 || n >= static_cast<int>(levels.size()))
      throw std::out_of_range("sparse set not populated to requested depth");
    return levels[static_cast<std::size_t>(n)];
  }
  int depth() const { return static_cast<int>(levels.size()); }
};

// Canonical enumeration of all finite bit strings: empty, 0, 1, 00, 01, ...
inline BitString canonical_bit_string(int index) {
  // strings of length L start at index 2^L - 1
  int len = 0;
  std::int64_t base = 0;
  while (base + (1ll << len) <= index) {
    base += 1ll << len;
    ++len;
  }
  std::int64_t offset = index - base;
  BitString s(static_cast<std::size_t>(len), '0');
  for (int i = 0; i < len; ++i)
    if (offset >> (len - 1 - i) & 1) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

// s_n = t_n right-padded with zeros to length n; |t_n| <= n holds because
// the first string of length L sits at index 2^L - 1 >= L.
inline SparseSet canonical_sparse_dense(int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  SparseSet s;
  for (int n = 0; n <= depth; ++n) {
    BitString t = canonical_bit_string(n);
    if (static_cast<int>(t.size()) > n) throw std::logic_error("canonical enumeration outgrew its level");
    t.append(static_cast<std::size_t>(n) - t.size(), '0');
    s.levels.push_back(std::move(t));
  }
  return s;
}

using BitEdge = std::pair<BitString, BitString>;

inline BitEdge make_bit_edge(BitString u, BitString v) {
  if (v < u) std::swap(u, v);
  return {std::move(u), std::move(v)};
}

struct BitGraph {
  std::vector<BitString> vertices;  // sorted
  std::set<BitEdge> edges;

  bool has_vertex(const BitString& v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }
};

// H |x_u H: two copies of H (suffix 0 and suffix 1) plus one edge linking
// the copies of u.
inline BitGraph attach(const BitGraph& h, const BitString& u) {
  if (!h.has_vertex(u)) throw std::invalid_argument("attachment vertex not in graph");
  BitGraph out;
  for (const auto& v : h.vertices) {
    out.vertices.push_back(v + "0");
    out.vertices.push_back(v + "1");
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  for (const auto& [x, y] : h.edges) {
    out.edges.insert(make_bit_edge(x + "0", y + "0"));
    out.edges.insert(make_bit_edge(x + "1", y + "1"));
  }
  out.edges.insert(make_bit_edge(u + "0", u + "1"));
  return out;
}

struct G0Level {
  int n = 0;
  BitGraph graph;
  SparseSet generator;
};

// Iterate attach from the one-point graph, linking at s_k at step k.
inline G0Level g0_level(const SparseSet& s, int n) {
  if (n >= s.depth()) throw std::invalid_argument("sparse set depth insufficient");
  G0Level lvl;
  lvl.n = n;
  lvl.generator = s;
  lvl.graph.vertices = {""};
  for (int k = 0; k < n; ++k) lvl.graph = attach(lvl.graph, s.at(k));
  return lvl;
}

// Direct definition: {{s_k e z, s_k (1-e) z} : k < n, |z| = n-k-1}.
inline std::set<BitEdge> g0_edges_direct(const SparseSet& s, int n) {
  if (n > s.depth()) throw std::invalid_argument("sparse set depth insufficient");
  std::set<BitEdge> edges;
  for (int k = 0; k < n; ++k) {
    const BitString& sk = s.at(k);
    int zlen = n - k - 1;
    for (std::int64_t z = 0; z < (1ll << zlen); ++z) {
      BitString suffix(static_cast<std::size_t>(zlen), '0');
      for (int i = 0; i < zlen; ++i)
        if (z >> (zlen - 1 - i) & 1) suffix[static_cast<std::size_t>(i)] = '1';
      edges.insert(make_bit_edge(sk + "0" + suffix, sk + "1" + suffix));
    }
  }
  return edges;
}

// ---------------------------------------------------------------------------
// generic graph utilities on BitGraph

inline std::map<BitString, std::vector<BitString>> adjacency(const BitGraph& g) {
  std::map<BitString, std::vector<BitString>> adj;
  for (const auto& v : g.vertices) adj[v];
  for (const auto& [x, y] : g.edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  return adj;
}

inline int component_count(const BitGraph& g) {
  auto adj = adjacency(g);
  std::set<BitString> seen;
  int comps = 0;
  for (const auto& v : g.vertices) {
    if (seen.count(v)) continue;
    ++comps;
    std::vector<BitString> stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      BitString x = stack.back();
      stack.pop_back();
      for (const auto& y : adj[x])
        if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return comps;
}

inline bool is_acyclic(const BitGraph& g) {
  // for undirected simple graphs: |E| = |V| - #components exactly on forests
  return g.edges.size() + static_cast<std::size_t>(component_count(g)) == g.vertices.size();
}

inline int max_degree(const BitGraph& g) {
  auto adj = adjacency(g);
  std::size_t best = 0;
  for (const auto& [v, nb] : adj) best = std::max(best, nb.size());
  return static_cast<int>(best);
}

// Greedy coloring in the given vertex order: each vertex gets the least
// color absent among its earlier-ordered neighbors. Uses <= maxdeg+1 colors.
inline std::map<BitString, int> greedy_color(const BitGraph& g, const std::vector<BitString>& order) {
  if (order.size() != g.vertices.size()) throw std::invalid_argument("order must list every vertex once");
  auto adj = adjacency(g);
  std::map<BitString, int> color;
  for (const auto& v : order) {
    if (!g.has_vertex(v) || color.count(v)) throw std::invalid_argument("order is not a permutation of vertices");
    std::set<int> taken;
    for (const auto& w : adj[v]) {
      auto it = color.find(w);
      if (it != color.end()) taken.insert(it->second);
    }
    int c = 0;
    while (taken.count(c)) ++c;
    color[v] = c;
  }
  return color;
}

inline bool is_proper_coloring(const BitGraph& g, const std::map<BitString, int>& color) {
  for (const auto& [x, y] : g.edges)
    if (color.at(x) == color.at(y)) return false;
  return true;
}

inline bool independence_check(const BitGraph& g, const std::set<BitString>& x) {
  for (const auto& v : x)
    if (!g.has_vertex(v)) throw std::invalid_argument("set contains a non-vertex");
  for (const auto& [u, v] : g.edges)
    if (x.count(u) && x.count(v)) return false;
  return true;
}

// Adapter for structures from the graphs class: vertex i is labeled with its
// zero-padded decimal index so vertex order matches integer order.
template <typename Structure>
inline BitGraph bitgraph_from_structure(const Structure& g) {
  int width = 1, n = g.size;
  for (int m = 10; m < n; m *= 10) ++width;
  auto label = [&](int v) {
    std::string s = std::to_string(v);
    return std::string(static_cast<std::size_t>(width) - s.size(), '0') + s;
  };
  BitGraph out;
  for (int v = 0; v < n; ++v) out.vertices.push_back(label(v));
  for (const auto& t : g.tables[0])
    if (t[0] < t[1]) out.edges.insert(make_bit_edge(label(t[0]), label(t[1])));
  return out;
}

struct G0Summary {
  int n = 0;
  std::size_t vertices = 0, edges = 0;
  int components = 0;
  bool acyclic = false;
  int max_degree = 0;
  int colors_used = 0;
  bool direct_matches_iterated = false;
};

inline G0Summary g0_validate(const SparseSet& s, int n) {
  G0Level lvl = g0_level(s, n);
  G0Summary sum;
  sum.n = n;
  sum.vertices = lvl.graph.vertices.size();
  sum.edges = lvl.graph.edges.size();
  sum.components = component_count(lvl.graph);
  sum.acyclic = is_acyclic(lvl.graph);
  sum.max_degree = max_degree(lvl.graph);
  auto coloring = greedy_color(lvl.graph, lvl.graph.vertices);
  int used = 0;
  for (const auto& [v, c] : coloring) used = std::max(used, c + 1);
  sum.colors_used = used;
  sum.direct_matches_iterated = g0_edges_direct(s, n) == lvl.graph.edges;
  return sum;
}

}  // namespace fwb
