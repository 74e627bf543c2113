#pragma once

// Built-in amalgamation-class candidates: graphs, finite linear orders,
// tournaments and metric spaces with distances drawn from a fixed finite set.
// Each ClassSpec bundles membership, a bounded up-to-isomorphism enumerator
// and explicit amalgam / joint-embedding strategies.

#include <functional>
#include <numeric>
#include <sstream>

#include "fwb/structure.hpp"

namespace fwb {

struct MemberVerdict {
  bool ok = true;
  std::string violation;

  static MemberVerdict pass() { return {}; }
  static MemberVerdict fail(std::string why) { return {false, std::move(why)}; }
};

struct AmalgamResult {
  bool ok = false;
  FinStructure d;
  Embedding into_d_from_b;  // i : B -> D
  Embedding into_d_from_c;  // j : C -> D
  std::string failure;
};

struct ClassSpec {
  std::string name;
  Signature sig;
  std::function<MemberVerdict(const FinStructure&)> membership;
  // All labeled candidate structures of the given size (before dedup).
  std::function<std::vector<FinStructure>(int)> labeled_of_size;
  // set when labeled_of_size already yields one canonical form per iso type
  bool labeled_is_canonical = false;
  std::function<AmalgamResult(const FinStructure& a, const FinStructure& b, const FinStructure& c,
                              const Embedding& alpha, const Embedding& beta)>
      amalgam_strategy;  // may be null
  std::function<AmalgamResult(const FinStructure& a, const FinStructure& b)> jep_strategy;  // may be null
};

inline MemberVerdict is_member(const ClassSpec& spec, const FinStructure& a) {
  if (!(a.sig == spec.sig)) throw std::invalid_argument("signature mismatch");
  return spec.membership(a);
}

// Members up to isomorphism with size <= max_size, canonical forms,
// sorted by (size, encoding).
inline std::vector<FinStructure> enumerate_members(const ClassSpec& spec, int max_size) {
  std::vector<FinStructure> out;
  for (int n = 0; n <= max_size; ++n) {
    if (spec.labeled_is_canonical) {
      std::vector<FinStructure> level;
      for (FinStructure& g : spec.labeled_of_size(n))
        if (spec.membership(g).ok) level.push_back(std::move(g));
      std::sort(level.begin(), level.end());
      out.insert(out.end(), level.begin(), level.end());
      continue;
    }
    // bucket by cheap invariant, settle collisions by isomorphism search
    std::map<std::vector<int>, std::vector<FinStructure>> buckets;
    for (FinStructure& g : spec.labeled_of_size(n)) {
      if (!spec.membership(g).ok) continue;
      auto& bucket = buckets[iso_invariant(g)];
      bool fresh = true;
      for (const auto& rep : bucket)
        if (find_isomorphism(rep, g)) { fresh = false; break; }
      if (fresh) bucket.push_back(std::move(g));
    }
    std::vector<FinStructure> level;
    for (auto& [inv, bucket] : buckets)
      for (auto& g : bucket) level.push_back(canonical_form(g));
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// shared helpers

namespace detail {

inline std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> ps;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) ps.emplace_back(i, j);
  return ps;
}

// Index plumbing shared by every amalgam strategy: D's universe is
// B followed by C \ beta(A); returns (|D|, i, j).
struct AmalgamFrame {
  int d_size;
  Embedding i, j;
};

inline AmalgamFrame amalgam_frame(const FinStructure& a, const FinStructure& b, const FinStructure& c,
                                  const Embedding& alpha, const Embedding& beta) {
  AmalgamFrame f;
  f.d_size = b.size + c.size - a.size;
  f.i = Embedding{b.size, f.d_size, {}};
  f.i.map.resize(static_cast<std::size_t>(b.size));
  std::iota(f.i.map.begin(), f.i.map.end(), 0);
  f.j = Embedding{c.size, f.d_size, std::vector<int>(static_cast<std::size_t>(c.size), -1)};
  for (int x = 0; x < a.size; ++x) f.j.map[static_cast<std::size_t>(beta(x))] = alpha(x);
  int next = b.size;
  for (int y = 0; y < c.size; ++y)
    if (f.j.map[static_cast<std::size_t>(y)] < 0) f.j.map[static_cast<std::size_t>(y)] = next++;
  return f;
}

inline void require_amalgam_inputs(const FinStructure& a, const FinStructure& b, const FinStructure& c,
                                   const Embedding& alpha, const Embedding& beta) {
  if (!is_embedding(a, b, alpha.map)) throw std::invalid_argument("alpha is not an embedding");
  if (!is_embedding(a, c, beta.map)) throw std::invalid_argument("beta is not an embedding");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graphs: one symmetric irreflexive binary relation "adj".

inline FinStructure graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  FinStructure g(Signature{{{"adj", 2}}}, n);
  for (auto [u, v] : edges) {
    g.add_tuple("adj", {u, v});
    g.add_tuple("adj", {v, u});
  }
  g.normalize();
  g.validate();
  return g;
}

inline bool graph_adjacent(const FinStructure& g, int u, int v) { return g.has_tuple(0, {u, v}); }

inline std::vector<std::pair<int, int>> graph_edges(const FinStructure& g) {
  std::vector<std::pair<int, int>> es;
  for (const auto& t : g.tables[0])
    if (t[0] < t[1]) es.emplace_back(t[0], t[1]);
  return es;
}

inline ClassSpec graphs_class() {
  ClassSpec spec;
  spec.name = "graphs";
  spec.sig = Signature{{{"adj", 2}}};
  spec.membership = [](const FinStructure& g) {
    for (const auto& t : g.tables[0]) {
      if (t[0] == t[1]) return MemberVerdict::fail("irreflexivity");
      if (!g.has_tuple(0, {t[1], t[0]})) return MemberVerdict::fail("symmetry");
    }
    return MemberVerdict::pass();
  };
  spec.labeled_of_size = [](int n) {
    std::vector<FinStructure> out;
    auto pairs = detail::all_pairs(n);
    for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t p = 0; p < pairs.size(); ++p)
        if (mask >> p & 1) edges.push_back(pairs[p]);
      out.push_back(graph_from_edges(n, edges));
    }
    return out;
  };
  spec.amalgam_strategy = [](const FinStructure& a, const FinStructure& b, const FinStructure& c,
                             const Embedding& alpha, const Embedding& beta) {
    detail::require_amalgam_inputs(a, b, c, alpha, beta);
    auto f = detail::amalgam_frame(a, b, c, alpha, beta);
    // free amalgam: no edge between B \ alpha(A) and C \ beta(A)
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : graph_edges(b)) edges.emplace_back(f.i(u), f.i(v));
    for (auto [u, v] : graph_edges(c)) edges.emplace_back(f.j(u), f.j(v));
    AmalgamResult r;
    r.ok = true;
    r.d = graph_from_edges(f.d_size, edges);
    r.into_d_from_b = f.i;
    r.into_d_from_c = f.j;
    return r;
  };
  spec.jep_strategy = [spec_amalgam = spec.amalgam_strategy](const FinStructure& b, const FinStructure& c) {
    FinStructure empty(Signature{{{"adj", 2}}}, 0);
    return spec_amalgam(empty, b, c, Embedding{0, b.size, {}}, Embedding{0, c.size, {}});
  };
  return spec;
}

// ---------------------------------------------------------------------------
// Linear orders: one strict total order relation "lt".

inline FinStructure chain(int n) {
  FinStructure s(Signature{{{"lt", 2}}}, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.add_tuple("lt", {i, j});
  s.normalize();
  return s;
}

inline ClassSpec linear_orders_class() {
  ClassSpec spec;
  spec.name = "linear-orders";
  spec.sig = Signature{{{"lt", 2}}};
  spec.membership = [](const FinStructure& s) {
    for (int i = 0; i < s.size; ++i) {
      if (s.has_tuple(0, {i, i})) return MemberVerdict::fail("irreflexivity");
      for (int j = 0; j < s.size; ++j) {
        if (i == j) continue;
        bool ij = s.has_tuple(0, {i, j}), ji = s.has_tuple(0, {j, i});
        if (ij && ji) return MemberVerdict::fail("antisymmetry");
        if (!ij && !ji) return MemberVerdict::fail("totality");
        for (int k = 0; k < s.size; ++k)
          if (ij && s.has_tuple(0, {j, k}) && !s.has_tuple(0, {i, k}))
            return MemberVerdict::fail("transitivity");
      }
    }
    return MemberVerdict::pass();
  };
  spec.labeled_of_size = [](int n) {
    // every finite linear order is a relabeled chain, and the chain is its
    // own canonical form (its tuple set {(i,j) : i<j} is lexicographically
    // least among relabelings)
    return std::vector<FinStructure>{chain(n)};
  };
  spec.labeled_is_canonical = true;
  spec.amalgam_strategy = [](const FinStructure& a, const FinStructure& b, const FinStructure& c,
                             const Embedding& alpha, const Embedding& beta) {
    detail::require_amalgam_inputs(a, b, c, alpha, beta);
    auto f = detail::amalgam_frame(a, b, c, alpha, beta);
    auto less_b = [&](int u, int v) { return b.has_tuple(0, {u, v}); };
    auto less_c = [&](int u, int v) { return c.has_tuple(0, {u, v}); };
    // position of every D-element: gap g = number of A-elements strictly
    // below it; within a gap non-shared elements come first (B-side before
    // C-side, each in its own order), then the shared element closing the gap
    auto key_of = [&](int d_elem) {
      int gap = 0, rank = 0;
      for (int u = 0; u < b.size; ++u)
        if (f.i(u) == d_elem) {
          bool shared = false;
          for (int x = 0; x < a.size; ++x) {
            if (alpha(x) == u) shared = true;
            if (less_b(alpha(x), u)) ++gap;
          }
          for (int v = 0; v < b.size; ++v)
            if (less_b(v, u)) ++rank;
          return std::tuple{gap, shared ? 1 : 0, 0, rank};
        }
      for (int u = 0; u < c.size; ++u)
        if (f.j(u) == d_elem) {
          for (int x = 0; x < a.size; ++x)
            if (less_c(beta(x), u)) ++gap;
          for (int v = 0; v < c.size; ++v)
            if (less_c(v, u)) ++rank;
          return std::tuple{gap, 0, 1, rank};
        }
      throw std::logic_error("element not in frame");
    };
    std::vector<std::tuple<int, int, int, int>> keys;
    for (int d = 0; d < f.d_size; ++d) keys.push_back(key_of(d));
    AmalgamResult r;
    r.ok = true;
    r.d = FinStructure(Signature{{{"lt", 2}}}, f.d_size);
    for (int u = 0; u < f.d_size; ++u)
      for (int v = 0; v < f.d_size; ++v)
        if (u != v && keys[static_cast<std::size_t>(u)] < keys[static_cast<std::size_t>(v)])
          r.d.add_tuple("lt", {u, v});
    r.d.normalize();
    r.into_d_from_b = f.i;
    r.into_d_from_c = f.j;
    return r;
  };
  spec.jep_strategy = [](const FinStructure& b, const FinStructure& c) {
    // all of B strictly below all of C
    auto f = detail::amalgam_frame(FinStructure(Signature{{{"lt", 2}}}, 0), b, c,
                                   Embedding{0, b.size, {}}, Embedding{0, c.size, {}});
    AmalgamResult r;
    r.ok = true;
    r.d = FinStructure(Signature{{{"lt", 2}}}, f.d_size);
    for (const auto& t : b.tables[0]) r.d.add_tuple("lt", {f.i(t[0]), f.i(t[1])});
    for (const auto& t : c.tables[0]) r.d.add_tuple("lt", {f.j(t[0]), f.j(t[1])});
    for (int u = 0; u < b.size; ++u)
      for (int v = 0; v < c.size; ++v) r.d.add_tuple("lt", {f.i(u), f.j(v)});
    r.d.normalize();
    r.into_d_from_b = f.i;
    r.into_d_from_c = f.j;
    return r;
  };
  return spec;
}

// ---------------------------------------------------------------------------
// Tournaments: irreflexive "arc" with exactly one direction per pair.

inline ClassSpec tournaments_class() {
  ClassSpec spec;
  spec.name = "tournaments";
  spec.sig = Signature{{{"arc", 2}}};
  spec.membership = [](const FinStructure& s) {
    for (const auto& t : s.tables[0])
      if (t[0] == t[1]) return MemberVerdict::fail("irreflexivity");
    for (int i = 0; i < s.size; ++i)
      for (int j = i + 1; j < s.size; ++j) {
        bool ij = s.has_tuple(0, {i, j}), ji = s.has_tuple(0, {j, i});
        if (ij && ji) return MemberVerdict::fail("antisymmetry");
        if (!ij && !ji) return MemberVerdict::fail("totality");
      }
    return MemberVerdict::pass();
  };
  spec.labeled_of_size = [](int n) {
    std::vector<FinStructure> out;
    auto pairs = detail::all_pairs(n);
    for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
      FinStructure s(Signature{{{"arc", 2}}}, n);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto [i, j] = pairs[p];
        if (mask >> p & 1)
          s.add_tuple("arc", {i, j});
        else
          s.add_tuple("arc", {j, i});
      }
      s.normalize();
      out.push_back(std::move(s));
    }
    return out;
  };
  spec.amalgam_strategy = [](const FinStructure& a, const FinStructure& b, const FinStructure& c,
                             const Embedding& alpha, const Embedding& beta) {
    detail::require_amalgam_inputs(a, b, c, alpha, beta);
    auto f = detail::amalgam_frame(a, b, c, alpha, beta);
    AmalgamResult r;
    r.ok = true;
    r.d = FinStructure(Signature{{{"arc", 2}}}, f.d_size);
    for (const auto& t : b.tables[0]) r.d.add_tuple("arc", {f.i(t[0]), f.i(t[1])});
    for (const auto& t : c.tables[0]) r.d.add_tuple("arc", {f.j(t[0]), f.j(t[1])});
    // cross pairs oriented from the B-side to the C-side
    for (int u = 0; u < b.size; ++u) {
      bool u_shared = false;
      for (int x = 0; x < a.size; ++x)
        if (alpha(x) == u) u_shared = true;
      if (u_shared) continue;
      for (int v = b.size; v < f.d_size; ++v) r.d.add_tuple("arc", {f.i(u), v});
    }
    r.d.normalize();
    r.into_d_from_b = f.i;
    r.into_d_from_c = f.j;
    return r;
  };
  spec.jep_strategy = [spec_amalgam = spec.amalgam_strategy](const FinStructure& b, const FinStructure& c) {
    FinStructure empty(Signature{{{"arc", 2}}}, 0);
    return spec_amalgam(empty, b, c, Embedding{0, b.size, {}}, Embedding{0, c.size, {}});
  };
  return spec;
}

// ---------------------------------------------------------------------------
// QMetric(D): metric spaces with distances in a finite positive set D,
// one symmetric binary relation per distance value.

inline Signature qmetric_signature(const std::vector<int>& dists) {
  Signature sig;
  for (int q : dists) sig.relations.push_back({"d" + std::to_string(q), 2});
  return sig;
}

// distance lookup; -1 when no relation holds for the (unordered) pair
inline int qmetric_distance(const FinStructure& s, const std::vector<int>& dists, int x, int y) {
  for (std::size_t k = 0; k < dists.size(); ++k)
    if (s.has_tuple(static_cast<int>(k), {x, y})) return dists[k];
  return -1;
}

inline FinStructure qmetric_space(const std::vector<int>& dists, int n,
                                  const std::function<int(int, int)>& dist) {
  FinStructure s(qmetric_signature(dists), n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int q = dist(i, j);
      auto it = std::find(dists.begin(), dists.end(), q);
      if (it == dists.end()) throw std::invalid_argument("distance outside the distance set");
      auto name = "d" + std::to_string(q);
      s.add_tuple(name, {i, j});
      s.add_tuple(name, {j, i});
    }
  s.normalize();
  return s;
}

inline ClassSpec qmetric_class(std::vector<int> dists) {
  std::sort(dists.begin(), dists.end());
  dists.erase(std::unique(dists.begin(), dists.end()), dists.end());
  if (dists.empty() || dists.front() <= 0)
    throw std::invalid_argument("distance set must be nonempty and positive");
  ClassSpec spec;
  spec.name = "qmetric";
  spec.sig = qmetric_signature(dists);
  spec.membership = [dists](const FinStructure& s) {
    for (std::size_t k = 0; k < dists.size(); ++k)
      for (const auto& t : s.tables[k]) {
        if (t[0] == t[1]) return MemberVerdict::fail("irreflexivity");
        if (!s.has_tuple(static_cast<int>(k), {t[1], t[0]})) return MemberVerdict::fail("symmetry");
      }
    for (int i = 0; i < s.size; ++i)
      for (int j = i + 1; j < s.size; ++j) {
        int count = 0;
        for (std::size_t k = 0; k < dists.size(); ++k)
          if (s.has_tuple(static_cast<int>(k), {i, j})) ++count;
        if (count != 1) return MemberVerdict::fail("exactly one distance per pair");
      }
    for (int i = 0; i < s.size; ++i)
      for (int j = 0; j < s.size; ++j)
        for (int k = 0; k < s.size; ++k) {
          if (i == j || j == k || i == k) continue;
          int dij = qmetric_distance(s, dists, i, j);
          int djk = qmetric_distance(s, dists, j, k);
          int dik = qmetric_distance(s, dists, i, k);
          if (dik > dij + djk) {
            std::ostringstream os;
            os << "triangle inequality: d(" << i << "," << k << ")=" << dik << " > " << dij << "+" << djk;
            return MemberVerdict::fail(os.str());
          }
        }
    return MemberVerdict::pass();
  };
  spec.labeled_of_size = [dists](int n) {
    std::vector<FinStructure> out;
    auto pairs = detail::all_pairs(n);
    std::vector<std::size_t> choice(pairs.size(), 0);
    while (true) {
      out.push_back(qmetric_space(dists, n, [&](int i, int j) {
        for (std::size_t p = 0; p < pairs.size(); ++p)
          if (pairs[p] == std::pair{std::min(i, j), std::max(i, j)}) return dists[choice[p]];
        return dists[0];
      }));
      std::size_t p = 0;
      while (p < pairs.size() && ++choice[p] == dists.size()) choice[p++] = 0;
      if (p == pairs.size()) break;
    }
    return out;
  };
  spec.amalgam_strategy = [dists](const FinStructure& a, const FinStructure& b, const FinStructure& c,
                                  const Embedding& alpha, const Embedding& beta) {
    detail::require_amalgam_inputs(a, b, c, alpha, beta);
    auto f = detail::amalgam_frame(a, b, c, alpha, beta);
    AmalgamResult r;
    if (a.size == 0) {
      // no shared part: fall back to the joint-embedding rule below via
      // the largest admissible cross distance
      int diam = 0;
      for (int i = 0; i < b.size; ++i)
        for (int j = i + 1; j < b.size; ++j) diam = std::max(diam, qmetric_distance(b, dists, i, j));
      for (int i = 0; i < c.size; ++i)
        for (int j = i + 1; j < c.size; ++j) diam = std::max(diam, qmetric_distance(c, dists, i, j));
      int cross = -1;
      for (int q : dists)
        if (q >= diam) cross = std::max(cross, q);
      if (cross < 0) {
        r.failure = "no admissible cross distance in the distance set";
        return r;
      }
      // with no shared part f.j is the shift u -> b.size + u
      r.ok = true;
      r.d = qmetric_space(dists, f.d_size, [&](int x, int y) {
        if (x < b.size && y < b.size) return qmetric_distance(b, dists, x, y);
        if (x >= b.size && y >= b.size) return qmetric_distance(c, dists, x - b.size, y - b.size);
        return cross;
      });
      r.into_d_from_b = f.i;
      r.into_d_from_c = f.j;
      return r;
    }
    // shortest-path value through the shared part
    auto dist_d = [&](int x, int y) -> int {
      if (x == y) return 0;
      std::vector<int> pre_b(static_cast<std::size_t>(f.d_size), -1), pre_c(static_cast<std::size_t>(f.d_size), -1);
      for (int u = 0; u < b.size; ++u) pre_b[static_cast<std::size_t>(f.i(u))] = u;
      for (int u = 0; u < c.size; ++u) pre_c[static_cast<std::size_t>(f.j(u))] = u;
      int xb = pre_b[static_cast<std::size_t>(x)], yb = pre_b[static_cast<std::size_t>(y)];
      int xc = pre_c[static_cast<std::size_t>(x)], yc = pre_c[static_cast<std::size_t>(y)];
      if (xb >= 0 && yb >= 0) return qmetric_distance(b, dists, xb, yb);
      if (xc >= 0 && yc >= 0) return qmetric_distance(c, dists, xc, yc);
      // one endpoint strictly in B, the other strictly in C
      int bu = xb >= 0 ? xb : yb;
      int cu = xc >= 0 ? xc : yc;
      int best = -1;
      for (int z = 0; z < a.size; ++z) {
        int via = qmetric_distance(b, dists, bu, alpha(z)) + qmetric_distance(c, dists, beta(z), cu);
        if (best < 0 || via < best) best = via;
      }
      return best;
    };
    for (int x = 0; x < f.d_size; ++x)
      for (int y = x + 1; y < f.d_size; ++y) {
        int q = dist_d(x, y);
        if (std::find(dists.begin(), dists.end(), q) == dists.end()) {
          std::ostringstream os;
          os << "shortest-path distance " << q << " is outside the distance set";
          r.failure = os.str();
          return r;
        }
      }
    r.ok = true;
    r.d = qmetric_space(dists, f.d_size, dist_d);
    r.into_d_from_b = f.i;
    r.into_d_from_c = f.j;
    return r;
  };
  spec.jep_strategy = [dists](const FinStructure& b, const FinStructure& c) {
    AmalgamResult r;
    int diam = 0;
    for (int i = 0; i < b.size; ++i)
      for (int j = i + 1; j < b.size; ++j) diam = std::max(diam, qmetric_distance(b, dists, i, j));
    for (int i = 0; i < c.size; ++i)
      for (int j = i + 1; j < c.size; ++j) diam = std::max(diam, qmetric_distance(c, dists, i, j));
    int cross = -1;
    for (int q : dists)
      if (q >= diam) cross = std::max(cross, q);
    if (cross < 0 && b.size > 0 && c.size > 0) {
      r.failure = "no admissible cross distance in the distance set";
      return r;
    }
    int d_size = b.size + c.size;
    r.ok = true;
    r.d = qmetric_space(dists, d_size, [&](int x, int y) {
      if (x < b.size && y < b.size) return qmetric_distance(b, dists, x, y);
      if (x >= b.size && y >= b.size) return qmetric_distance(c, dists, x - b.size, y - b.size);
      return cross;
    });
    r.into_d_from_b = Embedding{b.size, d_size, {}};
    r.into_d_from_b.map.resize(static_cast<std::size_t>(b.size));
    std::iota(r.into_d_from_b.map.begin(), r.into_d_from_b.map.end(), 0);
    r.into_d_from_c = Embedding{c.size, d_size, {}};
    for (int u = 0; u < c.size; ++u) r.into_d_from_c.map.push_back(b.size + u);
    return r;
  };
  return spec;
}

// ---------------------------------------------------------------------------

inline AmalgamResult amalgam(const ClassSpec& spec, const FinStructure& a, const FinStructure& b,
                             const FinStructure& c, const Embedding& alpha, const Embedding& beta) {
  if (!spec.amalgam_strategy) throw std::invalid_argument("class has no amalgam strategy");
  return spec.amalgam_strategy(a, b, c, alpha, beta);
}

inline AmalgamResult joint_embed(const ClassSpec& spec, const FinStructure& a, const FinStructure& b) {
  if (!spec.jep_strategy) throw std::invalid_argument("class has no joint-embedding strategy");
  return spec.jep_strategy(a, b);
}

inline ClassSpec class_by_name(const std::string& name, const std::vector<int>& dists = {}) {
  if (name == "graphs") return graphs_class();
  if (name == "linear-orders") return linear_orders_class();
  if (name == "tournaments") return tournaments_class();
  if (name == "qmetric") return qmetric_class(dists);
  throw std::invalid_argument("unknown class: " + name);
}

}  // namespace fwb
