#pragma once

// Finite relational structures over universe {0..n-1}, embeddings,
// isomorphisms, automorphism groups and a permutation-minimal canonical form.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fwb {

using Tuple = std::vector<int>;

struct RelationSymbol {
  std::string name;
  int arity = 1;

  friend bool operator==(const RelationSymbol& a, const RelationSymbol& b) {
    return a.name == b.name && a.arity == b.arity;
  }
};

struct Signature {
  std::vector<RelationSymbol> relations;

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < relations.size(); ++i)
      if (relations[i].name == name) return static_cast<int>(i);
    return -1;
  }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.relations == b.relations;
  }

  void validate() const {
    std::set<std::string> names;
    for (const auto& r : relations) {
      if (r.arity < 1) throw std::invalid_argument("relation arity must be >= 1");
      if (r.name == "=") throw std::invalid_argument("equality is implicit, never listed");
      if (!names.insert(r.name).second)
        throw std::invalid_argument("duplicate relation name: " + r.name);
    }
  }
};

// tables[k] is the sorted duplicate-free tuple list of relations[k].
struct FinStructure {
  Signature sig;
  int size = 0;
  std::vector<std::vector<Tuple>> tables;

  FinStructure() = default;
  FinStructure(Signature s, int n) : sig(std::move(s)), size(n), tables(sig.relations.size()) {}

  std::vector<Tuple>& table(const std::string& name) {
    int k = sig.index_of(name);
    if (k < 0) throw std::invalid_argument("unknown relation: " + name);
    return tables[k];
  }
  const std::vector<Tuple>& table(const std::string& name) const {
    return const_cast<FinStructure*>(this)->table(name);
  }

  void add_tuple(const std::string& name, Tuple t) { table(name).push_back(std::move(t)); }

  bool has_tuple(int rel, const Tuple& t) const {
    return std::binary_search(tables[rel].begin(), tables[rel].end(), t);
  }

  void normalize() {
    for (auto& tab : tables) {
      std::sort(tab.begin(), tab.end());
      tab.erase(std::unique(tab.begin(), tab.end()), tab.end());
    }
  }

  void validate() const {
    sig.validate();
    if (size < 0) throw std::invalid_argument("negative universe size");
    if (tables.size() != sig.relations.size())
      throw std::invalid_argument("table count does not match signature");
    for (std::size_t k = 0; k < tables.size(); ++k)
      for (const auto& t : tables[k]) {
        if (static_cast<int>(t.size()) != sig.relations[k].arity)
          throw std::invalid_argument("tuple length != arity for " + sig.relations[k].name);
        for (int e : t)
          if (e < 0 || e >= size) throw std::invalid_argument("tuple entry out of range");
      }
  }

  // Flat integer encoding; equal encodings <=> identical labeled structures.
  std::vector<int> encode() const {
    std::vector<int> out;
    out.push_back(size);
    for (const auto& tab : tables) {
      out.push_back(static_cast<int>(tab.size()));
      for (const auto& t : tab) out.insert(out.end(), t.begin(), t.end());
    }
    return out;
  }

  friend bool operator==(const FinStructure& a, const FinStructure& b) {
    return a.sig == b.sig && a.size == b.size && a.tables == b.tables;
  }
  friend bool operator<(const FinStructure& a, const FinStructure& b) {
    return a.encode() < b.encode();
  }
};

struct Embedding {
  int source_size = 0;
  int target_size = 0;
  std::vector<int> map;  // length source_size, entries < target_size

  int operator()(int x) const { return map.at(static_cast<std::size_t>(x)); }

  bool is_surjective() const { return source_size == target_size; }

  static Embedding identity(int n) {
    Embedding e{n, n, std::vector<int>(static_cast<std::size_t>(n))};
    for (int i = 0; i < n; ++i) e.map[static_cast<std::size_t>(i)] = i;
    return e;
  }

  // this : A->B composed with g : B->C, yielding A->C.
  Embedding then(const Embedding& g) const {
    Embedding out{source_size, g.target_size, {}};
    out.map.reserve(map.size());
    for (int x : map) out.map.push_back(g(x));
    return out;
  }

  Embedding inverse() const {
    Embedding out{target_size, source_size, std::vector<int>(static_cast<std::size_t>(target_size), -1)};
    for (int i = 0; i < source_size; ++i) out.map[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])] = i;
    return out;
  }

  friend bool operator==(const Embedding& a, const Embedding& b) {
    return a.source_size == b.source_size && a.target_size == b.target_size && a.map == b.map;
  }
  friend bool operator<(const Embedding& a, const Embedding& b) { return a.map < b.map; }
};

// Injective partial map, pairs sorted by source element.
struct PartialMap {
  std::vector<std::pair<int, int>> pairs;

  void sort() { std::sort(pairs.begin(), pairs.end()); }

  std::optional<int> image(int x) const {
    for (auto [s, t] : pairs)
      if (s == x) return t;
    return std::nullopt;
  }

  bool functional_injective() const {
    std::set<int> src, tgt;
    for (auto [s, t] : pairs) {
      if (!src.insert(s).second) return false;
      if (!tgt.insert(t).second) return false;
    }
    return true;
  }

  PartialMap inverse() const {
    PartialMap p;
    for (auto [s, t] : pairs) p.pairs.emplace_back(t, s);
    p.sort();
    return p;
  }

  friend bool operator==(const PartialMap& a, const PartialMap& b) { return a.pairs == b.pairs; }
  friend bool operator<(const PartialMap& a, const PartialMap& b) {
    if (a.pairs.size() != b.pairs.size()) return a.pairs.size() < b.pairs.size();
    return a.pairs < b.pairs;
  }
};

namespace detail {

inline void require_same_signature(const FinStructure& a, const FinStructure& b) {
  if (!(a.sig == b.sig)) throw std::invalid_argument("signature mismatch");
}

// Checks preserve+reflect for every tuple all of whose entries are assigned
// (assigned[x] >= 0). Only tuples touching `last` are re-checked when last >= 0.
inline bool partial_ok(const FinStructure& a, const FinStructure& b,
                       const std::vector<int>& assigned, int last) {
  for (std::size_t k = 0; k < a.tables.size(); ++k) {
    const int arity = a.sig.relations[k].arity;
    // forward: A-tuples fully assigned must land in B's table
    for (const auto& t : a.tables[k]) {
      bool touches = last < 0;
      bool full = true;
      for (int e : t) {
        if (e == last) touches = true;
        if (assigned[static_cast<std::size_t>(e)] < 0) { full = false; break; }
      }
      if (!full || !touches) continue;
      Tuple img(static_cast<std::size_t>(arity));
      for (int i = 0; i < arity; ++i) img[static_cast<std::size_t>(i)] = assigned[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
      if (!b.has_tuple(static_cast<int>(k), img)) return false;
    }
    // reflect: B-tuples inside the current image must pull back into A's table
    std::vector<int> pre(static_cast<std::size_t>(b.size), -1);
    for (std::size_t x = 0; x < assigned.size(); ++x)
      if (assigned[x] >= 0) pre[static_cast<std::size_t>(assigned[x])] = static_cast<int>(x);
    const int last_img = last >= 0 ? assigned[static_cast<std::size_t>(last)] : -1;
    for (const auto& t : b.tables[k]) {
      bool touches = last < 0;
      bool full = true;
      for (int e : t) {
        if (e == last_img) touches = true;
        if (pre[static_cast<std::size_t>(e)] < 0) { full = false; break; }
      }
      if (!full || !touches) continue;
      Tuple src(static_cast<std::size_t>(arity));
      for (int i = 0; i < arity; ++i) src[static_cast<std::size_t>(i)] = pre[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
      if (!a.has_tuple(static_cast<int>(k), src)) return false;
    }
  }
  return true;
}

// Backtracking enumeration of embeddings extending `assigned`; target
// candidates are tried in increasing order so output is lexicographic in the
// map sequence. Returns false from the visitor to stop early.
template <typename Visit>
bool search_embeddings(const FinStructure& a, const FinStructure& b,
                       std::vector<int>& assigned, std::vector<char>& used,
                       int next, const Visit& visit) {
  if (next == a.size) return visit(assigned);
  // skip elements pinned by a seed
  if (assigned[static_cast<std::size_t>(next)] >= 0)
    return search_embeddings(a, b, assigned, used, next + 1, visit);
  for (int cand = 0; cand < b.size; ++cand) {
    if (used[static_cast<std::size_t>(cand)]) continue;
    assigned[static_cast<std::size_t>(next)] = cand;
    used[static_cast<std::size_t>(cand)] = 1;
    if (partial_ok(a, b, assigned, next))
      if (!search_embeddings(a, b, assigned, used, next + 1, visit)) {
        assigned[static_cast<std::size_t>(next)] = -1;
        used[static_cast<std::size_t>(cand)] = 0;
        return false;
      }
    assigned[static_cast<std::size_t>(next)] = -1;
    used[static_cast<std::size_t>(cand)] = 0;
  }
  return true;
}

}  // namespace detail

inline bool is_embedding(const FinStructure& a, const FinStructure& b, const std::vector<int>& m) {
  detail::require_same_signature(a, b);
  if (static_cast<int>(m.size()) != a.size) return false;
  std::vector<char> used(static_cast<std::size_t>(b.size), 0);
  for (int x : m) {
    if (x < 0 || x >= b.size) return false;
    if (used[static_cast<std::size_t>(x)]) return false;  // not injective
    used[static_cast<std::size_t>(x)] = 1;
  }
  return detail::partial_ok(a, b, m, -1);
}

// Seeded variant: entries of `seed` with value >= 0 are pinned.
template <typename Visit>
inline void for_each_embedding(const FinStructure& a, const FinStructure& b,
                               std::vector<int> seed, const Visit& visit) {
  detail::require_same_signature(a, b);
  if (seed.empty()) seed.assign(static_cast<std::size_t>(a.size), -1);
  std::vector<char> used(static_cast<std::size_t>(b.size), 0);
  for (int x : seed)
    if (x >= 0) used[static_cast<std::size_t>(x)] = 1;
  if (!detail::partial_ok(a, b, seed, -1)) return;
  detail::search_embeddings(a, b, seed, used, 0, visit);
}

inline std::vector<Embedding> embeddings(const FinStructure& a, const FinStructure& b) {
  std::vector<Embedding> out;
  for_each_embedding(a, b, {}, [&](const std::vector<int>& m) {
    out.push_back(Embedding{a.size, b.size, m});
    return true;
  });
  return out;
}

inline std::optional<Embedding> first_embedding(const FinStructure& a, const FinStructure& b,
                                                std::vector<int> seed = {}) {
  std::optional<Embedding> out;
  for_each_embedding(a, b, std::move(seed), [&](const std::vector<int>& m) {
    out = Embedding{a.size, b.size, m};
    return false;
  });
  return out;
}

inline std::optional<Embedding> find_isomorphism(const FinStructure& a, const FinStructure& b) {
  detail::require_same_signature(a, b);
  if (a.size != b.size) return std::nullopt;
  for (std::size_t k = 0; k < a.tables.size(); ++k)
    if (a.tables[k].size() != b.tables[k].size()) return std::nullopt;
  return first_embedding(a, b);
}

inline std::vector<Embedding> automorphisms(const FinStructure& a) { return embeddings(a, a); }

inline bool is_rigid(const FinStructure& a) {
  int count = 0;
  for_each_embedding(a, a, {}, [&](const std::vector<int>&) { return ++count < 2; });
  return count == 1;
}

inline FinStructure induced_substructure(const FinStructure& a, const std::vector<int>& subset) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> newindex(static_cast<std::size_t>(a.size), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= a.size) throw std::invalid_argument("subset element out of range");
    newindex[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
  }
  FinStructure out(a.sig, static_cast<int>(sorted.size()));
  for (std::size_t k = 0; k < a.tables.size(); ++k)
    for (const auto& t : a.tables[k]) {
      Tuple img;
      img.reserve(t.size());
      bool inside = true;
      for (int e : t) {
        if (newindex[static_cast<std::size_t>(e)] < 0) { inside = false; break; }
        img.push_back(newindex[static_cast<std::size_t>(e)]);
      }
      if (inside) out.tables[k].push_back(std::move(img));
    }
  out.normalize();
  return out;
}

inline FinStructure relabel(const FinStructure& a, const std::vector<int>& perm) {
  FinStructure out(a.sig, a.size);
  for (std::size_t k = 0; k < a.tables.size(); ++k) {
    out.tables[k].reserve(a.tables[k].size());
    for (const auto& t : a.tables[k]) {
      Tuple img;
      img.reserve(t.size());
      for (int e : t) img.push_back(perm[static_cast<std::size_t>(e)]);
      out.tables[k].push_back(std::move(img));
    }
  }
  out.normalize();
  return out;
}

// Lexicographically least relabeling: canonical_form(A) == canonical_form(B)
// iff A and B are isomorphic. Full permutation minimization; catalog sizes
// stay <= ~7 so this is affordable.
inline FinStructure canonical_form(const FinStructure& a) {
  std::vector<int> perm(static_cast<std::size_t>(a.size));
  for (int i = 0; i < a.size; ++i) perm[static_cast<std::size_t>(i)] = i;
  FinStructure best = relabel(a, perm);
  std::vector<int> best_enc = best.encode();
  while (std::next_permutation(perm.begin(), perm.end())) {
    FinStructure cand = relabel(a, perm);
    std::vector<int> enc = cand.encode();
    if (enc < best_enc) {
      best = std::move(cand);
      best_enc = std::move(enc);
    }
  }
  return best;
}

// Cheap isomorphism invariant used to bucket candidates before full checks.
inline std::vector<int> iso_invariant(const FinStructure& a) {
  std::vector<int> inv;
  inv.push_back(a.size);
  for (std::size_t k = 0; k < a.tables.size(); ++k) {
    inv.push_back(static_cast<int>(a.tables[k].size()));
    std::vector<int> degs(static_cast<std::size_t>(a.size), 0);
    for (const auto& t : a.tables[k])
      for (int e : t) ++degs[static_cast<std::size_t>(e)];
    std::sort(degs.begin(), degs.end());
    inv.insert(inv.end(), degs.begin(), degs.end());
  }
  return inv;
}

// Is the partial map p a partial isomorphism between (the induced
// substructures of) a and b?
inline bool is_partial_isomorphism(const FinStructure& a, const FinStructure& b, const PartialMap& p) {
  if (!p.functional_injective()) return false;
  std::vector<int> dom, rng;
  for (auto [s, t] : p.pairs) {
    if (s < 0 || s >= a.size || t < 0 || t >= b.size) return false;
    dom.push_back(s);
    rng.push_back(t);
  }
  FinStructure sa = induced_substructure(a, dom);
  FinStructure sb = induced_substructure(b, rng);
  std::vector<int> sdom = dom, srng = rng;
  std::sort(sdom.begin(), sdom.end());
  std::sort(srng.begin(), srng.end());
  // map in re-indexed coordinates
  std::vector<int> m(sdom.size());
  for (auto [s, t] : p.pairs) {
    auto si = std::lower_bound(sdom.begin(), sdom.end(), s) - sdom.begin();
    auto ti = std::lower_bound(srng.begin(), srng.end(), t) - srng.begin();
    m[static_cast<std::size_t>(si)] = static_cast<int>(ti);
  }
  return is_embedding(sa, sb, m);
}

}  // namespace fwb
