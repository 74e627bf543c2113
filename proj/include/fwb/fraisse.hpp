#pragma once

// Bounded verification of amalgamation-class axioms, the generic chain
// construction, the extension property and back-and-forth isomorphism.

#include <deque>
#include <unordered_set>

#include "fwb/catalog.hpp"

namespace fwb {

struct HereditaryCounterexample {
  FinStructure member;
  std::vector<int> subset;
  std::string violation;
};

struct HereditaryReport {
  bool pass = true;
  long checked = 0;
  std::optional<HereditaryCounterexample> counterexample;
};

inline HereditaryReport check_hereditary(const ClassSpec& spec, int max_size) {
  HereditaryReport rep;
  for (const FinStructure& m : enumerate_members(spec, max_size)) {
    for (std::uint64_t mask = 0; mask < (1ull << m.size); ++mask) {
      std::vector<int> subset;
      for (int v = 0; v < m.size; ++v)
        if (mask >> v & 1) subset.push_back(v);
      auto verdict = spec.membership(induced_substructure(m, subset));
      ++rep.checked;
      if (!verdict.ok) {
        rep.pass = false;
        rep.counterexample = HereditaryCounterexample{m, subset, verdict.violation};
        return rep;
      }
    }
  }
  return rep;
}

struct JepCounterexample {
  FinStructure a, b;
  std::string reason;
};

struct JepReport {
  bool pass = true;
  long checked = 0;
  std::optional<JepCounterexample> counterexample;
};

inline JepReport check_jep(const ClassSpec& spec, int max_size, int search_bound = -1) {
  if (search_bound < 0) search_bound = 2 * max_size;
  JepReport rep;
  auto members = enumerate_members(spec, max_size);
  std::vector<FinStructure> haystack;
  if (!spec.jep_strategy) haystack = enumerate_members(spec, search_bound);
  for (const auto& a : members)
    for (const auto& b : members) {
      ++rep.checked;
      bool ok = false;
      std::string reason = "no joint embedding found";
      if (spec.jep_strategy) {
        AmalgamResult r = spec.jep_strategy(a, b);
        if (r.ok && spec.membership(r.d).ok && is_embedding(a, r.d, r.into_d_from_b.map) &&
            is_embedding(b, r.d, r.into_d_from_c.map))
          ok = true;
        else if (!r.ok)
          reason = r.failure;
      }
      if (!ok && !spec.jep_strategy) {
        for (const auto& c : haystack) {
          if (first_embedding(a, c) && first_embedding(b, c)) { ok = true; break; }
        }
      }
      if (!ok) {
        rep.pass = false;
        rep.counterexample = JepCounterexample{a, b, reason};
        return rep;
      }
    }
  return rep;
}

struct ApCounterexample {
  FinStructure a, b, c;
  Embedding alpha, beta;
  std::string reason;
};

struct ApCertificate {
  int a_index = 0, b_index = 0, c_index = 0;  // indices into enumerate_members
  Embedding alpha, beta;
  FinStructure d;
  Embedding i, j;
};

struct ApReport {
  bool pass = true;
  long checked = 0;
  std::optional<ApCounterexample> counterexample;
  std::vector<ApCertificate> certificates;  // capped; certificates_complete says whether all kept
  bool certificates_complete = true;
  static constexpr std::size_t kCertificateCap = 20000;
};

inline bool square_commutes(const Embedding& alpha, const Embedding& i, const Embedding& beta,
                            const Embedding& j) {
  return alpha.then(i) == beta.then(j);
}

inline ApReport check_amalgamation(const ClassSpec& spec, int max_size, int search_bound) {
  ApReport rep;
  auto members = enumerate_members(spec, max_size);
  std::vector<FinStructure> haystack;  // lazily filled when the strategy fails
  bool haystack_ready = false;
  for (std::size_t ai = 0; ai < members.size(); ++ai) {
    const auto& a = members[ai];
    for (std::size_t bi = 0; bi < members.size(); ++bi) {
      const auto& b = members[bi];
      auto alphas = embeddings(a, b);
      if (alphas.empty()) continue;
      for (std::size_t ci = 0; ci < members.size(); ++ci) {
        const auto& c = members[ci];
        auto betas = embeddings(a, c);
        for (const auto& alpha : alphas)
          for (const auto& beta : betas) {
            ++rep.checked;
            std::optional<ApCertificate> cert;
            std::string reason;
            if (spec.amalgam_strategy) {
              AmalgamResult r = spec.amalgam_strategy(a, b, c, alpha, beta);
              if (r.ok && spec.membership(r.d).ok && is_embedding(b, r.d, r.into_d_from_b.map) &&
                  is_embedding(c, r.d, r.into_d_from_c.map) &&
                  square_commutes(alpha, r.into_d_from_b, beta, r.into_d_from_c))
                cert = ApCertificate{static_cast<int>(ai), static_cast<int>(bi), static_cast<int>(ci),
                                     alpha, beta, r.d, r.into_d_from_b, r.into_d_from_c};
              else if (!r.ok)
                reason = r.failure;
            }
            if (!cert) {
              if (!haystack_ready) {
                haystack = enumerate_members(spec, search_bound);
                haystack_ready = true;
              }
              for (const auto& d : haystack) {
                for (const auto& i : embeddings(b, d)) {
                  auto want = alpha.then(i);
                  // j must agree with want on beta(A)
                  std::vector<int> seed(static_cast<std::size_t>(c.size), -1);
                  std::vector<char> taken(static_cast<std::size_t>(d.size), 0);
                  bool feasible = true;
                  for (int x = 0; x < a.size; ++x) {
                    int& slot = seed[static_cast<std::size_t>(beta(x))];
                    if (slot >= 0 && slot != want(x)) { feasible = false; break; }
                    if (slot < 0 && taken[static_cast<std::size_t>(want(x))]) { feasible = false; break; }
                    slot = want(x);
                    taken[static_cast<std::size_t>(want(x))] = 1;
                  }
                  if (!feasible) continue;
                  if (auto j = first_embedding(c, d, seed)) {
                    cert = ApCertificate{static_cast<int>(ai), static_cast<int>(bi), static_cast<int>(ci),
                                         alpha, beta, d, i, *j};
                    break;
                  }
                }
                if (cert) break;
              }
            }
            if (!cert) {
              rep.pass = false;
              rep.counterexample = ApCounterexample{a, b, c, alpha, beta,
                                                    reason.empty() ? "no amalgam within search bound" : reason};
              return rep;
            }
            if (rep.certificates.size() < ApReport::kCertificateCap)
              rep.certificates.push_back(std::move(*cert));
            else
              rep.certificates_complete = false;
          }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// extension property

struct ExtensionFailure {
  std::vector<int> a_subset;  // elements of M spanning A
  FinStructure b;
  Embedding alpha;  // A -> B
};

struct ExtensionReport {
  bool pass = true;
  long checked = 0;
  std::optional<ExtensionFailure> failure;
};

inline ExtensionReport extension_property_check(const FinStructure& m, const ClassSpec& spec,
                                                int a_max, int b_max) {
  ExtensionReport rep;
  auto members = enumerate_members(spec, b_max);
  for (std::uint64_t mask = 0; mask < (1ull << m.size); ++mask) {
    std::vector<int> subset;
    for (int v = 0; v < m.size; ++v)
      if (mask >> v & 1) subset.push_back(v);
    if (static_cast<int>(subset.size()) > a_max) continue;
    FinStructure a = induced_substructure(m, subset);
    for (const auto& b : members) {
      for (const auto& alpha : embeddings(a, b)) {
        ++rep.checked;
        // want phi : B -> M with phi(alpha(x)) = subset[x]
        std::vector<int> seed(static_cast<std::size_t>(b.size), -1);
        for (int x = 0; x < a.size; ++x)
          seed[static_cast<std::size_t>(alpha(x))] = subset[static_cast<std::size_t>(x)];
        if (!first_embedding(b, m, seed)) {
          rep.pass = false;
          rep.failure = ExtensionFailure{subset, b, alpha};
          return rep;
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// the chain construction

struct ChainQuadruple {
  int a_index = 0, b_index = 0;  // into the member list
  Embedding alpha;               // A -> B
  Embedding anchor;              // f : A -> current (current coordinates, kept up to date)
  bool realized = false;
  Embedding witness;             // g : B -> current with g . alpha = anchor, when realized
};

struct ChainState {
  FinStructure current;
  std::vector<FinStructure> members;  // enumeration the indices refer to
  std::vector<ChainQuadruple> ledger;
  int budget = 0;
};

namespace detail {

struct QuadKey {
  int b_size;
  std::vector<int> b_enc, a_enc, alpha, anchor;
  friend bool operator<(const QuadKey& x, const QuadKey& y) {
    return std::tie(x.b_size, x.b_enc, x.a_enc, x.alpha, x.anchor) <
           std::tie(y.b_size, y.b_enc, y.a_enc, y.alpha, y.anchor);
  }
  friend bool operator==(const QuadKey& x, const QuadKey& y) {
    return x.b_size == y.b_size && x.b_enc == y.b_enc && x.a_enc == y.a_enc && x.alpha == y.alpha &&
           x.anchor == y.anchor;
  }
};

}  // namespace detail

// Deterministic fair realization of extension quadruples: repeatedly take the
// least unprocessed (A, B, alpha, f) by (|B|, enc B, enc A, alpha, f) and
// either record the realizing witness or grow the chain by amalgamation.
inline ChainState fraisse_chain(const ClassSpec& spec, int budget) {
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  ChainState st;
  st.budget = budget;
  st.members = enumerate_members(spec, budget);
  // seed: smallest nonempty member
  const FinStructure* seed = nullptr;
  for (const auto& m : st.members)
    if (m.size > 0) { seed = &m; break; }
  if (!seed) throw std::invalid_argument("class has no nonempty member within budget");
  st.current = *seed;

  std::set<detail::QuadKey> processed;
  auto key_of = [&](const ChainQuadruple& q) {
    return detail::QuadKey{st.members[static_cast<std::size_t>(q.b_index)].size,
                           st.members[static_cast<std::size_t>(q.b_index)].encode(),
                           st.members[static_cast<std::size_t>(q.a_index)].encode(), q.alpha.map,
                           q.anchor.map};
  };

  while (true) {
    // members are sorted by (size, encoding), which matches the key order,
    // so the first member with an unprocessed quadruple pins (|B|, enc B)
    std::optional<ChainQuadruple> next;
    std::optional<detail::QuadKey> next_key;
    for (std::size_t bi = 0; bi < st.members.size() && !next; ++bi) {
      const auto& b = st.members[bi];
      if (b.size == 0) continue;
      for (std::size_t ai2 = 0; ai2 < st.members.size(); ++ai2) {
        const auto& a = st.members[ai2];
        if (a.size > b.size) continue;
        for (const auto& alpha : embeddings(a, b))
          for (const auto& f : embeddings(a, st.current)) {
            ChainQuadruple q;
            q.a_index = static_cast<int>(ai2);
            q.b_index = static_cast<int>(bi);
            q.alpha = alpha;
            q.anchor = f;
            auto k = key_of(q);
            if (processed.count(k)) continue;
            if (!next_key || k < *next_key) {
              next = std::move(q);
              next_key = std::move(k);
            }
          }
      }
    }
    if (!next) break;  // every quadruple within budget processed

    const auto& a = st.members[static_cast<std::size_t>(next->a_index)];
    const auto& b = st.members[static_cast<std::size_t>(next->b_index)];
    // already realized in current?
    std::vector<int> seedmap(static_cast<std::size_t>(b.size), -1);
    bool feasible = true;
    {
      std::vector<char> taken(static_cast<std::size_t>(st.current.size), 0);
      for (int x = 0; x < a.size; ++x) {
        int& slot = seedmap[static_cast<std::size_t>(next->alpha(x))];
        int want = next->anchor(x);
        if (slot >= 0 && slot != want) { feasible = false; break; }
        if (slot < 0 && taken[static_cast<std::size_t>(want)]) { feasible = false; break; }
        slot = want;
        taken[static_cast<std::size_t>(want)] = 1;
      }
    }
    std::optional<Embedding> g;
    if (feasible) g = first_embedding(b, st.current, seedmap);
    if (g) {
      next->realized = true;
      next->witness = *g;
      processed.insert(*next_key);
      st.ledger.push_back(std::move(*next));
      continue;
    }
    // grow: amalgamate current with B over A
    if (st.current.size + b.size - a.size > budget) break;
    if (!spec.amalgam_strategy) throw std::invalid_argument("class has no amalgam strategy");
    AmalgamResult r = spec.amalgam_strategy(a, b, st.current, next->alpha, next->anchor);
    if (!r.ok) throw std::runtime_error("amalgamation failed during chain construction: " + r.failure);
    Embedding into_new = r.into_d_from_c;  // old current -> D
    st.current = r.d;
    // transport every recorded anchor/witness into the new chain stage
    for (auto& entry : st.ledger) {
      entry.anchor = entry.anchor.then(into_new);
      if (entry.realized) entry.witness = entry.witness.then(into_new);
    }
    processed.clear();
    for (const auto& entry : st.ledger) processed.insert(key_of(entry));
    next->anchor = next->anchor.then(into_new);
    next->realized = true;
    next->witness = r.into_d_from_b;  // B -> D realizes the quadruple
    processed.insert(key_of(*next));
    st.ledger.push_back(std::move(*next));
  }
  return st;
}

// ---------------------------------------------------------------------------
// back and forth

struct Obstruction {
  bool forth = true;
  PartialMap frontier;
  int element = -1;  // the unextendable point (in M for forth, N for back)
};

struct BackAndForthResult {
  std::optional<Embedding> isomorphism;
  std::optional<Obstruction> obstruction;
};

namespace detail {

// Alternating extension with backtracking; candidate targets are tried in
// increasing order. The reported obstruction is the first dead end hit at
// the deepest frontier reached.
struct BnfSearcher {
  const FinStructure& m;
  const FinStructure& n;
  std::vector<int> fwd, bwd;  // fwd: M->N (-1 unmapped), bwd: N->M
  int best_depth = -1;
  Obstruction best_obstruction;

  BnfSearcher(const FinStructure& m_, const FinStructure& n_)
      : m(m_), n(n_), fwd(static_cast<std::size_t>(m_.size), -1), bwd(static_cast<std::size_t>(n_.size), -1) {}

  PartialMap frontier() const {
    PartialMap p;
    for (int x = 0; x < m.size; ++x)
      if (fwd[static_cast<std::size_t>(x)] >= 0) p.pairs.emplace_back(x, fwd[static_cast<std::size_t>(x)]);
    return p;
  }

  bool pair_ok(int x, int y) {
    fwd[static_cast<std::size_t>(x)] = y;
    bool ok = partial_ok(m, n, fwd, x);
    fwd[static_cast<std::size_t>(x)] = -1;
    return ok;
  }

  bool run(int depth) {
    if (m.size == n.size && depth == m.size) return true;
    bool forth = depth % 2 == 0;
    // forth: least unmapped element of M; back: least unmapped of N
    int pick = -1;
    if (forth) {
      for (int x = 0; x < m.size; ++x)
        if (fwd[static_cast<std::size_t>(x)] < 0) { pick = x; break; }
      if (pick < 0) forth = false;
    }
    if (!forth) {
      pick = -1;
      for (int y = 0; y < n.size; ++y)
        if (bwd[static_cast<std::size_t>(y)] < 0) { pick = y; break; }
      if (pick < 0) return true;  // both sides exhausted
    }
    bool extended = false;
    const int limit = forth ? n.size : m.size;
    for (int cand = 0; cand < limit; ++cand) {
      int x = forth ? pick : cand;
      int y = forth ? cand : pick;
      if (fwd[static_cast<std::size_t>(x)] >= 0 || bwd[static_cast<std::size_t>(y)] >= 0) continue;
      if (!pair_ok(x, y)) continue;
      extended = true;
      fwd[static_cast<std::size_t>(x)] = y;
      bwd[static_cast<std::size_t>(y)] = x;
      if (run(depth + 1)) return true;
      fwd[static_cast<std::size_t>(x)] = -1;
      bwd[static_cast<std::size_t>(y)] = -1;
    }
    if (!extended && depth > best_depth) {
      best_depth = depth;
      best_obstruction = Obstruction{forth, frontier(), pick};
    }
    return false;
  }
};

}  // namespace detail

inline BackAndForthResult back_and_forth(const FinStructure& m, const FinStructure& n,
                                         const PartialMap& seed) {
  detail::require_same_signature(m, n);
  if (!is_partial_isomorphism(m, n, seed)) throw std::invalid_argument("seed is not a partial isomorphism");
  BackAndForthResult res;
  if (m.size != n.size) {
    // sizes differ: no isomorphism; report the side that cannot be covered
    detail::BnfSearcher s(m, n);
    for (auto [x, y] : seed.pairs) {
      s.fwd[static_cast<std::size_t>(x)] = y;
      s.bwd[static_cast<std::size_t>(y)] = x;
    }
    s.run(0);
    res.obstruction = s.best_depth >= 0 ? s.best_obstruction
                                        : Obstruction{m.size < n.size, s.frontier(), -1};
    return res;
  }
  detail::BnfSearcher s(m, n);
  for (auto [x, y] : seed.pairs) {
    s.fwd[static_cast<std::size_t>(x)] = y;
    s.bwd[static_cast<std::size_t>(y)] = x;
  }
  int start_depth = static_cast<int>(seed.pairs.size());
  if (s.run(start_depth)) {
    Embedding iso{m.size, n.size, s.fwd};
    res.isomorphism = iso;
  } else {
    res.obstruction = s.best_depth >= 0 ? s.best_obstruction : Obstruction{true, s.frontier(), -1};
  }
  return res;
}

}  // namespace fwb
