#pragma once

// Extension property for partial automorphisms: enumeration of partial
// automorphisms and exhaustive witness search over class members.

#include "fwb/catalog.hpp"

namespace fwb {

// All injective partial maps on {0..|A|-1} that are isomorphisms between
// their induced substructures, ordered by (domain size, pair list).
inline std::vector<PartialMap> partial_automorphisms(const FinStructure& a) {
  std::vector<PartialMap> out;
  const int n = a.size;
  // enumerate domains as bitmasks, then injective assignments per domain
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<int> dom;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) dom.push_back(v);
    std::vector<int> img(dom.size());
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == dom.size()) {
        PartialMap p;
        for (std::size_t x = 0; x < dom.size(); ++x) p.pairs.emplace_back(dom[x], img[x]);
        if (is_partial_isomorphism(a, a, p)) out.push_back(std::move(p));
        return;
      }
      for (int t = 0; t < n; ++t) {
        if (used[static_cast<std::size_t>(t)]) continue;
        used[static_cast<std::size_t>(t)] = 1;
        img[i] = t;
        self(self, i + 1);
        used[static_cast<std::size_t>(t)] = 0;
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct EppaCertificate {
  FinStructure a, b;
  Embedding embedding;  // e : A -> B
  std::vector<std::pair<PartialMap, Embedding>> extensions;  // p -> g in Aut(B)
};

struct EppaObstruction {
  Embedding embedding;
  PartialMap unextendable;
};

struct EppaOutcome {
  std::optional<EppaCertificate> certificate;
  std::vector<EppaObstruction> obstructions;  // one per failed embedding
};

// g extends p along e when g(e(x)) = e(p(x)) for all x in dom p.
inline bool extends_along(const Embedding& e, const PartialMap& p, const Embedding& g) {
  for (auto [x, y] : p.pairs)
    if (g(e(x)) != e(y)) return false;
  return true;
}

inline EppaOutcome eppa_check(const FinStructure& a, const FinStructure& b) {
  detail::require_same_signature(a, b);
  EppaOutcome out;
  auto partials = partial_automorphisms(a);
  auto auts = automorphisms(b);
  for (const auto& e : embeddings(a, b)) {
    EppaCertificate cert{a, b, e, {}};
    bool all = true;
    for (const auto& p : partials) {
      const Embedding* found = nullptr;
      for (const auto& g : auts)
        if (extends_along(e, p, g)) { found = &g; break; }
      if (!found) {
        out.obstructions.push_back(EppaObstruction{e, p});
        all = false;
        break;
      }
      cert.extensions.emplace_back(p, *found);
    }
    if (all) {
      out.certificate = std::move(cert);
      return out;
    }
  }
  return out;
}

struct EppaSearchResult {
  bool found = false;
  std::optional<FinStructure> witness;
  std::optional<EppaCertificate> certificate;
  std::vector<int> failed_sizes;
};

inline EppaSearchResult eppa_witness_search(const ClassSpec& spec, const FinStructure& a, int size_bound) {
  EppaSearchResult res;
  for (const auto& b : enumerate_members(spec, size_bound)) {
    if (b.size < a.size) continue;
    EppaOutcome out = eppa_check(a, b);
    if (out.certificate) {
      res.found = true;
      res.witness = b;
      res.certificate = std::move(*out.certificate);
      return res;
    }
    res.failed_sizes.push_back(b.size);
  }
  return res;
}

inline bool verify_eppa_certificate(const EppaCertificate& cert) {
  if (!is_embedding(cert.a, cert.b, cert.embedding.map)) return false;
  auto partials = partial_automorphisms(cert.a);
  if (cert.extensions.size() != partials.size()) return false;
  for (const auto& [p, g] : cert.extensions) {
    if (!is_embedding(cert.b, cert.b, g.map)) return false;
    if (!extends_along(cert.embedding, p, g)) return false;
  }
  return true;
}

}  // namespace fwb
