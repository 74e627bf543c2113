#pragma once

// Exhaustive Ramsey-property checking over embedding colorings: certificate
// construction, minimal-witness search and the rigidity refutation.

#include <cstdint>

#include "fwb/catalog.hpp"

namespace fwb {

struct Coloring {
  std::vector<Embedding> domain;  // the ordered list Emb(A,C)
  std::vector<int> colors;        // same length, entries in {0..k-1}
  int k = 2;
};

struct RamseyCertificate {
  FinStructure a, b, c;
  int k = 2;
  bool symmetry_reduced = false;
  // witness per enumerated coloring id: index into Emb(B,C) of a
  // monochromatic beta (-1 for ids skipped by symmetry reduction)
  std::vector<std::int64_t> coloring_ids;
  std::vector<int> witness_beta;
  std::uint64_t colorings_covered = 0;
};

struct BadColoring {
  FinStructure c;
  Coloring gamma;
  // per beta in Emb(B,C): indices into Emb(A,C) of two embeddings through
  // beta that received different colors
  std::vector<std::pair<int, int>> refutation;
};

struct RamseyOutcome {
  std::optional<RamseyCertificate> certificate;
  std::optional<BadColoring> bad;
  bool cap_exceeded = false;
  std::uint64_t cap = 0;
};

namespace detail {

inline std::uint64_t ipow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (v > cap / base + 1) return cap + 1;
    v *= base;
    if (v > cap) return cap + 1;
  }
  return v;
}

// index of each beta.then(alpha) within the sorted Emb(A,C) list
inline std::vector<std::vector<int>> composition_table(const std::vector<Embedding>& emb_ac,
                                                       const std::vector<Embedding>& emb_ab,
                                                       const std::vector<Embedding>& emb_bc) {
  std::vector<std::vector<int>> tab;
  tab.reserve(emb_bc.size());
  for (const auto& beta : emb_bc) {
    std::vector<int> row;
    row.reserve(emb_ab.size());
    for (const auto& alpha : emb_ab) {
      Embedding comp = alpha.then(beta);
      auto it = std::lower_bound(emb_ac.begin(), emb_ac.end(), comp);
      row.push_back(static_cast<int>(it - emb_ac.begin()));
    }
    tab.push_back(std::move(row));
  }
  return tab;
}

}  // namespace detail

constexpr std::uint64_t kDefaultColoringCap = 1ull << 26;

// Iterates the k-colorings of Emb(A,C) in lexicographic order of the color
// vector (last index varies fastest). With symmetry reduction only colorings
// whose colors appear in first-use order are visited; every coloring is a
// color permutation of exactly one such representative, so the verdict is
// unchanged.
inline RamseyOutcome ramsey_check(const FinStructure& a, const FinStructure& b, int k,
                                  const FinStructure& c, bool symmetry_reduce = false,
                                  std::uint64_t cap = kDefaultColoringCap) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  auto emb_ac = embeddings(a, c);
  auto emb_ab = embeddings(a, b);
  auto emb_bc = embeddings(b, c);
  RamseyOutcome out;

  const std::uint64_t total = detail::ipow(static_cast<std::uint64_t>(k), emb_ac.size(), cap);
  if (total > cap) {
    out.cap_exceeded = true;
    out.cap = cap;
    return out;
  }

  if (emb_bc.empty()) {
    // no beta at all: the all-zero coloring refutes vacuously
    BadColoring bad;
    bad.c = c;
    bad.gamma = Coloring{emb_ac, std::vector<int>(emb_ac.size(), 0), k};
    out.bad = std::move(bad);
    return out;
  }

  auto comp = detail::composition_table(emb_ac, emb_ab, emb_bc);

  const std::size_t m = emb_ac.size();
  std::vector<int> colors(m, 0);
  RamseyCertificate cert;
  cert.a = a;
  cert.b = b;
  cert.c = c;
  cert.k = k;
  cert.symmetry_reduced = symmetry_reduce;

  std::int64_t id = 0;
  while (true) {
    bool canonical = true;
    if (symmetry_reduce) {
      int seen = 0;
      for (std::size_t i = 0; i < m && canonical; ++i) {
        if (colors[i] > seen) canonical = false;
        else if (colors[i] == seen) ++seen;
      }
    }
    if (canonical) {
      int witness = -1;
      for (std::size_t bi = 0; bi < comp.size(); ++bi) {
        bool mono = true;
        if (!comp[bi].empty()) {
          int c0 = colors[static_cast<std::size_t>(comp[bi][0])];
          for (int idx : comp[bi])
            if (colors[static_cast<std::size_t>(idx)] != c0) { mono = false; break; }
        }
        if (mono) { witness = static_cast<int>(bi); break; }
      }
      if (witness < 0) {
        BadColoring bad;
        bad.c = c;
        bad.gamma = Coloring{emb_ac, colors, k};
        for (const auto& row : comp) {
          int c0 = row.empty() ? 0 : colors[static_cast<std::size_t>(row[0])];
          std::pair<int, int> pr{-1, -1};
          for (int idx : row)
            if (colors[static_cast<std::size_t>(idx)] != c0) { pr = {row[0], idx}; break; }
          bad.refutation.push_back(pr);
        }
        out.bad = std::move(bad);
        return out;
      }
      cert.coloring_ids.push_back(id);
      cert.witness_beta.push_back(witness);
      ++cert.colorings_covered;
    }
    // odometer, last index fastest
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++colors[i] < k) break;
      colors[i] = 0;
      if (i == 0) { i = m + 1; break; }
    }
    if (m == 0 || i == m + 1) break;
    ++id;
  }
  out.certificate = std::move(cert);
  return out;
}

struct WitnessSearchResult {
  bool found = false;
  bool cap_exceeded = false;
  int minimal_size = -1;
  std::optional<RamseyCertificate> certificate;
  std::vector<std::pair<int, BadColoring>> failures;  // (candidate size, refutation)
  std::vector<std::pair<int, std::string>> summary;   // candidate size -> verdict text
};

// True when the rigidity construction applies and yields a bad coloring for
// every k >= |Aut(A)| ... used by the witness search to shortcut candidates
// whose coloring space exceeds the cap.
inline BadColoring rigidity_refutation(const FinStructure& a, const FinStructure& c) {
  auto auts = automorphisms(a);
  if (auts.size() < 2) throw std::invalid_argument("inapplicable: A is rigid");
  auto emb_ac = embeddings(a, c);
  if (emb_ac.empty()) throw std::invalid_argument("C contains no copy of A");

  // fixed isomorphism g_{A'} : A' -> A per copy A' of A inside C,
  // keyed by the image vertex set
  std::map<std::vector<int>, Embedding> copy_iso;  // image set -> inverse map (C indices -> A)
  BadColoring bad;
  bad.c = c;
  bad.gamma.domain = emb_ac;
  bad.gamma.k = static_cast<int>(auts.size());
  for (const auto& alpha : emb_ac) {
    std::vector<int> image = alpha.map;
    std::sort(image.begin(), image.end());
    auto it = copy_iso.find(image);
    if (it == copy_iso.end()) {
      // lexicographically least embedding of A onto this copy, inverted
      FinStructure sub = induced_substructure(c, image);
      auto iso = find_isomorphism(a, sub);  // A -> copy (re-indexed)
      if (!iso) throw std::logic_error("image of an embedding is not a copy");
      // convert: copy-local index -> position in sorted image -> A element
      Embedding g{static_cast<int>(image.size()), a.size, std::vector<int>(image.size(), -1)};
      for (int x = 0; x < a.size; ++x) g.map[static_cast<std::size_t>((*iso)(x))] = x;
      it = copy_iso.emplace(image, std::move(g)).first;
    }
    // color = index of g_{A'} . alpha in Aut(A)
    Embedding colored{a.size, a.size, {}};
    colored.map.reserve(static_cast<std::size_t>(a.size));
    for (int x = 0; x < a.size; ++x) {
      int cx = alpha(x);
      auto pos = std::lower_bound(image.begin(), image.end(), cx) - image.begin();
      colored.map.push_back(it->second.map[static_cast<std::size_t>(pos)]);
    }
    auto pos = std::lower_bound(auts.begin(), auts.end(), colored);
    bad.gamma.colors.push_back(static_cast<int>(pos - auts.begin()));
  }

  // refutation: with B = A, beta . Aut(A) realizes every color
  auto emb_bc = embeddings(a, c);
  auto comp = detail::composition_table(emb_ac, automorphisms(a), emb_bc);
  for (const auto& row : comp) {
    std::pair<int, int> pr{-1, -1};
    int c0 = bad.gamma.colors[static_cast<std::size_t>(row[0])];
    for (int idx : row)
      if (bad.gamma.colors[static_cast<std::size_t>(idx)] != c0) { pr = {row[0], idx}; break; }
    if (pr.first < 0) throw std::logic_error("rigidity coloring unexpectedly monochromatic");
    bad.refutation.push_back(pr);
  }
  return bad;
}

inline WitnessSearchResult ramsey_witness_search(const ClassSpec& spec, const FinStructure& a,
                                                 const FinStructure& b, int k, int size_bound,
                                                 bool symmetry_reduce = false,
                                                 std::uint64_t cap = kDefaultColoringCap) {
  WitnessSearchResult res;
  const bool a_flexible = !is_rigid(a);
  const bool b_is_a = static_cast<bool>(find_isomorphism(a, b));
  for (const auto& c : enumerate_members(spec, size_bound)) {
    // the rigidity coloring refutes every candidate when A = B and A is not
    // rigid, and does so without enumerating the coloring space
    if (a_flexible && b_is_a && k >= 2) {
      if (!embeddings(a, c).empty()) {
        BadColoring bad = rigidity_refutation(a, c);
        res.summary.emplace_back(c.size, "fail (rigidity refutation)");
        res.failures.emplace_back(c.size, std::move(bad));
        continue;
      }
      RamseyOutcome out = ramsey_check(a, b, k, c, symmetry_reduce, cap);
      if (out.bad) {
        res.summary.emplace_back(c.size, "fail");
        res.failures.emplace_back(c.size, std::move(*out.bad));
        continue;
      }
    }
    RamseyOutcome out = ramsey_check(a, b, k, c, symmetry_reduce, cap);
    if (out.cap_exceeded) {
      res.cap_exceeded = true;
      res.summary.emplace_back(c.size, "cap exceeded");
      return res;
    }
    if (out.certificate) {
      res.found = true;
      res.minimal_size = c.size;
      res.certificate = std::move(*out.certificate);
      res.summary.emplace_back(c.size, "pass");
      return res;
    }
    res.summary.emplace_back(c.size, "fail");
    res.failures.emplace_back(c.size, std::move(*out.bad));
  }
  return res;
}

// Re-verification used by tests and the certificate emitter.
inline bool verify_certificate(const RamseyCertificate& cert) {
  auto emb_ac = embeddings(cert.a, cert.c);
  auto emb_ab = embeddings(cert.a, cert.b);
  auto emb_bc = embeddings(cert.b, cert.c);
  auto comp = detail::composition_table(emb_ac, emb_ab, emb_bc);
  const std::size_t m = emb_ac.size();
  for (std::size_t e = 0; e < cert.coloring_ids.size(); ++e) {
    // decode colors from the coloring id (base k, last index fastest)
    std::vector<int> colors(m, 0);
    std::int64_t v = cert.coloring_ids[e];
    for (std::size_t i = m; i > 0; --i) {
      colors[i - 1] = static_cast<int>(v % cert.k);
      v /= cert.k;
    }
    const auto& row = comp[static_cast<std::size_t>(cert.witness_beta[e])];
    if (row.empty()) continue;
    int c0 = colors[static_cast<std::size_t>(row[0])];
    for (int idx : row)
      if (colors[static_cast<std::size_t>(idx)] != c0) return false;
  }
  return true;
}

inline bool verify_bad_coloring(const FinStructure& a, const FinStructure& b, const BadColoring& bad) {
  auto emb_ac = embeddings(a, bad.c);
  auto emb_ab = embeddings(a, b);
  auto emb_bc = embeddings(b, bad.c);
  if (bad.gamma.colors.size() != emb_ac.size()) return false;
  auto comp = detail::composition_table(emb_ac, emb_ab, emb_bc);
  for (const auto& row : comp) {
    bool mono = true;
    if (!row.empty()) {
      int c0 = bad.gamma.colors[static_cast<std::size_t>(row[0])];
      for (int idx : row)
        if (bad.gamma.colors[static_cast<std::size_t>(idx)] != c0) { mono = false; break; }
    }
    if (mono) return false;  // some beta is monochromatic: not a bad coloring
  }
  return true;
}

}  // namespace fwb
