#pragma once

// Finite trees of integer sequences: Kleene-Brouwer comparison, rank,
// pruning depth and section trees of pair trees.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace fwb {

using Seq = std::vector<int>;

struct FinTree {
  std::set<Seq> nodes;

  bool contains(const Seq& s) const { return nodes.count(s) > 0; }

  // prefix-closed, and nonempty trees contain the empty sequence
  bool is_tree() const {
    for (const auto& s : nodes)
      if (!s.empty()) {
        Seq parent(s.begin(), s.end() - 1);
        if (!nodes.count(parent)) return false;
      }
    return true;
  }

  void validate() const {
    if (!is_tree()) throw std::invalid_argument("node set is not prefix-closed");
  }
};

struct PairTree {
  std::set<std::pair<Seq, Seq>> nodes;

  void validate() const {
    for (const auto& [s, t] : nodes) {
      if (s.size() != t.size()) throw std::invalid_argument("pair node coordinates differ in length");
      if (!s.empty()) {
        std::pair<Seq, Seq> parent{Seq(s.begin(), s.end() - 1), Seq(t.begin(), t.end() - 1)};
        if (!nodes.count(parent)) throw std::invalid_argument("pair tree not prefix-closed");
      }
    }
  }
};

enum class KbOrder { Less, Equal, Greater };

// Kleene-Brouwer comparison, extension-smaller convention: s < t iff t is a
// proper prefix of s, or s(i) < t(i) at the first disagreement.
inline KbOrder kb_compare(const Seq& s, const Seq& t) {
  const std::size_t m = std::min(s.size(), t.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (s[i] < t[i]) return KbOrder::Less;
    if (s[i] > t[i]) return KbOrder::Greater;
  }
  if (s.size() == t.size()) return KbOrder::Equal;
  return s.size() > t.size() ? KbOrder::Less : KbOrder::Greater;
}

inline std::vector<Seq> kb_sort(const FinTree& t) {
  std::vector<Seq> out(t.nodes.begin(), t.nodes.end());
  std::sort(out.begin(), out.end(), [](const Seq& x, const Seq& y) {
    return kb_compare(x, y) == KbOrder::Less;
  });
  return out;
}

namespace tree_detail {

inline std::vector<Seq> children_of(const FinTree& t, const Seq& s) {
  std::vector<Seq> kids;
  for (auto it = t.nodes.upper_bound(s); it != t.nodes.end(); ++it) {
    if (it->size() <= s.size() || !std::equal(s.begin(), s.end(), it->begin())) break;
    if (it->size() == s.size() + 1) kids.push_back(*it);
  }
  return kids;
}

inline int node_rank(const FinTree& t, const Seq& s) {
  int best = -1;
  for (const auto& kid : children_of(t, s)) best = std::max(best, node_rank(t, kid));
  return best + 1;  // leaves get 0
}

}  // namespace tree_detail

// Finite ordinal rank of the root: leaves 0, internal nodes 1 + max child.
inline int rank(const FinTree& t) {
  if (t.nodes.empty()) throw std::invalid_argument("rank of the empty tree is undefined");
  return tree_detail::node_rank(t, {});
}

// Every node of length < depth must have a child.
inline bool is_pruned_up_to(const FinTree& t, int depth) {
  for (const auto& s : t.nodes) {
    if (static_cast<int>(s.size()) >= depth) continue;
    if (tree_detail::children_of(t, s).empty()) return false;
  }
  return true;
}

// Finite truncation of the section tree along the prefix a:
// { s : |s| <= |a| and (a|_{|s|}, s) in P }.
inline FinTree section_tree(const PairTree& p, const Seq& a) {
  FinTree out;
  for (const auto& [first, second] : p.nodes) {
    if (first.size() > a.size()) continue;
    if (!std::equal(first.begin(), first.end(), a.begin())) continue;
    out.nodes.insert(second);
  }
  return out;
}

}  // namespace fwb
