#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fwb/g0.hpp"
#include "fwb/random_graph.hpp"

using namespace fwb;

TEST_CASE("canonical bit string enumeration") {
  CHECK(canonical_bit_string(0) == "");
  CHECK(canonical_bit_string(1) == "0");
  CHECK(canonical_bit_string(2) == "1");
  CHECK(canonical_bit_string(3) == "00");
  CHECK(canonical_bit_string(4) == "01");
  CHECK(canonical_bit_string(7) == "000");
}

TEST_CASE("canonical sparse-dense set") {
  auto s = canonical_sparse_dense(12);
  CHECK(s.depth() == 13);
  CHECK(s.at(0) == "");
  CHECK(s.at(1) == "0");
  CHECK(s.at(2) == "10");   // t_2 = "1" padded
  CHECK(s.at(3) == "000");  // t_3 = "00" padded
  for (int n = 0; n <= 12; ++n) CHECK(static_cast<int>(s.at(n).size()) == n);

  // density: every string whose canonical index lies within the populated
  // depth is extended by some s_n (s_idx itself, by the padding rule)
  for (int idx = 0; idx <= 12; ++idx) {
    BitString t = canonical_bit_string(idx);
    bool extended = false;
    for (int n = 0; n < s.depth(); ++n)
      if (s.at(n).compare(0, t.size(), t) == 0 && s.at(n).size() >= t.size()) extended = true;
    CHECK(extended);
  }

  CHECK_THROWS_AS(canonical_sparse_dense(-1), std::invalid_argument);
}

TEST_CASE("attach") {
  BitGraph pt;
  pt.vertices = {""};
  auto one = attach(pt, "");
  CHECK(one.vertices == std::vector<BitString>{"0", "1"});
  CHECK(one.edges == std::set<BitEdge>{{"0", "1"}});

  // attaching an edge at either endpoint yields a 4-vertex path
  for (const BitString& u : {BitString("0"), BitString("1")}) {
    auto two = attach(one, u);
    CHECK(two.vertices.size() == 4);
    CHECK(two.edges.size() == 3);
    CHECK(component_count(two) == 1);
    CHECK(is_acyclic(two));
    CHECK(max_degree(two) == 2);  // a path, not a star
  }

  CHECK_THROWS_AS(attach(one, "00"), std::invalid_argument);
}

TEST_CASE("g0 levels up to 12: counts, connectivity, acyclicity, direct edges") {
  auto s = canonical_sparse_dense(12);
  for (int n = 0; n <= 12; ++n) {
    auto lvl = g0_level(s, n);
    CHECK(lvl.graph.vertices.size() == (1u << n));
    CHECK(lvl.graph.edges.size() == (1u << n) - 1);
    CHECK(component_count(lvl.graph) == 1);
    CHECK(is_acyclic(lvl.graph));
    CHECK(g0_edges_direct(s, n) == lvl.graph.edges);
    // every edge flips exactly one coordinate
    for (const auto& [x, y] : lvl.graph.edges) {
      REQUIRE(x.size() == y.size());
      int diff = 0;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) ++diff;
      CHECK(diff == 1);
    }
  }
  CHECK(g0_edges_direct(s, 2) ==
        std::set<BitEdge>{{"00", "10"}, {"01", "11"}, {"00", "01"}});
}

TEST_CASE("greedy coloring") {
  BitGraph tri;
  tri.vertices = {"a", "b", "c"};
  tri.edges = {{"a", "b"}, {"a", "c"}, {"b", "c"}};
  auto col = greedy_color(tri, tri.vertices);
  CHECK(is_proper_coloring(tri, col));
  std::set<int> used;
  for (const auto& [v, c] : col) used.insert(c);
  CHECK(used.size() == 3);

  BitGraph edgeless;
  edgeless.vertices = {"x", "y", "z"};
  auto col0 = greedy_color(edgeless, edgeless.vertices);
  for (const auto& [v, c] : col0) CHECK(c == 0);

  auto s = canonical_sparse_dense(8);
  auto lvl = g0_level(s, 8);
  auto col8 = greedy_color(lvl.graph, lvl.graph.vertices);
  CHECK(is_proper_coloring(lvl.graph, col8));
  int top = 0;
  for (const auto& [v, c] : col8) top = std::max(top, c);
  CHECK(top + 1 <= max_degree(lvl.graph) + 1);

  CHECK_THROWS_AS(greedy_color(tri, {"a", "b"}), std::invalid_argument);
  CHECK_THROWS_AS(greedy_color(tri, {"a", "b", "b"}), std::invalid_argument);
}

TEST_CASE("greedy coloring on 100 seeded random graphs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = bitgraph_from_structure(sample_gnp(64, 0.2, seed).graph);
    auto col = greedy_color(g, g.vertices);
    CHECK(is_proper_coloring(g, col));
    int top = 0;
    for (const auto& [v, c] : col) top = std::max(top, c);
    CHECK(top + 1 <= max_degree(g) + 1);
  }
}

TEST_CASE("independence_check") {
  auto s = canonical_sparse_dense(2);
  auto lvl = g0_level(s, 2);
  CHECK_FALSE(independence_check(lvl.graph, {"00", "10"}));  // edge via s_0
  CHECK(independence_check(lvl.graph, {"10"}));
  CHECK(independence_check(lvl.graph, {"10", "11"}) ==
        (lvl.graph.edges.count(make_bit_edge("10", "11")) == 0));
  CHECK_THROWS_AS(independence_check(lvl.graph, {"zz"}), std::invalid_argument);
}

TEST_CASE("g0_validate summary") {
  auto s = canonical_sparse_dense(10);
  auto sum = g0_validate(s, 10);
  CHECK(sum.vertices == 1024);
  CHECK(sum.edges == 1023);
  CHECK(sum.components == 1);
  CHECK(sum.acyclic);
  CHECK(sum.direct_matches_iterated);
  CHECK(sum.colors_used <= sum.max_degree + 1);
}
