#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fwb/catalog.hpp"

using namespace fwb;

TEST_CASE("graph enumeration counts match the unlabeled-graph sequence") {
  auto spec = graphs_class();
  auto members = enumerate_members(spec, 4);
  std::map<int, int> by_size;
  for (const auto& m : members) ++by_size[m.size];
  CHECK(by_size[0] == 1);
  CHECK(by_size[1] == 1);
  CHECK(by_size[2] == 2);
  CHECK(by_size[3] == 4);
  CHECK(by_size[4] == 11);

  // no two isomorphic entries, every entry a member and canonical
  for (std::size_t i = 0; i < members.size(); ++i) {
    CHECK(spec.membership(members[i]).ok);
    CHECK(canonical_form(members[i]) == members[i]);
    for (std::size_t j = i + 1; j < members.size(); ++j)
      CHECK_FALSE(find_isomorphism(members[i], members[j]));
  }
}

TEST_CASE("linear order and tournament enumeration") {
  CHECK(enumerate_members(linear_orders_class(), 4).size() == 5);

  auto ts = enumerate_members(tournaments_class(), 3);
  std::map<int, int> by_size;
  for (const auto& m : ts) ++by_size[m.size];
  CHECK(by_size[0] == 1);
  CHECK(by_size[1] == 1);
  CHECK(by_size[2] == 1);
  CHECK(by_size[3] == 2);  // transitive and cyclic
}

TEST_CASE("membership violations") {
  auto g = graphs_class();
  FinStructure loop(g.sig, 1);
  loop.add_tuple("adj", {0, 0});
  loop.normalize();
  auto v = is_member(g, loop);
  CHECK_FALSE(v.ok);
  CHECK(v.violation == "irreflexivity");

  auto t = tournaments_class();
  FinStructure untotal(t.sig, 2);
  auto vt = is_member(t, untotal);
  CHECK_FALSE(vt.ok);
  CHECK(vt.violation == "totality");

  auto q = qmetric_class({1, 2});
  auto legal = qmetric_space({1, 2}, 3, [](int i, int j) { return (i == 0 && j == 1) ? 1 : (i == 0 ? 1 : 2); });
  // d(0,1)=1, d(0,2)=1, d(1,2)=2: triangle 1+1 >= 2 holds
  CHECK(is_member(q, legal).ok);

  auto illegal = qmetric_space({1, 5}, 3, [](int i, int j) { return (i == 0 && j == 1) ? 1 : (i == 0 ? 1 : 5); });
  CHECK_FALSE(qmetric_class(std::vector<int>{1, 5}).membership(illegal).ok);
}

TEST_CASE("free graph amalgam") {
  auto spec = graphs_class();
  auto k1 = graph_from_edges(1, {});
  auto k2 = graph_from_edges(2, {{0, 1}});
  Embedding alpha{1, 2, {0}}, beta{1, 2, {0}};
  auto r = amalgam(spec, k1, k2, k2, alpha, beta);
  REQUIRE(r.ok);
  CHECK(r.d.size == 3);
  CHECK(graph_edges(r.d).size() == 2);  // a path: no cross edge
  CHECK(is_member(spec, r.d).ok);
  CHECK(is_embedding(k2, r.d, r.into_d_from_b.map));
  CHECK(is_embedding(k2, r.d, r.into_d_from_c.map));
  CHECK(alpha.then(r.into_d_from_b) == beta.then(r.into_d_from_c));
  // no edge between the two private vertices
  CHECK_FALSE(graph_adjacent(r.d, r.into_d_from_b(1), r.into_d_from_c(1)));
}

TEST_CASE("linear order amalgam and joint embedding") {
  auto spec = linear_orders_class();
  auto empty = chain(0);
  auto c1 = chain(1);
  auto je = joint_embed(spec, c1, c1);
  REQUIRE(je.ok);
  CHECK(je.d == chain(2));
  // B's point strictly below C's
  CHECK(je.d.has_tuple(0, {je.into_d_from_b(0), je.into_d_from_c(0)}));

  auto je2 = joint_embed(spec, chain(2), chain(1));
  REQUIRE(je2.ok);
  CHECK(find_isomorphism(je2.d, chain(3)));

  // amalgam over a shared point
  auto c2 = chain(2);
  Embedding alpha{1, 2, {0}}, beta{1, 2, {1}};
  auto r = amalgam(spec, c1, c2, c2, alpha, beta);
  REQUIRE(r.ok);
  CHECK(spec.membership(r.d).ok);
  CHECK(is_embedding(c2, r.d, r.into_d_from_b.map));
  CHECK(is_embedding(c2, r.d, r.into_d_from_c.map));
  CHECK(alpha.then(r.into_d_from_b) == beta.then(r.into_d_from_c));
  CHECK(r.d.size == 3);
}

TEST_CASE("tournament amalgam orients cross pairs") {
  auto spec = tournaments_class();
  auto members = enumerate_members(spec, 3);
  // exhaustively: every strategy output is a member and commutes
  for (const auto& a : members)
    for (const auto& b : members)
      for (const auto& c : members)
        for (const auto& alpha : embeddings(a, b))
          for (const auto& beta : embeddings(a, c)) {
            auto r = amalgam(spec, a, b, c, alpha, beta);
            REQUIRE(r.ok);
            CHECK(r.d.size == b.size + c.size - a.size);
            CHECK(spec.membership(r.d).ok);
            CHECK(is_embedding(b, r.d, r.into_d_from_b.map));
            CHECK(is_embedding(c, r.d, r.into_d_from_c.map));
            CHECK(alpha.then(r.into_d_from_b) == beta.then(r.into_d_from_c));
          }
}

TEST_CASE("metric amalgam: shortest path and failure certificate") {
  auto spec = qmetric_class({1, 2, 3});
  auto point = qmetric_space({1, 2, 3}, 1, nullptr);
  auto b = qmetric_space({1, 2, 3}, 2, [](int, int) { return 1; });
  auto c = qmetric_space({1, 2, 3}, 2, [](int, int) { return 3; });
  Embedding alpha{1, 2, {0}}, beta{1, 2, {0}};
  auto r = amalgam(spec, point, b, c, alpha, beta);
  CHECK_FALSE(r.ok);  // min(1+3) = 4 outside {1,2,3}
  CHECK(r.failure.find("4") != std::string::npos);

  auto c2 = qmetric_space({1, 2, 3}, 2, [](int, int) { return 2; });
  auto r2 = amalgam(spec, point, b, c2, alpha, beta);
  REQUIRE(r2.ok);
  CHECK(spec.membership(r2.d).ok);
  CHECK(qmetric_distance(r2.d, {1, 2, 3}, r2.into_d_from_b(1), r2.into_d_from_c(1)) == 3);

  // triangle inequality on every output triple
  for (int i = 0; i < r2.d.size; ++i)
    for (int j = 0; j < r2.d.size; ++j)
      for (int k = 0; k < r2.d.size; ++k) {
        if (i == j || j == k || i == k) continue;
        CHECK(qmetric_distance(r2.d, {1, 2, 3}, i, k) <=
              qmetric_distance(r2.d, {1, 2, 3}, i, j) + qmetric_distance(r2.d, {1, 2, 3}, j, k));
      }
}

TEST_CASE("metric joint embedding") {
  auto spec = qmetric_class({1});
  auto p = qmetric_space({1}, 1, nullptr);
  auto r = joint_embed(spec, p, p);
  REQUIRE(r.ok);
  CHECK(r.d.size == 2);
  CHECK(qmetric_distance(r.d, {1}, 0, 1) == 1);
}

TEST_CASE("graph joint embedding is the disjoint union") {
  auto spec = graphs_class();
  auto r = joint_embed(spec, graph_from_edges(2, {{0, 1}}), graph_from_edges(1, {}));
  REQUIRE(r.ok);
  CHECK(r.d.size == 3);
  CHECK(graph_edges(r.d).size() == 1);
}

TEST_CASE("amalgam outputs commute and are members, graphs up to size 3") {
  auto spec = graphs_class();
  auto members = enumerate_members(spec, 3);
  for (const auto& a : members)
    for (const auto& b : members)
      for (const auto& c : members)
        for (const auto& alpha : embeddings(a, b))
          for (const auto& beta : embeddings(a, c)) {
            auto r = amalgam(spec, a, b, c, alpha, beta);
            REQUIRE(r.ok);
            CHECK(spec.membership(r.d).ok);
            CHECK(alpha.then(r.into_d_from_b) == beta.then(r.into_d_from_c));
            // freeness: no cross edges between private parts
            std::set<int> priv_b, priv_c;
            for (int u = 0; u < b.size; ++u) priv_b.insert(r.into_d_from_b(u));
            for (int x = 0; x < a.size; ++x) priv_b.erase(r.into_d_from_b(alpha(x)));
            for (int u = 0; u < c.size; ++u) priv_c.insert(r.into_d_from_c(u));
            for (int x = 0; x < a.size; ++x) priv_c.erase(r.into_d_from_c(beta(x)));
            for (int u : priv_b)
              for (int v : priv_c) CHECK_FALSE(graph_adjacent(r.d, u, v));
          }
}

TEST_CASE("qmetric enumeration is finite and deduplicated") {
  auto spec = qmetric_class({1, 2});
  auto members = enumerate_members(spec, 3);
  for (const auto& m : members) CHECK(spec.membership(m).ok);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      CHECK_FALSE(find_isomorphism(members[i], members[j]));
  // sizes 0,1 single; size 2: two spaces (distance 1 or 2); size 3: legal triangles
  std::map<int, int> by_size;
  for (const auto& m : members) ++by_size[m.size];
  CHECK(by_size[0] == 1);
  CHECK(by_size[1] == 1);
  CHECK(by_size[2] == 2);
  // triangles over {1,2}: multisets {1,1,1},{1,1,2},{2,2,2},{1,2,2},{2,2,1}... legal ones
  // {1,1,1} ok, {1,1,2} ok (1+1>=2), {1,2,2} ok, {2,2,2} ok; all 4 distinct up to iso
  CHECK(by_size[3] == 4);
}
