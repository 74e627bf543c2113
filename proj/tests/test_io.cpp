#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fwb/catalog.hpp"
#include "fwb/io.hpp"

using namespace fwb;

TEST_CASE("structure round-trip") {
  auto p3 = graph_from_edges(3, {{0, 1}, {1, 2}});
  auto text = serialize_structure(p3);
  CHECK(text == "signature: adj/2\nsize: 3\nrel adj: 0 1; 1 0; 1 2; 2 1\n");
  CHECK(parse_structure(text) == p3);

  auto c4 = chain(4);
  CHECK(parse_structure(serialize_structure(c4)) == c4);

  // comments and blank lines are ignored; tuple order is normalized
  auto alt = parse_structure("# a graph\nsignature: adj/2\n\nsize: 3\nrel adj: 1 2; 2 1; 0 1; 1 0\n");
  CHECK(alt == p3);

  CHECK_THROWS_AS(parse_structure("size: 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_structure("signature: adj/2\nsize: 2\nrel foo: 0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_structure("signature: adj/2\nsize: 2\nrel adj: 0 5; 5 0\n"), std::invalid_argument);
}

TEST_CASE("empty relation and empty structure") {
  FinStructure empty;
  empty.sig.relations = {{"adj", 2}};
  empty.tables.resize(1);
  empty.size = 0;
  CHECK(parse_structure(serialize_structure(empty)) == empty);

  auto lone = graph_from_edges(2, {});
  auto text = serialize_structure(lone);
  CHECK(text == "signature: adj/2\nsize: 2\nrel adj:\n");
  CHECK(parse_structure(text) == lone);
}

TEST_CASE("tree round-trip") {
  FinTree t;
  t.nodes = {Seq{}, Seq{0}, Seq{1}, Seq{0, 2}};
  auto text = serialize_tree(t);
  CHECK(text == "0 2\n0\n1\n-\n");  // KB order, extensions first
  CHECK(parse_tree(text).nodes == t.nodes);

  CHECK_THROWS_AS(parse_tree("0 1\n"), std::invalid_argument);  // not prefix-closed
}

TEST_CASE("pair tree parsing") {
  auto p = parse_pair_tree("- | -\n0 | 7\n");
  CHECK(p.nodes.size() == 2);
  CHECK(section_tree(p, {0}).nodes == std::set<Seq>{Seq{}, Seq{7}});

  CHECK_THROWS_AS(parse_pair_tree("0 7\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pair_tree("- | -\n0 | 7 7\n"), std::invalid_argument);
}

TEST_CASE("DOT export is deterministic") {
  BitGraph g;
  g.vertices = {"", "0", "1"};
  g.edges = {{"0", "1"}, make_bit_edge("1", "")};
  auto dot = to_dot(g);
  CHECK(dot == to_dot(g));
  CHECK(dot ==
        "graph G {\n"
        "  \"e\";\n  \"0\";\n  \"1\";\n"
        "  \"e\" -- \"1\";\n  \"0\" -- \"1\";\n"
        "}\n");
}

TEST_CASE("fnv1a digest") {
  // reference values for the 64-bit FNV-1a parameters
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
  CHECK(fnv1a_hex(serialize_structure(chain(3))) == fnv1a_hex(serialize_structure(chain(3))));
  CHECK(fnv1a_hex("x") != fnv1a_hex("y"));
}

TEST_CASE("json helpers and certificate envelope") {
  auto p3 = graph_from_edges(3, {{0, 1}, {1, 2}});
  auto js = json_structure(p3);
  CHECK(js["size"] == 3);
  CHECK(js["signature"][0]["name"] == "adj");
  CHECK(js["relations"]["adj"].size() == 4);

  Embedding e{2, 3, {0, 2}};
  CHECK(json_embedding(e)["map"] == Json::array({0, 2}));

  PartialMap p;
  p.pairs = {{0, 1}, {2, 0}};
  CHECK(json_partial_map(p).dump() == "[[0,1],[2,0]]");

  CertificateDocument doc({"fwb", "struct", "iso"}, Json{{"digest", "00"}});
  doc.body["verdict"] = "holds";
  auto text = doc.dump();
  CHECK(text.find("\"command\"") < text.find("\"inputs\""));
  CHECK(text.find("\"inputs\"") < text.find("\"verdict\""));
  CHECK(Json::parse(text)["verdict"] == "holds");
}
