// Command-line front door: every subcommand parses its inputs, delegates to a
// library operation and emits a certificate document (JSON) to stdout or a
// file. Exit codes: 0 property holds / operation succeeded, 1 property fails
// (counterexample in the document), 2 usage or format error, 3 search cap
// exceeded.

#include <cctype>
#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "fwb/eppa.hpp"
#include "fwb/fraisse.hpp"
#include "fwb/g0.hpp"
#include "fwb/io.hpp"
#include "fwb/ramsey.hpp"
#include "fwb/random_graph.hpp"
#include "fwb/tree.hpp"

using namespace fwb;

namespace {

constexpr int kHolds = 0, kFails = 1, kUsage = 2, kCapExceeded = 3;

std::vector<int> parse_ints(const std::string& text) {
  std::istringstream is(text);
  std::vector<int> out;
  int v;
  while (is >> v) out.push_back(v);
  return out;
}

struct Emitter {
  std::vector<std::string> echo;
  Json inputs = Json::object();
  Json config = Json::object();
  std::string output_path;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  FinStructure load_structure(const std::string& path) {
    std::string text = read_file(path);
    inputs[path] = fnv1a_hex(text);
    return parse_structure(text);
  }

  FinTree load_tree(const std::string& path) {
    std::string text = read_file(path);
    inputs[path] = fnv1a_hex(text);
    return parse_tree(text);
  }

  PairTree load_pair_tree(const std::string& path) {
    std::string text = read_file(path);
    inputs[path] = fnv1a_hex(text);
    return parse_pair_tree(text);
  }

  int emit(const std::string& verdict, Json detail, int code) {
    CertificateDocument doc(echo, inputs);
    doc.body["verdict"] = verdict;
    doc.body["detail"] = std::move(detail);
    doc.body["config"] = config;
    doc.body["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::string text = doc.dump();
    if (output_path.empty())
      std::cout << text;
    else
      write_file(output_path, text);
    return code;
  }
};

Json json_structure_full(const FinStructure& s) {
  Json j = json_structure(s);
  j["text"] = serialize_structure(s);
  return j;
}

Json json_bad_coloring(const BadColoring& bad) {
  Json j;
  j["c"] = json_structure_full(bad.c);
  j["k"] = bad.gamma.k;
  j["colors"] = bad.gamma.colors;
  Json ref = Json::array();
  for (auto [x, y] : bad.refutation) ref.push_back(Json::array({x, y}));
  j["refutation"] = std::move(ref);
  return j;
}

Json json_seq(const Seq& s) { return Json(s); }

// ---------------------------------------------------------------------------

int cmd_struct_emb(Emitter& em, const std::string& a_path, const std::string& b_path, bool all) {
  auto a = em.load_structure(a_path);
  auto b = em.load_structure(b_path);
  Json detail;
  if (all) {
    Json list = Json::array();
    for (const auto& e : embeddings(a, b)) list.push_back(json_embedding(e));
    detail["embeddings"] = list;
    detail["count"] = list.size();
    return em.emit(list.empty() ? "fails" : "holds", detail, list.empty() ? kFails : kHolds);
  }
  auto e = first_embedding(a, b);
  if (e) detail["embedding"] = json_embedding(*e);
  return em.emit(e ? "holds" : "fails", detail, e ? kHolds : kFails);
}

int cmd_struct_iso(Emitter& em, const std::string& a_path, const std::string& b_path) {
  auto a = em.load_structure(a_path);
  auto b = em.load_structure(b_path);
  auto iso = find_isomorphism(a, b);
  Json detail;
  if (iso) detail["isomorphism"] = json_embedding(*iso);
  return em.emit(iso ? "holds" : "fails", detail, iso ? kHolds : kFails);
}

int cmd_struct_aut(Emitter& em, const std::string& path) {
  auto a = em.load_structure(path);
  Json list = Json::array();
  for (const auto& g : automorphisms(a)) list.push_back(json_embedding(g));
  Json detail;
  detail["automorphisms"] = list;
  detail["count"] = list.size();
  detail["rigid"] = list.size() == 1;
  return em.emit("holds", detail, kHolds);
}

int cmd_struct_induce(Emitter& em, const std::string& path, const std::string& subset_text) {
  auto a = em.load_structure(path);
  auto sub = induced_substructure(a, parse_ints(subset_text));
  Json detail;
  detail["substructure"] = json_structure_full(sub);
  return em.emit("holds", detail, kHolds);
}

// ---------------------------------------------------------------------------

int cmd_class_enum(Emitter& em, const ClassSpec& spec, int max_size) {
  Json list = Json::array();
  for (const auto& m : enumerate_members(spec, max_size)) list.push_back(json_structure_full(m));
  Json detail;
  detail["members"] = list;
  detail["count"] = list.size();
  return em.emit("holds", detail, kHolds);
}

int cmd_class_hp(Emitter& em, const ClassSpec& spec, int max_size) {
  auto rep = check_hereditary(spec, max_size);
  Json detail;
  detail["checked"] = rep.checked;
  if (rep.counterexample) {
    detail["counterexample"] = Json{{"member", json_structure_full(rep.counterexample->member)},
                                    {"subset", rep.counterexample->subset},
                                    {"violation", rep.counterexample->violation}};
  }
  return em.emit(rep.pass ? "holds" : "fails", detail, rep.pass ? kHolds : kFails);
}

int cmd_class_jep(Emitter& em, const ClassSpec& spec, int max_size, int search_bound) {
  auto rep = check_jep(spec, max_size, search_bound);
  Json detail;
  detail["checked"] = rep.checked;
  if (rep.counterexample) {
    detail["counterexample"] = Json{{"a", json_structure_full(rep.counterexample->a)},
                                    {"b", json_structure_full(rep.counterexample->b)},
                                    {"reason", rep.counterexample->reason}};
  }
  return em.emit(rep.pass ? "holds" : "fails", detail, rep.pass ? kHolds : kFails);
}

int cmd_class_ap(Emitter& em, const ClassSpec& spec, int max_size, int search_bound) {
  auto rep = check_amalgamation(spec, max_size, search_bound);
  Json detail;
  detail["checked"] = rep.checked;
  detail["certificates"] = rep.certificates.size();
  detail["certificates_complete"] = rep.certificates_complete;
  if (rep.counterexample) {
    detail["counterexample"] = Json{{"a", json_structure_full(rep.counterexample->a)},
                                    {"b", json_structure_full(rep.counterexample->b)},
                                    {"c", json_structure_full(rep.counterexample->c)},
                                    {"alpha", json_embedding(rep.counterexample->alpha)},
                                    {"beta", json_embedding(rep.counterexample->beta)},
                                    {"reason", rep.counterexample->reason}};
  }
  return em.emit(rep.pass ? "holds" : "fails", detail, rep.pass ? kHolds : kFails);
}

int cmd_class_amalgam(Emitter& em, const ClassSpec& spec, const std::string& a_path,
                      const std::string& b_path, const std::string& c_path,
                      const std::string& alpha_text, const std::string& beta_text) {
  auto a = em.load_structure(a_path);
  auto b = em.load_structure(b_path);
  auto c = em.load_structure(c_path);
  Embedding alpha{a.size, b.size, parse_ints(alpha_text)};
  Embedding beta{a.size, c.size, parse_ints(beta_text)};
  AmalgamResult r = amalgam(spec, a, b, c, alpha, beta);
  Json detail;
  if (r.ok) {
    detail["d"] = json_structure_full(r.d);
    detail["i"] = json_embedding(r.into_d_from_b);
    detail["j"] = json_embedding(r.into_d_from_c);
  } else {
    detail["failure"] = r.failure;
  }
  return em.emit(r.ok ? "holds" : "fails", detail, r.ok ? kHolds : kFails);
}

// ---------------------------------------------------------------------------

int cmd_fraisse_build(Emitter& em, const ClassSpec& spec, int budget) {
  auto st = fraisse_chain(spec, budget);
  Json detail;
  detail["current"] = json_structure_full(st.current);
  detail["budget"] = st.budget;
  Json ledger = Json::array();
  int realized = 0;
  for (const auto& e : st.ledger) {
    Json entry{{"a_index", e.a_index},
               {"b_index", e.b_index},
               {"alpha", json_embedding(e.alpha)},
               {"anchor", json_embedding(e.anchor)},
               {"realized", e.realized}};
    if (e.realized) {
      entry["witness"] = json_embedding(e.witness);
      ++realized;
    }
    ledger.push_back(std::move(entry));
  }
  detail["ledger"] = std::move(ledger);
  detail["realized"] = realized;
  return em.emit("holds", detail, kHolds);
}

int cmd_fraisse_extcheck(Emitter& em, const ClassSpec& spec, const std::string& path, int a_max, int b_max) {
  auto m = em.load_structure(path);
  auto rep = extension_property_check(m, spec, a_max, b_max);
  Json detail;
  detail["checked"] = rep.checked;
  if (rep.failure) {
    detail["failure"] = Json{{"a_subset", rep.failure->a_subset},
                             {"b", json_structure_full(rep.failure->b)},
                             {"alpha", json_embedding(rep.failure->alpha)}};
  }
  return em.emit(rep.pass ? "holds" : "fails", detail, rep.pass ? kHolds : kFails);
}

int cmd_fraisse_bnf(Emitter& em, const std::string& a_path, const std::string& b_path,
                    const std::string& seed_text) {
  auto m = em.load_structure(a_path);
  auto n = em.load_structure(b_path);
  PartialMap seed;
  auto flat = parse_ints(seed_text);
  if (flat.size() % 2 != 0) throw std::invalid_argument("seed must list pairs: x y x y ...");
  for (std::size_t i = 0; i + 1 < flat.size(); i += 2) seed.pairs.emplace_back(flat[i], flat[i + 1]);
  seed.sort();
  auto r = back_and_forth(m, n, seed);
  Json detail;
  if (r.isomorphism) detail["isomorphism"] = json_embedding(*r.isomorphism);
  if (r.obstruction) {
    detail["obstruction"] = Json{{"forth", r.obstruction->forth},
                                 {"frontier", json_partial_map(r.obstruction->frontier)},
                                 {"element", r.obstruction->element}};
  }
  bool ok = static_cast<bool>(r.isomorphism);
  return em.emit(ok ? "holds" : "fails", detail, ok ? kHolds : kFails);
}

// ---------------------------------------------------------------------------

Json json_ramsey_certificate(const RamseyCertificate& cert) {
  Json j;
  j["c"] = json_structure_full(cert.c);
  j["k"] = cert.k;
  j["symmetry_reduced"] = cert.symmetry_reduced;
  j["colorings_covered"] = cert.colorings_covered;
  j["witness_beta"] = cert.witness_beta;
  return j;
}

int cmd_ramsey_check(Emitter& em, const std::string& a_path, const std::string& b_path,
                     const std::string& c_path, int k, bool reduce, std::uint64_t cap) {
  auto a = em.load_structure(a_path);
  auto b = em.load_structure(b_path);
  auto c = em.load_structure(c_path);
  auto out = ramsey_check(a, b, k, c, reduce, cap);
  Json detail;
  if (out.cap_exceeded) {
    detail["cap"] = out.cap;
    return em.emit("cap-exceeded", detail, kCapExceeded);
  }
  if (out.certificate) {
    detail["certificate"] = json_ramsey_certificate(*out.certificate);
    detail["verified"] = verify_certificate(*out.certificate);
    return em.emit("holds", detail, kHolds);
  }
  detail["bad_coloring"] = json_bad_coloring(*out.bad);
  detail["verified"] = verify_bad_coloring(a, b, *out.bad);
  return em.emit("fails", detail, kFails);
}

int cmd_ramsey_search(Emitter& em, const ClassSpec& spec, const FinStructure& a, const FinStructure& b,
                      int k, int bound, bool reduce, std::uint64_t cap) {
  auto res = ramsey_witness_search(spec, a, b, k, bound, reduce, cap);
  Json detail;
  Json summary = Json::array();
  for (const auto& [size, verdict] : res.summary)
    summary.push_back(Json{{"size", size}, {"verdict", verdict}});
  detail["summary"] = std::move(summary);
  if (res.cap_exceeded) return em.emit("cap-exceeded", detail, kCapExceeded);
  if (res.found) {
    detail["minimal_size"] = res.minimal_size;
    detail["certificate"] = json_ramsey_certificate(*res.certificate);
    detail["verified"] = verify_certificate(*res.certificate);
    return em.emit("holds", detail, kHolds);
  }
  Json failures = Json::array();
  for (const auto& [size, bad] : res.failures)
    failures.push_back(Json{{"size", size}, {"bad_coloring", json_bad_coloring(bad)}});
  detail["failures"] = std::move(failures);
  return em.emit("fails", detail, kFails);
}

int cmd_ramsey_rigidity(Emitter& em, const std::string& a_path, const std::string& c_path) {
  auto a = em.load_structure(a_path);
  auto c = em.load_structure(c_path);
  auto bad = rigidity_refutation(a, c);
  Json detail;
  detail["bad_coloring"] = json_bad_coloring(bad);
  detail["verified"] = verify_bad_coloring(a, a, bad);
  return em.emit("holds", detail, kHolds);
}

// ---------------------------------------------------------------------------

int cmd_eppa_enum(Emitter& em, const std::string& path) {
  auto a = em.load_structure(path);
  Json list = Json::array();
  for (const auto& p : partial_automorphisms(a)) list.push_back(json_partial_map(p));
  Json detail;
  detail["partial_automorphisms"] = list;
  detail["count"] = list.size();
  return em.emit("holds", detail, kHolds);
}

Json json_eppa_certificate(const EppaCertificate& cert) {
  Json j;
  j["b"] = json_structure_full(cert.b);
  j["embedding"] = json_embedding(cert.embedding);
  Json exts = Json::array();
  for (const auto& [p, g] : cert.extensions)
    exts.push_back(Json{{"partial", json_partial_map(p)}, {"automorphism", json_embedding(g)}});
  j["extensions"] = std::move(exts);
  return j;
}

int cmd_eppa_check(Emitter& em, const std::string& a_path, const std::string& b_path) {
  auto a = em.load_structure(a_path);
  auto b = em.load_structure(b_path);
  auto out = eppa_check(a, b);
  Json detail;
  if (out.certificate) {
    detail["certificate"] = json_eppa_certificate(*out.certificate);
    detail["verified"] = verify_eppa_certificate(*out.certificate);
    return em.emit("holds", detail, kHolds);
  }
  Json obs = Json::array();
  for (const auto& o : out.obstructions)
    obs.push_back(Json{{"embedding", json_embedding(o.embedding)},
                       {"unextendable", json_partial_map(o.unextendable)}});
  detail["obstructions"] = std::move(obs);
  return em.emit("fails", detail, kFails);
}

int cmd_eppa_search(Emitter& em, const ClassSpec& spec, const std::string& path, int bound) {
  auto a = em.load_structure(path);
  auto res = eppa_witness_search(spec, a, bound);
  Json detail;
  detail["failed_sizes"] = res.failed_sizes;
  if (res.found) {
    detail["witness"] = json_structure_full(*res.witness);
    detail["certificate"] = json_eppa_certificate(*res.certificate);
    detail["verified"] = verify_eppa_certificate(*res.certificate);
    return em.emit("holds", detail, kHolds);
  }
  return em.emit("fails", detail, kFails);
}

// ---------------------------------------------------------------------------

int cmd_rado_sample(Emitter& em, int n, double p, std::uint64_t seed) {
  auto s = sample_gnp(n, p, seed);
  Json detail;
  detail["graph"] = json_structure_full(s.graph);
  detail["edges"] = graph_edges(s.graph).size();
  return em.emit("holds", detail, kHolds);
}

int cmd_rado_extend(Emitter& em, const std::string& path, const std::string& a_text,
                    const std::string& b_text) {
  auto g = em.load_structure(path);
  auto w = extension_witness(g, parse_ints(a_text), parse_ints(b_text));
  Json detail;
  if (w) detail["witness"] = *w;
  return em.emit(w ? "holds" : "fails", detail, w ? kHolds : kFails);
}

int cmd_rado_bitgraph(Emitter& em, int n, int a_max, int b_max) {
  auto g = bit_graph(n);
  Json detail;
  detail["graph"] = json_structure_full(g);
  if (a_max < 0 && b_max < 0) return em.emit("holds", detail, kHolds);
  auto rep = extension_property_level(g, std::max(a_max, 0), std::max(b_max, 0));
  detail["checked"] = rep.checked;
  Json fails = Json::array();
  for (const auto& [a, b] : rep.failures) fails.push_back(Json{{"a", a}, {"b", b}});
  detail["failures"] = std::move(fails);
  return em.emit(rep.pass ? "holds" : "fails", detail, rep.pass ? kHolds : kFails);
}

// ---------------------------------------------------------------------------

int cmd_tree_kb(Emitter& em, const std::string& s_text, const std::string& t_text) {
  auto s = parse_seq(s_text), t = parse_seq(t_text);
  auto order = kb_compare(s, t);
  Json detail;
  detail["s"] = json_seq(s);
  detail["t"] = json_seq(t);
  detail["order"] = order == KbOrder::Less ? "Less" : order == KbOrder::Equal ? "Equal" : "Greater";
  return em.emit("holds", detail, kHolds);
}

int cmd_tree_sort(Emitter& em, const std::string& path) {
  auto t = em.load_tree(path);
  Json list = Json::array();
  for (const auto& s : kb_sort(t)) list.push_back(json_seq(s));
  Json detail;
  detail["sorted"] = std::move(list);
  return em.emit("holds", detail, kHolds);
}

int cmd_tree_rank(Emitter& em, const std::string& path, int pruned_depth) {
  auto t = em.load_tree(path);
  Json detail;
  detail["rank"] = rank(t);
  detail["nodes"] = t.nodes.size();
  if (pruned_depth >= 0) detail["pruned_up_to"] = is_pruned_up_to(t, pruned_depth);
  return em.emit("holds", detail, kHolds);
}

int cmd_tree_section(Emitter& em, const std::string& path, const std::string& prefix_text) {
  auto p = em.load_pair_tree(path);
  auto t = section_tree(p, parse_seq(prefix_text));
  Json list = Json::array();
  for (const auto& s : kb_sort(t)) list.push_back(json_seq(s));
  Json detail;
  detail["section"] = std::move(list);
  return em.emit("holds", detail, kHolds);
}

// ---------------------------------------------------------------------------

int cmd_g0_gen_s(Emitter& em, int depth) {
  auto s = canonical_sparse_dense(depth);
  Json detail;
  detail["levels"] = s.levels;
  return em.emit("holds", detail, kHolds);
}

int cmd_g0_build(Emitter& em, int n, const std::string& dot_path) {
  auto s = canonical_sparse_dense(n);
  auto lvl = g0_level(s, n);
  Json detail;
  detail["n"] = n;
  detail["vertices"] = lvl.graph.vertices.size();
  detail["edges"] = lvl.graph.edges.size();
  if (!dot_path.empty()) {
    write_file(dot_path, to_dot(lvl.graph));
    detail["dot"] = dot_path;
  }
  return em.emit("holds", detail, kHolds);
}

int cmd_g0_direct(Emitter& em, int n) {
  auto s = canonical_sparse_dense(n);
  auto direct = g0_edges_direct(s, n);
  auto lvl = g0_level(s, n);
  Json edges = Json::array();
  for (const auto& [x, y] : direct) edges.push_back(Json::array({x, y}));
  Json detail;
  detail["edges"] = std::move(edges);
  bool match = direct == lvl.graph.edges;
  detail["matches_iterated"] = match;
  return em.emit(match ? "holds" : "fails", detail, match ? kHolds : kFails);
}

int cmd_g0_color(Emitter& em, int n) {
  auto s = canonical_sparse_dense(n);
  auto lvl = g0_level(s, n);
  auto col = greedy_color(lvl.graph, lvl.graph.vertices);
  int used = 0;
  for (const auto& [v, c] : col) used = std::max(used, c + 1);
  bool ok = is_proper_coloring(lvl.graph, col) && used <= max_degree(lvl.graph) + 1;
  Json coloring = Json::object();
  for (const auto& [v, c] : col) coloring[v.empty() ? "e" : v] = c;
  Json detail;
  detail["colors_used"] = used;
  detail["max_degree"] = max_degree(lvl.graph);
  detail["proper"] = is_proper_coloring(lvl.graph, col);
  detail["coloring"] = std::move(coloring);
  return em.emit(ok ? "holds" : "fails", detail, ok ? kHolds : kFails);
}

int cmd_g0_validate(Emitter& em, int n) {
  auto s = canonical_sparse_dense(n);
  auto sum = g0_validate(s, n);
  bool ok = sum.vertices == (1ull << n) && sum.edges == (1ull << n) - 1 && sum.components == 1 &&
            sum.acyclic && sum.direct_matches_iterated && sum.colors_used <= sum.max_degree + 1;
  Json detail;
  detail["n"] = sum.n;
  detail["vertices"] = sum.vertices;
  detail["edges"] = sum.edges;
  detail["components"] = sum.components;
  detail["acyclic"] = sum.acyclic;
  detail["max_degree"] = sum.max_degree;
  detail["colors_used"] = sum.colors_used;
  detail["direct_matches_iterated"] = sum.direct_matches_iterated;
  return em.emit(ok ? "holds" : "fails", detail, ok ? kHolds : kFails);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite amalgamation classes, Ramsey search, EPPA, "
               "random graphs, tree orderings and G0 approximations"};
  app.require_subcommand(1);

  int jobs = 1;
  std::string output_path;
  app.add_option("-j,--jobs", jobs, "worker count; results are independent of it");
  app.add_option("-o,--output", output_path, "write the certificate document to a file");

  std::string class_name = "graphs", distances_text;
  std::string a_path, b_path, c_path, input_path, alpha_text, beta_text, seed_text;
  std::string s_text, t_text, prefix_text, subset_text, a_set_text, b_set_text, dot_path;
  bool all = false, reduce = false;
  int max_size = 3, search_bound = 6, a_max = 1, b_max = 1, k = 2, bound = 6, budget = 4;
  int a_size = -1, b_size = -1, n = 4, depth = 4, pruned_depth = -1;
  double p = 0.5;
  std::uint64_t seed = 0, cap = kDefaultColoringCap;

  auto add_class_opts = [&](CLI::App* cmd) {
    cmd->add_option("--class", class_name, "graphs | linear-orders | tournaments | qmetric");
    cmd->add_option("--distances", distances_text, "distance set for qmetric, e.g. \"1 2\"");
  };
  auto the_class = [&]() { return class_by_name(class_name, parse_ints(distances_text)); };

  // struct
  auto* cstruct = app.add_subcommand("struct", "embeddings, isomorphism, automorphisms, substructures");
  cstruct->require_subcommand(1);
  auto* s_emb = cstruct->add_subcommand("emb", "find embeddings of A into B");
  s_emb->add_option("--a", a_path)->required();
  s_emb->add_option("--b", b_path)->required();
  s_emb->add_flag("--all", all, "list every embedding");
  auto* s_iso = cstruct->add_subcommand("iso", "decide isomorphism");
  s_iso->add_option("--a", a_path)->required();
  s_iso->add_option("--b", b_path)->required();
  auto* s_aut = cstruct->add_subcommand("aut", "list automorphisms");
  s_aut->add_option("--input", input_path)->required();
  auto* s_ind = cstruct->add_subcommand("induce", "induced substructure on a vertex subset");
  s_ind->add_option("--input", input_path)->required();
  s_ind->add_option("--subset", subset_text)->required();

  // class
  auto* cclass = app.add_subcommand("class", "class membership, enumeration and axiom checks");
  cclass->require_subcommand(1);
  auto* c_enum = cclass->add_subcommand("enum", "members up to isomorphism");
  add_class_opts(c_enum);
  c_enum->add_option("--max-size", max_size);
  auto* c_hp = cclass->add_subcommand("check-hp", "hereditary property");
  add_class_opts(c_hp);
  c_hp->add_option("--max-size", max_size);
  auto* c_jep = cclass->add_subcommand("check-jep", "joint embedding property");
  add_class_opts(c_jep);
  c_jep->add_option("--max-size", max_size);
  c_jep->add_option("--search-bound", search_bound);
  auto* c_ap = cclass->add_subcommand("check-ap", "amalgamation property");
  add_class_opts(c_ap);
  c_ap->add_option("--max-size", max_size);
  c_ap->add_option("--search-bound", search_bound);
  auto* c_am = cclass->add_subcommand("amalgam", "run the class amalgam strategy on one triple");
  add_class_opts(c_am);
  c_am->add_option("--a", a_path)->required();
  c_am->add_option("--b", b_path)->required();
  c_am->add_option("--c", c_path)->required();
  c_am->add_option("--alpha", alpha_text)->required();
  c_am->add_option("--beta", beta_text)->required();

  // fraisse
  auto* cfraisse = app.add_subcommand("fraisse", "chain construction, extension property, back-and-forth");
  cfraisse->require_subcommand(1);
  auto* f_build = cfraisse->add_subcommand("build", "run the chain construction");
  add_class_opts(f_build);
  f_build->add_option("--budget", budget);
  auto* f_ext = cfraisse->add_subcommand("extcheck", "extension property of a structure within a class");
  add_class_opts(f_ext);
  f_ext->add_option("--input", input_path)->required();
  f_ext->add_option("--a-max", a_max);
  f_ext->add_option("--b-max", b_max);
  auto* f_bnf = cfraisse->add_subcommand("bnf", "back-and-forth isomorphism from a seed");
  f_bnf->add_option("--a", a_path)->required();
  f_bnf->add_option("--b", b_path)->required();
  f_bnf->add_option("--seed-map", seed_text, "flat pair list: x y x y ...");

  // ramsey
  auto* cramsey = app.add_subcommand("ramsey", "Ramsey property for embeddings");
  cramsey->require_subcommand(1);
  auto* r_check = cramsey->add_subcommand("check", "is C Ramsey for (A,B,k)?");
  r_check->add_option("--a", a_path)->required();
  r_check->add_option("--b", b_path)->required();
  r_check->add_option("--c", c_path)->required();
  r_check->add_option("-k,--colors", k);
  r_check->add_flag("--symmetry-reduce", reduce);
  r_check->add_option("--cap", cap);
  auto* r_search = cramsey->add_subcommand("search", "least class member that is Ramsey for (A,B,k)");
  add_class_opts(r_search);
  r_search->add_option("--a", a_path, "structure file for A");
  r_search->add_option("--b", b_path, "structure file for B");
  r_search->add_option("--a-size", a_size, "chain size for A (linear-orders only)");
  r_search->add_option("--b-size", b_size, "chain size for B (linear-orders only)");
  r_search->add_option("-k,--colors", k);
  r_search->add_option("--bound", bound);
  r_search->add_flag("--symmetry-reduce", reduce);
  r_search->add_option("--cap", cap);
  auto* r_rig = cramsey->add_subcommand("rigidity", "bad coloring from a nontrivial automorphism");
  r_rig->add_option("--a", a_path)->required();
  r_rig->add_option("--c", c_path)->required();

  // eppa
  auto* ceppa = app.add_subcommand("eppa", "extension property for partial automorphisms");
  ceppa->require_subcommand(1);
  auto* e_enum = ceppa->add_subcommand("enum", "list partial automorphisms");
  e_enum->add_option("--input", input_path)->required();
  auto* e_check = ceppa->add_subcommand("check", "does B extend every partial automorphism of A?");
  e_check->add_option("--a", a_path)->required();
  e_check->add_option("--b", b_path)->required();
  auto* e_search = ceppa->add_subcommand("search", "least class member extending A's partial automorphisms");
  add_class_opts(e_search);
  e_search->add_option("--input", input_path)->required();
  e_search->add_option("--bound", bound);

  // rado
  auto* crado = app.add_subcommand("rado", "random graphs and the extension property");
  crado->require_subcommand(1);
  auto* ra_sample = crado->add_subcommand("sample", "seeded G(n,p) sample");
  ra_sample->add_option("-n,--size", n);
  ra_sample->add_option("-p,--probability", p);
  ra_sample->add_option("--seed", seed);
  auto* ra_extend = crado->add_subcommand("extend", "least vertex joined to all of A and none of B");
  ra_extend->add_option("--input", input_path)->required();
  ra_extend->add_option("--a", a_set_text);
  ra_extend->add_option("--b", b_set_text);
  auto* ra_bit = crado->add_subcommand("bitgraph", "deterministic bit-adjacency fixture");
  int bit_a_max = -1, bit_b_max = -1;
  ra_bit->add_option("-n,--size", n);
  ra_bit->add_option("--a-max", bit_a_max, "also check extension levels up to (a-max, b-max)");
  ra_bit->add_option("--b-max", bit_b_max);

  // tree
  auto* ctree = app.add_subcommand("tree", "Kleene-Brouwer order, rank, section trees");
  ctree->require_subcommand(1);
  auto* t_kb = ctree->add_subcommand("kb", "compare two sequences");
  t_kb->add_option("--s", s_text)->required();
  t_kb->add_option("--t", t_text)->required();
  auto* t_sort = ctree->add_subcommand("sort", "sort a tree's nodes");
  t_sort->add_option("--input", input_path)->required();
  auto* t_rank = ctree->add_subcommand("rank", "rank of the root");
  t_rank->add_option("--input", input_path)->required();
  t_rank->add_option("--pruned-depth", pruned_depth, "also report is_pruned_up_to at this depth");
  auto* t_sec = ctree->add_subcommand("section", "section tree of a pair tree along a prefix");
  t_sec->add_option("--input", input_path)->required();
  t_sec->add_option("--prefix", prefix_text);

  // g0
  auto* cg0 = app.add_subcommand("g0", "finite approximations of the G0 graph");
  cg0->require_subcommand(1);
  auto* g_gen = cg0->add_subcommand("gen-s", "canonical sparse-dense generator");
  g_gen->add_option("--depth", depth);
  auto* g_build = cg0->add_subcommand("build", "iterated doubling construction");
  g_build->add_option("-n,--level", n);
  g_build->add_option("--dot", dot_path, "write DOT to this file");
  auto* g_direct = cg0->add_subcommand("direct", "direct edge definition, checked against iteration");
  g_direct->add_option("-n,--level", n);
  auto* g_color = cg0->add_subcommand("color", "greedy coloring of the level graph");
  g_color->add_option("-n,--level", n);
  auto* g_val = cg0->add_subcommand("validate", "full structural report");
  g_val->add_option("-n,--level", n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  Emitter em;
  // the parallelism flag must not influence the emitted bytes
  for (int i = 0; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "-j" || arg == "--jobs") { ++i; continue; }
    if (arg.rfind("-j", 0) == 0 && arg.size() > 2 && std::isdigit(static_cast<unsigned char>(arg[2]))) continue;
    if (arg.rfind("--jobs=", 0) == 0) continue;
    em.echo.push_back(arg);
  }
  em.output_path = output_path;

  try {
    if (s_emb->parsed()) return cmd_struct_emb(em, a_path, b_path, all);
    if (s_iso->parsed()) return cmd_struct_iso(em, a_path, b_path);
    if (s_aut->parsed()) return cmd_struct_aut(em, input_path);
    if (s_ind->parsed()) return cmd_struct_induce(em, input_path, subset_text);

    if (c_enum->parsed()) return cmd_class_enum(em, the_class(), max_size);
    if (c_hp->parsed()) return cmd_class_hp(em, the_class(), max_size);
    if (c_jep->parsed()) return cmd_class_jep(em, the_class(), max_size, search_bound);
    if (c_ap->parsed()) return cmd_class_ap(em, the_class(), max_size, search_bound);
    if (c_am->parsed()) return cmd_class_amalgam(em, the_class(), a_path, b_path, c_path, alpha_text, beta_text);

    if (f_build->parsed()) return cmd_fraisse_build(em, the_class(), budget);
    if (f_ext->parsed()) return cmd_fraisse_extcheck(em, the_class(), input_path, a_max, b_max);
    if (f_bnf->parsed()) return cmd_fraisse_bnf(em, a_path, b_path, seed_text);

    if (r_check->parsed()) {
      em.config = Json{{"k", k}, {"symmetry_reduce", reduce}, {"cap", cap}};
      return cmd_ramsey_check(em, a_path, b_path, c_path, k, reduce, cap);
    }
    if (r_search->parsed()) {
      em.config = Json{{"k", k}, {"bound", bound}, {"symmetry_reduce", reduce}, {"cap", cap}};
      auto spec = the_class();
      FinStructure a, b;
      if (!a_path.empty()) a = em.load_structure(a_path);
      else if (a_size >= 0 && spec.name == "linear-orders") a = chain(a_size);
      else throw std::invalid_argument("give --a, or --a-size with --class linear-orders");
      if (!b_path.empty()) b = em.load_structure(b_path);
      else if (b_size >= 0 && spec.name == "linear-orders") b = chain(b_size);
      else throw std::invalid_argument("give --b, or --b-size with --class linear-orders");
      return cmd_ramsey_search(em, spec, a, b, k, bound, reduce, cap);
    }
    if (r_rig->parsed()) return cmd_ramsey_rigidity(em, a_path, c_path);

    if (e_enum->parsed()) return cmd_eppa_enum(em, input_path);
    if (e_check->parsed()) return cmd_eppa_check(em, a_path, b_path);
    if (e_search->parsed()) return cmd_eppa_search(em, the_class(), input_path, bound);

    if (ra_sample->parsed()) {
      em.config = Json{{"n", n}, {"p", p}, {"seed", seed}};
      return cmd_rado_sample(em, n, p, seed);
    }
    if (ra_extend->parsed()) return cmd_rado_extend(em, input_path, a_set_text, b_set_text);
    if (ra_bit->parsed()) return cmd_rado_bitgraph(em, n, bit_a_max, bit_b_max);

    if (t_kb->parsed()) return cmd_tree_kb(em, s_text, t_text);
    if (t_sort->parsed()) return cmd_tree_sort(em, input_path);
    if (t_rank->parsed()) return cmd_tree_rank(em, input_path, pruned_depth);
    if (t_sec->parsed()) return cmd_tree_section(em, input_path, prefix_text);

    if (g_gen->parsed()) return cmd_g0_gen_s(em, depth);
    if (g_build->parsed()) return cmd_g0_build(em, n, dot_path);
    if (g_direct->parsed()) return cmd_g0_direct(em, n);
    if (g_color->parsed()) return cmd_g0_color(em, n);
    if (g_val->parsed()) return cmd_g0_validate(em, n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  std::cerr << "error: no subcommand dispatched\n";
  return kUsage;
}
