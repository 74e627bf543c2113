#pragma once

// Serialization: the structure text format shared by every subcommand, tree
// files, DOT export, input digests and certificate documents.

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fwb/g0.hpp"
#include "fwb/structure.hpp"
#include "fwb/tree.hpp"

namespace fwb {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// structure text format
//
//   signature: adj/2
//   size: 3
//   rel adj: 0 1; 1 0
//
// Canonical key order, relations in signature order, tuples sorted; digests
// over the serialized form are therefore stable.

inline std::string serialize_structure(const FinStructure& s) {
  std::ostringstream os;
  os << "signature:";
  for (const auto& r : s.sig.relations) os << ' ' << r.name << '/' << r.arity;
  os << '\n' << "size: " << s.size << '\n';
  for (std::size_t k = 0; k < s.tables.size(); ++k) {
    os << "rel " << s.sig.relations[k].name << ':';
    bool first_tuple = true;
    for (const auto& t : s.tables[k]) {
      os << (first_tuple ? " " : "; ");
      first_tuple = false;
      for (std::size_t i = 0; i < t.size(); ++i) os << (i ? " " : "") << t[i];
    }
    os << '\n';
  }
  return os.str();
}

inline FinStructure parse_structure(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  FinStructure s;
  bool have_sig = false, have_size = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "signature:") {
      std::string item;
      while (ls >> item) {
        auto slash = item.find('/');
        if (slash == std::string::npos) throw std::invalid_argument("bad signature item: " + item);
        s.sig.relations.push_back({item.substr(0, slash), std::stoi(item.substr(slash + 1))});
      }
      s.tables.resize(s.sig.relations.size());
      have_sig = true;
    } else if (key == "size:") {
      ls >> s.size;
      have_size = true;
    } else if (key == "rel") {
      if (!have_sig) throw std::invalid_argument("rel before signature");
      std::string name;
      ls >> name;
      if (name.empty() || name.back() != ':') throw std::invalid_argument("bad rel line: " + line);
      name.pop_back();
      int k = s.sig.index_of(name);
      if (k < 0) throw std::invalid_argument("unknown relation: " + name);
      std::string rest;
      std::getline(ls, rest);
      std::istringstream ts(rest);
      std::string tuple_text;
      while (std::getline(ts, tuple_text, ';')) {
        std::istringstream es(tuple_text);
        Tuple t;
        int e;
        while (es >> e) t.push_back(e);
        if (!t.empty()) s.tables[static_cast<std::size_t>(k)].push_back(std::move(t));
      }
    } else {
      throw std::invalid_argument("unrecognized line: " + line);
    }
  }
  if (!have_sig || !have_size) throw std::invalid_argument("structure file needs signature and size");
  s.normalize();
  s.validate();
  return s;
}

// ---------------------------------------------------------------------------
// tree files: one node per line as space-separated integers; "-" is the
// empty sequence

inline std::string serialize_seq(const Seq& s) {
  if (s.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
  return os.str();
}

inline Seq parse_seq(const std::string& text) {
  Seq s;
  if (text == "-") return s;
  std::istringstream is(text);
  int e;
  while (is >> e) s.push_back(e);
  return s;
}

inline std::string serialize_tree(const FinTree& t) {
  std::ostringstream os;
  for (const auto& s : kb_sort(t)) os << serialize_seq(s) << '\n';
  return os.str();
}

inline FinTree parse_tree(const std::string& text) {
  FinTree t;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    t.nodes.insert(parse_seq(line));
  }
  t.validate();
  return t;
}

// pair tree files: "a b c | x y z" per node ("-" for empty coordinates)
inline PairTree parse_pair_tree(const std::string& text) {
  PairTree p;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto bar = line.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("pair tree line needs '|': " + line);
    p.nodes.emplace(parse_seq(line.substr(0, bar)), parse_seq(line.substr(bar + 1)));
  }
  p.validate();
  return p;
}

// ---------------------------------------------------------------------------
// DOT export, deterministic edge order

inline std::string to_dot(const BitGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (const auto& v : g.vertices) os << "  \"" << (v.empty() ? "e" : v) << "\";\n";
  for (const auto& [x, y] : g.edges)
    os << "  \"" << (x.empty() ? "e" : x) << "\" -- \"" << (y.empty() ? "e" : y) << "\";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// digests and certificate documents

inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xF);
  return os.str();
}

inline Json json_embedding(const Embedding& e) {
  return Json{{"source_size", e.source_size}, {"target_size", e.target_size}, {"map", e.map}};
}

inline Json json_partial_map(const PartialMap& p) {
  Json pairs = Json::array();
  for (auto [s, t] : p.pairs) pairs.push_back(Json::array({s, t}));
  return pairs;
}

inline Json json_structure(const FinStructure& s) {
  Json sig = Json::array();
  for (const auto& r : s.sig.relations) sig.push_back(Json{{"name", r.name}, {"arity", r.arity}});
  Json rels = Json::object();
  for (std::size_t k = 0; k < s.tables.size(); ++k) {
    Json tuples = Json::array();
    for (const auto& t : s.tables[k]) tuples.push_back(t);
    rels[s.sig.relations[k].name] = std::move(tuples);
  }
  return Json{{"signature", std::move(sig)}, {"size", s.size}, {"relations", std::move(rels)}};
}

// Common certificate envelope. `timing_ms` is the only field excluded from
// byte-comparison by the determinism contract.
struct CertificateDocument {
  Json body = Json::object();

  CertificateDocument(const std::vector<std::string>& argv_echo, const Json& inputs) {
    body["command"] = argv_echo;
    body["inputs"] = inputs;
    body["verdict"] = nullptr;
    body["detail"] = Json::object();
    body["config"] = Json::object();
    body["timing_ms"] = 0.0;
  }

  std::string dump() const { return body.dump(2) + "\n"; }
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

}  // namespace fwb
