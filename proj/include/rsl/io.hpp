#ifndef RSL_IO_HPP
#define RSL_IO_HPP

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rsl/relation.hpp"
#include "rsl/rough_lattice.hpp"
#include "rsl/structure.hpp"

namespace rsl {

using json = nlohmann::ordered_json;

/// Thrown on malformed input files; maps to a distinct CLI exit code.
struct parse_error : error {
  using error::error;
};

/// {"universe": ["a","b",...], "pairs": [[i,j],...]} with 0-based indices.
inline Relation parse_relation_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("universe") || !j.contains("pairs"))
    throw parse_error("expected an object with 'universe' and 'pairs'");
  std::vector<std::string> names;
  for (const auto& n : j["universe"]) {
    if (!n.is_string()) throw parse_error("universe entries must be strings");
    names.push_back(n.get<std::string>());
  }
  Relation r{Universe(std::move(names))};
  for (const auto& p : j["pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
        !p[1].is_number_unsigned())
      throw parse_error("pairs must be [i, j] index arrays");
    std::size_t a = p[0].get<std::size_t>(), b = p[1].get<std::size_t>();
    if (a >= r.size() || b >= r.size())
      throw parse_error("pair index out of range: [" + std::to_string(a) + ", " +
                        std::to_string(b) + "]");
    r.add(a, b);
  }
  return r;
}

/// One `i j` pair per line; blank lines and lines starting with '#' are
/// skipped. Universe size is max index + 1, names are decimal indices.
inline Relation parse_relation_edgelist(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t max_index = 0;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    std::size_t a, b;
    std::istringstream fs(first);
    if (!(fs >> a) || !fs.eof() || !(ls >> b))
      throw parse_error("line " + std::to_string(lineno) + ": expected 'i j'");
    std::string rest;
    if (ls >> rest) throw parse_error("line " + std::to_string(lineno) + ": trailing tokens");
    pairs.emplace_back(a, b);
    max_index = std::max({max_index, a, b});
  }
  if (pairs.empty()) throw parse_error("edge list is empty");
  Relation r{Universe::indexed(max_index + 1)};
  for (auto [a, b] : pairs) r.add(a, b);
  return r;
}

enum class InputFormat { JSON, EDGELIST };

inline Relation parse_relation(const std::string& text, InputFormat fmt) {
  return fmt == InputFormat::JSON ? parse_relation_json(text) : parse_relation_edgelist(text);
}

inline Relation parse_relation_file(const std::string& path, InputFormat fmt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_relation(buf.str(), fmt);
}

/// Semicolon-separated sets of comma-separated indices, e.g. "0,1;2".
/// An empty segment denotes the empty set.
inline std::vector<SubsetMask> parse_set_list(const std::string& text, std::size_t universe_size) {
  std::vector<SubsetMask> out;
  std::istringstream in(text);
  std::string segment;
  while (std::getline(in, segment, ';')) {
    SubsetMask m(universe_size);
    std::istringstream ss(segment);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      std::size_t i;
      std::istringstream ts(tok);
      if (!(ts >> i) || !ts.eof()) throw parse_error("bad set literal: '" + tok + "'");
      if (i >= universe_size) throw parse_error("set index out of range: " + std::to_string(i));
      m.set(i);
    }
    out.push_back(m);
  }
  if (out.empty()) throw parse_error("empty set list");
  return out;
}

// ---- JSON serialization (subsets as sorted index arrays) ----

inline json mask_to_json(const SubsetMask& m) { return json(m.to_indices()); }

inline json rough_to_json(const RoughSet& a) {
  return json{{"lower", mask_to_json(a.lower)}, {"upper", mask_to_json(a.upper)}};
}

inline json relation_to_json(const Relation& r) {
  json pairs = json::array();
  for (std::size_t x = 0; x < r.size(); ++x)
    r.row(x).for_each([&](std::size_t y) { pairs.push_back(json::array({x, y})); });
  return json{{"universe", r.universe().names()}, {"pairs", pairs}};
}

/// Cover edges of the enumerated lattice: a -> b iff a < b with nothing
/// strictly between.
inline std::vector<std::pair<std::size_t, std::size_t>> cover_edges(const RsLattice& l) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const auto& e = l.elements;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j || !leq(e[i], e[j])) continue;
      bool cover = true;
      for (std::size_t k = 0; k < e.size() && cover; ++k)
        if (k != i && k != j && leq(e[i], e[k]) && leq(e[k], e[j])) cover = false;
      if (cover) edges.emplace_back(i, j);
    }
  return edges;
}

inline json lattice_to_json(const RsLattice& l) {
  json elements = json::array();
  for (std::size_t i = 0; i < l.elements.size(); ++i) {
    json e = rough_to_json(l.elements[i]);
    e["representative"] = mask_to_json(l.representative[i]);
    elements.push_back(std::move(e));
  }
  json edges = json::array();
  for (auto [a, b] : cover_edges(l)) edges.push_back(json::array({a, b}));
  return json{{"universe", l.universe.names()},
              {"elements", std::move(elements)},
              {"cover_edges", std::move(edges)},
              {"bottom", rough_to_json(l.bottom())},
              {"top", rough_to_json(l.top())}};
}

// ---- DOT export ----

inline std::string mask_to_braces(const SubsetMask& m, const Universe& u) {
  std::string s = "{";
  bool first = true;
  m.for_each([&](std::size_t i) {
    if (!first) s += ",";
    s += u.name(i);
    first = false;
  });
  return s + "}";
}

inline std::string rough_label(const RoughSet& a, const Universe& u) {
  return "(" + mask_to_braces(a.lower, u) + ", " + mask_to_braces(a.upper, u) + ")";
}

/// Hasse diagram of the lattice, bottom at the bottom. When component
/// colors are supplied (one palette entry per component of the upper
/// mask's home), nodes are filled by the component containing the upper
/// mask; mixed elements stay white.
inline std::string lattice_to_dot(const RsLattice& l,
                                  const ComponentPartition* components = nullptr) {
  static const char* palette[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f",
                                  "#cab2d6", "#ffff99", "#1f78b4", "#33a02c"};
  std::ostringstream out;
  out << "digraph rs_lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < l.elements.size(); ++i) {
    out << "  n" << i << " [label=\"" << rough_label(l.elements[i], l.universe) << "\"";
    if (components) {
      // Color by the unique component carrying the element, if any.
      int owner = -1;
      bool mixed = false;
      for (std::size_t c = 0; c < components->blocks.size(); ++c)
        if (l.elements[i].upper.intersects(components->blocks[c])) {
          if (owner >= 0) mixed = true;
          owner = static_cast<int>(c);
        }
      if (owner >= 0 && !mixed)
        out << ", style=filled, fillcolor=\"" << palette[owner % 8] << "\"";
    }
    out << "];\n";
  }
  for (auto [a, b] : cover_edges(l)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rsl

#endif
