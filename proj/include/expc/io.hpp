#pragma once

// Line-oriented file formats.
//
// Graph (DIMACS-col compatible):
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>          1-based endpoints, u == v is a loop
// Coloring:
//   s col <palette>
//   <vertex> <color>   1-based, one line per vertex
// Vertex map:
//   m c=<c> <v1> ... <vn>

#include <cstddef>
#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "expc/coloring.hpp"
#include "expc/errors.hpp"
#include "expc/graph.hpp"
#include "expc/vertex_map.hpp"

namespace expc {

namespace detail {

inline bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

template <typename T>
T parse_number(std::istringstream& in, std::size_t line_no, const char* what) {
  long long value = 0;
  if (!(in >> value)) throw ParseError(line_no, std::string("expected ") + what);
  if (value < 0) throw ParseError(line_no, std::string(what) + " must be non-negative");
  return static_cast<T>(value);
}

inline void expect_end(std::istringstream& in, std::size_t line_no) {
  std::string extra;
  if (in >> extra) throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
}

}  // namespace detail

inline Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank(line)) continue;
    std::istringstream tokens(line);
    std::string kind;
    tokens >> kind;
    if (kind == "c") continue;
    if (kind == "p") {
      if (header) throw ParseError(line_no, "duplicate problem line");
      std::string format;
      tokens >> format;
      if (format != "edge" && format != "col") throw ParseError(line_no, "expected 'p edge <n> <m>'");
      const auto n = detail::parse_number<std::size_t>(tokens, line_no, "vertex count");
      const auto m = detail::parse_number<std::size_t>(tokens, line_no, "edge count");
      detail::expect_end(tokens, line_no);
      header.emplace(n, m);
    } else if (kind == "e") {
      if (!header) throw ParseError(line_no, "edge line before problem line");
      const auto u = detail::parse_number<std::size_t>(tokens, line_no, "endpoint");
      const auto v = detail::parse_number<std::size_t>(tokens, line_no, "endpoint");
      detail::expect_end(tokens, line_no);
      if (u < 1 || v < 1 || u > header->first || v > header->first)
        throw ParseError(line_no, "endpoint out of range 1.." + std::to_string(header->first));
      const std::pair<Vertex, Vertex> key{std::min(u, v) - 1, std::max(u, v) - 1};
      if (!seen.insert(key).second)
        throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      edges.push_back({key.first, key.second});
    } else {
      throw ParseError(line_no, "unknown line type '" + kind + "'");
    }
  }
  if (!header) throw ParseError(0, "missing problem line 'p edge <n> <m>'");
  if (edges.size() != header->second)
    throw ParseError(0, "header declares " + std::to_string(header->second) + " edges, found " +
                            std::to_string(edges.size()));
  return Graph::from_edges(header->first, edges);
}

/// Writes `g` with edges in lexicographic order. Each entry of `comments`
/// becomes a `c` line ahead of the problem line.
inline void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "c " << c << '\n';
  const auto edges = g.edges();
  out << "p edge " << g.order() << ' ' << edges.size() << '\n';
  for (const auto& e : edges) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

inline Coloring read_coloring(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Color> palette;
  std::vector<std::pair<std::size_t, Color>> entries;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank(line)) continue;
    std::istringstream tokens(line);
    if (!palette) {
      std::string s, col;
      tokens >> s >> col;
      if (s != "s" || col != "col") throw ParseError(line_no, "expected 's col <palette>'");
      palette = detail::parse_number<Color>(tokens, line_no, "palette size");
      detail::expect_end(tokens, line_no);
      continue;
    }
    const auto v = detail::parse_number<std::size_t>(tokens, line_no, "vertex");
    const auto c = detail::parse_number<Color>(tokens, line_no, "color");
    detail::expect_end(tokens, line_no);
    if (c < 1 || c > *palette) throw ParseError(line_no, "color outside palette");
    entries.emplace_back(v, c);
  }
  if (!palette) throw ParseError(0, "missing header 's col <palette>'");
  std::vector<Color> assignment(entries.size(), 0);
  for (const auto& [v, c] : entries) {
    if (v < 1 || v > entries.size()) throw ParseError(0, "vertex " + std::to_string(v) + " out of range");
    if (assignment[v - 1] != 0) throw ParseError(0, "vertex " + std::to_string(v) + " colored twice");
    assignment[v - 1] = c;
  }
  return Coloring(std::move(assignment), *palette);
}

inline void write_coloring(std::ostream& out, const Coloring& psi) {
  out << "s col " << psi.palette() << '\n';
  for (std::size_t v = 0; v < psi.size(); ++v) out << v + 1 << ' ' << psi[v] << '\n';
}

inline std::string format_vertex_map(const VertexMap& phi) {
  std::ostringstream out;
  out << "m c=" << phi.palette();
  for (Color x : phi.values()) out << ' ' << x;
  return out.str();
}

inline VertexMap parse_vertex_map(const std::string& line) {
  std::istringstream tokens(line);
  std::string m, palette_tok;
  tokens >> m >> palette_tok;
  if (m != "m" || palette_tok.rfind("c=", 0) != 0) throw ParseError(1, "expected 'm c=<c> <values...>'");
  Color palette = 0;
  try {
    palette = static_cast<Color>(std::stoul(palette_tok.substr(2)));
  } catch (const std::exception&) {
    throw ParseError(1, "bad palette '" + palette_tok + "'");
  }
  std::vector<Color> values;
  long long x = 0;
  while (tokens >> x) {
    if (x < 1 || x > static_cast<long long>(palette)) throw ParseError(1, "map value outside [1,c]");
    values.push_back(static_cast<Color>(x));
  }
  if (!tokens.eof()) throw ParseError(1, "non-numeric map value");
  return VertexMap(std::move(values), palette);
}

}  // namespace expc
