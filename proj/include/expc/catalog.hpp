#pragma once

// Named graphs and small exhaustive catalogs.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "expc/errors.hpp"
#include "expc/graph.hpp"

namespace expc {

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.push_back({std::min(u, (u + 1) % n), std::max(u, (u + 1) % n)});
  return Graph::from_edges(n, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph::from_edges(n, edges);
}

inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= leaves; ++u) edges.push_back({0, u});
  return Graph::from_edges(leaves + 1, edges);
}

inline Graph empty_graph(std::size_t n) { return Graph(n); }

/// Outer 5-cycle 0..4, spokes i - i+5, inner pentagram on 5..9.
inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
    edges.push_back({i, i + 5});
    const Vertex a = 5 + i;
    const Vertex b = 5 + (i + 2) % 5;
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph::from_edges(10, edges);
}

/// LCF notation [5,-5]^7 on a 14-cycle.
inline Graph heawood_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 14; ++i) {
    const Vertex j = (i + 1) % 14;
    edges.push_back({std::min(i, j), std::max(i, j)});
    if (i % 2 == 0) {
      const Vertex k = (i + 5) % 14;
      edges.push_back({std::min(i, k), std::max(i, k)});
    }
  }
  return Graph::from_edges(14, edges);
}

/// Catalog lookup by family name: complete, cycle, path, star, empty take a
/// size; petersen and heawood ignore it.
inline Graph standard_graph(std::string_view name, std::size_t size = 0) {
  if (name == "complete") return complete_graph(size);
  if (name == "cycle") return cycle_graph(size);
  if (name == "path") return path_graph(size);
  if (name == "star") return star_graph(size);
  if (name == "empty") return empty_graph(size);
  if (name == "petersen") return petersen_graph();
  if (name == "heawood") return heawood_graph();
  throw InvalidArgument("unknown graph family: " + std::string(name));
}

/// Short names: K<n>, C<n>, P<n>, S<n> (star with n leaves), E<n> (edgeless),
/// "petersen", "heawood"; a trailing 'o' adds a loop at every vertex
/// (K2o is K2 with loops).
inline Graph graph_from_short_name(std::string_view spec) {
  if (spec.empty()) throw InvalidArgument("empty graph name");
  bool looped = false;
  std::string_view base = spec;
  if (base.size() > 1 && base.back() == 'o' && std::isdigit(static_cast<unsigned char>(base[base.size() - 2]))) {
    looped = true;
    base.remove_suffix(1);
  }
  Graph g;
  if (base == "petersen") {
    g = petersen_graph();
  } else if (base == "heawood") {
    g = heawood_graph();
  } else {
    const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(base.front())));
    const auto digits = base.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      throw InvalidArgument("unrecognized graph name: " + std::string(spec));
    const std::size_t n = std::stoul(std::string(digits));
    switch (family) {
      case 'K': g = complete_graph(n); break;
      case 'C': g = cycle_graph(n); break;
      case 'P': g = path_graph(n); break;
      case 'S': g = star_graph(n); break;
      case 'E': g = empty_graph(n); break;
      default: throw InvalidArgument("unrecognized graph name: " + std::string(spec));
    }
  }
  return looped ? add_loops(g) : g;
}

namespace detail {

inline std::vector<std::pair<Vertex, Vertex>> vertex_pairs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

}  // namespace detail

/// One representative of every isomorphism class of simple graphs on
/// exactly n vertices, n <= 6. Canonical form is the minimum edge mask over
/// all vertex permutations; representatives are listed by ascending mask.
inline std::vector<Graph> all_simple_graphs(std::size_t n) {
  if (n > 6) throw InvalidArgument("exhaustive catalog supports at most 6 vertices");
  const auto pairs = detail::vertex_pairs(n);
  std::vector<std::vector<std::size_t>> pair_id(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    pair_id[pairs[i].first][pairs[i].second] = i;
    pair_id[pairs[i].second][pairs[i].first] = i;
  }
  std::vector<std::vector<std::size_t>> perm_maps;  // bit i -> bit perm_maps[p][i]
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    std::vector<std::size_t> m(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) m[i] = pair_id[perm[pairs[i].first]][perm[pairs[i].second]];
    perm_maps.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint32_t> canon;
  const std::uint32_t limit = std::uint32_t{1} << pairs.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::uint32_t best = mask;
    for (const auto& m : perm_maps) {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1U) image |= std::uint32_t{1} << m[i];
      best = std::min(best, image);
    }
    canon.insert(best);
  }
  std::vector<Graph> out;
  for (auto mask : canon) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1U) edges.push_back({pairs[i].first, pairs[i].second});
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

/// Named catalogs used by batch verification runs:
///   small<N>  every simple graph on 1..N vertices (N <= 5) up to isomorphism
///   extended  small5 plus K6, K7, C7 and the Petersen graph
inline std::vector<std::pair<std::string, Graph>> named_catalog(std::string_view name) {
  std::vector<std::pair<std::string, Graph>> out;
  auto add_small = [&](std::size_t up_to) {
    for (std::size_t n = 1; n <= up_to; ++n) {
      std::size_t idx = 0;
      for (auto& g : all_simple_graphs(n)) out.emplace_back("g" + std::to_string(n) + "_" + std::to_string(idx++), std::move(g));
    }
  };
  if (name.size() == 6 && name.substr(0, 5) == "small" && name[5] >= '1' && name[5] <= '5') {
    add_small(static_cast<std::size_t>(name[5] - '0'));
  } else if (name == "extended") {
    add_small(5);
    out.emplace_back("K6", complete_graph(6));
    out.emplace_back("K7", complete_graph(7));
    out.emplace_back("C7", cycle_graph(7));
    out.emplace_back("petersen", petersen_graph());
  } else {
    throw InvalidArgument("unknown catalog: " + std::string(name));
  }
  return out;
}

}  // namespace expc
