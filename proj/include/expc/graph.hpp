#pragma once

// Finite undirected graphs without multi-edges, loops allowed.
//
// Vertices are 0-based contiguous indices. Loops are stored apart from the
// (irreflexive) neighbor lists so simple-graph algorithms can reject them
// cheaply and neighbor iteration never yields the vertex itself.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <ostream>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "expc/errors.hpp"

namespace expc {

using Vertex = std::size_t;

/// An undirected edge stored with u <= v; u == v is a loop.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Shortest-path length or girth. Infinity is a distinct state, never an
/// in-band sentinel.
class Distance {
 public:
  static constexpr Distance infinite() noexcept { return Distance(); }
  constexpr explicit Distance(std::size_t hops) noexcept : hops_(hops), finite_(true) {}

  constexpr bool is_finite() const noexcept { return finite_; }
  constexpr bool is_infinite() const noexcept { return !finite_; }

  std::size_t hops() const {
    if (!finite_) throw InvalidArgument("distance is infinite");
    return hops_;
  }

  /// True iff finite and equal to `h`.
  constexpr bool is(std::size_t h) const noexcept { return finite_ && hops_ == h; }
  /// True iff finite and at most `h`.
  constexpr bool at_most(std::size_t h) const noexcept { return finite_ && hops_ <= h; }

  friend constexpr bool operator==(const Distance& a, const Distance& b) noexcept {
    return a.finite_ == b.finite_ && (!a.finite_ || a.hops_ == b.hops_);
  }
  friend constexpr std::strong_ordering operator<=>(const Distance& a, const Distance& b) noexcept {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!a.finite_) return std::strong_ordering::equal;
    return a.hops_ <=> b.hops_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Distance& d) {
    if (d.finite_) return os << d.hops_;
    return os << "inf";
  }

 private:
  constexpr Distance() noexcept = default;
  std::size_t hops_ = 0;
  bool finite_ = false;
};

class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `order` vertices.
  explicit Graph(std::size_t order) : adj_(order), loops_(order, 0) {}

  /// Builds from an edge list. Duplicates (in either orientation) are
  /// merged; endpoints must be < order.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges) {
    Graph g(order);
    for (const auto& e : edges) {
      if (e.u >= order || e.v >= order)
        throw InvalidArgument("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ") with order " + std::to_string(order));
      if (e.u == e.v) {
        g.loops_[e.u] = 1;
      } else {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
      }
    }
    g.finalize();
    return g;
  }

  static Graph from_edges(std::size_t order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return adj_.size(); }
  /// Number of non-loop edges.
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t loop_count() const noexcept { return loop_count_; }
  bool is_simple() const noexcept { return loop_count_ == 0; }

  bool has_loop(Vertex v) const {
    check_vertex(v);
    return loops_[v] != 0;
  }

  /// u ~ v. For u == v this is the loop predicate.
  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return loops_[u] != 0;
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  /// Sorted neighbors of v, never including v itself.
  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  /// All edges including loops, each once with u <= v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_ + loop_count_);
    for (Vertex u = 0; u < order(); ++u) {
      if (loops_[u]) out.push_back({u, u});
      for (Vertex v : adj_[u])
        if (v > u) out.push_back({u, v});
    }
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v >= order())
      throw InvalidArgument("vertex index " + std::to_string(v) + " out of range for order " +
                            std::to_string(order()));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_ && a.loops_ == b.loops_;
  }

 private:
  void finalize() {
    edge_count_ = 0;
    loop_count_ = 0;
    for (auto& nbrs : adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      edge_count_ += nbrs.size();
    }
    edge_count_ /= 2;
    for (char l : loops_) loop_count_ += l ? 1 : 0;
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> loops_;
  std::size_t edge_count_ = 0;
  std::size_t loop_count_ = 0;
};

/// Provenance of a product-graph vertex. Product vertices are numbered
/// row-major: index = left * right_order + right.
struct VertexPairLabel {
  Vertex left = 0;
  Vertex right = 0;

  friend auto operator<=>(const VertexPairLabel&, const VertexPairLabel&) = default;
};

inline VertexPairLabel product_label(Vertex index, std::size_t right_order) {
  return {index / right_order, index % right_order};
}

inline Vertex product_index(VertexPairLabel label, std::size_t right_order) {
  return label.left * right_order + label.right;
}

/// G x H: (g1,h1) ~ (g2,h2) iff g1 ~ g2 and h1 ~ h2. Loops carry through,
/// so (g,h) has a loop iff both g and h do.
inline Graph tensor_product(const Graph& g, const Graph& h) {
  const std::size_t m = h.order();
  std::vector<Edge> edges;
  for (const auto& eg : g.edges()) {
    for (const auto& eh : h.edges()) {
      edges.push_back({eg.u * m + eh.u, eg.v * m + eh.v});
      // The crossed pairing is a second edge unless one factor edge is a loop.
      if (eg.u != eg.v && eh.u != eh.v) edges.push_back({eg.u * m + eh.v, eg.v * m + eh.u});
    }
  }
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  return Graph::from_edges(g.order() * m, edges);
}

/// Strong product of two simple graphs.
inline Graph strong_product(const Graph& g, const Graph& h) {
  if (!g.is_simple() || !h.is_simple())
    throw LoopError("strong product is defined for simple graphs only");
  const std::size_t m = h.order();
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex x = 0; x < m; ++x) {
      const Vertex from = a * m + x;
      // g-equal, h-adjacent
      for (Vertex y : h.neighbors(x))
        if (y > x) edges.push_back({from, a * m + y});
      for (Vertex b : g.neighbors(a)) {
        if (b < a) continue;
        edges.push_back({from, b * m + x});
        for (Vertex y : h.neighbors(x)) edges.push_back({from, b * m + y});
      }
    }
  }
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  return Graph::from_edges(g.order() * m, edges);
}

/// G with a loop at every vertex.
inline Graph add_loops(const Graph& g) {
  auto edges = g.edges();
  for (Vertex v = 0; v < g.order(); ++v) edges.push_back({v, v});
  return Graph::from_edges(g.order(), edges);
}

/// G with all loops removed.
inline Graph remove_loops(const Graph& g) {
  auto edges = g.edges();
  std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
  return Graph::from_edges(g.order(), edges);
}

/// Vertex-disjoint union; the right graph's vertices are shifted by left.order().
inline Graph disjoint_union(const Graph& left, const Graph& right) {
  auto edges = left.edges();
  for (auto e : right.edges()) edges.push_back({e.u + left.order(), e.v + left.order()});
  return Graph::from_edges(left.order() + right.order(), edges);
}

/// Induced subgraph on `keep` (in the given order; vertex keep[i] becomes i).
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<std::size_t> position(g.order(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    g.check_vertex(keep[i]);
    position[keep[i]] = i;
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const auto pu = position[e.u];
    const auto pv = position[e.v];
    if (pu == std::numeric_limits<std::size_t>::max() || pv == std::numeric_limits<std::size_t>::max())
      continue;
    edges.push_back({std::min(pu, pv), std::max(pu, pv)});
  }
  return Graph::from_edges(keep.size(), edges);
}

/// Every edge (and loop) of `sub` is an edge of `super`; same vertex count required.
inline bool is_spanning_subgraph(const Graph& sub, const Graph& super) {
  if (sub.order() != super.order()) throw InvalidArgument("vertex sets differ");
  for (const auto& e : sub.edges())
    if (!super.adjacent(e.u, e.v)) return false;
  return true;
}

/// BFS distances from v. Loops are ignored.
inline std::vector<Distance> bfs_distances(const Graph& g, Vertex v) {
  g.check_vertex(v);
  std::vector<Distance> dist(g.order(), Distance::infinite());
  std::queue<Vertex> frontier;
  dist[v] = Distance(0);
  frontier.push(v);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    const std::size_t next = dist[u].hops() + 1;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w].is_infinite()) {
        dist[w] = Distance(next);
        frontier.push(w);
      }
    }
  }
  return dist;
}

/// {v} together with N(v), sorted.
inline std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  auto nbrs = g.neighbors(v);
  std::vector<Vertex> out(nbrs.begin(), nbrs.end());
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

/// Length of a shortest cycle of a simple graph; infinite for forests.
inline Distance girth(const Graph& g) {
  if (!g.is_simple()) throw LoopError("girth is defined for simple graphs only");
  const std::size_t n = g.order();
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = unseen;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), unseen);
    queue.clear();
    dist[root] = 0;
    parent[root] = root;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      // Any cycle found deeper than this cannot beat the current best.
      if (best != unseen && 2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == unseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == unseen ? Distance::infinite() : Distance(best);
}

/// No three pairwise adjacent distinct vertices. Loops are ignored.
inline bool is_triangle_free(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      auto nu = g.neighbors(u);
      auto nv = g.neighbors(v);
      auto i = nu.begin();
      auto j = nv.begin();
      while (i != nu.end() && j != nv.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace expc
