#pragma once

// Brute-force reference implementations. They share nothing with the
// library beyond Graph::order() and Graph::edges(), and favor obviousness
// over speed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "expc/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<char>>;

inline Matrix adjacency(const expc::Graph& g) {
  Matrix m(g.order(), std::vector<char>(g.order(), 0));
  for (const auto& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = 1;
  return m;
}

inline bool has_loop(const Matrix& m) {
  for (std::size_t v = 0; v < m.size(); ++v)
    if (m[v][v]) return true;
  return false;
}

inline bool proper(const Matrix& m, const std::vector<std::uint32_t>& color) {
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = u; v < m.size(); ++v)
      if (m[u][v] && color[u] == color[v]) return false;
  return true;
}

namespace detail {

inline bool colorable_from(const Matrix& m, std::size_t k, std::size_t v, std::vector<std::uint32_t>& color) {
  if (v == m.size()) return true;
  for (std::uint32_t x = 1; x <= k; ++x) {
    bool ok = true;
    for (std::size_t u = 0; u < v; ++u)
      if (m[u][v] && color[u] == x) ok = false;
    if (!ok) continue;
    color[v] = x;
    if (colorable_from(m, k, v + 1, color)) return true;
  }
  color[v] = 0;
  return false;
}

}  // namespace detail

/// Least k admitting a proper k-coloring; nullopt with loops.
inline std::optional<std::size_t> chromatic(const expc::Graph& g) {
  const auto m = adjacency(g);
  if (has_loop(m)) return std::nullopt;
  for (std::size_t k = 0;; ++k) {
    std::vector<std::uint32_t> color(m.size(), 0);
    if (detail::colorable_from(m, k, 0, color)) return k;
  }
}

/// Maximum independent set size by subset enumeration; looped vertices are
/// never independent.
inline std::size_t independence(const expc::Graph& g) {
  const auto m = adjacency(g);
  const std::size_t n = m.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    std::size_t size = 0;
    for (std::size_t u = 0; u < n && ok; ++u) {
      if (!(mask >> u & 1)) continue;
      ++size;
      for (std::size_t v = u; v < n; ++v)
        if ((mask >> v & 1) && m[u][v]) ok = false;
    }
    if (ok && size > best) best = size;
  }
  return best;
}

/// Map number idx as values 1..c, vertex 0 most significant.
inline std::vector<std::uint32_t> decode_map(std::uint64_t idx, std::size_t n, std::uint32_t c) {
  std::vector<std::uint32_t> out(n);
  for (std::size_t v = n; v-- > 0;) {
    out[v] = static_cast<std::uint32_t>(idx % c) + 1;
    idx /= c;
  }
  return out;
}

inline bool coproper(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b, const Matrix& h) {
  for (std::size_t u = 0; u < h.size(); ++u)
    for (std::size_t v = 0; v < h.size(); ++v)
      if (h[u][v] && a[u] == b[v]) return false;
  return true;
}

/// Primary colors b in 1..c such that every map colored b takes value b on
/// the closed neighborhood of v, quantifying over the whole map space.
inline std::vector<std::uint32_t> robust_colors(const expc::Graph& h, std::uint32_t c,
                                                const std::vector<std::uint32_t>& coloring, std::size_t v) {
  const auto m = adjacency(h);
  const std::size_t n = m.size();
  std::vector<std::uint32_t> out;
  for (std::uint32_t b = 1; b <= c; ++b) {
    bool robust = true;
    for (std::uint64_t idx = 0; idx < coloring.size() && robust; ++idx) {
      if (coloring[idx] != b) continue;
      const auto phi = decode_map(idx, n, c);
      bool hit = phi[v] == b;
      for (std::size_t u = 0; u < n; ++u)
        if (u != v && m[u][v] && phi[u] == b) hit = true;
      robust = hit;
    }
    if (robust) out.push_back(b);
  }
  return out;
}

/// Proper, and each primary color b only on maps whose image contains b.
inline bool suited(const expc::Graph& h, std::uint32_t c, const expc::Graph& e,
                   const std::vector<std::uint32_t>& coloring) {
  if (!proper(adjacency(e), coloring)) return false;
  for (std::uint64_t idx = 0; idx < coloring.size(); ++idx) {
    if (coloring[idx] > c) continue;
    const auto phi = decode_map(idx, h.order(), c);
    bool found = false;
    for (auto x : phi) found = found || x == coloring[idx];
    if (!found) return false;
  }
  return true;
}

namespace detail {

inline std::uint64_t closed_paths(const Matrix& m, std::size_t len, std::vector<std::size_t>& path,
                                  std::vector<char>& used) {
  if (path.size() == len) return m[path.back()][path.front()] ? 1 : 0;
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < m.size(); ++w) {
    if (used[w] || !m[path.back()][w]) continue;
    used[w] = 1;
    path.push_back(w);
    total += closed_paths(m, len, path, used);
    path.pop_back();
    used[w] = 0;
  }
  return total;
}

}  // namespace detail

/// Number of cycles of length len (>= 3): ordered closed paths / (2 len).
inline std::uint64_t cycles(const expc::Graph& g, std::size_t len) {
  const auto m = adjacency(g);
  std::uint64_t total = 0;
  std::vector<char> used(m.size(), 0);
  std::vector<std::size_t> path;
  for (std::size_t s = 0; s < m.size(); ++s) {
    used[s] = 1;
    path.assign(1, s);
    total += detail::closed_paths(m, len, path, used);
    used[s] = 0;
  }
  return total / (2 * len);
}

/// Shortest cycle length, or 0 for a forest.
inline std::size_t girth(const expc::Graph& g) {
  for (std::size_t len = 3; len <= g.order(); ++len)
    if (cycles(g, len) > 0) return len;
  return 0;
}

inline Matrix tensor(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size() * b.size();
  Matrix m(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = a[i / b.size()][j / b.size()] && b[i % b.size()][j % b.size()];
  return m;
}

inline Matrix strong(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size() * b.size();
  Matrix m(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::size_t g1 = i / b.size(), g2 = j / b.size(), h1 = i % b.size(), h2 = j % b.size();
      m[i][j] = (g1 == g2 || a[g1][g2]) && (h1 == h2 || b[h1][h2]);
    }
  return m;
}

/// Deterministic pseudo-random simple graph for property sweeps.
inline expc::Graph random_graph(std::size_t n, double density, std::uint64_t seed) {
  std::vector<expc::Edge> edges;
  std::uint64_t state = seed * 0x9e3779b97f4a7c15ULL + 1;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      if (static_cast<double>(state % 1'000'000) / 1e6 < density) edges.push_back({u, v});
    }
  return expc::Graph::from_edges(n, edges);
}

}  // namespace oracle
