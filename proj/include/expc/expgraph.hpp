#pragma once

// Exponential graphs E_c(H).
//
// Vertices are all maps V(H) -> [c]; phi1 ~ phi2 iff they are co-proper:
// phi1(u) != phi2(v) for every edge u ~ v of H (both orientations) and
// phi1(w) != phi2(w) for every loop w of H. A map has a loop iff it is a
// proper c-coloring of H.
//
// Two forms exist. ExponentialGraph is materialized (capped, default 2e4
// maps) and indexed by the row-major map bijection of VertexMap.
// ExponentialOracle answers adjacency on demand for any size.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "expc/coloring.hpp"
#include "expc/errors.hpp"
#include "expc/graph.hpp"
#include "expc/report.hpp"
#include "expc/solvers.hpp"
#include "expc/vertex_map.hpp"

namespace expc {

inline constexpr std::uint64_t kDefaultMapCap = 20'000;

namespace detail {

inline void check_map_shape(const VertexMap& phi, const Graph& h, Color c) {
  if (phi.domain_order() != h.order())
    throw InvalidArgument("map domain has " + std::to_string(phi.domain_order()) + " vertices, graph has " +
                          std::to_string(h.order()));
  if (phi.palette() != c)
    throw InvalidArgument("map palette " + std::to_string(phi.palette()) + " differs from " + std::to_string(c));
}

/// Directed constraint list: first(u) != second(v) for each pair.
inline std::vector<std::pair<Vertex, Vertex>> coproper_constraints(const Graph& h) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : h.edges()) {
    out.emplace_back(e.u, e.v);
    if (e.u != e.v) out.emplace_back(e.v, e.u);
  }
  return out;
}

}  // namespace detail

inline bool co_proper(const VertexMap& phi1, const VertexMap& phi2, const Graph& h) {
  detail::check_map_shape(phi1, h, phi1.palette());
  if (phi2.domain_order() != h.order() || phi1.palette() != phi2.palette())
    throw InvalidArgument("co_proper: maps differ in shape");
  for (const auto& e : h.edges()) {
    if (phi1[e.u] == phi2[e.v]) return false;
    if (phi1[e.v] == phi2[e.u]) return false;
  }
  return true;
}

/// Number of maps c^n as a big integer.
inline mpz_class map_count(std::size_t n, Color c) {
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), c, n);
  return total;
}

class ExponentialOracle {
 public:
  ExponentialOracle(const Graph& h, Color c) : h_(h), c_(c) {
    if (c < 1) throw InvalidArgument("palette must be at least 1");
  }

  const Graph& base() const noexcept { return h_; }
  Color palette() const noexcept { return c_; }
  mpz_class vertex_count() const { return map_count(h_.order(), c_); }

  bool adjacent(const VertexMap& a, const VertexMap& b) const {
    detail::check_map_shape(a, h_, c_);
    detail::check_map_shape(b, h_, c_);
    return co_proper(a, b, h_);
  }

  bool has_loop(const VertexMap& a) const { return adjacent(a, a); }

 private:
  Graph h_;
  Color c_;
};

/// Materialized E_c(H). graph vertex i is VertexMap::from_index(i, n, c).
struct ExponentialGraph {
  Graph base;
  Color palette = 0;
  Graph graph;

  std::size_t domain_order() const noexcept { return base.order(); }
  std::size_t size() const noexcept { return graph.order(); }
  VertexMap map(Vertex index) const { return VertexMap::from_index(index, base.order(), palette); }
  Vertex vertex_of(const VertexMap& phi) const {
    detail::check_map_shape(phi, base, palette);
    return static_cast<Vertex>(phi.index());
  }
};

inline ExponentialGraph exponential_graph(const Graph& h, Color c, std::uint64_t cap = kDefaultMapCap) {
  if (c < 1) throw InvalidArgument("palette must be at least 1");
  const auto total = checked_power(c, h.order());
  if (!total || *total > cap)
    throw BudgetExceeded("exponential graph has " + map_count(h.order(), c).get_str() + " maps, cap is " +
                         std::to_string(cap));
  const std::size_t count = static_cast<std::size_t>(*total);
  const std::size_t n = h.order();
  std::vector<Color> values(count * n);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t idx = i;
    for (std::size_t v = n; v-- > 0;) {
      values[i * n + v] = static_cast<Color>(idx % c) + 1;
      idx /= c;
    }
  }
  const auto constraints = detail::coproper_constraints(h);
  auto compatible = [&](std::size_t a, std::size_t b) {
    const Color* pa = &values[a * n];
    const Color* pb = &values[b * n];
    for (const auto& [u, v] : constraints)
      if (pa[u] == pb[v]) return false;
    return true;
  };
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a; b < count; ++b)
      if (compatible(a, b)) edges.push_back({a, b});
  return ExponentialGraph{h, c, Graph::from_edges(count, edges)};
}

/// The map v -> i.
inline VertexMap constant_map(Color i, const Graph& h, Color c) {
  if (i < 1 || i > c)
    throw InvalidArgument("constant color " + std::to_string(i) + " outside [1," + std::to_string(c) + "]");
  return VertexMap(std::vector<Color>(h.order(), i), c);
}

/// A (c+t)-coloring of a materialized E_c(H) together with its palette split:
/// primary colors 1..c, secondary colors c+1..c+t.
struct SuitedColoring {
  Coloring coloring;
  Color primary = 0;
  Color secondary = 0;

  Color palette() const noexcept { return primary + secondary; }
  Color operator[](Vertex v) const { return coloring[v]; }
  bool is_primary(Color b) const noexcept { return b >= 1 && b <= primary; }
};

/// Proper, palette c+t, and every primary color b sits only on maps with b
/// in their image.
inline bool is_suited(const SuitedColoring& psi, const ExponentialGraph& e) {
  if (psi.primary != e.palette || psi.coloring.size() != e.size() || psi.coloring.palette() > psi.palette())
    throw InvalidArgument("is_suited: coloring shape does not match the exponential graph");
  if (!is_proper_coloring(e.graph, psi.coloring)) return false;
  for (Vertex i = 0; i < e.size(); ++i) {
    const Color b = psi[i];
    if (b <= psi.primary && !e.map(i).takes_value(b)) return false;
  }
  return true;
}

/// Color permutation (perm[old] = new, index 0 unused) that sends the color
/// of each constant map phi_i to i, built by processing i = 1..c in order
/// and composing a transposition whenever needed.
inline std::vector<Color> normalizing_permutation(const Coloring& psi, const ExponentialGraph& e, Color t) {
  const Color c = e.palette;
  const Color palette = c + t;
  if (psi.size() != e.size()) throw InvalidArgument("coloring size does not match the exponential graph");
  if (psi.palette() > palette)
    throw InvalidArgument("coloring palette " + std::to_string(psi.palette()) + " exceeds c+t = " + std::to_string(palette));
  if (!is_proper_coloring(e.graph, psi)) throw InvalidArgument("coloring is not proper");
  std::vector<Color> perm(palette + 1);
  std::iota(perm.begin(), perm.end(), Color{0});
  for (Color i = 1; i <= c; ++i) {
    const Color old = psi[e.vertex_of(constant_map(i, e.base, c))];
    if (perm[old] == i) continue;
    const auto holder = static_cast<Color>(std::find(perm.begin() + 1, perm.end(), i) - perm.begin());
    std::swap(perm[old], perm[holder]);
  }
  return perm;
}

inline SuitedColoring suited_normalize(const Coloring& psi, const ExponentialGraph& e, Color t) {
  const auto perm = normalizing_permutation(psi, e, t);
  std::vector<Color> out(psi.size());
  for (std::size_t v = 0; v < psi.size(); ++v) out[v] = perm[psi[v]];
  return SuitedColoring{Coloring(std::move(out), e.palette + t), e.palette, t};
}

struct ProductColoring {
  Graph product;  // H x E_c(H), vertex (u, phi) at u * c^n + index(phi)
  Coloring coloring;
};

/// The explicit c-coloring (u, phi) -> phi(u) of H x E_c(H).
inline ProductColoring ezs_product_coloring(const Graph& h, Color c, std::uint64_t cap = kDefaultMapCap) {
  const auto e = exponential_graph(h, c, cap);
  ProductColoring out{tensor_product(h, e.graph), {}};
  std::vector<Color> colors(out.product.order());
  for (Vertex idx = 0; idx < out.product.order(); ++idx) {
    const auto label = product_label(idx, e.size());
    colors[idx] = e.map(label.right)[label.left];
  }
  out.coloring = Coloring(std::move(colors), c);
  return out;
}

struct AntitoneReport {
  bool contained = true;  // every edge/loop of E_c(H') is one of E_c(H)
  bool equal = false;
  std::size_t super_edges = 0;  // |E(E_c(H))| incl. loops
  std::size_t sub_edges = 0;    // |E(E_c(H'))| incl. loops
  std::optional<Edge> violation;
};

/// For H a spanning subgraph of H': E_c(H') is a spanning subgraph of E_c(H).
inline AntitoneReport embed_subgraph_antitone(const Graph& h, const Graph& h_super, Color c,
                                              std::uint64_t cap = kDefaultMapCap) {
  if (h.order() != h_super.order()) throw InvalidArgument("vertex sets differ");
  if (!is_spanning_subgraph(h, h_super)) throw InvalidArgument("first graph is not a subgraph of the second");
  const auto e_small = exponential_graph(h, c, cap);
  const auto e_big = exponential_graph(h_super, c, cap);
  AntitoneReport r;
  const auto sub_edges = e_big.graph.edges();
  r.sub_edges = sub_edges.size();
  r.super_edges = e_small.graph.edges().size();
  for (const auto& edge : sub_edges)
    if (!e_small.graph.adjacent(edge.u, edge.v)) {
      r.contained = false;
      r.violation = edge;
      break;
    }
  r.equal = r.contained && r.sub_edges == r.super_edges;
  return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// Number of surjections [n] -> [l].
inline mpz_class surjections(unsigned long n, unsigned long l) {
  mpz_class total = 0;
  for (unsigned long j = 0; j <= l; ++j) {
    mpz_class term = binomial(l, j);
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), l - j, n);
    term *= p;
    if (j % 2 == 0) total += term; else total -= term;
  }
  return total;
}

struct IndependenceAudit {
  std::size_t n = 0;
  Color c = 0;
  std::size_t alpha = 0;
  mpz_class bound;      // n c^(n-1)
  mpz_class tightness;  // c^n - (c-1)^n, maps whose image contains color 1
  std::vector<VertexMap> witness;
  AuditReport report;
};

/// Exact alpha(E_c(H)) against the bound n c^(n-1) for c >= 2n, plus the
/// structural facts behind it: witness images pairwise intersect, each
/// image layer obeys the intersecting-family bound C(c-1, l-1), and the
/// weighted layer sum equals the number of maps containing color 1.
inline IndependenceAudit independence_bound_audit(const Graph& h, Color c, std::uint64_t cap = kDefaultMapCap,
                                                  const SolverOptions& options = {}) {
  const std::size_t n = h.order();
  if (n == 0) throw InvalidArgument("graph must have at least one vertex");
  if (c < 2 * n)
    throw HypothesisError("independence bound needs c >= 2n; got c=" + std::to_string(c) + ", n=" + std::to_string(n));
  const auto e = exponential_graph(h, c, cap);
  const auto solved = independence_number(e.graph, options);

  IndependenceAudit audit;
  audit.n = n;
  audit.c = c;
  audit.alpha = solved.independence_number;
  mpz_ui_pow_ui(audit.bound.get_mpz_t(), c, n - 1);
  audit.bound *= static_cast<unsigned long>(n);
  audit.tightness = map_count(n, c) - map_count(n, c - 1);
  for (Vertex v : solved.witness) audit.witness.push_back(e.map(v));

  auto& rep = audit.report;
  rep = AuditReport("independence bound for E_" + std::to_string(c) + " on " + std::to_string(n) + " vertices");
  rep.check("alpha_le_bound", str(audit.alpha), str(audit.bound), mpz_class(static_cast<unsigned long>(audit.alpha)) <= audit.bound);

  std::vector<std::vector<Color>> images;
  for (const auto& phi : audit.witness) images.push_back(phi.image());
  bool intersecting = true;
  for (std::size_t i = 0; i < images.size() && intersecting; ++i)
    for (std::size_t j = i + 1; j < images.size() && intersecting; ++j) {
      std::vector<Color> common;
      std::set_intersection(images[i].begin(), images[i].end(), images[j].begin(), images[j].end(),
                            std::back_inserter(common));
      if (common.empty()) intersecting = false;
    }
  rep.check("witness_images_pairwise_intersect", intersecting ? "yes" : "no", "yes", intersecting);

  std::map<std::size_t, std::set<std::vector<Color>>> layers;
  for (const auto& im : images) layers[im.size()].insert(im);
  for (const auto& [ell, family] : layers) {
    const auto ekr = binomial(c - 1, ell - 1);
    rep.check("layer_" + std::to_string(ell) + "_size_le_ekr", str(family.size()), str(ekr),
              mpz_class(static_cast<unsigned long>(family.size())) <= ekr);
  }

  mpz_class layer_sum = 0;
  for (std::size_t ell = 1; ell <= n; ++ell) layer_sum += binomial(c - 1, ell - 1) * surjections(n, ell);
  rep.check("layer_sum_eq_maps_containing_1", str(layer_sum), str(audit.tightness), layer_sum == audit.tightness);
  rep.check("maps_containing_1_le_bound", str(audit.tightness), str(audit.bound), audit.tightness <= audit.bound);
  rep.info("tightness_gap_bound_minus_alpha", str(mpz_class(audit.bound - static_cast<unsigned long>(audit.alpha))),
           "c^(n-2)=" + str(map_count(n >= 2 ? n - 2 : 0, c)));
  rep.info("tightness_family_minus_alpha",
           str(mpz_class(audit.tightness - static_cast<unsigned long>(audit.alpha))));
  return audit;
}

}  // namespace expc
