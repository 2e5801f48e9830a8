#pragma once

// Robust primary colors of a suited coloring and the instance-checkable
// steps of the central-vertex argument:
//
//   I(v,b)   maps colored b with phi(v) = b
//   large    |I(v,b)| > n^2 c^(n-2)
//   V_b      vertices v with I(v,b) large; must be a clique of H
//   s(v)     primary colors b with v not in V_b; sum_v s(v) = nc - sum_b |V_b|
//   x        ((n t + n^3) c^3)^(1/4)

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "expc/errors.hpp"
#include "expc/expgraph.hpp"
#include "expc/graph.hpp"
#include "expc/report.hpp"
#include "expc/solvers.hpp"

namespace expc {

namespace detail {

inline void check_primary(const SuitedColoring& psi, Color b) {
  if (b < 1 || b > psi.primary)
    throw InvalidArgument("color " + std::to_string(b) + " is not a primary color (1.." + std::to_string(psi.primary) + ")");
}

inline void check_shapes(const SuitedColoring& psi, const ExponentialGraph& e) {
  if (psi.coloring.size() != e.size() || psi.primary != e.palette)
    throw InvalidArgument("suited coloring does not match the exponential graph");
}

}  // namespace detail

/// I(v,b): maps with color b and phi(v) = b, as vertex indices of E.
inline std::vector<Vertex> color_class_slice(const SuitedColoring& psi, const ExponentialGraph& e, Vertex v, Color b) {
  detail::check_shapes(psi, e);
  detail::check_primary(psi, b);
  e.base.check_vertex(v);
  std::vector<Vertex> out;
  for (Vertex i = 0; i < e.size(); ++i)
    if (psi[i] == b && e.map(i)[v] == b) out.push_back(i);
  return out;
}

/// n^2 c^(n-2); the largeness threshold for I(v,b). Requires n >= 2.
inline mpz_class large_slice_threshold(const mpz_class& n, const mpz_class& c) {
  if (n < 2) throw InvalidArgument("largeness threshold needs n >= 2");
  if (!n.fits_ulong_p()) throw InvalidArgument("n too large for an exact power");
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), c.get_mpz_t(), n.get_ui() - 2);
  return out * n * n;
}

inline bool is_large_slice(const mpz_class& slice_size, const mpz_class& n, const mpz_class& c) {
  return slice_size > large_slice_threshold(n, c);
}

/// Every map in `members` (all colored b) takes value b somewhere on the
/// closed neighborhood of v. Vacuously true for an empty class.
inline bool is_robust_class(std::span<const Vertex> members, const ExponentialGraph& e, Vertex v, Color b) {
  const auto ball = closed_neighborhood(e.base, v);
  for (Vertex i : members) {
    const auto phi = e.map(i);
    if (std::none_of(ball.begin(), ball.end(), [&](Vertex w) { return phi[w] == b; })) return false;
  }
  return true;
}

/// Psi^{-1}(b) as vertex indices of E.
inline std::vector<Vertex> color_class(const SuitedColoring& psi, Color b) {
  std::vector<Vertex> out;
  for (Vertex i = 0; i < psi.coloring.size(); ++i)
    if (psi[i] == b) out.push_back(i);
  return out;
}

/// Primary colors that are v-robust, ascending.
inline std::vector<Color> robust_colors(const SuitedColoring& psi, const ExponentialGraph& e, Vertex v) {
  detail::check_shapes(psi, e);
  e.base.check_vertex(v);
  std::vector<Color> out;
  for (Color b = 1; b <= psi.primary; ++b)
    if (is_robust_class(color_class(psi, b), e, v, b)) out.push_back(b);
  return out;
}

struct LargeRobustReport {
  Vertex vertex = 0;
  Color color = 0;
  std::size_t slice_size = 0;
  mpz_class threshold;  // n^2 c^(n-2)
  bool large = false;
  bool robust = false;
  bool holds = true;  // large implies robust
  // Failure certificate: a map of color b missing b on the closed
  // neighborhood, and how many slice members fail to be co-proper with it
  // (all of them, by independence, yet at most `threshold` can).
  std::optional<Vertex> violating_map;
  std::size_t non_coproper_in_slice = 0;
};

inline LargeRobustReport large_implies_robust_check(const SuitedColoring& psi, const ExponentialGraph& e, Vertex v,
                                                    Color b) {
  LargeRobustReport r;
  r.vertex = v;
  r.color = b;
  const auto slice = color_class_slice(psi, e, v, b);
  r.slice_size = slice.size();
  r.threshold = large_slice_threshold(static_cast<unsigned long>(e.domain_order()), e.palette);
  r.large = mpz_class(static_cast<unsigned long>(r.slice_size)) > r.threshold;
  const auto members = color_class(psi, b);
  r.robust = is_robust_class(members, e, v, b);
  r.holds = !r.large || r.robust;
  if (!r.robust) {
    const auto ball = closed_neighborhood(e.base, v);
    for (Vertex i : members) {
      const auto phi = e.map(i);
      if (std::none_of(ball.begin(), ball.end(), [&](Vertex w) { return phi[w] == b; })) {
        r.violating_map = i;
        for (Vertex j : slice)
          if (!e.graph.adjacent(i, j)) ++r.non_coproper_in_slice;
        break;
      }
    }
  }
  return r;
}

/// x = ((n t + n^3) c^3)^(1/4). Exact when the radicand is a perfect
/// fourth power; otherwise long double with relative error far below 1e-12.
inline long double x_threshold(const mpz_class& n, const mpz_class& t, const mpz_class& c) {
  const mpz_class radicand = (n * t + n * n * n) * c * c * c;
  if (radicand < 0) throw InvalidArgument("x threshold radicand is negative");
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), radicand.get_mpz_t(), 4) != 0) {
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, root.get_mpz_t());
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp2));
  }
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, radicand.get_mpz_t());
  // radicand = mant * 2^exp2 with 0.5 <= mant < 1; split exp2 = 4k + r.
  long k = exp2 / 4;
  long rem = exp2 % 4;
  if (rem < 0) {
    rem += 4;
    --k;
  }
  const long double scaled = std::ldexp(static_cast<long double>(mant), static_cast<int>(rem));
  return std::ldexp(std::pow(scaled, 0.25L), static_cast<int>(k));
}

struct SlackProfile {
  std::vector<std::vector<Vertex>> vb_sets;  // index b-1
  std::vector<std::size_t> s_values;         // index v
  std::size_t sum_s = 0;
  std::size_t sum_vb = 0;
  long double x = 0;
  long double a_exponent = 0;  // 2c / (c - x); infinite when x >= c
  bool all_cliques = true;
  std::size_t max_vb = 0;
};

/// V_b for every primary b, s(v) for every vertex, and the A exponent. No
/// triangle-freeness requirement; vb_clique_audit adds it.
inline SlackProfile slack_profile(const SuitedColoring& psi, const ExponentialGraph& e, Color t) {
  detail::check_shapes(psi, e);
  const std::size_t n = e.domain_order();
  const Color c = e.palette;
  SlackProfile p;
  p.vb_sets.resize(c);
  p.s_values.assign(n, c);
  const mpz_class threshold = n >= 2 ? large_slice_threshold(static_cast<unsigned long>(n), c) : mpz_class(0);
  for (Color b = 1; b <= c; ++b) {
    for (Vertex v = 0; v < n; ++v) {
      const auto size = color_class_slice(psi, e, v, b).size();
      if (mpz_class(static_cast<unsigned long>(size)) > threshold) {
        p.vb_sets[b - 1].push_back(v);
        --p.s_values[v];
      }
    }
    p.sum_vb += p.vb_sets[b - 1].size();
    p.max_vb = std::max(p.max_vb, p.vb_sets[b - 1].size());
    if (!clique_check(e.base, p.vb_sets[b - 1])) p.all_cliques = false;
  }
  for (auto s : p.s_values) p.sum_s += s;
  p.x = x_threshold(static_cast<unsigned long>(n), static_cast<unsigned long>(t), c);
  p.a_exponent = p.x < c ? 2.0L * c / (c - p.x) : std::numeric_limits<long double>::infinity();
  return p;
}

/// The V_b clique step for triangle-free H (loops allowed): every V_b is a
/// clique, so |V_b| <= 2, and sum_v s(v) = nc - sum_b |V_b| >= (n-2)c.
inline AuditReport vb_clique_audit(const SuitedColoring& psi, const ExponentialGraph& e, Color t,
                                   SlackProfile* profile_out = nullptr) {
  if (!is_triangle_free(e.base)) throw HypothesisError("V_b clique audit requires a triangle-free graph");
  const auto p = slack_profile(psi, e, t);
  const std::size_t n = e.domain_order();
  const std::size_t c = e.palette;
  AuditReport rep("V_b clique audit");
  rep.check("vb_all_cliques", p.all_cliques ? "yes" : "no", "yes", p.all_cliques);
  rep.check("vb_max_size_le_2", str(p.max_vb), "2", p.max_vb <= 2);
  rep.check("sum_s_identity", str(p.sum_s), str(n * c - p.sum_vb), p.sum_s == n * c - p.sum_vb);
  rep.check("sum_s_ge_(n-2)c", str(p.sum_s), str(n >= 2 ? (n - 2) * c : 0), n < 2 || p.sum_s >= (n - 2) * c);
  if (profile_out) *profile_out = p;
  return rep;
}

struct RobustReport {
  Vertex vertex = 0;
  std::vector<Color> robust_primaries;
  std::vector<std::size_t> robust_count_by_vertex;
  long double x_threshold = 0;
  bool meets_robust_bound = false;  // |robust| >= c - x
  bool hypothesis_holds = false;   // c >= 16 (n t + n^3)
};

/// The vertex with the most robust primary colors (lowest index on ties).
/// meets_robust_bound is guaranteed only when hypothesis_holds.
inline RobustReport central_vertex_search(const SuitedColoring& psi, const ExponentialGraph& e, Color t) {
  detail::check_shapes(psi, e);
  const std::size_t n = e.domain_order();
  if (n == 0) throw InvalidArgument("central vertex search needs a nonempty graph");
  RobustReport r;
  std::size_t best = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto colors = robust_colors(psi, e, v);
    r.robust_count_by_vertex.push_back(colors.size());
    if (v == 0 || colors.size() > best) {
      best = colors.size();
      r.vertex = v;
      r.robust_primaries = std::move(colors);
    }
  }
  const mpz_class nn = static_cast<unsigned long>(n);
  const mpz_class cc = e.palette;
  const mpz_class tt = t;
  r.x_threshold = x_threshold(nn, tt, cc);
  r.meets_robust_bound = static_cast<long double>(best) >= static_cast<long double>(e.palette) - r.x_threshold;
  r.hypothesis_holds = cc >= 16 * (nn * tt + nn * nn * nn);
  return r;
}

/// One row per (v, b) with slice size and flags, then one summary row per
/// vertex.
inline void write_robust_tsv(std::ostream& out, const SuitedColoring& psi, const ExponentialGraph& e, Color t) {
  const auto report = central_vertex_search(psi, e, t);
  out << "kind\tvertex\tcolor\tslice_size\tlarge\trobust\n";
  for (Vertex v = 0; v < e.domain_order(); ++v) {
    const auto robust = robust_colors(psi, e, v);
    for (Color b = 1; b <= psi.primary; ++b) {
      const auto chk = large_implies_robust_check(psi, e, v, b);
      const bool is_robust = std::binary_search(robust.begin(), robust.end(), b);
      out << "slice\t" << v + 1 << '\t' << b << '\t' << chk.slice_size << '\t' << (chk.large ? 1 : 0) << '\t'
          << (is_robust ? 1 : 0) << '\n';
    }
  }
  out << "kind\tvertex\trobust_count\tx\tmeets_bound\thypothesis\n";
  for (Vertex v = 0; v < e.domain_order(); ++v)
    out << "vertex\t" << v + 1 << '\t' << report.robust_count_by_vertex[v] << '\t' << str(report.x_threshold) << '\t'
        << (v == report.vertex ? (report.meets_robust_bound ? "yes" : "no") : "-") << '\t'
        << (report.hypothesis_holds ? "holds" : "fails(informational)") << '\n';
}

}  // namespace expc
