#pragma once

// Batch verification suites. Each returns an AuditReport whose rows are
// deterministic for fixed arguments; witness colorings are never printed.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "expc/catalog.hpp"
#include "expc/errors.hpp"
#include "expc/expgraph.hpp"
#include "expc/graph.hpp"
#include "expc/randgirth.hpp"
#include "expc/report.hpp"
#include "expc/robust.hpp"
#include "expc/solvers.hpp"
#include "expc/witness.hpp"

namespace expc {

/// chi(G x H) <= min(chi(G), chi(H)) for every unordered pair of the
/// catalog, with equality required whenever the minimum is at most 4.
inline AuditReport verify_product_min(const std::vector<std::pair<std::string, Graph>>& catalog,
                                      const SolverOptions& options = {}) {
  AuditReport rep("chi of tensor products against min over " + std::to_string(catalog.size()) + " graphs");
  std::vector<std::size_t> chi;
  for (const auto& [name, g] : catalog) chi.push_back(chromatic_number(g, options).chromatic_number);
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = i; j < catalog.size(); ++j) {
      const auto prod = tensor_product(catalog[i].second, catalog[j].second);
      const std::size_t lhs = chromatic_number(prod, options).chromatic_number;
      const std::size_t m = std::min(chi[i], chi[j]);
      const bool ok = lhs <= m && (m > 4 || lhs == m);
      rep.check(catalog[i].first + "_x_" + catalog[j].first, str(lhs), str(m), ok);
    }
  return rep;
}

/// The coloring (u, phi) -> phi(u) of H x E_c(H) is proper with palette c.
inline AuditReport verify_product_coloring(const std::vector<std::pair<std::string, Graph>>& graphs,
                                           const std::vector<Color>& palettes, std::uint64_t cap = kDefaultMapCap) {
  AuditReport rep("explicit coloring of H x E_c(H)");
  for (const auto& [name, h] : graphs)
    for (Color c : palettes) {
      const auto pc = ezs_product_coloring(h, c, cap);
      const bool ok = is_proper_coloring(pc.product, pc.coloring) && pc.coloring.palette() <= c;
      rep.check(name + "_c" + std::to_string(c), "|V|=" + str(pc.product.order()) + " used=" +
                                                     str(pc.coloring.colors_used()),
                "palette<=" + std::to_string(c), ok);
    }
  return rep;
}

struct SuitedSample {
  SuitedColoring coloring;
  Color t = 0;
  std::uint64_t seed = 0;
};

/// Proper colorings of E_c(H) with palette c + t + (k mod (extra + 1)) from
/// seeds seed, seed+1, ..., normalized to suited form. Solver seed 0 is the
/// deterministic clique-first search; other seeds randomize the branching.
inline std::vector<SuitedSample> suited_samples(const ExponentialGraph& e, Color t, std::size_t count,
                                                std::uint64_t seed, Color extra = 0,
                                                const SolverOptions& options = {}) {
  std::vector<SuitedSample> out;
  for (std::size_t k = 0; k < count; ++k) {
    const Color tk = t + static_cast<Color>(k % (extra + 1u));
    const std::uint64_t s = seed + k;
    auto psi = find_coloring(e.graph, e.palette + tk, s, options);
    if (!psi) throw InvalidArgument("E_c(H) has no (c+" + std::to_string(tk) + ")-coloring");
    out.push_back({suited_normalize(*psi, e, tk), tk, s});
  }
  return out;
}

/// Least t with E_c(H) (c+t)-colorable; E_c(H) must be loopless.
inline Color least_secondary_count(const ExponentialGraph& e, const SolverOptions& options = {}) {
  if (!e.graph.is_simple())
    throw HypothesisError("E_c(H) has loops (c >= chi(H)); no proper coloring exists");
  const auto chi = chromatic_number(e.graph, options).chromatic_number;
  return chi > e.palette ? static_cast<Color>(chi - e.palette) : Color{0};
}

/// Suited normalization of an optimal coloring and of `samples` seeded
/// colorings of E_c(H).
inline AuditReport verify_suited(const Graph& h, const std::string& name, Color c, std::size_t samples,
                                 std::uint64_t seed, std::uint64_t cap = kDefaultMapCap,
                                 const SolverOptions& options = {}) {
  const auto e = exponential_graph(h, c, cap);
  const Color t = least_secondary_count(e, options);
  AuditReport rep("suited normalization on E_" + std::to_string(c) + "(" + name + ")");
  rep.info("maps", str(e.size()));
  rep.info("least_t", str(t), "chi(E)-c");
  const auto optimal = chromatic_number(e.graph, options).witness;
  const auto norm = suited_normalize(optimal, e, t);
  rep.check("optimal_suited", "palette=" + str(norm.palette()), "c+t=" + std::to_string(c + t), is_suited(norm, e));
  std::size_t ok = 0;
  const auto list = suited_samples(e, t, samples, seed, 0, options);
  for (const auto& s : list) ok += is_suited(s.coloring, e) ? 1 : 0;
  rep.check("samples_suited", str(ok), str(list.size()), ok == list.size());
  return rep;
}

inline AuditReport verify_independence(const Graph& h, Color c, std::uint64_t cap = kDefaultMapCap,
                                       const SolverOptions& options = {}) {
  return independence_bound_audit(h, c, cap, options).report;
}

/// Robust-color machinery over seeded suited colorings of E_c(H): V_b
/// clique structure, the slack identity, large-implies-robust on every
/// (vertex, primary color), and the central vertex.
inline AuditReport verify_robust(const Graph& h, const std::string& name, Color c, std::size_t samples,
                                 std::uint64_t seed, Color extra = 2, std::uint64_t cap = kDefaultMapCap,
                                 const SolverOptions& options = {}) {
  const auto e = exponential_graph(h, c, cap);
  const Color t = least_secondary_count(e, options);
  const bool triangle_free = is_triangle_free(h);
  AuditReport rep("robust colors on E_" + std::to_string(c) + "(" + name + ")");
  rep.info("least_t", str(t));
  rep.info("triangle_free", triangle_free ? "yes" : "no");
  const auto list = suited_samples(e, t, samples, seed, extra, options);
  std::size_t cliques = 0, small = 0, identity = 0, large_ok = 0, large_total = 0;
  std::map<std::size_t, std::size_t> central_hist;
  for (const auto& s : list) {
    const auto prof = slack_profile(s.coloring, e, s.t);
    cliques += prof.all_cliques ? 1 : 0;
    small += prof.max_vb <= 2 ? 1 : 0;
    if (triangle_free) {
      const auto audit = vb_clique_audit(s.coloring, e, s.t);
      identity += audit.passed() ? 1 : 0;
    } else {
      identity += 1;
    }
    for (Vertex v = 0; v < h.order(); ++v)
      for (Color b = 1; b <= c; ++b) {
        ++large_total;
        large_ok += large_implies_robust_check(s.coloring, e, v, b).holds ? 1 : 0;
      }
    ++central_hist[central_vertex_search(s.coloring, e, s.t).robust_primaries.size()];
  }
  const std::string total = str(list.size());
  rep.check("vb_always_clique", str(cliques), total, cliques == list.size());
  if (triangle_free) {
    rep.check("vb_size_le_2", str(small), total, small == list.size());
    rep.check("vb_clique_audit_passes", str(identity), total, identity == list.size());
  }
  rep.check("large_implies_robust", str(large_ok), str(large_total), large_ok == large_total);
  for (const auto& [count, times] : central_hist)
    rep.info("central_robust_count_" + std::to_string(count), str(times));
  return rep;
}

/// Parameter schedule at (n, q), the least-q table, and the mu / nu family
/// checks on the standard small instances.
inline AuditReport verify_witness(const mpz_class& n, const std::optional<mpz_class>& q) {
  AuditReport rep("witness constructions");
  const auto table = least_passing_q(n);
  for (const auto& row : table)
    rep.info("least_q_" + row.check, str(row.transition), "power_of_two=" + str(row.first_power));
  const mpz_class q_used = q ? *q : table.back().transition;
  rep.append(param_schedule(n, q_used).checks, "schedule_");

  struct MuCase {
    std::string name;
    Graph g;
    std::size_t q;
    Color c;
  };
  const std::vector<MuCase> cases = {{"C6", cycle_graph(6), 2, 5}, {"C7", cycle_graph(7), 2, 6},
                                     {"heawood", heawood_graph(), 3, 11}};
  for (const auto& mc : cases) {
    const auto cert = mu_family_audit(mc.g, 0, mc.q, mc.c);
    rep.check("mu_clique_" + mc.name, str(cert.clique_size()), str(mc.c - mc.q), cert.clique_size() == mc.c - mc.q);
  }
  rep.append(nu_mu_compatibility_audit(cycle_graph(6), 0, 2, 9, {5, 6}, {7, 8}), "nu_mu_C6_");

  // Without the girth hypothesis the family must break somewhere.
  const Graph c4 = cycle_graph(4);
  std::optional<Vertex> broken;
  std::string what = "none";
  for (Vertex v = 0; v < c4.order() && !broken; ++v) {
    const auto cert = mu_family_audit(c4, v, 2, 5, false);
    if (!cert.is_clique) {
      broken = v;
      std::ostringstream d;
      describe(d, cert, 2);
      what = d.str();
    }
  }
  rep.check("mu_violation_C4", what, "certificate", broken.has_value());
  return rep;
}

}  // namespace expc
