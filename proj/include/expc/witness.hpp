#pragma once

// Witness constructions on the strong product G [x] K_q and the parameter
// schedule they rely on.
//
// Product vertices (g, i) are numbered row-major, g * q + i, with i in
// 0..q-1 standing for the clique coordinate 1..q. Map values follow the
// 1-based color convention everywhere.
//
//   mu_r(g, i) = i      if dist(v, g) in {0, 2}
//              = q + i  if dist(v, g) = 1
//              = r      otherwise (including unreachable g)
//   nu_s(g, i) = r_s    if dist(v, g) <= 1
//              = sigma_s otherwise

#include <algorithm>
#include <cstddef>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "expc/catalog.hpp"
#include "expc/errors.hpp"
#include "expc/expgraph.hpp"
#include "expc/graph.hpp"
#include "expc/report.hpp"
#include "expc/robust.hpp"
#include "expc/vertex_map.hpp"

namespace expc {

// ---------------------------------------------------------------------------
// Parameter schedule

struct ParamSchedule {
  mpz_class n;
  mpz_class q;
  mpq_class delta;  // 1 / (81 n)
  mpz_class c;      // ceil((3 + 10 delta) q)
  mpz_class t;      // floor(delta c)
  long double x = 0;
  long double x_over_c = 0;
  AuditReport checks;

  bool all_pass() const { return checks.passed(); }
};

inline constexpr const char* kCheckHypothesis = "i_c_ge_16(nt+n^3)";
inline constexpr const char* kCheckRobustSupply = "ii_c-x_ge_2q+t+1";
inline constexpr const char* kCheckMuSupply = "iii_c-3q-2t-1_ge_t+1";
inline constexpr const char* kCheckRegion = "iv_10dq_ge_(9d+30d^2)q+2";

inline ParamSchedule param_schedule(const mpz_class& n, const mpz_class& q) {
  if (n < 4) throw InvalidArgument("parameter schedule needs n >= 4");
  if (q < 2) throw InvalidArgument("parameter schedule needs q >= 2");
  ParamSchedule s;
  s.n = n;
  s.q = q;
  s.delta = mpq_class(1, 81 * n);
  s.delta.canonicalize();
  const mpq_class cq = (3 + 10 * s.delta) * q;
  mpz_cdiv_q(s.c.get_mpz_t(), cq.get_num_mpz_t(), cq.get_den_mpz_t());
  const mpq_class tq = s.delta * s.c;
  mpz_fdiv_q(s.t.get_mpz_t(), tq.get_num_mpz_t(), tq.get_den_mpz_t());
  s.x = x_threshold(n, s.t, s.c);
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, s.c.get_mpz_t());
  const long double c_ld = std::ldexp(static_cast<long double>(mant), static_cast<int>(exp2));
  s.x_over_c = s.x / c_ld;

  const mpz_class nt_n3 = n * s.t + n * n * n;
  auto& rep = s.checks;
  rep = AuditReport("parameter schedule n=" + n.get_str() + " q=" + q.get_str());
  rep.info("delta", str(s.delta), decimal(s.delta));
  rep.info("c", str(s.c), "ceil((3+10d)q)");
  rep.info("t", str(s.t), "floor(d c)");
  rep.info("x", str(s.x), "((nt+n^3)c^3)^(1/4)");
  rep.info("x_over_c", str(s.x_over_c), "limit 1/3");

  const mpz_class rhs_i = 16 * nt_n3;
  rep.check(kCheckHypothesis, str(s.c), str(rhs_i), s.c >= rhs_i);

  // c - x >= 2q + t + 1  <=>  L = c - 2q - t - 1 >= 0 and L^4 >= (nt + n^3) c^3.
  const mpz_class slack = s.c - 2 * q - s.t - 1;
  bool supply = false;
  if (slack >= 0) {
    mpz_class l4, c3;
    mpz_pow_ui(l4.get_mpz_t(), slack.get_mpz_t(), 4);
    mpz_pow_ui(c3.get_mpz_t(), s.c.get_mpz_t(), 3);
    supply = l4 >= nt_n3 * c3;
  }
  rep.check(kCheckRobustSupply, str(c_ld - s.x, 20), str(mpz_class(2 * q + s.t + 1)), supply);

  const mpz_class lhs_iii = s.c - 3 * q - 2 * s.t - 1;
  const mpz_class rhs_iii = s.t + 1;
  rep.check(kCheckMuSupply, str(lhs_iii), str(rhs_iii), lhs_iii >= rhs_iii);

  const mpq_class lhs_iv = 10 * s.delta * q;
  const mpq_class rhs_iv = (9 * s.delta + 30 * s.delta * s.delta) * q + 2;
  rep.check(kCheckRegion, decimal(lhs_iv, 20), decimal(rhs_iv, 20), lhs_iv >= rhs_iv);
  return s;
}

struct QThreshold {
  std::string check;      // a check name or "all"
  mpz_class first_power;  // least power of two (>= 2) at which the check passes
  mpz_class transition;   // bisection in (first_power/2, first_power]: passes here, fails at transition-1
};

/// For every named check and for all of them together: double q from 2
/// until the check passes, then bisect the last doubling step. The checks
/// hold for all large q; for small q rounding can make them flicker, so the
/// transition is the bisection's answer, not a proven global minimum.
inline std::vector<QThreshold> least_passing_q(const mpz_class& n, unsigned max_doublings = 400) {
  const std::vector<std::string> names = {kCheckHypothesis, kCheckRobustSupply, kCheckMuSupply, kCheckRegion, "all"};
  auto passes = [&](const std::string& name, const mpz_class& q) {
    const auto s = param_schedule(n, q);
    if (name == "all") return s.all_pass();
    const auto* row = s.checks.find(name);
    return row && row->verdict == CheckRow::Verdict::pass;
  };
  std::vector<QThreshold> out;
  for (const auto& name : names) {
    mpz_class hi = 2;
    unsigned steps = 0;
    while (!passes(name, hi)) {
      hi *= 2;
      if (++steps > max_doublings) throw BudgetExceeded("no passing q found for " + name);
    }
    mpz_class lo = hi / 2;  // fails, unless hi == 2
    mpz_class transition = hi;
    if (hi > 2) {
      while (hi - lo > 1) {
        mpz_class mid = (lo + hi) / 2;
        if (passes(name, mid)) hi = mid; else lo = mid;
      }
      transition = hi;
    }
    mpz_class first_power = 2;
    while (!passes(name, first_power)) first_power *= 2;
    out.push_back({name, first_power, transition});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Headline inequality chain

/// With delta = 1/(81n) and c = (3 + 10 delta) q: 3.1 q > (1 + delta) c,
/// i.e. 31/10 > (1 + delta)(3 + 10 delta), exactly.
inline AuditReport headline_audit(const mpz_class& n) {
  if (n < 4) throw InvalidArgument("headline audit needs n >= 4");
  const mpq_class delta(1, 81 * n);
  const mpq_class product = (1 + delta) * (3 + 10 * delta);
  const mpq_class bound(31, 10);
  AuditReport rep("headline chain n=" + n.get_str());
  rep.info("delta", str(delta), decimal(delta));
  rep.check("delta_ge_1e-9", decimal(delta), "1e-9", delta >= mpq_class(1, 1'000'000'000));
  const mpq_class dn = delta * n;
  rep.check("delta_n_eq_1/81", str(dn), "1/81", dn == mpq_class(1, 81));
  const mpq_class third(1, 3);
  rep.check("(delta_n)^(1/4)_eq_1/3", str(mpq_class(third * third * third * third)), str(dn),
            third * third * third * third == dn);
  rep.check("3.1_gt_(1+d)(3+10d)", "31/10", decimal(product, 20), bound > product);
  rep.info("slack", decimal(mpq_class(bound - product), 20));
  return rep;
}

// ---------------------------------------------------------------------------
// The embedding iota and the mu / nu families

/// phi on V(G) -> phi*(g, i) = phi(g) on V(G [x] K_q).
inline VertexMap iota_embed(const VertexMap& phi, std::size_t q) {
  if (q < 1) throw InvalidArgument("q must be at least 1");
  std::vector<Color> values;
  values.reserve(phi.domain_order() * q);
  for (std::size_t g = 0; g < phi.domain_order(); ++g)
    for (std::size_t i = 0; i < q; ++i) values.push_back(phi[g]);
  return VertexMap(std::move(values), phi.palette());
}

/// Inverse of iota on its image; nullopt when the map varies along the
/// clique coordinate.
inline std::optional<VertexMap> iota_preimage(const VertexMap& phi_star, std::size_t q) {
  if (q < 1 || phi_star.domain_order() % q != 0) throw InvalidArgument("map domain is not a multiple of q");
  std::vector<Color> values;
  for (std::size_t g = 0; g < phi_star.domain_order() / q; ++g) {
    const Color x = phi_star[g * q];
    for (std::size_t i = 1; i < q; ++i)
      if (phi_star[g * q + i] != x) return std::nullopt;
    values.push_back(x);
  }
  return VertexMap(std::move(values), phi_star.palette());
}

inline VertexMap mu_map(const Graph& g, Vertex v, std::size_t q, Color c, Color r) {
  if (q < 1) throw InvalidArgument("q must be at least 1");
  if (c < 2 * q) throw InvalidArgument("mu maps need c >= 2q");
  if (r < q + 1 || r > c)
    throw InvalidArgument("r=" + std::to_string(r) + " outside " + std::to_string(q + 1) + ".." + std::to_string(c));
  const auto dist = bfs_distances(g, v);
  std::vector<Color> values;
  values.reserve(g.order() * q);
  for (Vertex x = 0; x < g.order(); ++x)
    for (std::size_t i = 1; i <= q; ++i) {
      if (dist[x].is(0) || dist[x].is(2)) values.push_back(static_cast<Color>(i));
      else if (dist[x].is(1)) values.push_back(static_cast<Color>(q + i));
      else values.push_back(r);
    }
  return VertexMap(std::move(values), c);
}

inline VertexMap nu_map(const Graph& g, Vertex v, std::size_t q, Color c, Color r, Color sigma) {
  if (q < 1) throw InvalidArgument("q must be at least 1");
  if (r == sigma) throw InvalidArgument("nu map needs r != sigma");
  if (r < 1 || r > c || sigma < 1 || sigma > c) throw InvalidArgument("nu map colors outside [1,c]");
  const auto dist = bfs_distances(g, v);
  std::vector<Color> values;
  values.reserve(g.order() * q);
  for (Vertex x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < q; ++i) values.push_back(dist[x].at_most(1) ? r : sigma);
  return VertexMap(std::move(values), c);
}

/// Why two members of a family fail to be adjacent in the exponential graph.
struct CoproperViolation {
  Color first = 0;   // family index (r for mu, s for nu)
  Color second = 0;
  bool coincident = false;  // the two maps are equal
  // When not coincident: product edge (a, b) with first(a) == second(b).
  Vertex a = 0;
  Vertex b = 0;
  Color value = 0;
};

struct MuFamilyCertificate {
  std::size_t q = 0;
  Color c = 0;
  Vertex center = 0;
  std::vector<VertexMap> maps;  // mu_{q+1} .. mu_c
  bool is_clique = true;
  std::optional<CoproperViolation> violation;

  std::size_t clique_size() const { return is_clique ? maps.size() : 0; }
};

namespace detail {

/// First directed constraint phi1(a) == phi2(b) over edges/loops of h.
inline std::optional<CoproperViolation> coproper_witness(const VertexMap& phi1, const VertexMap& phi2, const Graph& h) {
  for (const auto& e : h.edges()) {
    if (phi1[e.u] == phi2[e.v]) return CoproperViolation{0, 0, false, e.u, e.v, phi1[e.u]};
    if (phi1[e.v] == phi2[e.u]) return CoproperViolation{0, 0, false, e.v, e.u, phi1[e.v]};
  }
  return std::nullopt;
}

}  // namespace detail

/// Builds mu_{q+1} .. mu_c and checks that they are pairwise distinct and
/// pairwise co-proper on G [x] K_q. No girth requirement.
inline MuFamilyCertificate mu_family_check(const Graph& g, Vertex v, std::size_t q, Color c) {
  MuFamilyCertificate cert;
  cert.q = q;
  cert.c = c;
  cert.center = v;
  for (Color r = static_cast<Color>(q + 1); r <= c; ++r) cert.maps.push_back(mu_map(g, v, q, c, r));
  const Graph product = strong_product(g, complete_graph(q));
  for (std::size_t i = 0; i < cert.maps.size() && cert.is_clique; ++i)
    for (std::size_t j = i + 1; j < cert.maps.size(); ++j) {
      const Color ri = static_cast<Color>(q + 1 + i);
      const Color rj = static_cast<Color>(q + 1 + j);
      if (cert.maps[i] == cert.maps[j]) {
        cert.is_clique = false;
        cert.violation = CoproperViolation{ri, rj, true, 0, 0, 0};
        break;
      }
      if (auto w = detail::coproper_witness(cert.maps[i], cert.maps[j], product)) {
        w->first = ri;
        w->second = rj;
        cert.is_clique = false;
        cert.violation = w;
        break;
      }
    }
  return cert;
}

/// mu_family_check under the construction's hypotheses: girth >= 6, n >= 4.
/// With enforce_hypotheses false a failing hypothesis is not an error and
/// the (possibly violated) certificate is returned for diagnosis.
inline MuFamilyCertificate mu_family_audit(const Graph& g, Vertex v, std::size_t q, Color c,
                                           bool enforce_hypotheses = true) {
  if (enforce_hypotheses) {
    if (g.order() < 4) throw HypothesisError("mu family needs at least 4 vertices");
    const auto gir = girth(g);
    if (gir < Distance(6)) {
      std::ostringstream msg;
      msg << "mu family needs girth >= 6, graph has girth " << gir;
      throw HypothesisError(msg.str());
    }
  }
  return mu_family_check(g, v, q, c);
}

inline void describe(std::ostream& out, const MuFamilyCertificate& cert, std::size_t q) {
  if (cert.is_clique) {
    out << "clique size=" << cert.maps.size();
    return;
  }
  const auto& w = *cert.violation;
  out << "violation mu_" << w.first << " mu_" << w.second;
  if (w.coincident) {
    out << " coincide";
  } else {
    out << " edge (" << w.a / q + 1 << "," << w.a % q + 1 << ")~(" << w.b / q + 1 << "," << w.b % q + 1
        << ") value=" << w.value;
  }
}

/// Pairwise co-properness of the nu family, co-properness of each
/// (mu_{r_s}, nu_s), and im(mu_{r_s}) = {1..2q} u {r_s}.
inline AuditReport nu_mu_compatibility_audit(const Graph& g, Vertex v, std::size_t q, Color c,
                                             const std::vector<Color>& r_list, const std::vector<Color>& sigma_list) {
  if (r_list.size() != sigma_list.size() || r_list.empty())
    throw InvalidArgument("r and sigma lists must be nonempty and of equal length");
  std::set<Color> seen;
  for (auto x : r_list)
    if (!seen.insert(x).second) throw InvalidArgument("r list has repeated colors");
  for (auto x : sigma_list)
    if (!seen.insert(x).second) throw InvalidArgument("r and sigma lists must be disjoint and repetition-free");
  for (auto x : seen)
    if (x <= 2 * q || x > c)
      throw InvalidArgument("color " + std::to_string(x) + " outside " + std::to_string(2 * q + 1) + ".." + std::to_string(c));

  const Graph product = strong_product(g, complete_graph(q));
  std::vector<VertexMap> nus;
  for (std::size_t s = 0; s < r_list.size(); ++s) nus.push_back(nu_map(g, v, q, c, r_list[s], sigma_list[s]));

  AuditReport rep("nu/mu compatibility");
  bool nu_clique = true;
  for (std::size_t a = 0; a < nus.size(); ++a)
    for (std::size_t b = a + 1; b < nus.size(); ++b)
      if (!co_proper(nus[a], nus[b], product)) nu_clique = false;
  rep.check("nu_pairwise_coproper", nu_clique ? "yes" : "no", "yes", nu_clique);

  for (std::size_t s = 0; s < r_list.size(); ++s) {
    const auto mu = mu_map(g, v, q, c, r_list[s]);
    const std::string tag = "s" + std::to_string(s + 1);
    const bool cp = co_proper(mu, nus[s], product);
    rep.check(tag + "_mu_nu_coproper", cp ? "yes" : "no", "yes", cp);
    std::vector<Color> expected;
    for (Color x = 1; x <= 2 * q; ++x) expected.push_back(x);
    expected.push_back(r_list[s]);
    const auto im = mu.image();
    std::string im_str;
    for (auto x : im) im_str += (im_str.empty() ? "" : " ") + std::to_string(x);
    rep.check(tag + "_mu_image", "{" + im_str + "}", "{1..2q}+r", im == expected);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Contradiction replay at toy scale

struct ReplayStep {
  std::string name;
  std::string status;  // ok | fail | info | inapplicable
  std::string detail;
};

struct ReplayTrace {
  std::vector<ReplayStep> steps;
  std::string verdict;

  void write_tsv(std::ostream& out) const {
    out << "step\tstatus\tdetail\n";
    for (const auto& s : steps) out << s.name << '\t' << s.status << '\t' << s.detail << '\n';
    out << "verdict=" << verdict << '\n';
  }
};

namespace detail {

inline std::string join(const std::vector<Color>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out.empty() ? "-" : out;
}

}  // namespace detail

/// Replays the contradiction argument against a concrete suited coloring
/// of a materialized E_c(G [x] K_q), reporting where the chain stops. At any
/// materializable size the construction's hypotheses fail, so the verdict is
/// diagnostic. Throws InvalidArgument when psi is not a proper suited
/// coloring of that graph.
inline ReplayTrace contradiction_replay(const Graph& g, std::size_t q, const SuitedColoring& psi,
                                                std::uint64_t cap = kDefaultMapCap) {
  const Color c = psi.primary;
  const Color t = psi.secondary;
  const Graph product = strong_product(g, complete_graph(q));
  const auto e = exponential_graph(product, c, cap);
  if (psi.coloring.size() != e.size())
    throw InvalidArgument("coloring has " + std::to_string(psi.coloring.size()) + " entries, E_c has " +
                          std::to_string(e.size()) + " maps");
  if (!is_suited(psi, e)) throw InvalidArgument("coloring is not a proper suited coloring of E_c(G [x] K_q)");

  ReplayTrace trace;
  auto add = [&](std::string name, std::string status, std::string detail) {
    trace.steps.push_back({std::move(name), std::move(status), std::move(detail)});
  };
  auto stop = [&](const std::string& at) {
    trace.verdict = "diagnostic stopped_at=" + at;
    return trace;
  };

  const std::size_t n = g.order();
  add("input", "ok", "proper suited (c+t)-coloring; c=" + std::to_string(c) + " t=" + std::to_string(t) +
                          " maps=" + std::to_string(e.size()));
  {
    const mpz_class nn = static_cast<unsigned long>(n);
    const bool hyp = mpz_class(c) >= 16 * (nn * t + nn * nn * nn);
    const auto gir = g.is_simple() ? girth(g) : Distance(1);
    std::ostringstream d;
    d << "n=" << n << " girth=" << gir << " c>=16(nt+n^3):" << (hyp ? "yes" : "no");
    add("hypotheses", "info", d.str() + " (toy scale: diagnostic only)");
  }
  if (t >= e.size()) {
    add("pigeonhole", "inapplicable", "suitedness + pigeonhole inapplicable: t >= number of maps");
    return stop("pigeonhole");
  }

  // Restrict along iota to E_c(G°).
  const Graph looped = add_loops(g);
  const auto e_base = exponential_graph(looped, c, cap);
  std::vector<Color> restricted(e_base.size());
  for (Vertex i = 0; i < e_base.size(); ++i) restricted[i] = psi[e.vertex_of(iota_embed(e_base.map(i), q))];
  const SuitedColoring psi_base{Coloring(std::move(restricted), psi.coloring.palette()), c, t};
  const bool restricted_ok = is_suited(psi_base, e_base);
  add("restrict", restricted_ok ? "ok" : "fail",
      "induced coloring on E_c(G looped) with " + std::to_string(e_base.size()) + " maps is suited: " +
          (restricted_ok ? "yes" : "no"));
  if (!restricted_ok) return stop("restrict");

  const auto central = central_vertex_search(psi_base, e_base, t);
  const Vertex v = central.vertex;
  add("central_vertex", "info",
      "v=" + std::to_string(v + 1) + " robust={" + detail::join(central.robust_primaries) + "} x=" +
          str(central.x_threshold) + " meets_c-x:" + (central.meets_robust_bound ? "yes" : "no"));

  std::vector<Color> sigmas;
  for (Color b : central.robust_primaries)
    if (b > 2 * q && sigmas.size() < t + 1u) sigmas.push_back(b);
  if (sigmas.size() < t + 1u) {
    add("sigma_select", "fail",
        "need t+1=" + std::to_string(t + 1) + " robust colors outside 1..2q, found " + std::to_string(sigmas.size()));
    return stop("sigma_select");
  }
  add("sigma_select", "ok", "sigma={" + detail::join(sigmas) + "}");

  if (c < 2 * q + 1) {
    add("mu_clique", "fail", "c < 2q+1: mu family undefined");
    return stop("mu_clique");
  }
  const auto cert = mu_family_check(g, v, q, c);
  {
    std::ostringstream d;
    describe(d, cert, q);
    add("mu_clique", cert.is_clique ? "ok" : "fail", d.str());
  }
  if (!cert.is_clique) return stop("mu_clique");

  const std::set<Color> sigma_set(sigmas.begin(), sigmas.end());
  std::vector<Color> rs;
  for (std::size_t k = 0; k < cert.maps.size(); ++k) {
    const Color r = static_cast<Color>(q + 1 + k);
    const Color col = psi[e.vertex_of(cert.maps[k])];
    if (col <= 2 * q || sigma_set.count(col) || col > c) continue;
    if (col != r) {
      add("r_select", "fail", "mu_" + std::to_string(r) + " has primary color " + std::to_string(col) + " outside its image");
      return stop("r_select");
    }
    if (rs.size() < t + 1u) rs.push_back(r);
  }
  if (rs.size() < t + 1u) {
    add("r_select", "fail",
        "need t+1=" + std::to_string(t + 1) + " mu maps colored outside {1..2q} u sigma u secondary, found " +
            std::to_string(rs.size()));
    return stop("r_select");
  }
  add("r_select", "ok", "r={" + detail::join(rs) + "}");

  std::vector<VertexMap> nus;
  for (std::size_t s = 0; s <= t; ++s) nus.push_back(nu_map(g, v, q, c, rs[s], sigmas[s]));
  bool nu_clique = true;
  for (std::size_t a = 0; a < nus.size(); ++a)
    for (std::size_t b = a + 1; b < nus.size(); ++b)
      if (!co_proper(nus[a], nus[b], product)) nu_clique = false;
  add("nu_clique", nu_clique ? "ok" : "fail", "size=" + std::to_string(nus.size()));
  if (!nu_clique) return stop("nu_clique");

  std::vector<Color> nu_colors;
  for (const auto& nu : nus) nu_colors.push_back(psi[e.vertex_of(nu)]);
  bool avoids_sigma = true;
  bool in_range = true;
  for (std::size_t s = 0; s <= t; ++s) {
    if (nu_colors[s] == sigmas[s]) avoids_sigma = false;
    if (nu_colors[s] != rs[s] && nu_colors[s] <= c) in_range = false;
  }
  add("nu_avoid_sigma", avoids_sigma ? "ok" : "fail", "colors={" + detail::join(nu_colors) + "}");
  if (!avoids_sigma) return stop("nu_avoid_sigma");
  add("nu_color_range", in_range ? "ok" : "fail", "each nu_s colored r_s or secondary");
  if (!in_range) return stop("nu_color_range");

  for (std::size_t s = 0; s <= t; ++s) {
    if (nu_colors[s] != rs[s]) continue;
    const auto mu = mu_map(g, v, q, c, rs[s]);
    const bool cp = co_proper(mu, nus[s], product);
    add("pigeonhole", "fail",
        "nu_" + std::to_string(s + 1) + " and mu_" + std::to_string(rs[s]) + " both colored " + std::to_string(rs[s]) +
            ", co-proper: " + (cp ? "yes" : "no"));
    trace.verdict = cp ? "contradiction equal colors on a co-proper pair" : "diagnostic stopped_at=pigeonhole";
    return trace;
  }
  add("pigeonhole", "ok", "t+1 nu maps avoided r_s using " + std::to_string(t) + " secondary colors");
  return stop("pigeonhole");
}

}  // namespace expc
