#pragma once

// Seeded G(n, p) sampling, short-cycle census and pruning, and the
// large-scale arithmetic behind the random girth construction.
//
// Edge {u, v}, u < v, is present iff mix(seed, u, v) < floor(p * 2^64), so
// a graph depends only on (n, p, seed) and any pair can be queried alone.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <utility>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "expc/errors.hpp"
#include "expc/graph.hpp"
#include "expc/report.hpp"
#include "expc/solvers.hpp"

namespace expc {

struct RandomModel {
  std::size_t n = 0;
  mpq_class p;
  std::uint64_t seed = 0;

  RandomModel() = default;
  RandomModel(std::size_t n_, mpq_class p_, std::uint64_t seed_) : n(n_), p(std::move(p_)), seed(seed_) {
    p.canonicalize();
    validate();
  }

  void validate() const {
    if (n < 3) throw InvalidArgument("random model needs n >= 3");
    if (p < 0 || p >= 1) throw InvalidArgument("edge probability must lie in [0, 1)");
  }

  /// floor(p * 2^64); fits because p < 1.
  std::uint64_t threshold() const {
    mpz_class scaled = p.get_num() << 64;
    scaled /= p.get_den();
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, scaled.get_mpz_t());
    return out;
  }
};

/// Parses "1/1500", "0.000667" or "8e-6" into an exact rational.
inline mpq_class parse_probability(const std::string& text) {
  mpq_class out;
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      out = mpq_class(mpz_class(text.substr(0, slash), 10), mpz_class(text.substr(slash + 1), 10));
      if (out.get_den() == 0) throw InvalidArgument("zero denominator");
    } else {
      std::string mant = text;
      long exp10 = 0;
      if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
        mant = text.substr(0, e);
        std::size_t used = 0;
        exp10 = std::stol(text.substr(e + 1), &used);
        if (used != text.size() - e - 1) throw InvalidArgument("bad exponent");
      }
      std::string digits;
      long frac = 0;
      bool dot = false;
      for (char ch : mant) {
        if (ch == '.' && !dot) {
          dot = true;
        } else if (ch >= '0' && ch <= '9') {
          digits += ch;
          if (dot) ++frac;
        } else {
          throw InvalidArgument("bad digit");
        }
      }
      if (digits.empty()) throw InvalidArgument("no digits");
      const long shift = exp10 - frac;
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
      const mpz_class mantissa(digits, 10);
      out = shift < 0 ? mpq_class(mantissa, scale) : mpq_class(mantissa * scale);
    }
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("cannot parse probability '" + text + "'");
  } catch (const InvalidArgument&) {
    throw InvalidArgument("cannot parse probability '" + text + "'");
  }
  out.canonicalize();
  return out;
}

inline bool edge_present(std::uint64_t seed, Vertex u, Vertex v, std::uint64_t threshold) noexcept {
  if (u > v) std::swap(u, v);
  const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  return splitmix64(splitmix64(seed) ^ key) < threshold;
}

inline Graph sample_graph(const RandomModel& model) {
  model.validate();
  if (model.n > 0xffffffffULL) throw InvalidArgument("random model supports at most 2^32 vertices");
  const std::uint64_t threshold = model.threshold();
  const std::uint64_t base = splitmix64(model.seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < model.n; ++u)
    for (Vertex v = u + 1; v < model.n; ++v) {
      const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
      if (splitmix64(base ^ key) < threshold) edges.push_back({u, v});
    }
  return Graph::from_edges(model.n, edges);
}

struct CycleCensus {
  std::array<std::uint64_t, 3> counts_by_length{};  // lengths 3, 4, 5
  std::uint64_t x = 0;
  std::vector<Vertex> deleted_vertices;

  std::uint64_t count(std::size_t length) const {
    if (length < 3 || length > 5) throw InvalidArgument("census covers lengths 3..5");
    return counts_by_length[length - 3];
  }
};

inline constexpr std::uint64_t kDefaultCycleBudget = 50'000'000;

/// Calls visit(cycle) once per cycle of length 3..max_len, in discovery
/// order: increasing least vertex s, then depth-first along increasing
/// neighbors of s's path. Each cycle is reported as s, a, ..., z with
/// s < every other vertex and a < z.
template <typename Visit>
void enumerate_short_cycles(const Graph& g, std::size_t max_len, Visit&& visit,
                            std::uint64_t budget = kDefaultCycleBudget) {
  if (!g.is_simple()) throw LoopError("cycle census needs a loopless graph");
  if (max_len < 3) throw InvalidArgument("max cycle length must be at least 3");
  std::vector<Vertex> path;
  std::vector<char> on_path(g.order(), 0);
  std::uint64_t found = 0;

  auto extend = [&](auto&& self) -> void {
    const Vertex s = path.front();
    const Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (w == s && path.size() >= 3 && path[1] < last) {
        if (++found > budget) throw BudgetExceeded("more than " + std::to_string(budget) + " short cycles");
        visit(std::as_const(path));
        continue;
      }
      if (w <= s || on_path[w] || path.size() >= max_len) continue;
      path.push_back(w);
      on_path[w] = 1;
      self(self);
      on_path[w] = 0;
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    extend(extend);
    on_path[s] = 0;
  }
}

inline CycleCensus count_short_cycles(const Graph& g, std::size_t max_len = 5,
                                      std::uint64_t budget = kDefaultCycleBudget) {
  if (max_len > 5) throw InvalidArgument("census covers lengths 3..5");
  CycleCensus census;
  enumerate_short_cycles(
      g, max_len, [&](const std::vector<Vertex>& cycle) { ++census.counts_by_length[cycle.size() - 3]; }, budget);
  census.x = census.counts_by_length[0] + census.counts_by_length[1] + census.counts_by_length[2];
  return census;
}

struct PruneResult {
  Graph original;
  Graph pruned;
  std::vector<Vertex> kept;  // original indices of pruned's vertices
  CycleCensus census;
};

inline constexpr std::size_t kDefaultSampleCap = 100'000;

/// Samples G0, then removes the least vertex of every short cycle that no
/// earlier deletion already destroyed.
inline PruneResult sample_and_prune(const RandomModel& model, std::size_t vertex_cap = kDefaultSampleCap,
                                    std::uint64_t cycle_budget = kDefaultCycleBudget) {
  if (model.n > vertex_cap)
    throw BudgetExceeded("n=" + std::to_string(model.n) + " exceeds sampling cap " + std::to_string(vertex_cap));
  PruneResult out;
  out.original = sample_graph(model);
  std::vector<char> deleted(model.n, 0);
  enumerate_short_cycles(
      out.original, 5,
      [&](const std::vector<Vertex>& cycle) {
        ++out.census.counts_by_length[cycle.size() - 3];
        for (Vertex v : cycle)
          if (deleted[v]) return;
        deleted[cycle.front()] = 1;
        out.census.deleted_vertices.push_back(cycle.front());
      },
      cycle_budget);
  const auto& c = out.census.counts_by_length;
  out.census.x = c[0] + c[1] + c[2];
  for (Vertex v = 0; v < model.n; ++v)
    if (!deleted[v]) out.kept.push_back(v);
  out.pruned = induced_subgraph(out.original, out.kept);
  return out;
}

// ---------------------------------------------------------------------------
// Arithmetic

/// n^3p^3/6 + n^4p^4/8 + n^5p^5/10, exactly.
inline mpq_class expected_short_cycle_bound(const mpz_class& n, const mpq_class& p) {
  if (p < 0 || p >= 1) throw InvalidArgument("edge probability must lie in [0, 1)");
  const mpq_class np = n * p;
  const mpq_class np3 = np * np * np;
  mpq_class out = np3 / 6 + np3 * np / 8 + np3 * np * np / 10;
  out.canonicalize();
  return out;
}

/// ln(binom(n, k) (1 - p)^(k(k-1)/2)) via log-gamma.
inline long double independence_tail_log(std::uint64_t n, std::uint64_t k, long double p) {
  if (k < 1 || k > n) throw InvalidArgument("tail log needs 1 <= k <= n");
  if (p < 0 || p >= 1) throw InvalidArgument("edge probability must lie in [0, 1)");
  const long double nl = static_cast<long double>(n);
  const long double kl = static_cast<long double>(k);
  const long double log_binom = std::lgammal(nl + 1) - std::lgammal(kl + 1) - std::lgammal(nl - kl + 1);
  const long double pairs = kl * (kl - 1) / 2;
  return log_binom + pairs * std::log1pl(-p);
}

inline long double to_long_double(const mpq_class& q) {
  const mpf_class f(q, 256);
  mp_exp_t exp10 = 0;
  const std::string digits = f.get_str(exp10, 10, 30);
  if (digits.empty()) return 0;
  const bool neg = digits[0] == '-';
  const std::string text = (neg ? "-0." : "0.") + digits.substr(neg ? 1 : 0) + "e" + std::to_string(exp10);
  return std::strtold(text.c_str(), nullptr);
}

struct RandomGirthAudit {
  mpz_class n;
  mpq_class p;
  mpq_class expected_bound;
  mpz_class t_cycles;
  mpz_class k;
  long double tail_log = 0;
  mpq_class chi_f_bound;
  AuditReport report;
};

inline RandomGirthAudit random_girth_audit(const mpz_class& n = 2'000'000, const mpq_class& p = mpq_class(1, 125'000),
                                       const mpz_class& t_cycles = 115'000, const mpz_class& k = 570'000) {
  RandomGirthAudit a;
  a.n = n;
  a.p = p;
  a.t_cycles = t_cycles;
  a.k = k;
  a.report = AuditReport("random girth construction n=" + n.get_str() + " p=" + p.get_str());
  auto& rep = a.report;

  a.expected_bound = expected_short_cycle_bound(n, p);
  rep.info("expected_bound_exact", str(a.expected_bound));
  rep.check("a_expected_X_le_t", decimal(a.expected_bound, 12), str(t_cycles), a.expected_bound <= t_cycles);

  a.tail_log = independence_tail_log(n.get_ui(), k.get_ui(), to_long_double(p));
  const long double ln_quarter = std::log(0.25L);
  rep.check("b_tail_log_lt_ln(1/4)", str(a.tail_log), str(ln_quarter), a.tail_log < ln_quarter);
  rep.info("b_margin", str(ln_quarter - a.tail_log));

  a.chi_f_bound = mpq_class(n - 2 * t_cycles, k);
  a.chi_f_bound.canonicalize();
  rep.check("c_(n-2t)/k_ge_3.1", str(a.chi_f_bound), "31/10", a.chi_f_bound >= mpq_class(31, 10));

  // Markov: P[X > 2t] <= E[X] / (2t) <= 1/2.
  const mpq_class markov = a.expected_bound / (2 * t_cycles);
  rep.check("d_markov_E[X]/(2t)_le_1/2", decimal(markov), "1/2", markov <= mpq_class(1, 2));

  const mpq_class leftover = 1 - mpq_class(1, 2) - mpq_class(1, 4);
  rep.check("e_union_1-1/2-1/4_gt_0", str(leftover), "0", leftover > 0);
  return a;
}

// ---------------------------------------------------------------------------
// Desk-scale experiment

struct TrialRow {
  std::uint64_t seed = 0;
  std::size_t v0 = 0;
  std::size_t e0 = 0;
  std::uint64_t x = 0;
  std::size_t v = 0;
  Distance girth = Distance::infinite();
  std::size_t alpha_or_bound = 0;
  std::string bound_type;  // exact | greedy_lower
  mpq_class chi_f_lower;   // |V| / alpha, with alpha exact or bounded above
};

struct ExperimentReport {
  RandomModel model;
  std::vector<TrialRow> rows;
  mpq_class expected_bound;
  long double mean_x = 0;
  long double std_x = 0;  // sample standard deviation
  bool all_girth_ok = true;

  /// mean X <= bound + 3 * std / sqrt(trials).
  bool mean_within_bound() const {
    const long double se = rows.size() > 1 ? std_x / std::sqrt(static_cast<long double>(rows.size())) : 0;
    return mean_x <= to_long_double(expected_bound) + 3 * se;
  }

  void write_tsv(std::ostream& out) const {
    out << "# n=" << model.n << " p=" << model.p.get_str() << " trials=" << rows.size() << '\n';
    out << "seed\tV0\tE0\tX\tV\tgirth\talpha_or_bound\tbound_type\tchi_f_lower\n";
    for (const auto& r : rows)
      out << r.seed << '\t' << r.v0 << '\t' << r.e0 << '\t' << r.x << '\t' << r.v << '\t' << r.girth << '\t'
          << r.alpha_or_bound << '\t' << r.bound_type << '\t' << decimal(r.chi_f_lower, 8) << '\n';
    out << "# mean_X=" << str(mean_x) << " std_X=" << str(std_x) << " bound=" << decimal(expected_bound, 12)
        << " mean_within_bound=" << (mean_within_bound() ? "yes" : "no")
        << " all_girth_ge_6=" << (all_girth_ok ? "yes" : "no") << '\n';
  }
};

/// One trial per seed model.seed, model.seed + 1, ... . alpha is exact when
/// the solver finishes within alpha_budget nodes; otherwise the greedy
/// independent set is reported as a lower bound and chi_f_lower falls back
/// to |V| / (matching upper bound on alpha).
inline ExperimentReport scaled_experiment(const RandomModel& model, std::size_t trials,
                                          std::uint64_t alpha_budget = 2'000'000,
                                          std::size_t vertex_cap = kDefaultSampleCap) {
  model.validate();
  if (trials == 0) throw InvalidArgument("need at least one trial");
  ExperimentReport rep;
  rep.model = model;
  rep.expected_bound = expected_short_cycle_bound(static_cast<unsigned long>(model.n), model.p);
  long double sum = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    RandomModel m = model;
    m.seed = model.seed + i;
    const auto pr = sample_and_prune(m, vertex_cap);
    TrialRow row;
    row.seed = m.seed;
    row.v0 = pr.original.order();
    row.e0 = pr.original.edge_count();
    row.x = pr.census.x;
    row.v = pr.pruned.order();
    row.girth = girth(pr.pruned);
    if (!(row.girth >= Distance(6))) rep.all_girth_ok = false;
    std::size_t alpha_upper = 0;
    try {
      row.alpha_or_bound = independence_number(pr.pruned, SolverOptions{alpha_budget}).independence_number;
      row.bound_type = "exact";
      alpha_upper = row.alpha_or_bound;
    } catch (const BudgetExceeded&) {
      row.alpha_or_bound = greedy_independent_set(pr.pruned).size();
      row.bound_type = "greedy_lower";
      alpha_upper = matching_alpha_upper_bound(pr.pruned);
    }
    row.chi_f_lower = alpha_upper == 0 ? mpq_class(0)
                                       : mpq_class(static_cast<unsigned long>(row.v), static_cast<unsigned long>(alpha_upper));
    row.chi_f_lower.canonicalize();
    sum += static_cast<long double>(row.x);
    rep.rows.push_back(std::move(row));
  }
  rep.mean_x = sum / static_cast<long double>(trials);
  if (trials > 1) {
    long double ss = 0;
    for (const auto& r : rep.rows) {
      const long double d = static_cast<long double>(r.x) - rep.mean_x;
      ss += d * d;
    }
    rep.std_x = std::sqrt(ss / static_cast<long double>(trials - 1));
  }
  return rep;
}

}  // namespace expc
