#pragma once

// Exact chromatic and independence numbers.
//
// chromatic_number: greedy clique lower bound, DSATUR upper bound, then an
// exact k-colorability search (DSATUR branching with forward checking and the
// clique precolored) for each k between them.
//
// independence_number: looped vertices are dropped (a loop is an edge inside
// the set), degree <= 1 vertices are taken greedily (always safe), the rest
// splits into components, false twins collapse into weighted classes, and
// each component is solved as a maximum-weight clique of the complement with
// a greedy-coloring bound.
//
// Both searches are single threaded and deterministic; a node budget turns
// oversized inputs into BudgetExceeded rather than a wrong answer.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "expc/bitset.hpp"
#include "expc/coloring.hpp"
#include "expc/errors.hpp"
#include "expc/graph.hpp"

namespace expc {

struct SolverOptions {
  std::uint64_t node_budget = 200'000'000;
};

struct ChromaticResult {
  std::size_t chromatic_number = 0;
  Coloring witness;
  std::size_t clique_lower_bound = 0;
  std::uint64_t nodes = 0;
};

struct IndependenceResult {
  std::size_t independence_number = 0;
  std::vector<Vertex> witness;  // sorted
  std::uint64_t nodes = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Every pair of distinct vertices of `s` is adjacent. Loops are irrelevant.
inline bool clique_check(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s) g.check_vertex(v);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] != s[j] && !g.adjacent(s[i], s[j])) return false;
  return true;
}

/// Best clique found by greedy extension from every start vertex.
inline std::vector<Vertex> greedy_clique(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Bitset> adj(n, Bitset(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) adj[u].set(v);
  std::vector<Vertex> best;
  for (Vertex start = 0; start < n; ++start) {
    std::vector<Vertex> clique{start};
    Bitset cand = adj[start];
    while (cand.any()) {
      // Pick the candidate keeping the most candidates alive.
      Vertex pick = Bitset::npos;
      std::size_t pick_score = 0;
      for (auto v = cand.find_first(); v != Bitset::npos; v = cand.find_next(v)) {
        const std::size_t score = (cand & adj[v]).count();
        if (pick == Bitset::npos || score > pick_score) {
          pick = v;
          pick_score = score;
        }
      }
      clique.push_back(pick);
      cand &= adj[pick];
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

namespace detail {

/// Exact k-colorability by DSATUR-ordered backtracking.
class KColorSearch {
 public:
  KColorSearch(const Graph& g, Color k, std::uint64_t seed, std::uint64_t budget)
      : g_(g), n_(g.order()), k_(k), budget_(budget),
        color_(n_, 0), forbid_(n_ * (k + 1), 0), sat_(n_, 0), free_deg_(n_, 0), rank_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      free_deg_[v] = g.degree(v);
      rank_[v] = seed == 0 ? v : splitmix64(seed ^ (v * 0x2545F4914F6CDD1DULL));
    }
    seed_ = seed;
  }

  std::optional<std::vector<Color>> run(std::span<const Vertex> precolor) {
    Color used = 0;
    for (Vertex v : precolor) {
      if (used == k_) break;
      if (!assign(v, ++used)) return std::nullopt;
    }
    if (search(used)) return color_;
    return std::nullopt;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint16_t& forbid(Vertex v, Color c) { return forbid_[v * (k_ + 1) + c]; }

  // Returns false on a domain wipe-out (the assignment is still recorded
  // and must be undone by the caller).
  bool assign(Vertex v, Color c) {
    color_[v] = c;
    ++colored_;
    bool ok = true;
    for (Vertex w : g_.neighbors(v)) {
      --free_deg_[w];
      if (forbid(w, c)++ == 0) {
        ++sat_[w];
        if (color_[w] == 0 && sat_[w] >= k_) ok = false;
      }
    }
    return ok;
  }

  void unassign(Vertex v) {
    const Color c = color_[v];
    for (Vertex w : g_.neighbors(v)) {
      ++free_deg_[w];
      if (--forbid(w, c) == 0) --sat_[w];
    }
    color_[v] = 0;
    --colored_;
  }

  Vertex select() const {
    Vertex best = Bitset::npos;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != 0) continue;
      if (best == Bitset::npos || sat_[v] > sat_[best] ||
          (sat_[v] == sat_[best] &&
           (free_deg_[v] > free_deg_[best] || (free_deg_[v] == free_deg_[best] && rank_[v] < rank_[best]))))
        best = v;
    }
    return best;
  }

  bool search(Color used) {
    if (colored_ == n_) return true;
    if (++nodes_ > budget_)
      throw BudgetExceeded("coloring search exceeded node budget of " + std::to_string(budget_));
    const Vertex v = select();
    const Color limit = std::min<Color>(k_, used + 1);
    // Seeded runs rotate the order in which already-used colors are tried.
    const Color offset = (seed_ == 0 || used == 0) ? 0 : static_cast<Color>(splitmix64(seed_ + nodes_) % used);
    for (Color step = 0; step < limit; ++step) {
      const Color c = step < used ? (step + offset) % used + 1 : step + 1;
      if (forbid(v, c) != 0) continue;
      const bool ok = assign(v, c);
      if (ok && search(std::max(used, c))) return true;
      unassign(v);
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  Color k_;
  std::uint64_t budget_;
  std::uint64_t seed_ = 0;
  std::uint64_t nodes_ = 0;
  std::size_t colored_ = 0;
  std::vector<Color> color_;
  std::vector<std::uint16_t> forbid_;
  std::vector<Color> sat_;
  std::vector<std::size_t> free_deg_;
  std::vector<std::uint64_t> rank_;
};

inline void require_simple(const Graph& g, const char* op) {
  if (!g.is_simple())
    throw LoopError(std::string(op) + ": graph has loops; its chromatic number is not a well-defined integer");
}

}  // namespace detail

/// Greedy DSATUR coloring (no backtracking); an upper bound on chi.
inline Coloring dsatur_coloring(const Graph& g) {
  detail::require_simple(g, "dsatur_coloring");
  const std::size_t n = g.order();
  if (n == 0) return Coloring({}, 1);
  std::size_t max_degree = 0;
  for (Vertex v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
  detail::KColorSearch search(g, static_cast<Color>(max_degree + 1), 0, UINT64_MAX);
  auto colors = search.run({});
  Color palette = *std::max_element(colors->begin(), colors->end());
  return Coloring(std::move(*colors), palette);
}

/// Exact decision: a proper coloring with at most k colors, or nullopt.
/// A nonzero seed perturbs tie-breaking and color order so repeated calls
/// can produce different witnesses; the yes/no answer never depends on it.
inline std::optional<Coloring> find_coloring(const Graph& g, Color k, std::uint64_t seed = 0,
                                             const SolverOptions& options = {}) {
  detail::require_simple(g, "find_coloring");
  if (g.order() == 0) return Coloring({}, std::max<Color>(k, 1));
  if (k == 0) return std::nullopt;
  if (k > 65535) k = 65535;
  detail::KColorSearch search(g, k, seed, options.node_budget);
  std::vector<Vertex> clique;
  if (seed == 0) clique = greedy_clique(g);
  auto colors = search.run(clique);
  if (!colors) return std::nullopt;
  return Coloring(std::move(*colors), k);
}

inline ChromaticResult chromatic_number(const Graph& g, const SolverOptions& options = {}) {
  detail::require_simple(g, "chromatic_number");
  ChromaticResult result;
  if (g.order() == 0) {
    result.witness = Coloring({}, 1);
    return result;
  }
  const auto clique = greedy_clique(g);
  result.clique_lower_bound = clique.size();
  Coloring upper = dsatur_coloring(g);
  const std::size_t ub = upper.colors_used();
  for (std::size_t k = clique.size(); k < ub; ++k) {
    detail::KColorSearch search(g, static_cast<Color>(k), 0, options.node_budget - result.nodes);
    auto colors = search.run(clique);
    result.nodes += search.nodes();
    if (colors) {
      result.chromatic_number = k;
      result.witness = Coloring(std::move(*colors), static_cast<Color>(k));
      return result;
    }
  }
  result.chromatic_number = ub;
  result.witness = Coloring(upper.assignment(), static_cast<Color>(ub));
  return result;
}

namespace detail {

/// Maximum-weight clique of the complement of a small weighted graph.
class WeightedIndependentSearch {
 public:
  WeightedIndependentSearch(std::vector<Bitset> non_adjacent, std::vector<std::size_t> weight,
                            std::uint64_t budget)
      : comp_(std::move(non_adjacent)), weight_(std::move(weight)), budget_(budget) {}

  std::pair<std::size_t, std::vector<std::size_t>> run() {
    const std::size_t m = weight_.size();
    Bitset all(m);
    all.set_all();
    std::vector<std::size_t> current;
    expand(all, 0, current);
    return {best_weight_, best_set_};
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void expand(Bitset cand, std::size_t weight, std::vector<std::size_t>& current) {
    if (++nodes_ > budget_)
      throw BudgetExceeded("independence search exceeded node budget of " + std::to_string(budget_));
    if (weight > best_weight_) {
      best_weight_ = weight;
      best_set_ = current;
    }
    if (cand.none()) return;

    // Greedy partition of cand into cliques of G (independent in comp_);
    // each class contributes at most its heaviest vertex.
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    Bitset uncolored = cand;
    std::size_t cumulative = 0;
    while (uncolored.any()) {
      Bitset q = uncolored;
      std::size_t heaviest = 0;
      for (auto v = q.find_first(); v != Bitset::npos; v = q.find_first()) {
        q.reset(v);
        q.subtract(comp_[v]);
        uncolored.reset(v);
        heaviest = std::max(heaviest, weight_[v]);
        order.push_back(v);
        bound.push_back(0);
      }
      cumulative += heaviest;
      for (std::size_t i = bound.size(); i-- > 0 && bound[i] == 0;) bound[i] = cumulative;
    }

    for (std::size_t i = order.size(); i-- > 0;) {
      if (weight + bound[i] <= best_weight_) return;
      const std::size_t v = order[i];
      current.push_back(v);
      expand(cand & comp_[v], weight + weight_[v], current);
      current.pop_back();
      cand.reset(v);
    }
  }

  std::vector<Bitset> comp_;
  std::vector<std::size_t> weight_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t best_weight_ = 0;
  std::vector<std::size_t> best_set_;
};

}  // namespace detail

inline IndependenceResult independence_number(const Graph& g, const SolverOptions& options = {}) {
  const std::size_t n = g.order();
  IndependenceResult result;
  std::vector<char> alive(n, 0);
  std::vector<std::size_t> deg(n, 0);
  for (Vertex v = 0; v < n; ++v) alive[v] = g.has_loop(v) ? 0 : 1;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v])
      for (Vertex w : g.neighbors(v)) deg[v] += alive[w] ? 1 : 0;

  auto remove = [&](Vertex v, std::vector<Vertex>& work) {
    alive[v] = 0;
    for (Vertex w : g.neighbors(v))
      if (alive[w] && --deg[w] <= 1) work.push_back(w);
  };

  // Isolated and pendant vertices belong to some maximum independent set.
  std::vector<Vertex> work;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v] && deg[v] <= 1) work.push_back(v);
  while (!work.empty()) {
    const Vertex v = work.back();
    work.pop_back();
    if (!alive[v] || deg[v] > 1) continue;
    result.witness.push_back(v);
    for (Vertex w : g.neighbors(v))
      if (alive[w]) remove(w, work);
    remove(v, work);
  }

  // Remaining components.
  std::vector<std::size_t> comp_id(n, SIZE_MAX);
  std::uint64_t nodes_left = options.node_budget;
  for (Vertex root = 0; root < n; ++root) {
    if (!alive[root] || comp_id[root] != SIZE_MAX) continue;
    std::vector<Vertex> members{root};
    comp_id[root] = root;
    for (std::size_t head = 0; head < members.size(); ++head)
      for (Vertex w : g.neighbors(members[head]))
        if (alive[w] && comp_id[w] == SIZE_MAX) {
          comp_id[w] = root;
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());

    // False twins: identical alive neighborhoods (hence mutually non-adjacent).
    std::map<std::vector<Vertex>, std::size_t> class_of;
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v : members) {
      std::vector<Vertex> nbrs;
      for (Vertex w : g.neighbors(v))
        if (alive[w]) nbrs.push_back(w);
      auto [it, fresh] = class_of.emplace(std::move(nbrs), classes.size());
      if (fresh) classes.emplace_back();
      classes[it->second].push_back(v);
    }
    const std::size_t m = classes.size();
    std::vector<Bitset> non_adj(m, Bitset(m));
    std::vector<std::size_t> weight(m);
    for (std::size_t i = 0; i < m; ++i) {
      weight[i] = classes[i].size();
      for (std::size_t j = 0; j < m; ++j)
        if (i != j && !g.adjacent(classes[i].front(), classes[j].front())) non_adj[i].set(j);
    }
    detail::WeightedIndependentSearch search(std::move(non_adj), std::move(weight), nodes_left);
    auto [w, chosen] = search.run();
    result.nodes += search.nodes();
    nodes_left -= search.nodes();
    for (std::size_t c : chosen)
      for (Vertex v : classes[c]) result.witness.push_back(v);
  }
  std::sort(result.witness.begin(), result.witness.end());
  result.independence_number = result.witness.size();
  return result;
}

/// Minimum-degree greedy independent set; a lower bound on alpha.
inline std::vector<Vertex> greedy_independent_set(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> alive(n, 0);
  std::vector<std::size_t> deg(n, 0);
  for (Vertex v = 0; v < n; ++v) alive[v] = g.has_loop(v) ? 0 : 1;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) deg[v] += alive[w] ? 1 : 0;
  std::vector<Vertex> chosen;
  while (true) {
    Vertex pick = Bitset::npos;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && (pick == Bitset::npos || deg[v] < deg[pick])) pick = v;
    if (pick == Bitset::npos) break;
    chosen.push_back(pick);
    std::vector<Vertex> gone{pick};
    for (Vertex w : g.neighbors(pick))
      if (alive[w]) gone.push_back(w);
    for (Vertex x : gone) alive[x] = 0;
    for (Vertex x : gone)
      for (Vertex y : g.neighbors(x))
        if (alive[y]) --deg[y];
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

/// |V| minus the size of a greedy maximal matching; an upper bound on alpha
/// (an independent set meets each matching edge at most once).
inline std::size_t matching_alpha_upper_bound(const Graph& g) {
  std::vector<char> matched(g.order(), 0);
  std::size_t matching = 0;
  for (const auto& e : g.edges()) {
    if (e.u == e.v || matched[e.u] || matched[e.v]) continue;
    matched[e.u] = matched[e.v] = 1;
    ++matching;
  }
  std::size_t looped_unmatched = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!matched[v] && g.has_loop(v)) ++looped_unmatched;
  return g.order() - matching - looped_unmatched;
}

/// |V(G)| / alpha(G), exact; a lower bound on the fractional chromatic number.
inline mpq_class fractional_lower_bound(const Graph& g, const SolverOptions& options = {}) {
  detail::require_simple(g, "fractional_lower_bound");
  if (g.order() == 0) throw InvalidArgument("fractional_lower_bound needs at least one vertex");
  const auto alpha = independence_number(g, options).independence_number;
  mpq_class q(static_cast<unsigned long>(g.order()), static_cast<unsigned long>(alpha));
  q.canonicalize();
  return q;
}

}  // namespace expc
