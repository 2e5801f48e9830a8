#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "expc/catalog.hpp"
#include "expc/randgirth.hpp"
#include "oracles.hpp"

using namespace expc;

namespace {

// ln binom(n, k) + C(k, 2) ln(1 - p) by direct compensated summation.
long double tail_log_by_summation(std::uint64_t n, std::uint64_t k, long double p) {
  long double sum = 0, carry = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    const long double term = std::log(static_cast<long double>(n - i) / static_cast<long double>(k - i)) - carry;
    const long double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  const long double kl = static_cast<long double>(k);
  return sum + kl * (kl - 1) / 2 * std::log1p(-p);
}

}  // namespace

TEST(CycleCensus, SmallGraphs) {
  const auto k4 = count_short_cycles(complete_graph(4));
  EXPECT_EQ(k4.count(3), 4u);
  EXPECT_EQ(k4.count(4), 3u);
  EXPECT_EQ(k4.count(5), 0u);
  EXPECT_EQ(k4.x, 7u);
  const auto c5 = count_short_cycles(cycle_graph(5));
  EXPECT_EQ(c5.count(5), 1u);
  EXPECT_EQ(c5.x, 1u);
  EXPECT_EQ(count_short_cycles(star_graph(6)).x, 0u);
  EXPECT_EQ(count_short_cycles(path_graph(9)).x, 0u);
  const auto k5 = count_short_cycles(complete_graph(5));
  EXPECT_EQ(k5.count(3), 10u);
  EXPECT_EQ(k5.count(4), 15u);
  EXPECT_EQ(k5.count(5), 12u);
  EXPECT_THROW(count_short_cycles(add_loops(cycle_graph(3))), LoopError);
  EXPECT_THROW(count_short_cycles(cycle_graph(3), 6), InvalidArgument);
}

TEST(CycleCensus, MatchesEnumerationOracle) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto g = oracle::random_graph(9, 0.25 + 0.02 * static_cast<double>(seed), seed);
    const auto census = count_short_cycles(g);
    for (std::size_t len = 3; len <= 5; ++len) EXPECT_EQ(census.count(len), oracle::cycles(g, len)) << seed;
  }
}

TEST(CycleCensus, EachCycleReportedOnceInCanonicalForm) {
  std::set<std::vector<Vertex>> seen;
  enumerate_short_cycles(petersen_graph(), 5, [&](const std::vector<Vertex>& cycle) {
    for (std::size_t i = 1; i < cycle.size(); ++i) EXPECT_LT(cycle.front(), cycle[i]);
    EXPECT_LT(cycle[1], cycle.back());
    EXPECT_TRUE(seen.insert(cycle).second);
  });
  EXPECT_EQ(seen.size(), 12u);  // Petersen: twelve 5-cycles, nothing shorter
}

TEST(Sampler, DeterministicAndPairwiseQueryable) {
  const RandomModel model(400, mpq_class(1, 50), 11);
  const auto a = sample_graph(model);
  EXPECT_EQ(a, sample_graph(model));
  const auto threshold = model.threshold();
  for (Vertex u = 0; u < 400; u += 7)
    for (Vertex v = 0; v < 400; v += 5)
      if (u != v) {
        ASSERT_EQ(a.adjacent(u, v), edge_present(11, u, v, threshold));
      }
  EXPECT_NE(a, sample_graph(RandomModel(400, mpq_class(1, 50), 12)));
  EXPECT_EQ(sample_graph(RandomModel(50, 0, 3)).edge_count(), 0u);
}

TEST(Sampler, EdgeDensityIsPlausible) {
  const RandomModel model(2000, mpq_class(1, 100), 5);
  const double expected = 2000.0 * 1999 / 2 / 100;
  const double got = static_cast<double>(sample_graph(model).edge_count());
  EXPECT_LT(std::abs(got - expected), 5 * std::sqrt(expected));
}

TEST(Sampler, ThresholdAndValidation) {
  EXPECT_EQ(RandomModel(3, mpq_class(1, 2), 0).threshold(), std::uint64_t{1} << 63);
  EXPECT_EQ(RandomModel(3, 0, 0).threshold(), 0u);
  EXPECT_THROW(RandomModel(2, mpq_class(1, 2), 0), InvalidArgument);
  EXPECT_THROW(RandomModel(5, 1, 0), InvalidArgument);
}

TEST(Sampler, ProbabilityParsing) {
  EXPECT_EQ(parse_probability("1/1500"), mpq_class(1, 1500));
  EXPECT_EQ(parse_probability("0.000667"), mpq_class(667, 1'000'000));
  EXPECT_EQ(parse_probability("8e-6"), mpq_class(1, 125'000));
  EXPECT_EQ(parse_probability("0.5e1"), mpq_class(5));
  EXPECT_EQ(parse_probability("010/100"), mpq_class(1, 10));
  EXPECT_THROW(parse_probability("abc"), InvalidArgument);
  EXPECT_THROW(parse_probability("1/0"), InvalidArgument);
  EXPECT_THROW(parse_probability("1e"), InvalidArgument);
}

TEST(Prune, GirthAtLeastSixAndAccounting) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const RandomModel model(300, mpq_class(1, 60), seed);
    const auto r = sample_and_prune(model);
    EXPECT_GE(girth(r.pruned), Distance(6));
    EXPECT_LE(r.census.deleted_vertices.size(), r.census.x);
    EXPECT_GE(r.pruned.order() + r.census.x, model.n);
    EXPECT_EQ(r.pruned.order() + r.census.deleted_vertices.size(), model.n);
    EXPECT_EQ(r.pruned, induced_subgraph(r.original, r.kept));
    EXPECT_EQ(count_short_cycles(r.pruned).x, 0u);
  }
}

TEST(Prune, NoShortCyclesMeansNoPruning) {
  const RandomModel model(200, mpq_class(1, 2000), 4);
  const auto r = sample_and_prune(model);
  if (r.census.x == 0) {
    EXPECT_EQ(r.pruned, r.original);
  }
  const auto empty = sample_and_prune(RandomModel(100, 0, 1));
  EXPECT_EQ(empty.pruned, empty.original);
  EXPECT_THROW(sample_and_prune(RandomModel(10, mpq_class(1, 2), 1), 5), BudgetExceeded);
}

TEST(Arithmetic, ExpectedCycleBound) {
  EXPECT_EQ(expected_short_cycle_bound(1000, mpq_class(1, 1000)), mpq_class(47, 120));
  EXPECT_EQ(expected_short_cycle_bound(1000, 0), 0);
  EXPECT_EQ(expected_short_cycle_bound(3000, mpq_class(1, 1500)), mpq_class(98, 15));
  EXPECT_EQ(expected_short_cycle_bound(2'000'000, mpq_class(1, 125'000)), mpq_class(1705984, 15));
}

TEST(Arithmetic, TailLog) {
  EXPECT_NEAR(static_cast<double>(independence_tail_log(1000, 1, 0.3L)), std::log(1000.0), 1e-12);
  EXPECT_NEAR(static_cast<double>(independence_tail_log(10, 3, 0)), std::log(120.0), 1e-12);
  const long double closed_form = independence_tail_log(2'000'000, 570'000, 8e-6L);
  const long double reference = tail_log_by_summation(2'000'000, 570'000, 8e-6L);
  EXPECT_LT(std::fabs(static_cast<double>(closed_form - reference)), 1e-6 * std::fabs(static_cast<double>(reference)));
  EXPECT_LT(closed_form, std::log(0.25L) - 1000);
  EXPECT_THROW(independence_tail_log(5, 6, 0.1L), InvalidArgument);
}

TEST(Arithmetic, FullAuditAtLargeScale) {
  const auto a = random_girth_audit();
  EXPECT_TRUE(a.report.passed()) << a.report.summary_line();
  EXPECT_EQ(a.chi_f_bound, mpq_class(59, 19));
  EXPECT_NEAR(static_cast<double>(to_long_double(a.expected_bound)), 113732.2667, 1e-3);
  // A threshold below the expectation breaks the first check.
  EXPECT_FALSE(random_girth_audit(2'000'000, mpq_class(1, 125'000), 100'000).report.passed());
}

TEST(Experiment, DeterministicReport) {
  const RandomModel model(500, mpq_class(1, 250), 9);
  std::ostringstream a, b;
  scaled_experiment(model, 3).write_tsv(a);
  scaled_experiment(model, 3).write_tsv(b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("seed\tV0\tE0\tX\tV\tgirth\talpha_or_bound\tbound_type\tchi_f_lower"), std::string::npos);
  const auto zero = scaled_experiment(RandomModel(100, 0, 1), 4);
  for (const auto& row : zero.rows) {
    EXPECT_EQ(row.x, 0u);
    EXPECT_EQ(row.alpha_or_bound, 100u);
    EXPECT_EQ(row.bound_type, "exact");
  }
}

TEST(Experiment, FallsBackToLabeledBounds) {
  const auto rep = scaled_experiment(RandomModel(400, mpq_class(1, 100), 2), 1, 1);
  const auto& row = rep.rows.front();
  EXPECT_EQ(row.bound_type, "greedy_lower");
  // chi_f_lower then rests on an upper bound for alpha.
  EXPECT_LE(row.chi_f_lower, mpq_class(static_cast<unsigned long>(row.v), static_cast<unsigned long>(row.alpha_or_bound)));
}
