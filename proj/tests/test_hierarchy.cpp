#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "infoclust/brute.hpp"
#include "infoclust/error.hpp"
#include "infoclust/hierarchy.hpp"

using namespace infoclust;
using namespace infoclust::testing;

namespace {

std::vector<ClusterRecord> sorted(std::vector<ClusterRecord> r) {
  std::sort(r.begin(), r.end(), [](const ClusterRecord& a, const ClusterRecord& b) { return a.set < b.set; });
  return r;
}

void expect_same_records(const std::vector<ClusterRecord>& a, const std::vector<ClusterRecord>& b, double tol = 1e-7) {
  const auto x = sorted(a);
  const auto y = sorted(b);
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_EQ(x[i].set, y[i].set);
    EXPECT_NEAR(x[i].value, y[i].value, tol);
  }
}

}  // namespace

TEST(ClustersAt, SharedBitsIntervals) {
  const auto sol = compute_psp(shared_bits_source());
  EXPECT_EQ(clusters_at(sol, -1.0), (SetFamily{Subset::full(6)}));
  EXPECT_EQ(clusters_at(sol, 0.0), (SetFamily{S({1, 2, 3}), S({4, 5})}));
  EXPECT_EQ(clusters_at(sol, 0.5), (SetFamily{S({1, 2, 3}), S({4, 5})}));
  EXPECT_EQ(clusters_at(sol, 1.0), (SetFamily{S({1, 2})}));
  EXPECT_EQ(clusters_at(sol, 1.99), (SetFamily{S({1, 2})}));
  EXPECT_TRUE(clusters_at(sol, 2.0).empty());
  EXPECT_TRUE(clusters_at(sol, 10.0).empty());
}

TEST(ClustersIterative, SharedBitsRecords) {
  const auto records = clusters_iterative(shared_bits_source());
  expect_same_records(records, {{Subset::full(6), 0.0}, {S({1, 2, 3}), 1.0}, {S({4, 5}), 1.0}, {S({1, 2}), 2.0}});
  expect_same_records(records, compute_psp(shared_bits_source()).clusters());
}

TEST(ClustersIterative, CorrelatedPairAndIndependentSource) {
  const auto pair = DiscreteSource::from_uniform_bits(1, {{0}, {0}});
  expect_same_records(clusters_iterative(pair), {{S({1, 2}), 1.0}});
  const auto ind = DiscreteSource::from_uniform_bits(3, {{0}, {1}, {2}});
  expect_same_records(clusters_iterative(ind), {{Subset::full(3), 0.0}});
}

TEST(ClustersIterative, GenericMeasureAgreesWithMmiForm) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto h = hypergraph_entropy(random_hypergraph(6, seed));
    const MmiMeasure measure(h, MmiMeasure::Method::kBrute);
    expect_same_records(clusters_iterative(measure), clusters_iterative(*h));
  }
}

TEST(BruteClusters, ExplicitSharedBitMeasure) {
  const auto measure = shared_bits_measure();
  expect_same_records(brute_clusters(measure),
                      {{Subset::full(6), 0.0}, {S({1, 2, 3}), 1.0}, {S({4, 5}), 1.0}, {S({1, 2}), 2.0}});
  expect_same_records(clusters_iterative(measure), brute_clusters(measure));
}

TEST(BruteClusters, NonIterativeMeasure) {
  const auto measure = non_iterative_measure();
  const auto records = brute_clusters(measure);
  expect_same_records(records, {{Subset::full(4), 0.0},
                                {S({1, 2, 3}), 1.0},
                                {S({1, 2, 4}), 1.0},
                                {S({1, 3, 4}), 1.0},
                                {S({2, 3, 4}), 3.0}});
  EXPECT_TRUE(is_cluster(measure, S({2, 3, 4})));
  EXPECT_FALSE(is_cluster(measure, S({2, 3})));
  // {2,3} is a first cluster of {1,2,3} even though it is not a cluster of V.
  const auto first = first_clusters(measure, S({1, 2, 3}));
  EXPECT_NEAR(first.value, 1.0, 1e-12);
  EXPECT_EQ(first.clusters, (SetFamily{S({2, 3})}));
}

TEST(IsCluster, SharedBitsSource) {
  const auto h = shared_bits_source();
  EXPECT_FALSE(is_cluster(h, S({2, 3})));
  EXPECT_TRUE(is_cluster(h, S({1, 2})));
  EXPECT_TRUE(is_cluster(h, S({1, 2, 3})));
  EXPECT_TRUE(is_cluster(h, S({4, 5})));
  EXPECT_FALSE(is_cluster(h, S({4, 5, 6})));
}

TEST(CriticalValuesMatch, WorkedSources) {
  for (const auto& h : {shared_bits_source(), pairwise_triangle_source(), DiscreteSource::from_uniform_bits(2, {{0}, {1}})}) {
    EXPECT_TRUE(critical_values_match(h, compute_psp(h)));
  }
  auto sol = compute_psp(shared_bits_source());
  sol.critical_values[2] = 2.5;
  EXPECT_FALSE(critical_values_match(shared_bits_source(), sol));
}

TEST(ClustersAt, MonotoneAndDisjoint) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto h = hypergraph_entropy(random_hypergraph(7, seed));
    const auto sol = compute_psp(*h);
    std::vector<double> grid{-1.0};
    for (double g : sol.critical_values) {
      grid.push_back(g - 1e-4);
      grid.push_back(g);
      grid.push_back(g + 1e-4);
    }
    std::sort(grid.begin(), grid.end());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto at = clusters_at(sol, grid[i]);
      for (std::size_t a = 0; a < at.size(); ++a) {
        for (std::size_t b = a + 1; b < at.size(); ++b) EXPECT_FALSE(at[a].intersects(at[b]));
      }
      if (i == 0) continue;
      const auto before = clusters_at(sol, grid[i - 1]);
      for (const auto& c : at) {
        EXPECT_TRUE(std::any_of(before.begin(), before.end(), [&](const Subset& d) { return c.is_subset_of(d); }));
      }
    }
  }
}

TEST(ClustersFromRecords, MatchesClustersAt) {
  const auto sol = compute_psp(shared_bits_source());
  const auto records = sol.clusters();
  for (double g : {-0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0}) {
    auto a = clusters_from_records(records, g);
    auto b = clusters_at(sol, g);
    canonicalize(a);
    canonicalize(b);
    EXPECT_EQ(a, b) << "gamma " << g;
  }
}
