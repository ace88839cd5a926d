#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "infoclust/brute.hpp"
#include "infoclust/error.hpp"
#include "infoclust/sfm.hpp"

using namespace infoclust;
using namespace infoclust::testing;

namespace {

/// h(B) - gamma - x(B) with x uniform in [0, scale).
std::vector<double> random_x(std::size_t m, std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  std::vector<double> x(m);
  for (auto& v : x) v = scale * unit_double(rng());
  return x;
}

SfmOptions mode(SfmMode m) {
  SfmOptions o;
  o.mode = m;
  return o;
}

}  // namespace

TEST(SfmPinned, SingleElementUniverse) {
  const auto h = shared_bits_source();
  const std::vector<double> x(6, 0.0);
  const ResidualOracle f(h, 0.5, x);
  const auto r = sfm_pinned(f, S({1}), 0);
  EXPECT_EQ(r.minimizer, S({1}));
  EXPECT_DOUBLE_EQ(r.value, 1.5);
}

TEST(SfmPinned, ModularFunctionMinimizesElementwise) {
  const std::vector<double> w{-1.0, 0.5, 2.0, -0.25, 3.0};
  std::vector<double> table(1 << 5, 0.0);
  for (std::uint64_t mask = 1; mask < table.size(); ++mask) {
    for (std::size_t i = 0; i < 5; ++i) {
      if (mask >> i & 1) table[mask] += w[i];
    }
  }
  const TableSource f(5, table);
  for (auto m : {SfmMode::kExhaustive, SfmMode::kMinNormPoint}) {
    auto r = sfm_pinned(f, Subset::full(5), 0, mode(m));
    EXPECT_EQ(r.minimizer, S({1, 4}));
    EXPECT_NEAR(r.value, -1.25, 1e-9);
    r = sfm_pinned(f, Subset::full(5), 2, mode(m));
    EXPECT_EQ(r.minimizer, S({1, 3, 4}));
    EXPECT_NEAR(r.value, 0.75, 1e-9);
  }
}

TEST(SfmPinned, PathCutStepMatchesBruteForce) {
  const auto cut = hypergraph_undirected_cut(weighted_path());
  const AffineOracle f(cut, 1.0, -1.0);
  const auto brute = brute_sfm(f, Subset::full(4), 0);
  for (auto m : {SfmMode::kAuto, SfmMode::kExhaustive, SfmMode::kMinNormPoint}) {
    const auto r = sfm_pinned(f, Subset::full(4), 0, mode(m));
    EXPECT_NEAR(r.value, brute.value, 1e-9);
    EXPECT_EQ(r.minimizer, brute.minimizer);
  }
}

TEST(SfmPinned, ValueNeverExceedsSingletonAndConstantShifts) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = random_hypergraph(8, seed);
    const auto h = hypergraph_entropy(g);
    const auto x = random_x(8, seed, 1.0);
    const ResidualOracle f(*h, 0.7, x);
    const auto r = sfm_pinned(f, Subset::full(8), seed % 8);
    EXPECT_LE(r.value, f(Subset::singleton(seed % 8)) + 1e-12);
    const AffineOracle shifted(borrow(f), 1.0, 0.0, 3.25);
    const auto s = sfm_pinned(shifted, Subset::full(8), seed % 8);
    EXPECT_EQ(s.minimizer, r.minimizer);
    EXPECT_NEAR(s.value, r.value + 3.25, 1e-9);
  }
}

TEST(SfmPinned, MinNormPointAgreesWithBruteForceOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 3 + seed % 8;  // 3..10
    const auto h = hypergraph_entropy(random_hypergraph(n, seed));
    const auto x = random_x(n, seed + 1000, 1.2);
    const ResidualOracle f(*h, 0.3, x);
    const std::size_t pinned = seed % n;
    const auto brute = brute_sfm(f, Subset::full(n), pinned);
    const auto r = sfm_pinned(f, Subset::full(n), pinned, mode(SfmMode::kMinNormPoint));
    EXPECT_EQ(r.method, SfmMethod::kMinNormPoint);
    EXPECT_NEAR(r.value, brute.value, 1e-7) << "seed " << seed;
    EXPECT_EQ(r.minimizer, brute.minimizer) << "seed " << seed;
  }
}

TEST(SfmPinned, SubUniverseRespectsBounds) {
  const auto h = hypergraph_entropy(random_hypergraph(9, 5));
  const auto x = random_x(9, 6, 1.0);
  const ResidualOracle f(*h, 0.5, x);
  const Subset u = S({2, 4, 5, 7, 9});
  for (auto m : {SfmMode::kExhaustive, SfmMode::kMinNormPoint}) {
    const auto r = sfm_pinned(f, u, 3, mode(m));
    const auto brute = brute_sfm(f, u, 3);
    EXPECT_TRUE(r.minimizer.is_subset_of(u));
    EXPECT_TRUE(r.minimizer.contains(3));
    EXPECT_EQ(r.minimizer, brute.minimizer);
    EXPECT_NEAR(r.value, brute.value, 1e-7);
  }
  EXPECT_THROW(sfm_pinned(f, u, 0), InputError);
}

TEST(SfmPinned, MinCutRouteMatchesEnumeration) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = random_hypergraph(10, seed, 15);
    for (auto oracle : {OraclePtr(hypergraph_entropy(g, 0.0)), OraclePtr(hypergraph_in_cut(g)),
                        OraclePtr(hypergraph_undirected_cut(g))}) {
      const auto x = random_x(10, seed + 7, 0.8);
      const ResidualOracle f(*oracle, 0.4, x);
      const auto form = f.cut_form();
      ASSERT_TRUE(form.has_value());
      const auto cut = min_cut_pinned(*form, 10, Subset::full(10), seed % 10);
      const auto brute = brute_sfm(f, Subset::full(10), seed % 10);
      EXPECT_NEAR(cut.value, brute.value, 1e-9);
      EXPECT_EQ(cut.minimizer, brute.minimizer);
      EXPECT_EQ(cut.method, SfmMethod::kMinCut);
    }
  }
}

TEST(MinimumNormPoint, ZeroFunction) {
  const TableSource zero(4, std::vector<double>(16, 0.0));
  const auto r = minimum_norm_point(zero);
  EXPECT_TRUE(r.minimizer.empty());
  for (double v : r.x) EXPECT_NEAR(v, 0.0, 1e-12);
}

TEST(MinimumNormPoint, CutMinimumIsEmptySet) {
  const auto cut = hypergraph_undirected_cut(weighted_path());
  const auto r = minimum_norm_point(*cut);
  EXPECT_TRUE(r.minimizer.empty());
  EXPECT_NEAR(r.value, 0.0, 1e-12);
}

TEST(MinimumNormPoint, RandomGraphCutsMatchExhaustive) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::mt19937_64 rng(seed);
    WeightedHypergraph g(10);
    for (std::size_t u = 0; u < 10; ++u) {
      for (std::size_t v = u + 1; v < 10; ++v) {
        if (unit_double(rng()) < 0.3) g.add_edge(u, v, unit_double(rng()));
      }
    }
    const auto cut = hypergraph_undirected_cut(g);
    const AffineOracle f(cut, 1.0, -0.6);
    const auto r = minimum_norm_point(f);
    double best = 0.0;
    for (std::uint64_t mask = 0; mask < 1024; ++mask) best = std::min(best, f(Subset::from_mask(mask)));
    EXPECT_NEAR(r.value, best, 1e-7);
    EXPECT_NEAR(f(r.minimizer), best, 1e-7);
  }
}

TEST(MinimumNormPoint, BudgetExhaustionCarriesBound) {
  const auto h = hypergraph_entropy(random_hypergraph(12, 3, 20));
  const auto x = random_x(12, 4, 2.0);
  const ResidualOracle f(*h, 0.5, x);
  SfmOptions o = mode(SfmMode::kMinNormPoint);
  o.mnp_max_steps = 1;
  try {
    sfm_pinned(f, Subset::full(12), 0, o);
    FAIL() << "expected the step budget to run out";
  } catch (const SolverError& e) {
    EXPECT_LE(e.best_bound(), f(Subset::singleton(0)) + 1e-9);
  }
}

TEST(SfmMode, Parsing) {
  EXPECT_EQ(parse_sfm_mode("auto"), SfmMode::kAuto);
  EXPECT_EQ(parse_sfm_mode("exhaustive"), SfmMode::kExhaustive);
  EXPECT_EQ(parse_sfm_mode("mnp"), SfmMode::kMinNormPoint);
  EXPECT_THROW(parse_sfm_mode("fast"), InputError);
}
