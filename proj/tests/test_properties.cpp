#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "fixtures.hpp"
#include "infoclust/brute.hpp"
#include "infoclust/hierarchy.hpp"
#include "infoclust/psp.hpp"

using namespace infoclust;
using namespace infoclust::testing;

namespace {

struct Instance {
  std::string label;
  OraclePtr h;
};

// Random hypergraph entropies and random pmfs on 4 to 6 variables.
std::vector<Instance> instances() {
  std::vector<Instance> out;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const std::size_t n = 4 + seed % 3;
    out.push_back({"hypergraph seed " + std::to_string(seed), hypergraph_entropy(random_hypergraph(n, seed))});
  }
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const std::size_t m = 4 + seed % 2;
    out.push_back({"pmf seed " + std::to_string(seed),
                   std::make_shared<DiscreteSource>(random_discrete_source(m, seed, 2 + seed % 2))});
  }
  out.push_back({"shared bits", std::make_shared<DiscreteSource>(shared_bits_source())});
  out.push_back({"pairwise triangle", std::make_shared<DiscreteSource>(pairwise_triangle_source())});
  return out;
}

// Index i of the chain partition P_i that is optimal at gamma.
std::size_t level_at(const ClusteringSolution& sol, double gamma) {
  std::size_t i = 0;
  while (i < sol.critical_values.size() && sol.critical_values[i] <= gamma) ++i;
  return i;
}

// Minimum of Σ (h(C) - gamma) over all partitions and the finest minimizer.
std::pair<double, Partition> exhaustive_dilworth(const SubmodularOracle& h, double gamma, double tol) {
  PartitionEnumerator it(h.size());
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, Partition>> seen;
  while (it.next()) {
    const auto p = it.partition();
    double v = 0.0;
    for (const auto& c : p.blocks()) v += h(c) - gamma;
    best = std::min(best, v);
    seen.emplace_back(v, p);
  }
  Partition finest = Partition::trivial(h.size());
  for (const auto& [v, p] : seen) {
    if (v <= best + tol && p.size() > finest.size()) finest = p;
  }
  return {best, finest};
}

std::vector<double> probe_points(const ClusteringSolution& sol) {
  const auto& g = sol.critical_values;
  std::vector<double> out{g.front() - 1.0, g.back() + 1.0};
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.push_back(g[i]);
    if (i + 1 < g.size()) out.push_back(0.5 * (g[i] + g[i + 1]));
  }
  return out;
}

}  // namespace

TEST(Properties, ClustersFormLaminarFamily) {
  for (const auto& [label, h] : instances()) {
    const auto sol = compute_psp(*h);
    SetFamily sets;
    for (const auto& c : sol.clusters()) sets.push_back(c.set);
    EXPECT_TRUE(is_laminar(sets)) << label;
    EXPECT_LE(sets.size(), h->size() - 1) << label;
    EXPECT_LE(sol.critical_values.size(), h->size() - 1) << label;
    EXPECT_EQ(sol.chain.front(), Partition::trivial(h->size())) << label;
    EXPECT_EQ(sol.chain.back(), Partition::singletons(h->size())) << label;
    for (std::size_t i = 0; i + 1 < sol.chain.size(); ++i) {
      EXPECT_TRUE(refines(sol.chain[i + 1], sol.chain[i])) << label;
      EXPECT_NE(sol.chain[i + 1], sol.chain[i]) << label;
    }
    for (std::size_t i = 0; i + 1 < sol.critical_values.size(); ++i) {
      EXPECT_LT(sol.critical_values[i], sol.critical_values[i + 1]) << label;
    }
  }
}

TEST(Properties, ExtremeCriticalValues) {
  for (const auto& [label, h] : instances()) {
    const auto sol = compute_psp(*h);
    EXPECT_NEAR(sol.critical_values.front(), brute_mmi(*h).value, 1e-7) << label;
    double best = -std::numeric_limits<double>::infinity();
    const std::uint64_t full = (std::uint64_t{1} << h->size()) - 1;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
      const auto b = Subset::from_mask(mask);
      if (b.count() < 2) continue;
      best = std::max(best, brute_mmi(*h->restrict_to(b)).value);
    }
    EXPECT_NEAR(sol.critical_values.back(), best, 1e-7) << label;
  }
}

TEST(Properties, ChainIsFinestMinimizerEverywhere) {
  for (const auto& [label, h] : instances()) {
    const auto sol = compute_psp(*h);
    for (double gamma : probe_points(sol)) {
      const auto [value, finest] = exhaustive_dilworth(*h, gamma, 1e-9);
      const auto& expected = sol.chain[level_at(sol, gamma)];
      EXPECT_EQ(finest, expected) << label << " gamma " << gamma;
      const auto greedy = dilworth_truncation(*h, gamma);
      EXPECT_NEAR(greedy.value, value, 1e-9) << label << " gamma " << gamma;
      EXPECT_EQ(greedy.partition, expected) << label << " gamma " << gamma;
    }
  }
}

TEST(Properties, DilworthValueIsConcaveWithIntegerSlopes) {
  for (const auto& [label, h] : instances()) {
    const auto sol = compute_psp(*h);
    const double lo = sol.critical_values.front() - 1.0;
    const double hi = sol.critical_values.back() + 1.0;
    const int steps = 64;
    std::vector<double> gamma;
    std::vector<DilworthPoint> pts;
    for (int k = 0; k <= steps; ++k) {
      gamma.push_back(lo + (hi - lo) * k / steps);
      pts.push_back(dilworth_truncation(*h, gamma.back()));
    }
    double prev_slope = 0.0;
    for (int k = 0; k < steps; ++k) {
      const double slope = (pts[k + 1].value - pts[k].value) / (gamma[k + 1] - gamma[k]);
      EXPECT_LE(slope, prev_slope + 1e-7) << label;
      EXPECT_GE(slope, -double(h->size()) - 1e-7) << label;
      EXPECT_LE(slope, -1.0 + 1e-7) << label;
      prev_slope = slope;
    }
    for (const auto& p : pts) {
      // On the partition's own line: value = Σ h(C) - gamma |P|.
      EXPECT_NEAR(p.value, partition_value(*h, p.partition) - p.gamma * double(p.partition.size()), 1e-9) << label;
    }
  }
}

TEST(Properties, ModularTermsCancel) {
  std::mt19937_64 rng(11);
  for (const auto& [label, h] : instances()) {
    const auto sol = compute_psp(*h);
    std::vector<double> w(h->size());
    for (auto& x : w) x = 4.0 * unit_double(rng()) - 2.0;
    std::vector<std::pair<Subset, double>> entries;
    const std::uint64_t full = (std::uint64_t{1} << h->size()) - 1;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
      const auto b = Subset::from_mask(mask);
      double v = (*h)(b);
      b.for_each([&](std::size_t i) { v += w[i]; });
      entries.emplace_back(b, v);
    }
    const auto shifted = TableSource::from_entries(h->size(), entries);
    const auto other = compute_psp(shifted);
    EXPECT_EQ(other.chain, sol.chain) << label;
    ASSERT_EQ(other.critical_values.size(), sol.critical_values.size()) << label;
    for (std::size_t i = 0; i < sol.critical_values.size(); ++i) {
      EXPECT_NEAR(other.critical_values[i], sol.critical_values[i], 1e-7) << label;
    }
  }
}

TEST(Properties, ConstantOffsetShiftsCriticalValues) {
  for (const auto& [label, h] : instances()) {
    const auto sol = compute_psp(*h);
    for (double tau : {-3.0, 0.75}) {
      const AffineOracle shifted(h, 1.0, 0.0, tau);
      const auto other = compute_psp(shifted);
      EXPECT_EQ(other.chain, sol.chain) << label;
      ASSERT_EQ(other.critical_values.size(), sol.critical_values.size()) << label;
      for (std::size_t i = 0; i < sol.critical_values.size(); ++i) {
        EXPECT_NEAR(other.critical_values[i], sol.critical_values[i] + tau, 1e-7) << label;
      }
    }
  }
}

TEST(Properties, ScaleAndLogBase) {
  for (const auto& [label, h] : instances()) {
    const auto sol = compute_psp(*h);
    const AffineOracle scaled(h, 2.5, 0.0);
    const auto other = compute_psp(scaled);
    EXPECT_EQ(other.chain, sol.chain) << label;
    ASSERT_EQ(other.critical_values.size(), sol.critical_values.size()) << label;
    for (std::size_t i = 0; i < sol.critical_values.size(); ++i) {
      EXPECT_NEAR(other.critical_values[i], 2.5 * sol.critical_values[i], 1e-7) << label;
    }
  }
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto d = random_discrete_source(5, seed, 3);
    const auto nats = d.with_log_base(std::exp(1.0));
    const auto a = compute_psp(d);
    const auto b = compute_psp(nats);
    EXPECT_EQ(a.chain, b.chain);
    ASSERT_EQ(a.critical_values.size(), b.critical_values.size());
    for (std::size_t i = 0; i < a.critical_values.size(); ++i) {
      EXPECT_NEAR(b.critical_values[i], a.critical_values[i] * std::log(2.0), 1e-7);
    }
  }
}

TEST(Properties, EntropicMmiIsNonNegative) {
  for (const auto& [label, h] : instances()) {
    const auto r = mmi(*h);
    EXPECT_GE(r.value, -1e-9) << label;
    EXPECT_NEAR(r.value, i_partition(*h, r.partition), 1e-9) << label;
  }
}

TEST(Properties, ClusterValuesAreRestrictedMmi) {
  for (const auto& [label, h] : instances()) {
    const auto sol = compute_psp(*h);
    for (const auto& c : sol.clusters()) {
      EXPECT_NEAR(c.value, brute_mmi(*h->restrict_to(c.set)).value, 1e-7) << label << " " << c.set.to_string();
    }
    auto brute = brute_clusters(*h);
    std::sort(brute.begin(), brute.end(), [](const ClusterRecord& a, const ClusterRecord& b) { return a.set < b.set; });
    const auto computed = sol.clusters();
    ASSERT_EQ(brute.size(), computed.size()) << label;
    for (std::size_t k = 0; k < brute.size(); ++k) {
      EXPECT_EQ(brute[k].set, computed[k].set) << label;
      EXPECT_NEAR(brute[k].value, computed[k].value, 1e-7) << label;
    }
  }
}

TEST(Properties, ClustersAtMatchDefinition) {
  for (const auto& [label, h] : instances()) {
    const auto sol = compute_psp(*h);
    const auto brute = brute_clusters(*h);
    for (double gamma : probe_points(sol)) {
      // Maximal sets B with I(Z_B) > gamma, with the tolerance clusters_at uses.
      auto expected = clusters_from_records(brute, gamma + 1e-9);
      auto got = clusters_at(sol, gamma);
      canonicalize(expected);
      canonicalize(got);
      EXPECT_EQ(got, expected) << label << " gamma " << gamma;
    }
  }
}
