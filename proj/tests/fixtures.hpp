#pragma once

#include <Eigen/Dense>
#include <initializer_list>
#include <memory>
#include <vector>

#include "infoclust/discrete_source.hpp"
#include "infoclust/gaussian_source.hpp"
#include "infoclust/hypergraph.hpp"
#include "infoclust/measure.hpp"
#include "infoclust/partition.hpp"

namespace infoclust::testing {

/// Subset from 1-based labels.
inline Subset S(std::initializer_list<std::size_t> labels) {
  Subset s;
  for (auto l : labels) s.insert(l - 1);
  return s;
}

/// Partition of {1..m} from 1-based blocks.
inline Partition P(std::size_t m, std::initializer_list<std::initializer_list<std::size_t>> blocks) {
  std::vector<Subset> out;
  for (auto b : blocks) out.push_back(S(b));
  return Partition(m, std::move(out));
}

/// Six variables over uniform bits a, b, c, d:
/// Z1 = Z2 = (a, d), Z3 = a, Z4 = Z5 = b, Z6 = c.
inline DiscreteSource shared_bits_source() {
  return DiscreteSource::from_uniform_bits(4, {{0, 3}, {0, 3}, {0}, {1}, {1}, {2}});
}

/// The first three variables of shared_bits_source.
inline DiscreteSource shared_bits_triple() { return DiscreteSource::from_uniform_bits(2, {{0, 1}, {0, 1}, {0}}); }

/// Z1 = a, Z2 = b, Z3 = a xor b, Z4 = c over uniform bits.
inline DiscreteSource xor_source() {
  std::vector<PmfEntry> pmf;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t c = 0; c < 2; ++c) pmf.push_back({{a, b, a ^ b, c}, 0.125});
    }
  }
  return DiscreteSource({2, 2, 2, 2}, std::move(pmf));
}

/// Path 1-2-3-4 with edge weights 2, 3, 4.
inline WeightedHypergraph weighted_path() {
  WeightedHypergraph g(4, {"1", "2", "3", "4"});
  g.add_edge(0, 1, 2.0);
  g.add_edge(1, 2, 3.0);
  g.add_edge(2, 3, 4.0);
  return g;
}

/// Z1 = (a, c), Z2 = (a, b), Z3 = (b, c), Z4 = (d, e) over uniform bits.
inline DiscreteSource pairwise_triangle_source() {
  return DiscreteSource::from_uniform_bits(5, {{0, 2}, {0, 1}, {1, 2}, {3, 4}});
}

/// Shared-bit counts of shared_bits_source as an explicit measure.
inline TableMeasure shared_bits_measure() {
  return TableMeasure(6, {{S({1, 2}), 2.0}, {S({1, 2, 3}), 1.0}, {S({4, 5}), 1.0}, {S({2, 3}), 1.0}, {S({1, 3}), 1.0}},
                      0.0);
}

/// A measure whose clusters of a cluster are not all clusters.
inline TableMeasure non_iterative_measure() {
  return TableMeasure(4, {{S({1, 2, 3, 4}), 0.0}, {S({2, 3}), 2.0}, {S({2, 3, 4}), 3.0}}, 1.0);
}

inline GaussianSource correlated_pair(double rho) {
  Eigen::MatrixXd cov(2, 2);
  cov << 1.0, rho, rho, 1.0;
  return GaussianSource(cov);
}

}  // namespace infoclust::testing
