#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "infoclust/discrete_source.hpp"
#include "infoclust/hypergraph.hpp"
#include "infoclust/oracle.hpp"
#include "infoclust/partition.hpp"
#include "infoclust/psp.hpp"
#include "infoclust/sfm.hpp"

namespace infoclust {

class InfoMeasure;

/// Bell number B(m); exact up to m = 25.
std::uint64_t bell_number(std::size_t m);

/// Walks every set partition of {0..m-1} once, as restricted-growth
/// strings in lexicographic order, starting from the single block.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(std::size_t m);

  /// Moves to the next partition; false once all have been visited.
  /// The first call yields {V}.
  bool next();

  const std::vector<std::size_t>& labels() const { return labels_; }
  std::size_t block_count() const { return blocks_; }
  /// Blocks as bitmasks (m <= 64), block k holding the elements labelled k.
  std::vector<std::uint64_t> masks() const;
  Partition partition() const { return Partition::from_labels(labels_); }

 private:
  std::size_t m_;
  bool started_ = false;
  std::vector<std::size_t> labels_;
  std::vector<std::size_t> prefix_max_;  // max label among labels_[0..i]
  std::size_t blocks_ = 0;
};

/// Exact MMI by enumerating all partitions with at least two blocks.
/// Among minimizers, returns the one refining all others and throws
/// SolverError if no such partition exists.
MmiResult brute_mmi(const SubmodularOracle& h, std::size_t limit = 10);

/// Clusters straight from the definition: for every candidate threshold
/// (the distinct values of the measure), the maximal sets above it.
std::vector<ClusterRecord> brute_clusters(const InfoMeasure& measure, double tol = 1e-9);
/// Same with the measure I(Z_B) computed by brute_mmi.
std::vector<ClusterRecord> brute_clusters(const SubmodularOracle& h, std::size_t limit = 10);

/// Exhaustive pinned minimization with the intersection of all minimizers.
SfmResult brute_sfm(const SubmodularOracle& f, const Subset& universe, std::size_t pinned, std::size_t limit = 20);

/// Random hypergraph: each edge contains each vertex with probability ½
/// (empty edges are dropped), weight uniform in [0, 1).
WeightedHypergraph random_hypergraph(std::size_t vertices, std::uint64_t seed, std::size_t edges = 12);

/// Random joint pmf over `alphabet`^m outcomes with skewed weights.
DiscreteSource random_discrete_source(std::size_t m, std::uint64_t seed, std::size_t alphabet = 2);

/// Uniform double in [0, 1) from 53 random bits.
double unit_double(std::uint64_t bits);

}  // namespace infoclust
