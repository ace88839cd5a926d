#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "infoclust/discrete_source.hpp"
#include "infoclust/oracle.hpp"
#include "infoclust/partition.hpp"
#include "infoclust/psp.hpp"

namespace infoclust {

/// h({i}) + h({j}) - h({i,j}).
double pairwise_mi(const SubmodularOracle& h, std::size_t i, std::size_t j);

/// Complete graph weighted by pairwise mutual information, edges (i, j)
/// with i < j in lexicographic order.
using MirnGraph = WeightedGraph;
MirnGraph build_mirn(const SubmodularOracle& h);

/// A spanning tree; |V| - 1 edges, connected.
using WeightedTree = WeightedGraph;
/// Throws InputError unless `tree` is a spanning tree of its vertices.
void validate_tree(const WeightedTree& tree);

/// Maximum-weight spanning tree (Kruskal). Weights are compared after
/// rounding to 1e-9; ties go to the lexicographically smaller edge.
WeightedTree chow_liu_tree(const MirnGraph& mirn);

/// Non-singleton components after dropping edges of weight <= γ.
SetFamily mirn_clusters(const MirnGraph& mirn, double gamma);

/// Clustering of a Markov-tree source read off its tree: the critical
/// values are the distinct edge weights and P_i are the components left
/// after removing edges of weight <= γ_i.
ClusteringSolution tree_source_solution(const WeightedTree& tree, double log_base = 2.0);

/// Dependency-tree approximation P_T(z) = Π_i P(z_i) Π_{(i,j)∈T}
/// P(z_i,z_j) / (P(z_i) P(z_j)) of a discrete source, as a new source.
DiscreteSource tree_approximation(const DiscreteSource& source, const WeightedTree& tree);

struct MacResult {
  double cost = 0.0;
  Partition partition;
  bool exhaustive = false;
};

/// Minimum average cost min_{|P| > k} Σ_{C∈P} f(C) / (|P| - k) with the
/// finest minimizing partition. Enumerates partitions for |V| <= 12; larger
/// ground sets need f >= 0 and use the unconstrained Dilworth iteration.
MacResult mac_clustering(const SubmodularOracle& f, std::size_t k, const SfmOptions& options = {});
/// The Dilworth route regardless of size; requires f >= 0.
MacResult mac_clustering_dilworth(const SubmodularOracle& f, std::size_t k, const SfmOptions& options = {});

/// The coarsest partition of the chain with more than k blocks.
Partition psp_partition_for_k(const ClusteringSolution& solution, std::size_t k);

/// Compares MIRN clusters of a discrete source with the info-clustering of
/// its Chow-Liu tree approximation at every edge weight and ±1e-6 around it.
struct MirnReport {
  std::vector<double> thresholds;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};
MirnReport verify_mirn_equivalence(const DiscreteSource& source, const PspOptions& options = {});

}  // namespace infoclust
