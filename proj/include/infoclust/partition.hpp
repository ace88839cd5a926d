#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "infoclust/subset.hpp"

namespace infoclust {

/// The objects being clustered, canonicalized to indices 0..m-1.
/// Names are kept only for output.
class GroundSet {
 public:
  explicit GroundSet(std::size_t m);
  explicit GroundSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  Subset all() const { return Subset::full(size()); }

 private:
  std::vector<std::string> names_;
};

/// A partition of {0..m-1} into non-empty disjoint blocks.
/// Blocks are kept sorted by smallest element.
class Partition {
 public:
  Partition() = default;
  /// Throws InputError unless the blocks partition {0..m-1}.
  Partition(std::size_t m, std::vector<Subset> blocks);

  static Partition trivial(std::size_t m);
  static Partition singletons(std::size_t m);
  /// labels[i] is the block id of element i; ids need not be contiguous.
  static Partition from_labels(const std::vector<std::size_t>& labels);

  std::size_t ground_size() const { return m_; }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<Subset>& blocks() const { return blocks_; }
  const Subset& block(std::size_t k) const { return blocks_[k]; }
  /// Index of the block containing element i.
  std::size_t block_of(std::size_t i) const;

  friend bool operator==(const Partition&, const Partition&) = default;

  std::string to_string() const;

 private:
  std::size_t m_ = 0;
  std::vector<Subset> blocks_;
};

/// Simple undirected graph with real edge weights, vertices 0..m-1.
struct WeightedEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 0.0;
};

struct WeightedGraph {
  std::size_t vertex_count = 0;
  std::vector<WeightedEdge> edges;
};

/// Inclusion-wise maximal members of a family (duplicates collapse).
SetFamily maximal_sets(const SetFamily& family);

/// p ⪯ q: every block of p lies inside some block of q.
/// Throws InputError when the ground sets differ.
bool refines(const Partition& p, const Partition& q);

/// Components of the subgraph keeping only edges with weight > gamma.
Partition connected_components(const WeightedGraph& graph, double gamma);

/// Blocks with at least two elements.
SetFamily non_singleton_blocks(const Partition& p);

/// Any two members are nested or disjoint.
bool is_laminar(const SetFamily& family);

/// Sorts by smallest element and removes duplicates.
void canonicalize(SetFamily& family);

}  // namespace infoclust
