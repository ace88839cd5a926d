#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace infoclust {

/// Dinic's algorithm on real capacities.
class MaxFlow {
 public:
  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  explicit MaxFlow(std::size_t nodes = 0);

  std::size_t add_node();
  void add_edge(std::size_t from, std::size_t to, double capacity);
  std::size_t node_count() const { return adj_.size(); }

  /// Residual capacities below `eps` count as saturated.
  double solve(std::size_t s, std::size_t t, double eps = 1e-12);

  /// Nodes reachable from s in the residual graph after solve(); this is
  /// the source side of the inclusion-wise minimal minimum cut.
  std::vector<bool> source_side() const;

 private:
  struct Arc {
    std::size_t to;
    std::size_t rev;
    double cap;
  };
  bool build_levels();
  double push(std::size_t v, double limit);

  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
  std::size_t s_ = 0;
  std::size_t t_ = 0;
  double eps_ = 1e-12;
};

}  // namespace infoclust
