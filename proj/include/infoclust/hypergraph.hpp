#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "infoclust/oracle.hpp"

namespace infoclust {

struct Hyperedge {
  Subset vertices;                  // φ(e), non-empty
  double weight = 0.0;              // c(e) >= 0
  std::optional<std::size_t> head;  // ρ(e) ∈ φ(e)
};

/// Hypergraph with non-negative edge weights on vertices 0..n-1.
///
/// As a source, each edge carries an independent random variable of
/// entropy c(e) observed by every vertex in φ(e), so h(B) is the total
/// weight of the edges touching B.
class WeightedHypergraph {
 public:
  explicit WeightedHypergraph(std::size_t vertex_count, std::vector<std::string> names = {});

  /// Throws InputError for empty or out-of-range φ(e), negative or
  /// non-finite weight, or a head outside φ(e).
  void add_edge(const Subset& vertices, double weight, std::optional<std::size_t> head = std::nullopt);
  void add_edge(std::size_t u, std::size_t v, double weight) { add_edge(Subset{u, v}, weight); }

  std::size_t size() const { return n_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const std::vector<std::string>& names() const { return names_; }
  double total_weight() const;
  bool fully_oriented() const;

  /// Orientation used by in_cut for an edge without an explicit head:
  /// its largest vertex. Summed over the blocks of a partition the in-cut
  /// does not depend on the orientation.
  std::size_t head_of(const Hyperedge& e) const { return e.head ? *e.head : e.vertices.bound() - 1; }

  /// Σ c(e) over edges with φ(e) ∩ B ≠ ∅; 0 for empty B.
  double coverage(const Subset& b) const;
  /// h(B) = coverage(B); throws InputError for empty B.
  double entropy(const Subset& b) const;
  /// c(δ⁻(C)): edges with ρ(e) ∉ C and φ(e) ∩ C ≠ ∅.
  double in_cut(const Subset& c) const;
  /// Edges with vertices both inside and outside C.
  double undirected_cut(const Subset& c) const;

  /// Sub-hypergraph on `b` (re-indexed), keeping φ(e) ∩ b for every edge
  /// that touches b. Its coverage function is h restricted to b.
  WeightedHypergraph restrict(const Subset& b) const;

 private:
  std::size_t n_;
  std::vector<Hyperedge> edges_;
  std::vector<std::string> names_;
};

/// One of the set functions of a hypergraph as an oracle. Exposes its
/// CutForm, which lets SFM use a min-cut instead of a generic method.
class HypergraphOracle : public SubmodularOracle {
 public:
  HypergraphOracle(std::shared_ptr<const WeightedHypergraph> graph, CutKind kind, double log_base = 2.0);

  std::size_t size() const override { return graph_->size(); }
  double operator()(const Subset& b) const override;
  std::optional<CutForm> cut_form() const override;
  /// Coverage functions restrict to the coverage function of the
  /// restricted hypergraph, keeping the min-cut route available.
  OraclePtr restrict_to(const Subset& b) const override;
  double log_base() const override { return log_base_; }

  const WeightedHypergraph& graph() const { return *graph_; }
  CutKind kind() const { return kind_; }

 private:
  std::shared_ptr<const WeightedHypergraph> graph_;
  CutKind kind_;
  double log_base_;
};

std::shared_ptr<HypergraphOracle> hypergraph_entropy(const WeightedHypergraph& graph, double log_base = 2.0);
std::shared_ptr<HypergraphOracle> hypergraph_in_cut(const WeightedHypergraph& graph);
std::shared_ptr<HypergraphOracle> hypergraph_undirected_cut(const WeightedHypergraph& graph);

}  // namespace infoclust
