#include "infoclust/hypergraph.hpp"

#include <cmath>

#include "infoclust/error.hpp"

namespace infoclust {

WeightedHypergraph::WeightedHypergraph(std::size_t vertex_count, std::vector<std::string> names)
    : n_(vertex_count), names_(std::move(names)) {
  if (names_.empty()) {
    for (std::size_t i = 0; i < n_; ++i) names_.push_back(std::to_string(i + 1));
  }
  if (names_.size() != n_) throw InputError("number of names does not match vertex count");
}

void WeightedHypergraph::add_edge(const Subset& vertices, double weight, std::optional<std::size_t> head) {
  if (vertices.empty()) throw InputError("hyperedge has no vertices");
  if (vertices.bound() > n_) throw InputError("hyperedge " + vertices.to_string() + " is outside the vertex set");
  if (!(weight >= 0.0) || !std::isfinite(weight)) throw InputError("hyperedge weight must be finite and non-negative");
  if (head && !vertices.contains(*head)) throw InputError("hyperedge head is not one of its vertices");
  edges_.push_back({vertices, weight, head});
}

double WeightedHypergraph::total_weight() const {
  double w = 0.0;
  for (const auto& e : edges_) w += e.weight;
  return w;
}

bool WeightedHypergraph::fully_oriented() const {
  for (const auto& e : edges_) {
    if (!e.head) return false;
  }
  return true;
}

double WeightedHypergraph::coverage(const Subset& b) const {
  double w = 0.0;
  for (const auto& e : edges_) {
    if (e.vertices.intersects(b)) w += e.weight;
  }
  return w;
}

double WeightedHypergraph::entropy(const Subset& b) const {
  if (b.empty()) throw InputError("entropy of the empty set is undefined");
  return coverage(b);
}

double WeightedHypergraph::in_cut(const Subset& c) const {
  double w = 0.0;
  for (const auto& e : edges_) {
    if (!c.contains(head_of(e)) && e.vertices.intersects(c)) w += e.weight;
  }
  return w;
}

double WeightedHypergraph::undirected_cut(const Subset& c) const {
  double w = 0.0;
  for (const auto& e : edges_) {
    if (e.vertices.intersects(c) && !e.vertices.is_subset_of(c)) w += e.weight;
  }
  return w;
}

WeightedHypergraph WeightedHypergraph::restrict(const Subset& b) const {
  const auto keep = b.elements();
  std::vector<std::size_t> local(n_, n_);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= n_) throw InputError("restriction is outside the vertex set");
    local[keep[k]] = k;
    names.push_back(names_[keep[k]]);
  }
  WeightedHypergraph out(keep.size(), std::move(names));
  for (const auto& e : edges_) {
    const Subset inside = e.vertices & b;
    if (inside.empty()) continue;
    Subset mapped;
    inside.for_each([&](std::size_t v) { mapped.insert(local[v]); });
    std::optional<std::size_t> head;
    if (e.head && b.contains(*e.head)) head = local[*e.head];
    out.edges_.push_back({mapped, e.weight, head});
  }
  return out;
}

HypergraphOracle::HypergraphOracle(std::shared_ptr<const WeightedHypergraph> graph, CutKind kind, double log_base)
    : graph_(std::move(graph)), kind_(kind), log_base_(log_base) {}

double HypergraphOracle::operator()(const Subset& b) const {
  switch (kind_) {
    case CutKind::kCoverage:
      return graph_->coverage(b);
    case CutKind::kInCut:
      return graph_->in_cut(b);
    case CutKind::kUndirectedCut:
      return graph_->undirected_cut(b);
  }
  return 0.0;
}

std::optional<CutForm> HypergraphOracle::cut_form() const {
  CutForm form;
  form.graph = graph_.get();
  form.kind = kind_;
  form.modular.assign(size(), 0.0);
  return form;
}

OraclePtr HypergraphOracle::restrict_to(const Subset& b) const {
  if (kind_ != CutKind::kCoverage) return SubmodularOracle::restrict_to(b);
  return std::make_shared<HypergraphOracle>(std::make_shared<WeightedHypergraph>(graph_->restrict(b)), kind_,
                                            log_base_);
}

std::shared_ptr<HypergraphOracle> hypergraph_entropy(const WeightedHypergraph& graph, double log_base) {
  return std::make_shared<HypergraphOracle>(std::make_shared<WeightedHypergraph>(graph), CutKind::kCoverage,
                                            log_base);
}

std::shared_ptr<HypergraphOracle> hypergraph_in_cut(const WeightedHypergraph& graph) {
  return std::make_shared<HypergraphOracle>(std::make_shared<WeightedHypergraph>(graph), CutKind::kInCut, 0.0);
}

std::shared_ptr<HypergraphOracle> hypergraph_undirected_cut(const WeightedHypergraph& graph) {
  return std::make_shared<HypergraphOracle>(std::make_shared<WeightedHypergraph>(graph), CutKind::kUndirectedCut,
                                            0.0);
}

}  // namespace infoclust
