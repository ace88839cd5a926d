#include "infoclust/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "infoclust/error.hpp"

namespace infoclust {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

GroundSet::GroundSet(std::size_t m) {
  names_.reserve(m);
  for (std::size_t i = 0; i < m; ++i) names_.push_back(std::to_string(i + 1));
}

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
  auto sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("ground set has duplicate element names");
  }
}

Partition::Partition(std::size_t m, std::vector<Subset> blocks) : m_(m), blocks_(std::move(blocks)) {
  Subset seen;
  std::size_t total = 0;
  for (const auto& b : blocks_) {
    if (b.empty()) throw InputError("partition has an empty block");
    if (seen.intersects(b)) throw InputError("partition blocks overlap");
    seen |= b;
    total += b.count();
  }
  if (seen != Subset::full(m) || total != m) {
    throw InputError("partition blocks do not cover the ground set");
  }
  std::sort(blocks_.begin(), blocks_.end());
}

Partition Partition::trivial(std::size_t m) { return Partition(m, {Subset::full(m)}); }

Partition Partition::singletons(std::size_t m) {
  std::vector<Subset> blocks;
  blocks.reserve(m);
  for (std::size_t i = 0; i < m; ++i) blocks.push_back(Subset::singleton(i));
  return Partition(m, std::move(blocks));
}

Partition Partition::from_labels(const std::vector<std::size_t>& labels) {
  std::map<std::size_t, Subset> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i) by_label[labels[i]].insert(i);
  std::vector<Subset> blocks;
  blocks.reserve(by_label.size());
  for (auto& [_, b] : by_label) blocks.push_back(std::move(b));
  return Partition(labels.size(), std::move(blocks));
}

std::size_t Partition::block_of(std::size_t i) const {
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k].contains(i)) return k;
  }
  throw InputError("element " + std::to_string(i + 1) + " is outside the partition");
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k) os << ',';
    os << blocks_[k].to_string();
  }
  os << '}';
  return os.str();
}

SetFamily maximal_sets(const SetFamily& family) {
  SetFamily unique = family;
  canonicalize(unique);
  SetFamily out;
  for (std::size_t a = 0; a < unique.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < unique.size() && !dominated; ++b) {
      dominated = a != b && unique[a].is_subset_of(unique[b]);
    }
    if (!dominated) out.push_back(unique[a]);
  }
  return out;
}

bool refines(const Partition& p, const Partition& q) {
  if (p.ground_size() != q.ground_size()) {
    throw InputError("refines: partitions are over different ground sets");
  }
  for (const auto& c : p.blocks()) {
    const auto& host = q.block(q.block_of(c.min_element()));
    if (!c.is_subset_of(host)) return false;
  }
  return true;
}

Partition connected_components(const WeightedGraph& graph, double gamma) {
  UnionFind uf(graph.vertex_count);
  for (const auto& e : graph.edges) {
    if (e.weight > gamma) uf.unite(e.u, e.v);
  }
  std::vector<std::size_t> labels(graph.vertex_count);
  for (std::size_t i = 0; i < graph.vertex_count; ++i) labels[i] = uf.find(i);
  return Partition::from_labels(labels);
}

SetFamily non_singleton_blocks(const Partition& p) {
  SetFamily out;
  for (const auto& b : p.blocks()) {
    if (b.count() >= 2) out.push_back(b);
  }
  return out;
}

bool is_laminar(const SetFamily& family) {
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      const auto& x = family[a];
      const auto& y = family[b];
      if (x.intersects(y) && !x.is_subset_of(y) && !y.is_subset_of(x)) return false;
    }
  }
  return true;
}

void canonicalize(SetFamily& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace infoclust
