#include "infoclust/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "infoclust/error.hpp"
#include "infoclust/hierarchy.hpp"
#include "infoclust/kernels.hpp"

namespace infoclust {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string family_string(const SetFamily& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + f[i].to_string();
  return s + "}";
}

struct Dsu {
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

void check_k(const SubmodularOracle& f, std::size_t k) {
  if (k < 1 || k >= f.size()) throw InputError("k must satisfy 1 <= k < |V|");
}

Partition from_masks(std::size_t m, const kernels::MaskPartition& masks) {
  std::vector<Subset> blocks;
  for (auto mask : masks) blocks.push_back(Subset::from_mask(mask));
  return Partition(m, std::move(blocks));
}

}  // namespace

double pairwise_mi(const SubmodularOracle& h, std::size_t i, std::size_t j) {
  if (i == j) throw InputError("pairwise MI needs two distinct variables");
  if (i >= h.size() || j >= h.size()) throw InputError("variable index out of range");
  return h(Subset::singleton(i)) + h(Subset::singleton(j)) - h(Subset{i, j});
}

MirnGraph build_mirn(const SubmodularOracle& h) {
  MirnGraph g;
  g.vertex_count = h.size();
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = i + 1; j < h.size(); ++j) g.edges.push_back({i, j, pairwise_mi(h, i, j)});
  }
  return g;
}

void validate_tree(const WeightedTree& tree) {
  const std::size_t n = tree.vertex_count;
  if (n == 0) throw InputError("tree has no vertices");
  if (tree.edges.size() + 1 != n) throw InputError("a spanning tree on n vertices has n - 1 edges");
  Dsu dsu(n);
  for (const auto& e : tree.edges) {
    if (e.u >= n || e.v >= n || e.u == e.v) throw InputError("tree edge endpoints are invalid");
    if (!std::isfinite(e.weight)) throw InputError("tree edge weight is not finite");
    if (!dsu.unite(e.u, e.v)) throw InputError("tree has a cycle");
  }
}

WeightedTree chow_liu_tree(const MirnGraph& mirn) {
  if (mirn.vertex_count < 2) throw InputError("Chow-Liu tree needs at least two vertices");
  auto edges = mirn.edges;
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  auto key = [](double w) { return std::llround(w * 1e9); };
  std::stable_sort(edges.begin(), edges.end(), [&](const WeightedEdge& a, const WeightedEdge& b) {
    const auto ka = key(a.weight);
    const auto kb = key(b.weight);
    if (ka != kb) return ka > kb;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  WeightedTree tree;
  tree.vertex_count = mirn.vertex_count;
  Dsu dsu(mirn.vertex_count);
  for (const auto& e : edges) {
    if (dsu.unite(e.u, e.v)) tree.edges.push_back(e);
  }
  if (tree.edges.size() + 1 != mirn.vertex_count) throw InputError("MIRN graph is not connected");
  return tree;
}

SetFamily mirn_clusters(const MirnGraph& mirn, double gamma) {
  return non_singleton_blocks(connected_components(mirn, gamma));
}

ClusteringSolution tree_source_solution(const WeightedTree& tree, double log_base) {
  validate_tree(tree);
  if (tree.vertex_count < 2) throw InputError("clustering needs at least two variables");
  std::vector<double> weights;
  for (const auto& e : tree.edges) weights.push_back(e.weight);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  ClusteringSolution sol;
  sol.ground_size = tree.vertex_count;
  sol.log_base = log_base;
  sol.chain.push_back(Partition::trivial(tree.vertex_count));
  for (double w : weights) {
    sol.critical_values.push_back(w);
    sol.chain.push_back(connected_components(tree, w));
  }
  sol.validate();
  return sol;
}

DiscreteSource tree_approximation(const DiscreteSource& source, const WeightedTree& tree) {
  validate_tree(tree);
  const std::size_t m = source.size();
  if (tree.vertex_count != m) throw InputError("tree does not match the source");
  const auto& alpha = source.alphabet_sizes();

  // Root at 0; parent[v] for every other vertex, in BFS order.
  std::vector<std::vector<std::size_t>> adj(m);
  for (const auto& e : tree.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<std::size_t> order{0};
  std::vector<std::size_t> parent(m, m);
  std::vector<bool> seen(m, false);
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (auto w : adj[order[k]]) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[k];
        order.push_back(w);
      }
    }
  }

  std::vector<std::vector<double>> single(m);
  std::vector<std::vector<double>> joint(m);  // joint[v][z_v * |A_parent| + z_parent]
  for (std::size_t v = 0; v < m; ++v) {
    single[v].assign(alpha[v], 0.0);
    if (parent[v] < m) joint[v].assign(alpha[v] * alpha[parent[v]], 0.0);
  }
  for (const auto& e : source.pmf()) {
    for (std::size_t v = 0; v < m; ++v) {
      single[v][e.outcome[v]] += e.p;
      if (parent[v] < m) joint[v][e.outcome[v] * alpha[parent[v]] + e.outcome[parent[v]]] += e.p;
    }
  }

  std::size_t total = 1;
  for (auto a : alpha) total *= a;
  std::vector<PmfEntry> pmf;
  std::vector<std::size_t> z(m, 0);
  double sum = 0.0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t v = m; v-- > 0;) {
      z[v] = rest % alpha[v];
      rest /= alpha[v];
    }
    double p = single[0][z[0]];
    for (std::size_t k = 1; k < order.size() && p > 0.0; ++k) {
      const auto v = order[k];
      const auto u = parent[v];
      const double pu = single[u][z[u]];
      p = pu > 0.0 ? p * joint[v][z[v] * alpha[u] + z[u]] / pu : 0.0;
    }
    if (p > 0.0) {
      pmf.push_back({z, p});
      sum += p;
    }
  }
  for (auto& e : pmf) e.p /= sum;
  return DiscreteSource(alpha, std::move(pmf), source.log_base(), source.names());
}

MacResult mac_clustering(const SubmodularOracle& f, std::size_t k, const SfmOptions& options) {
  check_k(f, k);
  const std::size_t m = f.size();
  if (m > 12) {
    for (std::size_t i = 0; i < m; ++i) {
      if (f(Subset::singleton(i)) < 0.0) {
        throw InputError("minimum average cost beyond 12 elements needs a non-negative cost function");
      }
    }
    return mac_clustering_dilworth(f, k, options);
  }
  const TableSource table = TableSource::tabulate(f);
  const double tol = 1e-9 * std::max(1.0, std::abs(table.values().back()));
  const auto objective = [&](const kernels::MaskPartition& p) {
    if (p.size() <= k) return std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (auto mask : p) s += table.at(mask);
    return s / static_cast<double>(p.size() - k);
  };
  const auto r = options.parallel ? kernels::min_over_partitions_parallel(m, objective, tol)
                                  : kernels::min_over_partitions_serial(m, objective, tol);
  std::vector<Partition> candidates;
  for (const auto& p : r.minimizers) candidates.push_back(from_masks(m, p));
  MacResult out;
  out.cost = r.value;
  out.exhaustive = true;
  out.partition = candidates.front();
  for (const auto& p : candidates) {
    bool finest = true;
    for (const auto& q : candidates) finest = finest && refines(p, q);
    if (finest) {
      out.partition = p;
      break;
    }
  }
  return out;
}

MacResult mac_clustering_dilworth(const SubmodularOracle& f, std::size_t k, const SfmOptions& options) {
  check_k(f, k);
  const std::size_t m = f.size();
  const auto kd = static_cast<double>(k);
  const double tol = 1e-9 * std::max(1.0, std::abs(f(Subset::full(m))));
  Partition best = Partition::singletons(m);
  double lambda = partition_value(f, best) / static_cast<double>(m - k);
  for (std::size_t iter = 0; iter <= m + 1; ++iter) {
    const auto d = dilworth_truncation(f, lambda, options);
    if (d.value + kd * lambda >= -tol) {
      if (d.partition.size() > k) best = d.partition;
      return {lambda, best, false};
    }
    if (d.partition.size() <= k) throw InputError("cost function is negative; the unconstrained route does not apply");
    const double next = partition_value(f, d.partition) / static_cast<double>(d.partition.size() - k);
    best = d.partition;
    if (!(next < lambda)) return {next, best, false};
    lambda = next;
  }
  throw SolverError("minimum average cost iteration did not converge", lambda);
}

Partition psp_partition_for_k(const ClusteringSolution& solution, std::size_t k) {
  for (const auto& p : solution.chain) {
    if (p.size() > k) return p;
  }
  throw InputError("no partition in the chain has more than " + std::to_string(k) + " blocks");
}

MirnReport verify_mirn_equivalence(const DiscreteSource& source, const PspOptions& options) {
  if (source.size() > 10) throw InputError("MIRN equivalence check limited to 10 variables");
  const auto mirn = build_mirn(source);
  const auto tree = chow_liu_tree(mirn);
  const auto approx = tree_approximation(source, tree);
  const auto solution = compute_psp(approx, options);

  MirnReport report;
  constexpr double kOffset = 1e-6;
  report.thresholds.push_back(-1.0);
  for (const auto& e : mirn.edges) {
    report.thresholds.push_back(e.weight - kOffset);
    report.thresholds.push_back(e.weight);
    report.thresholds.push_back(e.weight + kOffset);
  }
  std::sort(report.thresholds.begin(), report.thresholds.end());
  report.thresholds.erase(std::unique(report.thresholds.begin(), report.thresholds.end()), report.thresholds.end());
  for (double g : report.thresholds) {
    auto expected = mirn_clusters(mirn, g);
    auto got = clusters_at(solution, g);
    canonicalize(expected);
    canonicalize(got);
    if (expected != got) {
      report.mismatches.push_back("gamma = " + fmt(g) + ": MIRN " + family_string(expected) + ", tree source " +
                                  family_string(got));
    }
  }
  return report;
}

}  // namespace infoclust
