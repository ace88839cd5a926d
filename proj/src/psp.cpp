#include "infoclust/psp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "infoclust/brute.hpp"
#include "infoclust/error.hpp"

namespace infoclust {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

void require_clusterable(const SubmodularOracle& h) {
  if (h.size() < 2) throw InputError("clustering needs at least two variables");
}

std::vector<Subset> lift_blocks(const Partition& local, const Subset& domain) {
  const auto elems = domain.elements();
  std::vector<Subset> blocks;
  for (const auto& b : local.blocks()) {
    Subset g;
    b.for_each([&](std::size_t i) { g.insert(elems[i]); });
    blocks.push_back(g);
  }
  return blocks;
}

}  // namespace

OraclePtr prepare_source(const SubmodularOracle& h, const PspOptions& options) {
  if (h.size() <= options.tabulate_limit && h.size() <= 24) {
    return std::make_shared<TableSource>(TableSource::tabulate(h));
  }
  return borrow(h);
}

DilworthPoint dilworth_truncation(const SubmodularOracle& h, double gamma, const SfmOptions& options) {
  const std::size_t m = h.size();
  if (m == 0) throw InputError("Dilworth truncation needs a non-empty ground set");
  std::vector<double> x(m, 0.0);
  std::vector<Subset> blocks;
  const ResidualOracle residual(h, gamma, x);
  Subset universe;
  for (std::size_t l = 0; l < m; ++l) {
    universe.insert(l);
    const auto r = sfm_pinned(residual, universe, l, options);
    x[l] = r.value;
    Subset merged = r.minimizer;
    std::vector<Subset> kept;
    for (auto& b : blocks) {
      if (b.intersects(merged)) {
        merged |= b;
      } else {
        kept.push_back(std::move(b));
      }
    }
    kept.push_back(std::move(merged));
    blocks = std::move(kept);
  }
  DilworthPoint out;
  out.gamma = gamma;
  for (double v : x) out.value += v;
  out.partition = Partition(m, std::move(blocks));
  return out;
}

double partition_value(const SubmodularOracle& h, const Partition& p) {
  double s = 0.0;
  for (const auto& c : p.blocks()) s += h(c);
  return s;
}

double i_partition(const SubmodularOracle& h, const Partition& p) {
  if (p.ground_size() != h.size()) throw InputError("partition does not match the ground set");
  if (p.size() < 2) throw InputError("I_P needs a partition with at least two blocks");
  return (partition_value(h, p) - h(Subset::full(h.size()))) / static_cast<double>(p.size() - 1);
}

MmiResult mmi(const SubmodularOracle& source, const PspOptions& options) {
  require_clusterable(source);
  const auto h = prepare_source(source, options);
  const std::size_t m = h->size();
  const double hv = (*h)(Subset::full(m));
  const double tol = options.split_tol * std::max(1.0, std::abs(hv));

  // Dinkelbach iteration: each non-trivial improving partition lowers γ.
  Partition best = Partition::singletons(m);
  double gamma = i_partition(*h, best);
  for (std::size_t iter = 0; iter <= m; ++iter) {
    const auto d = dilworth_truncation(*h, gamma, options.sfm);
    if (d.value >= hv - gamma - tol || d.partition.size() < 2) {
      if (d.partition.size() >= 2) best = d.partition;
      return {gamma, best};
    }
    const double next = i_partition(*h, d.partition);
    if (!(next < gamma)) return {gamma, d.partition};
    best = d.partition;
    gamma = next;
  }
  throw SolverError("MMI iteration did not converge", gamma);
}

void split(const SubmodularOracle& h, const Partition& q, const Partition& p, SplitAccumulator& acc,
           const PspOptions& options) {
  if (p.size() <= q.size()) throw InputError("split needs P to have more blocks than Q");
  const double hq = partition_value(h, q);
  const double hp = partition_value(h, p);
  const double nq = static_cast<double>(q.size());
  const double np = static_cast<double>(p.size());
  const double gamma = (hp - hq) / (np - nq);
  const double meet = (np * hq - nq * hp) / (np - nq);
  const auto d = dilworth_truncation(h, gamma, options.sfm);
  ++acc.dilworth_calls;
  const double tol = options.split_tol * std::max(1.0, std::abs(h(Subset::full(h.size()))));
  const auto& mid = d.partition;
  const bool between = mid.size() > q.size() && mid.size() < p.size() && refines(mid, q) && refines(p, mid);
  if (std::abs(d.value - meet) <= tol || !between) {
    acc.points.emplace_back(gamma, p);
    return;
  }
  split(h, q, mid, acc, options);
  split(h, mid, p, acc, options);
}

ClusteringSolution compute_psp(const SubmodularOracle& source, const PspOptions& options) {
  require_clusterable(source);
  const auto h = prepare_source(source, options);
  const std::size_t m = h->size();
  SplitAccumulator acc;
  split(*h, Partition::trivial(m), Partition::singletons(m), acc, options);
  std::sort(acc.points.begin(), acc.points.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  ClusteringSolution sol;
  sol.ground_size = m;
  sol.log_base = source.log_base();
  sol.chain.push_back(Partition::trivial(m));
  for (auto& [g, p] : acc.points) {
    sol.critical_values.push_back(g);
    sol.chain.push_back(std::move(p));
  }
  sol.validate();
  return sol;
}

std::vector<ClusterRecord> ClusteringSolution::clusters() const {
  std::vector<ClusterRecord> out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& next = chain[i + 1].blocks();
    for (const auto& c : chain[i].blocks()) {
      if (c.count() < 2) continue;
      if (std::find(next.begin(), next.end(), c) == next.end()) out.push_back({c, critical_values[i]});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.set < b.set; });
  return out;
}

std::optional<double> ClusteringSolution::cluster_value(const Subset& c) const {
  for (const auto& r : clusters()) {
    if (r.set == c) return r.value;
  }
  return std::nullopt;
}

void ClusteringSolution::validate() const {
  if (ground_size < 1) throw InputError("solution has an empty ground set");
  if (chain.size() != critical_values.size() + 1) throw InputError("solution needs one more partition than values");
  if (chain.front() != Partition::trivial(ground_size)) throw InputError("chain must start with {V}");
  if (chain.back() != Partition::singletons(ground_size)) throw InputError("chain must end with singletons");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i + 1].ground_size() != ground_size) throw InputError("chain partitions have different ground sets");
    if (chain[i + 1].size() <= chain[i].size() || !refines(chain[i + 1], chain[i])) {
      throw InputError("chain is not strictly refining at step " + std::to_string(i + 1));
    }
  }
  for (std::size_t i = 0; i + 1 < critical_values.size(); ++i) {
    if (!(critical_values[i] < critical_values[i + 1])) {
      throw InputError("critical values are not strictly increasing");
    }
  }
}

RecursionReport verify_theorem_xi(const SubmodularOracle& source, const ClusteringSolution& solution, double tol) {
  const std::size_t m = source.size();
  if (m > 12) throw InputError("recursion check limited to 12 elements");
  if (solution.ground_size != m) throw InputError("solution does not match the source");
  const TableSource h = TableSource::tabulate(source);
  const double scale = std::max(1.0, std::abs(h(Subset::full(m))));
  RecursionReport report;
  const std::size_t n = solution.critical_values.size();

  // Minimum slope from every P_{i-1}, in one pass over all partitions.
  std::vector<double> slope(n, std::numeric_limits<double>::infinity());
  std::vector<double> prev_value(n);
  for (std::size_t i = 0; i < n; ++i) prev_value[i] = partition_value(h, solution.chain[i]);
  PartitionEnumerator it(m);
  while (it.next()) {
    double value = 0.0;
    for (auto mask : it.masks()) value += h.at(mask);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = solution.chain[i].size();
      if (it.block_count() <= k) continue;
      slope[i] = std::min(slope[i], (value - prev_value[i]) / static_cast<double>(it.block_count() - k));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const double g = solution.critical_values[i];
    const auto& prev = solution.chain[i];
    const auto& next = solution.chain[i + 1];
    const std::string tag = "gamma_" + std::to_string(i + 1);
    if (std::abs(slope[i] - g) > tol * scale) {
      report.violations.push_back(tag + " = " + fmt(g) + " but the minimum slope from P_" + std::to_string(i) +
                                  " is " + fmt(slope[i]));
    }
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<Subset, MmiResult>> block_mmi;
    for (const auto& c : prev.blocks()) {
      if (c.count() < 2) continue;
      auto r = brute_mmi(*h.restrict_to(c), 12);
      best = std::min(best, r.value);
      block_mmi.emplace_back(c, std::move(r));
    }
    if (std::abs(best - g) > tol * scale) {
      report.violations.push_back(tag + " = " + fmt(g) + " but the smallest block MMI of P_" + std::to_string(i) +
                                  " is " + fmt(best));
    }
    std::vector<Subset> rebuilt;
    for (const auto& c : prev.blocks()) {
      const auto hit = std::find_if(block_mmi.begin(), block_mmi.end(), [&](const auto& e) { return e.first == c; });
      const bool splits = hit != block_mmi.end() && std::abs(hit->second.value - best) <= tol * scale;
      const bool kept = std::find(next.blocks().begin(), next.blocks().end(), c) != next.blocks().end();
      if (splits == kept) {
        report.violations.push_back(tag + ": block " + c.to_string() + (splits ? " attains" : " does not attain") +
                                    " the minimum but is " + (kept ? "kept in" : "split in") + " P_" +
                                    std::to_string(i + 1));
      }
      if (!splits) {
        rebuilt.push_back(c);
        continue;
      }
      for (auto& b : lift_blocks(hit->second.partition, c)) rebuilt.push_back(std::move(b));
    }
    Partition expected(m, std::move(rebuilt));
    if (expected != next) {
      report.violations.push_back(tag + ": P_" + std::to_string(i + 1) + " = " + next.to_string() +
                                  " but the block-wise fundamental partitions give " + expected.to_string());
    }
  }
  return report;
}

}  // namespace infoclust
