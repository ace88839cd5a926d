#include "infoclust/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "infoclust/error.hpp"

namespace infoclust::kernels {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Subset pinned_subset(const std::vector<std::size_t>& others, std::size_t pinned, std::uint64_t bits) {
  Subset s = Subset::singleton(pinned);
  while (bits) {
    s.insert(others[static_cast<std::size_t>(std::countr_zero(bits))]);
    bits &= bits - 1;
  }
  return s;
}

std::vector<std::size_t> others_of(const std::vector<std::size_t>& universe, std::size_t pinned) {
  std::vector<std::size_t> others;
  for (auto u : universe) {
    if (u != pinned) others.push_back(u);
  }
  if (others.size() == universe.size()) throw InputError("pinned element is not in the universe");
  if (others.size() > 26) throw InputError("exhaustive SFM limited to 27 elements");
  return others;
}

// Running collection of near-minimal partitions.
struct MinCollector {
  double best = kInf;
  double tol = 0.0;
  std::vector<MaskPartition> items;
  std::vector<double> scores;
  std::uint64_t visited = 0;

  void offer(const MaskPartition& p, double score) {
    ++visited;
    if (!(score <= best + tol)) return;
    if (score < best) {
      best = score;
      std::size_t w = 0;
      for (std::size_t r = 0; r < items.size(); ++r) {
        if (scores[r] <= best + tol) {
          items[w] = std::move(items[r]);
          scores[w] = scores[r];
          ++w;
        }
      }
      items.resize(w);
      scores.resize(w);
    }
    items.push_back(p);
    scores.push_back(score);
  }
};

// Depth-first restricted-growth enumeration of the labels of elements
// [depth, m), with blocks[] already holding elements [0, depth).
template <typename Visit>
void enumerate_from(std::size_t m, std::size_t depth, MaskPartition& blocks, Visit& visit) {
  if (depth == m) {
    visit(blocks);
    return;
  }
  const std::uint64_t bit = std::uint64_t{1} << depth;
  const std::size_t used = blocks.size();
  for (std::size_t k = 0; k < used; ++k) {
    blocks[k] |= bit;
    enumerate_from(m, depth + 1, blocks, visit);
    blocks[k] &= ~bit;
  }
  blocks.push_back(bit);
  enumerate_from(m, depth + 1, blocks, visit);
  blocks.pop_back();
}

std::vector<std::size_t> labels_of(const MaskPartition& p, std::size_t m) {
  std::vector<std::size_t> labels(m, 0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    std::uint64_t bits = p[k];
    while (bits) {
      labels[static_cast<std::size_t>(std::countr_zero(bits))] = k;
      bits &= bits - 1;
    }
  }
  return labels;
}

PartitionMinima finish(std::size_t m, MinCollector&& c) {
  PartitionMinima out;
  out.value = c.best;
  out.visited = c.visited;
  out.minimizers = std::move(c.items);
  std::sort(out.minimizers.begin(), out.minimizers.end(), [m](const MaskPartition& a, const MaskPartition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return labels_of(a, m) < labels_of(b, m);
  });
  return out;
}

void check_partition_size(std::size_t m) {
  if (m == 0 || m > 16) throw InputError("partition enumeration supports 1..16 elements");
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<double> tabulate_serial(const SubmodularOracle& f) {
  const std::size_t m = f.size();
  if (m > 24) throw InputError("tabulation limited to 24 elements");
  std::vector<double> values(std::size_t{1} << m);
  for (std::uint64_t mask = 0; mask < values.size(); ++mask) values[mask] = f(Subset::from_mask(mask));
  return values;
}

std::vector<double> tabulate_parallel(const SubmodularOracle& f) {
  const std::size_t m = f.size();
  if (m > 24) throw InputError("tabulation limited to 24 elements");
  const std::int64_t n = std::int64_t{1} << m;
  std::vector<double> values(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (std::int64_t mask = 0; mask < n; ++mask) {
    values[static_cast<std::size_t>(mask)] = f(Subset::from_mask(static_cast<std::uint64_t>(mask)));
  }
  return values;
}

PinnedMin exhaustive_pinned_min_serial(const SubmodularOracle& f, const std::vector<std::size_t>& universe,
                                       std::size_t pinned, double tol) {
  const auto others = others_of(universe, pinned);
  const std::uint64_t n = std::uint64_t{1} << others.size();
  std::vector<double> values(n);
  double best = kInf;
  for (std::uint64_t bits = 0; bits < n; ++bits) {
    values[bits] = f(pinned_subset(others, pinned, bits));
    best = std::min(best, values[bits]);
  }
  std::uint64_t common = n - 1;
  for (std::uint64_t bits = 0; bits < n; ++bits) {
    if (values[bits] <= best + tol) common &= bits;
  }
  return {best, pinned_subset(others, pinned, common)};
}

PinnedMin exhaustive_pinned_min_parallel(const SubmodularOracle& f, const std::vector<std::size_t>& universe,
                                         std::size_t pinned, double tol) {
  const auto others = others_of(universe, pinned);
  const std::int64_t n = std::int64_t{1} << others.size();
  std::vector<double> values(static_cast<std::size_t>(n));
  double best = kInf;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t bits = 0; bits < n; ++bits) {
    const double v = f(pinned_subset(others, pinned, static_cast<std::uint64_t>(bits)));
    values[static_cast<std::size_t>(bits)] = v;
    best = std::min(best, v);
  }
  std::uint64_t common = static_cast<std::uint64_t>(n - 1);
#pragma omp parallel for schedule(static) reduction(& : common)
  for (std::int64_t bits = 0; bits < n; ++bits) {
    if (values[static_cast<std::size_t>(bits)] <= best + tol) common &= static_cast<std::uint64_t>(bits);
  }
  return {best, pinned_subset(others, pinned, common)};
}

PartitionMinima min_over_partitions_serial(std::size_t m, const PartitionObjective& objective, double tol) {
  check_partition_size(m);
  MinCollector c;
  c.tol = tol;
  MaskPartition blocks;
  auto visit = [&](const MaskPartition& p) { c.offer(p, objective(p)); };
  enumerate_from(m, 0, blocks, visit);
  return finish(m, std::move(c));
}

PartitionMinima min_over_partitions_parallel(std::size_t m, const PartitionObjective& objective, double tol) {
  check_partition_size(m);
  // Shards are the restricted-growth prefixes of the first few elements.
  const std::size_t prefix_len = std::min<std::size_t>(m, 5);
  std::vector<MaskPartition> prefixes;
  {
    MaskPartition blocks;
    auto collect = [&](const MaskPartition& p) { prefixes.push_back(p); };
    enumerate_from(prefix_len, 0, blocks, collect);
  }
  std::vector<MinCollector> shards(prefixes.size());
  const std::int64_t shard_count = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < shard_count; ++s) {
    auto& c = shards[static_cast<std::size_t>(s)];
    c.tol = tol;
    MaskPartition blocks = prefixes[static_cast<std::size_t>(s)];
    auto visit = [&](const MaskPartition& p) { c.offer(p, objective(p)); };
    enumerate_from(m, prefix_len, blocks, visit);
  }
  MinCollector merged;
  merged.tol = tol;
  std::uint64_t visited = 0;
  for (auto& c : shards) {
    visited += c.visited;
    for (std::size_t r = 0; r < c.items.size(); ++r) merged.offer(c.items[r], c.scores[r]);
  }
  merged.visited = visited;
  return finish(m, std::move(merged));
}

std::vector<LocalViolation> local_submodularity_serial(std::size_t m, const std::vector<double>& table,
                                                       double tol, std::size_t max_reports) {
  std::vector<LocalViolation> out;
  const std::uint64_t n = std::uint64_t{1} << m;
  for (std::uint64_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint64_t bi = std::uint64_t{1} << i;
      if (s & bi) continue;
      for (std::size_t j = i + 1; j < m; ++j) {
        const std::uint64_t bj = std::uint64_t{1} << j;
        if (s & bj) continue;
        const double margin = table[s | bi] + table[s | bj] - table[s | bi | bj] - table[s];
        if (margin < -tol) out.push_back({s, i, j, margin});
      }
    }
  }
  if (out.size() > max_reports) out.resize(max_reports);
  return out;
}

std::vector<LocalViolation> local_submodularity_parallel(std::size_t m, const std::vector<double>& table,
                                                         double tol, std::size_t max_reports) {
  const std::int64_t n = std::int64_t{1} << m;
  std::vector<std::vector<LocalViolation>> per_base(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (std::int64_t sb = 0; sb < n; ++sb) {
    const auto s = static_cast<std::uint64_t>(sb);
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint64_t bi = std::uint64_t{1} << i;
      if (s & bi) continue;
      for (std::size_t j = i + 1; j < m; ++j) {
        const std::uint64_t bj = std::uint64_t{1} << j;
        if (s & bj) continue;
        const double margin = table[s | bi] + table[s | bj] - table[s | bi | bj] - table[s];
        if (margin < -tol) per_base[static_cast<std::size_t>(sb)].push_back({s, i, j, margin});
      }
    }
  }
  std::vector<LocalViolation> out;
  for (auto& v : per_base) {
    for (auto& x : v) {
      if (out.size() == max_reports) return out;
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace infoclust::kernels
