#include "infoclust/brute.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "infoclust/error.hpp"
#include "infoclust/measure.hpp"

namespace infoclust {

std::uint64_t bell_number(std::size_t m) {
  if (m > 25) throw InputError("Bell numbers are computed up to 25");
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

PartitionEnumerator::PartitionEnumerator(std::size_t m) : m_(m), labels_(m, 0), prefix_max_(m, 0) {
  if (m == 0 || m > 64) throw InputError("partition enumeration needs 1..64 elements");
}

bool PartitionEnumerator::next() {
  if (!started_) {
    started_ = true;
    blocks_ = 1;
    return true;
  }
  for (std::size_t i = m_; i-- > 1;) {
    if (labels_[i] <= prefix_max_[i - 1]) {
      ++labels_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
      for (std::size_t j = i + 1; j < m_; ++j) {
        labels_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      blocks_ = prefix_max_[m_ - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::uint64_t> PartitionEnumerator::masks() const {
  std::vector<std::uint64_t> out(blocks_, 0);
  for (std::size_t i = 0; i < m_; ++i) out[labels_[i]] |= std::uint64_t{1} << i;
  return out;
}

MmiResult brute_mmi(const SubmodularOracle& source, std::size_t limit) {
  const std::size_t m = source.size();
  if (m < 2) throw InputError("MMI needs at least two variables");
  if (m > limit) throw InputError("brute-force MMI limited to " + std::to_string(limit) + " elements");
  std::vector<double> table(std::size_t{1} << m);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) table[mask] = source(Subset::from_mask(mask));
  const double hv = table.back();
  const double tol = 1e-9 * std::max(1.0, std::abs(hv));

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::vector<std::size_t>> minimizers;
  PartitionEnumerator it(m);
  while (it.next()) {
    if (it.block_count() < 2) continue;
    double sum = 0.0;
    for (auto mask : it.masks()) sum += table[mask];
    const double value = (sum - hv) / static_cast<double>(it.block_count() - 1);
    if (value < best - tol) {
      best = value;
      minimizers.clear();
    } else if (value > best + tol) {
      continue;
    }
    best = std::min(best, value);
    minimizers.push_back(it.labels());
  }
  std::vector<Partition> candidates;
  for (const auto& labels : minimizers) {
    auto p = Partition::from_labels(labels);
    double sum = 0.0;
    for (const auto& c : p.blocks()) sum += table[c.mask()];
    if ((sum - hv) / static_cast<double>(p.size() - 1) <= best + tol) candidates.push_back(std::move(p));
  }
  for (const auto& p : candidates) {
    bool finest = true;
    for (const auto& q : candidates) finest = finest && refines(p, q);
    if (finest) return {best, p};
  }
  throw SolverError("no minimizing partition refines all others", best);
}

std::vector<ClusterRecord> brute_clusters(const InfoMeasure& measure, double tol) {
  const std::size_t m = measure.size();
  if (m < 2) throw InputError("clusters need at least two elements");
  if (m > 16) throw InputError("brute-force clusters limited to 16 elements");
  std::vector<std::pair<std::uint64_t, double>> sets;
  std::vector<double> values;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) < 2) continue;
    const double v = measure(Subset::from_mask(mask));
    sets.emplace_back(mask, v);
    values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  std::vector<double> thresholds;
  for (double v : values) {
    if (thresholds.empty() || v > thresholds.back() + tol) thresholds.push_back(v);
  }

  std::map<std::uint64_t, double> found;
  found[(std::uint64_t{1} << m) - 1] = measure(Subset::full(m));
  for (double t : thresholds) {
    std::vector<std::pair<std::uint64_t, double>> above;
    for (const auto& s : sets) {
      if (s.second > t + tol) above.push_back(s);
    }
    for (const auto& [mask, v] : above) {
      bool maximal = true;
      for (const auto& other : above) {
        if (other.first != mask && (other.first & mask) == mask) {
          maximal = false;
          break;
        }
      }
      if (maximal) found[mask] = v;
    }
  }
  std::vector<ClusterRecord> out;
  for (const auto& [mask, v] : found) out.push_back({Subset::from_mask(mask), v});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.set < b.set; });
  return out;
}

std::vector<ClusterRecord> brute_clusters(const SubmodularOracle& h, std::size_t limit) {
  if (h.size() > limit) throw InputError("brute-force clusters limited to " + std::to_string(limit) + " elements");
  const MmiMeasure measure(borrow(h), MmiMeasure::Method::kBrute);
  return brute_clusters(measure);
}

SfmResult brute_sfm(const SubmodularOracle& f, const Subset& universe, std::size_t pinned, std::size_t limit) {
  if (!universe.contains(pinned)) throw InputError("pinned element is not in the universe");
  const std::size_t n = universe.count();
  if (n > limit) throw InputError("brute-force SFM limited to " + std::to_string(limit) + " elements");
  std::vector<std::size_t> others;
  universe.for_each([&](std::size_t i) {
    if (i != pinned) others.push_back(i);
  });
  auto subset_of = [&](std::uint64_t bits) {
    Subset s = Subset::singleton(pinned);
    for (std::size_t k = 0; k < others.size(); ++k) {
      if ((bits >> k) & 1u) s.insert(others[k]);
    }
    return s;
  };
  const std::uint64_t count = std::uint64_t{1} << others.size();
  std::vector<double> values(count);
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    values[bits] = f(subset_of(bits));
    best = std::min(best, values[bits]);
  }
  const double tol = 1e-9 * std::max(1.0, std::abs(f(universe)));
  std::uint64_t common = count - 1;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (values[bits] <= best + tol) common &= bits;
  }
  return {best, subset_of(common), SfmMethod::kExhaustive};
}

double unit_double(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

WeightedHypergraph random_hypergraph(std::size_t vertices, std::uint64_t seed, std::size_t edges) {
  std::mt19937_64 rng(seed);
  WeightedHypergraph g(vertices);
  for (std::size_t e = 0; e < edges; ++e) {
    Subset s;
    for (std::size_t v = 0; v < vertices; ++v) {
      if (rng() & 1u) s.insert(v);
    }
    const double w = unit_double(rng());
    if (!s.empty()) g.add_edge(s, w);
  }
  return g;
}

DiscreteSource random_discrete_source(std::size_t m, std::uint64_t seed, std::size_t alphabet) {
  std::mt19937_64 rng(seed);
  std::size_t outcomes = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (outcomes > (std::size_t{1} << 20) / alphabet) throw InputError("random source too large");
    outcomes *= alphabet;
  }
  std::vector<double> weights(outcomes);
  double total = 0.0;
  for (auto& w : weights) {
    const double u = unit_double(rng());
    w = u * u * u * u;
    total += w;
  }
  std::vector<PmfEntry> pmf;
  for (std::size_t k = 0; k < outcomes; ++k) {
    std::vector<std::size_t> outcome(m);
    std::size_t rest = k;
    for (std::size_t i = m; i-- > 0;) {
      outcome[i] = rest % alphabet;
      rest /= alphabet;
    }
    pmf.push_back({std::move(outcome), weights[k] / total});
  }
  return DiscreteSource(std::vector<std::size_t>(m, alphabet), std::move(pmf));
}

}  // namespace infoclust
