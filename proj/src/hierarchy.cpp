#include "infoclust/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "infoclust/brute.hpp"
#include "infoclust/error.hpp"

namespace infoclust {

TableMeasure::TableMeasure(std::size_t m, const std::vector<std::pair<Subset, double>>& values, double otherwise)
    : m_(m), values_(std::size_t{1} << m, otherwise) {
  if (m > 20) throw InputError("table measures limited to 20 elements");
  for (const auto& [b, v] : values) {
    if (b.bound() > m) throw InputError("measure entry " + b.to_string() + " is outside the ground set");
    values_[b.mask()] = v;
  }
}

double TableMeasure::operator()(const Subset& b) const { return values_[b.mask()]; }

MmiMeasure::MmiMeasure(OraclePtr source, Method method, PspOptions options)
    : source_(std::move(source)), method_(method), options_(options) {
  if (source_->size() <= 16) cache_.resize(std::size_t{1} << source_->size());
}

MmiResult MmiMeasure::result(const Subset& b) const {
  if (b.count() < 2) throw InputError("MMI needs a set of at least two elements");
  const auto restricted = source_->restrict_to(b);
  return method_ == Method::kBrute ? brute_mmi(*restricted, 12) : mmi(*restricted, options_);
}

double MmiMeasure::operator()(const Subset& b) const {
  if (cache_.empty()) return result(b).value;
  auto& slot = cache_[b.mask()];
  if (!slot) slot = result(b).value;
  return *slot;
}

SetFamily clusters_at(const ClusteringSolution& solution, double gamma, double tol) {
  const auto& g = solution.critical_values;
  if (g.empty() || gamma < g.front() - tol) return {Subset::full(solution.ground_size)};
  std::size_t i = 0;
  while (i < g.size() && g[i] <= gamma + tol) ++i;
  if (i == g.size()) return {};
  return non_singleton_blocks(solution.chain[i]);
}

std::vector<ClusterRecord> clusters_iterative(const SubmodularOracle& source, const PspOptions& options) {
  if (source.size() < 2) throw InputError("clustering needs at least two variables");
  const auto h = prepare_source(source, options);
  std::vector<ClusterRecord> out;
  std::deque<Subset> queue{Subset::full(h->size())};
  while (!queue.empty()) {
    const Subset b = queue.front();
    queue.pop_front();
    const auto r = mmi(*h->restrict_to(b), options);
    out.push_back({b, r.value});
    const auto elems = b.elements();
    for (const auto& block : r.partition.blocks()) {
      if (block.count() < 2) continue;
      Subset g;
      block.for_each([&](std::size_t i) { g.insert(elems[i]); });
      queue.push_back(g);
    }
  }
  return out;
}

FirstClusters first_clusters(const InfoMeasure& measure, const Subset& b, double tol) {
  if (b.count() < 2) throw InputError("first clusters need a set of at least two elements");
  if (b.count() > 16) throw InputError("generic first clusters limited to 16 elements");
  FirstClusters out;
  out.value = measure(b);
  const auto elems = b.elements();
  const std::uint64_t full = (std::uint64_t{1} << elems.size()) - 1;
  SetFamily above;
  for (std::uint64_t bits = 1; bits < full; ++bits) {
    if (std::popcount(bits) < 2) continue;
    Subset s;
    for (std::size_t k = 0; k < elems.size(); ++k) {
      if ((bits >> k) & 1u) s.insert(elems[k]);
    }
    if (measure(s) > out.value + tol) above.push_back(s);
  }
  out.clusters = maximal_sets(above);
  return out;
}

std::vector<ClusterRecord> clusters_iterative(const InfoMeasure& measure, double tol) {
  if (measure.size() < 2) throw InputError("clustering needs at least two elements");
  std::vector<ClusterRecord> out;
  std::set<Subset> seen;
  std::deque<Subset> queue{Subset::full(measure.size())};
  while (!queue.empty()) {
    const Subset b = queue.front();
    queue.pop_front();
    if (!seen.insert(b).second) continue;
    const auto fc = first_clusters(measure, b, tol);
    out.push_back({b, fc.value});
    for (const auto& c : fc.clusters) queue.push_back(c);
  }
  return out;
}

bool is_cluster(const InfoMeasure& measure, const Subset& b, double tol) {
  const std::size_t m = measure.size();
  if (b.count() < 2) throw InputError("a cluster has at least two elements");
  if (m > 16) throw InputError("cluster test limited to 16 elements");
  const double v = measure(b);
  const std::uint64_t inner = b.mask();
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  const std::uint64_t free = full & ~inner;
  // Every non-empty subset of the complement extends b to a proper superset.
  for (std::uint64_t extra = free; extra != 0; extra = (extra - 1) & free) {
    if (measure(Subset::from_mask(inner | extra)) >= v - tol) return false;
  }
  return true;
}

bool is_cluster(const SubmodularOracle& h, const Subset& b) {
  if (h.size() > 12) throw InputError("cluster test limited to 12 elements");
  const MmiMeasure measure(borrow(h), MmiMeasure::Method::kBrute);
  return is_cluster(measure, b);
}

bool critical_values_match(const SubmodularOracle& h, const ClusteringSolution& solution, double tol) {
  if (h.size() > 12) throw InputError("critical value check limited to 12 elements");
  const auto records = brute_clusters(h, 12);
  std::vector<double> values;
  for (const auto& r : records) values.push_back(r.value);
  std::sort(values.begin(), values.end());
  std::vector<double> distinct;
  for (double v : values) {
    if (distinct.empty() || v > distinct.back() + tol) distinct.push_back(v);
  }
  const auto& g = solution.critical_values;
  if (distinct.size() != g.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (std::abs(distinct[i] - g[i]) > tol * std::max(1.0, std::abs(g[i]))) return false;
  }
  return true;
}

SetFamily clusters_from_records(const std::vector<ClusterRecord>& records, double gamma) {
  SetFamily above;
  for (const auto& r : records) {
    if (r.value > gamma) above.push_back(r.set);
  }
  return maximal_sets(above);
}

}  // namespace infoclust
