#include "infoclust/discrete_source.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "infoclust/error.hpp"

namespace infoclust {

namespace {

constexpr std::size_t kJointLimit = std::size_t{1} << 24;

double log_in_base(double p, double base) {
  if (base == 2.0) return std::log2(p);
  if (base == 10.0) return std::log10(p);
  return std::log(p) / std::log(base);
}

void check_log_base(double base) {
  if (!(base > 0.0) || base == 1.0 || !std::isfinite(base)) {
    throw InputError("log base must be positive, finite and different from 1");
  }
}

}  // namespace

DiscreteSource::DiscreteSource(std::vector<std::size_t> alphabet_sizes, std::vector<PmfEntry> pmf, double log_base,
                               std::vector<std::string> names)
    : alphabet_sizes_(std::move(alphabet_sizes)), pmf_(std::move(pmf)), log_base_(log_base), names_(std::move(names)) {
  check_log_base(log_base_);
  const std::size_t m = alphabet_sizes_.size();
  if (m == 0) throw InputError("discrete source needs at least one variable");
  if (m > 64) throw InputError("discrete source limited to 64 variables");
  if (names_.empty()) {
    for (std::size_t i = 0; i < m; ++i) names_.push_back(std::to_string(i + 1));
  }
  if (names_.size() != m) throw InputError("number of names does not match number of variables");

  std::size_t joint = 1;
  for (auto a : alphabet_sizes_) {
    if (a == 0) throw InputError("alphabet sizes must be positive");
    if (joint > kJointLimit / a) throw InputError("joint alphabet exceeds 2^24 outcomes");
    joint *= a;
  }

  double total = 0.0;
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t r = 0; r < pmf_.size(); ++r) {
    const auto& e = pmf_[r];
    if (e.outcome.size() != m) {
      throw InputError("pmf entry " + std::to_string(r + 1) + " has " + std::to_string(e.outcome.size()) +
                       " values, expected " + std::to_string(m));
    }
    if (!(e.p >= 0.0) || !std::isfinite(e.p)) {
      throw InputError("pmf entry " + std::to_string(r + 1) + " has an invalid probability");
    }
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (e.outcome[i] >= alphabet_sizes_[i]) {
        throw InputError("pmf entry " + std::to_string(r + 1) + ": value of variable " + std::to_string(i + 1) +
                         " is outside its alphabet");
      }
      key = key * alphabet_sizes_[i] + e.outcome[i];
    }
    if (!seen.insert(key).second) throw InputError("pmf entry " + std::to_string(r + 1) + " repeats an outcome");
    total += e.p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InputError("pmf sums to " + std::to_string(total) + ", not 1");
  std::erase_if(pmf_, [](const PmfEntry& e) { return e.p == 0.0; });
}

DiscreteSource DiscreteSource::from_uniform_bits(std::size_t bit_count,
                                                 const std::vector<std::vector<std::size_t>>& variable_bits,
                                                 double log_base) {
  if (bit_count > 24) throw InputError("at most 24 underlying bits");
  std::vector<std::size_t> alphabets;
  for (const auto& bits : variable_bits) {
    for (auto b : bits) {
      if (b >= bit_count) throw InputError("bit index out of range");
    }
    alphabets.push_back(std::size_t{1} << bits.size());
  }
  const std::size_t n = std::size_t{1} << bit_count;
  const double p = 1.0 / static_cast<double>(n);
  std::vector<PmfEntry> pmf;
  pmf.reserve(n);
  for (std::size_t w = 0; w < n; ++w) {
    PmfEntry e;
    e.p = p;
    for (const auto& bits : variable_bits) {
      std::size_t v = 0;
      for (auto b : bits) v = (v << 1) | ((w >> b) & 1u);
      e.outcome.push_back(v);
    }
    pmf.push_back(std::move(e));
  }
  // Distinct bit patterns can map to the same joint outcome; merge them.
  std::sort(pmf.begin(), pmf.end(), [](const PmfEntry& a, const PmfEntry& b) { return a.outcome < b.outcome; });
  std::vector<PmfEntry> merged;
  for (auto& e : pmf) {
    if (!merged.empty() && merged.back().outcome == e.outcome) {
      merged.back().p += e.p;
    } else {
      merged.push_back(std::move(e));
    }
  }
  return DiscreteSource(std::move(alphabets), std::move(merged), log_base);
}

double DiscreteSource::operator()(const Subset& b) const {
  if (b.empty()) return 0.0;
  return entropy(b);
}

double DiscreteSource::entropy(const Subset& b) const {
  if (b.empty()) throw InputError("entropy of the empty set is undefined");
  if (b.bound() > size()) throw InputError("subset " + b.to_string() + " is outside the ground set");
  const auto elems = b.elements();
  std::size_t span = 1;
  for (auto i : elems) span *= alphabet_sizes_[i];

  auto key_of = [&](const PmfEntry& e) {
    std::uint64_t key = 0;
    for (auto i : elems) key = key * alphabet_sizes_[i] + e.outcome[i];
    return key;
  };

  double h = 0.0;
  if (span <= (std::size_t{1} << 16)) {
    std::vector<double> marginal(span, 0.0);
    for (const auto& e : pmf_) marginal[key_of(e)] += e.p;
    for (double p : marginal) {
      if (p > 0.0) h -= p * log_in_base(p, log_base_);
    }
  } else {
    std::unordered_map<std::uint64_t, double> marginal;
    marginal.reserve(pmf_.size());
    for (const auto& e : pmf_) marginal[key_of(e)] += e.p;
    std::vector<double> ps;
    ps.reserve(marginal.size());
    for (const auto& [_, p] : marginal) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    for (double p : ps) {
      if (p > 0.0) h -= p * log_in_base(p, log_base_);
    }
  }
  return h;
}

DiscreteSource DiscreteSource::with_log_base(double log_base) const {
  return DiscreteSource(alphabet_sizes_, pmf_, log_base, names_);
}

std::size_t EmpiricalSource::bin_of(double x, double lo, double hi, std::size_t bins) {
  if (!(hi > lo)) return 0;
  const double t = (x - lo) / (hi - lo) * static_cast<double>(bins);
  const double c = std::ceil(t);
  if (c <= 1.0) return 0;
  return std::min(bins - 1, static_cast<std::size_t>(c) - 1);
}

EmpiricalSource::EmpiricalSource(const std::vector<std::vector<double>>& samples, std::size_t bins, double log_base,
                                 std::vector<std::string> names)
    : bins_(bins), discrete_(quantize(samples, bins, log_base, std::move(names))) {}

DiscreteSource EmpiricalSource::quantize(const std::vector<std::vector<double>>& samples, std::size_t bins,
                                         double log_base, std::vector<std::string> names) {
  if (bins < 2) throw InputError("bins must be at least 2");
  if (samples.empty()) throw InputError("no samples");
  const std::size_t m = samples.front().size();
  if (m == 0) throw InputError("samples have no columns");
  std::vector<double> lo(m, std::numeric_limits<double>::infinity());
  std::vector<double> hi(m, -std::numeric_limits<double>::infinity());
  for (std::size_t r = 0; r < samples.size(); ++r) {
    if (samples[r].size() != m) {
      throw InputError("sample row " + std::to_string(r + 1) + " has " + std::to_string(samples[r].size()) +
                       " values, expected " + std::to_string(m));
    }
    for (std::size_t i = 0; i < m; ++i) {
      const double x = samples[r][i];
      if (!std::isfinite(x)) throw InputError("sample row " + std::to_string(r + 1) + " has a non-finite value");
      lo[i] = std::min(lo[i], x);
      hi[i] = std::max(hi[i], x);
    }
  }
  std::map<std::vector<std::size_t>, std::size_t> counts;
  for (const auto& row : samples) {
    std::vector<std::size_t> outcome(m);
    for (std::size_t i = 0; i < m; ++i) outcome[i] = bin_of(row[i], lo[i], hi[i], bins);
    ++counts[outcome];
  }
  const double n = static_cast<double>(samples.size());
  std::vector<PmfEntry> pmf;
  pmf.reserve(counts.size());
  double total = 0.0;
  for (const auto& [outcome, c] : counts) {
    pmf.push_back({outcome, static_cast<double>(c) / n});
    total += pmf.back().p;
  }
  // Renormalize the rounding of count / n so the sum check is exact.
  for (auto& e : pmf) e.p /= total;
  return DiscreteSource(std::vector<std::size_t>(m, bins), std::move(pmf), log_base, std::move(names));
}

}  // namespace infoclust
