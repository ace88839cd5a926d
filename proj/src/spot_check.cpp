#include "infoclust/spot_check.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "infoclust/error.hpp"
#include "infoclust/kernels.hpp"

namespace infoclust {

namespace {

Subset random_subset(std::mt19937_64& rng, std::size_t m) {
  Subset s;
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (i % 64 == 0) bits = rng();
    if (bits & 1u) s.insert(i);
    bits >>= 1;
  }
  return s;
}

}  // namespace

SpotCheckReport submodularity_spot_check(const SubmodularOracle& f, const SpotCheckOptions& options) {
  const std::size_t m = f.size();
  SpotCheckReport report;
  report.exhaustive = options.exhaustive;
  const double tol = options.tol * std::max(1.0, std::abs(f(Subset::full(m))));

  if (options.exhaustive) {
    if (m > 20) throw InputError("exhaustive submodularity check supports at most 20 elements");
    const auto table = kernels::tabulate_parallel(f);
    const auto local = kernels::local_submodularity_parallel(m, table, tol, options.max_reports);
    for (const auto& v : local) {
      Subset base = Subset::from_mask(v.base);
      Subset b1 = base;
      b1.insert(v.i);
      Subset b2 = base;
      b2.insert(v.j);
      report.violations.push_back({b1, b2, v.margin});
    }
    const std::uint64_t subsets = std::uint64_t{1} << m;
    report.checked = m < 2 ? 0 : subsets / 4 * m * (m - 1) / 2;
    return report;
  }

  std::mt19937_64 rng(options.seed);
  for (std::size_t t = 0; t < options.trials; ++t) {
    const Subset b1 = random_subset(rng, m);
    const Subset b2 = random_subset(rng, m);
    const double margin = f(b1) + f(b2) - f(b1 & b2) - f(b1 | b2);
    ++report.checked;
    if (margin < -tol && report.violations.size() < options.max_reports) {
      report.violations.push_back({b1, b2, margin});
    }
  }
  return report;
}

}  // namespace infoclust
