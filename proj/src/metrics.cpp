#include "infoclust/metrics.hpp"

#include <algorithm>

#include "infoclust/error.hpp"

namespace infoclust {

double integration(const SubmodularOracle& h, const PspOptions& options) { return mmi(h, options).value; }

double segregation(const ClusteringSolution& solution, const Subset& c) {
  if (solution.critical_values.empty()) throw InputError("solution has no critical values");
  if (c == Subset::full(solution.ground_size)) throw InputError("segregation of V itself is not defined");
  const auto ic = solution.cluster_value(c);
  if (!ic) throw InputError(c.to_string() + " is not a cluster");
  const double iv = solution.critical_values.front();
  if (iv < 0.0) throw InputError("segregation is undefined when I(Z_V) < 0");
  if (!(*ic > 0.0)) throw InputError("segregation is undefined when I(Z_C) <= 0 for " + c.to_string());
  return 1.0 - iv / *ic;
}

SegregationReport segregation_report(const ClusteringSolution& solution) {
  SegregationReport report;
  const Subset all = Subset::full(solution.ground_size);
  for (const auto& r : solution.clusters()) {
    if (r.set == all) continue;
    report.entries.push_back({r.set, segregation(solution, r.set)});
  }
  if (report.entries.empty()) return report;
  report.min = report.max = report.entries.front().value;
  double sum = 0.0;
  for (const auto& e : report.entries) {
    report.min = std::min(report.min, e.value);
    report.max = std::max(report.max, e.value);
    sum += e.value;
  }
  report.mean = sum / static_cast<double>(report.entries.size());
  return report;
}

}  // namespace infoclust
