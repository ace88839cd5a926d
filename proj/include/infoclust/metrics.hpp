#pragma once

#include <vector>

#include "infoclust/oracle.hpp"
#include "infoclust/psp.hpp"

namespace infoclust {

/// I(Z_V).
double integration(const SubmodularOracle& h, const PspOptions& options = {});

/// 1 - I(Z_V) / I(Z_C) for a cluster C of the solution. Throws InputError
/// when C is not a cluster, when C = V, or when I(Z_C) <= 0 or I(Z_V) < 0
/// (the index is undefined there).
double segregation(const ClusteringSolution& solution, const Subset& c);

struct SegregationEntry {
  Subset cluster;
  double value = 0.0;
};

struct SegregationReport {
  std::vector<SegregationEntry> entries;  // every cluster other than V
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

SegregationReport segregation_report(const ClusteringSolution& solution);

}  // namespace infoclust
