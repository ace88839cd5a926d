#pragma once

// Data-parallel inner loops. Every kernel has a serial reference with the
// same signature and a `_parallel` variant that uses OpenMP when available.
// Both produce bit-identical results: reductions are min / bitwise-and and
// collected lists are sorted before returning.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "infoclust/oracle.hpp"

namespace infoclust::kernels {

int max_threads();

/// values[mask] = f(mask) for every mask < 2^m.
std::vector<double> tabulate_serial(const SubmodularOracle& f);
std::vector<double> tabulate_parallel(const SubmodularOracle& f);

/// Minimum of f over {B ⊆ universe : pinned ∈ B} and the intersection of
/// every B whose value is within `tol` of that minimum. For submodular f
/// the intersection is the inclusion-wise minimal minimizer.
struct PinnedMin {
  double value = 0.0;
  Subset minimizer;
};
PinnedMin exhaustive_pinned_min_serial(const SubmodularOracle& f, const std::vector<std::size_t>& universe,
                                       std::size_t pinned, double tol);
PinnedMin exhaustive_pinned_min_parallel(const SubmodularOracle& f, const std::vector<std::size_t>& universe,
                                         std::size_t pinned, double tol);

/// A set partition of {0..m-1} as bitmask blocks (m <= 64), in
/// restricted-growth order: blocks[k] holds the elements labelled k.
using MaskPartition = std::vector<std::uint64_t>;

/// Scores a partition; lower is better. Return +inf to skip it.
using PartitionObjective = std::function<double(const MaskPartition&)>;

/// All partitions whose score is within `tol` of the best score, plus the
/// best score itself. Results are sorted by (block count desc, rgs order).
struct PartitionMinima {
  double value = 0.0;
  std::vector<MaskPartition> minimizers;
  std::uint64_t visited = 0;
};
PartitionMinima min_over_partitions_serial(std::size_t m, const PartitionObjective& objective, double tol);
PartitionMinima min_over_partitions_parallel(std::size_t m, const PartitionObjective& objective, double tol);

/// Local submodularity test on a full value table:
/// f(S+i) + f(S+j) >= f(S+i+j) + f(S) - tol for all S and i < j outside S.
struct LocalViolation {
  std::uint64_t base = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  double margin = 0.0;  // lhs - rhs (negative)
};
std::vector<LocalViolation> local_submodularity_serial(std::size_t m, const std::vector<double>& table,
                                                       double tol, std::size_t max_reports);
std::vector<LocalViolation> local_submodularity_parallel(std::size_t m, const std::vector<double>& table,
                                                         double tol, std::size_t max_reports);

}  // namespace infoclust::kernels
