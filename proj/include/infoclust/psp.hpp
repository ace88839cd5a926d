#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "infoclust/oracle.hpp"
#include "infoclust/partition.hpp"
#include "infoclust/sfm.hpp"

namespace infoclust {

struct PspOptions {
  SfmOptions sfm;
  /// Turning-point test tolerance, scaled by max(1, |h(V)|).
  double split_tol = 1e-6;
  /// Evaluate every subset once up front when the ground set is this small.
  std::size_t tabulate_limit = 16;
};

/// ĥ_γ(V) = min over partitions P of Σ_{C∈P} (h(C) - γ), with the finest
/// partition attaining it.
struct DilworthPoint {
  double gamma = 0.0;
  double value = 0.0;
  Partition partition;
};

/// Greedy Dilworth truncation: one pinned SFM per element.
DilworthPoint dilworth_truncation(const SubmodularOracle& h, double gamma, const SfmOptions& options = {});

/// (Σ_{C∈P} h(C) - h(V)) / (|P| - 1); throws InputError when |P| < 2.
double i_partition(const SubmodularOracle& h, const Partition& p);

struct MmiResult {
  double value = 0.0;
  Partition partition;  // the fundamental partition
};

/// I(Z_V) and the finest partition attaining it; requires |V| >= 2.
MmiResult mmi(const SubmodularOracle& h, const PspOptions& options = {});

struct ClusterRecord {
  Subset set;
  double value = 0.0;  // I(Z_C)
  friend bool operator==(const ClusterRecord&, const ClusterRecord&) = default;
};

/// Critical values γ_1 < ... < γ_N with the chain P_0 = {V} ≻ P_1 ≻ ... ≻
/// P_N = singletons, where P_i is optimal on [γ_i, γ_{i+1}).
struct ClusteringSolution {
  std::size_t ground_size = 0;
  double log_base = 0.0;
  std::vector<double> critical_values;
  std::vector<Partition> chain;  // N + 1 partitions

  /// V and every non-singleton block of the chain with I(Z_C), which is the
  /// critical value at which C stops being a block. Sorted by set.
  std::vector<ClusterRecord> clusters() const;
  /// I(Z_C) for a block of the chain, or nullopt.
  std::optional<double> cluster_value(const Subset& c) const;
  /// Throws InputError if the chain or values are malformed.
  void validate() const;
};

/// The complete principal sequence via the Split recursion.
ClusteringSolution compute_psp(const SubmodularOracle& h, const PspOptions& options = {});

/// Accumulates the turning points found by split().
struct SplitAccumulator {
  std::vector<std::pair<double, Partition>> points;  // (γ_i, P_i)
  std::size_t dilworth_calls = 0;
};

/// Finds every turning point strictly between the lines of Q and P, where
/// P strictly refines Q and both are optimal somewhere.
void split(const SubmodularOracle& h, const Partition& q, const Partition& p, SplitAccumulator& acc,
           const PspOptions& options = {});

/// Σ_{C∈P} h(C).
double partition_value(const SubmodularOracle& h, const Partition& p);

/// Cross-checks a solution against brute force (|V| <= 12): γ_i as the
/// minimum slope from P_{i-1} and as min_{C∈P_{i-1}} I(Z_C), the set of
/// blocks attaining it, and P_i rebuilt from their fundamental partitions.
struct RecursionReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
RecursionReport verify_theorem_xi(const SubmodularOracle& h, const ClusteringSolution& solution, double tol = 1e-7);

/// Oracle whose values are a table when the ground set is small enough,
/// otherwise the source itself.
OraclePtr prepare_source(const SubmodularOracle& h, const PspOptions& options);

}  // namespace infoclust
