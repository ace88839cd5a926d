#pragma once

#include <cstddef>
#include <vector>

#include "infoclust/measure.hpp"
#include "infoclust/partition.hpp"
#include "infoclust/psp.hpp"

namespace infoclust {

/// Clusters at threshold γ: {V} below γ_1, the non-singleton blocks of P_i
/// on [γ_i, γ_{i+1}), nothing from γ_N on. γ within `tol` of a critical
/// value counts as equal to it.
SetFamily clusters_at(const ClusteringSolution& solution, double gamma, double tol = 1e-9);

/// Breadth-first iteration through fundamental partitions: records
/// (I(Z_B), B) for V and for every non-singleton block of P*(Z_B) of a
/// recorded B. Blocks are visited in order of smallest element.
std::vector<ClusterRecord> clusters_iterative(const SubmodularOracle& h, const PspOptions& options = {});

/// First critical value of Z_B under a generic measure, with the maximal
/// proper subsets whose measure exceeds it.
struct FirstClusters {
  double value = 0.0;
  SetFamily clusters;
};
FirstClusters first_clusters(const InfoMeasure& measure, const Subset& b, double tol = 1e-9);

/// The same iteration over any measure (subsets enumerated, so |V| <= 16).
/// Only guaranteed to list exactly the clusters when the measure satisfies
/// I(B1 ∪ B2) >= min(I(B1), I(B2)) for intersecting B1, B2.
std::vector<ClusterRecord> clusters_iterative(const InfoMeasure& measure, double tol = 1e-9);

/// B is a cluster iff every proper superset has a strictly smaller measure.
bool is_cluster(const InfoMeasure& measure, const Subset& b, double tol = 1e-9);
/// With I(Z_B) by brute force; requires |V| <= 12.
bool is_cluster(const SubmodularOracle& h, const Subset& b);

/// The critical values equal the MMI values of the clusters found by brute
/// force (|V| <= 12).
bool critical_values_match(const SubmodularOracle& h, const ClusteringSolution& solution, double tol = 1e-7);

/// Clusters of a record list at threshold γ: the maximal sets with value > γ.
SetFamily clusters_from_records(const std::vector<ClusterRecord>& records, double gamma);

}  // namespace infoclust
