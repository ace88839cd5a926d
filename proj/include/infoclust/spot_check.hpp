#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "infoclust/oracle.hpp"

namespace infoclust {

/// A pair with f(B1) + f(B2) < f(B1 ∩ B2) + f(B1 ∪ B2) - tol.
struct SubmodularityViolation {
  Subset b1;
  Subset b2;
  double margin = 0.0;  // f(B1) + f(B2) - f(B1 ∩ B2) - f(B1 ∪ B2)
};

struct SpotCheckReport {
  bool exhaustive = false;
  std::uint64_t checked = 0;
  std::vector<SubmodularityViolation> violations;
  bool ok() const { return violations.empty(); }
};

struct SpotCheckOptions {
  bool exhaustive = false;
  std::size_t trials = 1000;     // sampled pairs
  std::uint64_t seed = 1;
  double tol = 1e-9;             // scaled by max(1, |f(V)|)
  std::size_t max_reports = 16;
};

/// Exhaustive mode (|V| <= 20) tests the equivalent local inequalities
/// f(S+i) + f(S+j) >= f(S+i+j) + f(S) over a full value table and reports
/// violations as the pair (S+i, S+j). Sampled mode draws pairs uniformly.
SpotCheckReport submodularity_spot_check(const SubmodularOracle& f, const SpotCheckOptions& options = {});

}  // namespace infoclust
