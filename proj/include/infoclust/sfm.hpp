#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "infoclust/oracle.hpp"

namespace infoclust {

enum class SfmMode { kAuto, kExhaustive, kMinNormPoint };
enum class SfmMethod { kExhaustive, kMinNormPoint, kMinCut };

std::string to_string(SfmMode mode);
std::string to_string(SfmMethod method);
/// "auto", "exhaustive" or "mnp"; throws InputError otherwise.
SfmMode parse_sfm_mode(const std::string& text);

struct SfmOptions {
  SfmMode mode = SfmMode::kAuto;
  /// Largest universe solved by enumeration in auto mode.
  std::size_t exhaustive_limit = 16;
  /// Value comparisons use tol * max(1, |f(U)|).
  double tol = 1e-9;
  /// Minimum-norm-point stopping rule on ‖x‖² - min_q x·q.
  double mnp_eps = 1e-9;
  /// Elements with x_i below -mnp_support are certainly in the minimizer.
  double mnp_support = 1e-7;
  /// 0 selects min(10 * 2^|U|, 10^6) affine-minimization steps.
  std::size_t mnp_max_steps = 0;
  /// Run the enumeration with the OpenMP kernel.
  bool parallel = true;
};

struct SfmResult {
  double value = 0.0;
  Subset minimizer;
  SfmMethod method = SfmMethod::kExhaustive;
};

/// min f(B) over B ⊆ universe with pinned ∈ B, and the inclusion-wise
/// minimal minimizer. Auto mode uses a minimum cut when f exposes a
/// CutForm, enumerates when |universe| is at most exhaustive_limit, and
/// falls back to the minimum-norm-point method otherwise.
///
/// Throws SolverError (carrying the best bound) when the minimum-norm-point
/// method exhausts its step budget.
SfmResult sfm_pinned(const SubmodularOracle& f, const Subset& universe, std::size_t pinned,
                     const SfmOptions& options = {});

struct MinNormPointResult {
  std::vector<double> x;  // point of the base polytope of f - f(∅)
  Subset minimizer;       // minimal minimizer of f
  double value = 0.0;     // f(minimizer)
  std::size_t steps = 0;
};

/// Fujishige-Wolfe minimum-norm-point minimization of f over all subsets
/// of its ground set.
MinNormPointResult minimum_norm_point(const SubmodularOracle& f, const SfmOptions& options = {});

/// Pinned minimization of a CutForm by one s-t minimum cut.
SfmResult min_cut_pinned(const CutForm& form, std::size_t ground_size, const Subset& universe, std::size_t pinned);

}  // namespace infoclust
