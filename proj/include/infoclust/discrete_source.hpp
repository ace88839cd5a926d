#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "infoclust/oracle.hpp"

namespace infoclust {

/// One joint outcome (a value per variable) and its probability.
struct PmfEntry {
  std::vector<std::size_t> outcome;
  double p = 0.0;
};

/// Finite-alphabet source given by an explicit joint pmf.
/// Entropies are computed by exact marginalization.
class DiscreteSource : public SubmodularOracle {
 public:
  /// Throws InputError if probabilities are negative, do not sum to 1
  /// (tolerance 1e-9), an outcome is out of range or repeated, or the
  /// product of alphabet sizes exceeds 2^24.
  DiscreteSource(std::vector<std::size_t> alphabet_sizes, std::vector<PmfEntry> pmf, double log_base = 2.0,
                 std::vector<std::string> names = {});

  /// Variables built from `bit_count` independent uniform bits; variable i
  /// is the tuple of the bits listed in variable_bits[i].
  static DiscreteSource from_uniform_bits(std::size_t bit_count,
                                          const std::vector<std::vector<std::size_t>>& variable_bits,
                                          double log_base = 2.0);

  std::size_t size() const override { return alphabet_sizes_.size(); }
  /// h(B); 0 for the empty set.
  double operator()(const Subset& b) const override;
  double log_base() const override { return log_base_; }

  /// H(Z_B); throws InputError for empty B.
  double entropy(const Subset& b) const;

  DiscreteSource with_log_base(double log_base) const;

  const std::vector<std::size_t>& alphabet_sizes() const { return alphabet_sizes_; }
  const std::vector<PmfEntry>& pmf() const { return pmf_; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::size_t> alphabet_sizes_;
  std::vector<PmfEntry> pmf_;
  double log_base_;
  std::vector<std::string> names_;
};

/// Samples quantized column-wise into `bins` uniform bins over the observed
/// range (rightmost bin closed, values on an inner edge go to the lower bin),
/// then treated as a plug-in discrete source.
class EmpiricalSource : public SubmodularOracle {
 public:
  EmpiricalSource(const std::vector<std::vector<double>>& samples, std::size_t bins = 8, double log_base = 2.0,
                  std::vector<std::string> names = {});

  std::size_t size() const override { return discrete_.size(); }
  double operator()(const Subset& b) const override { return discrete_(b); }
  double log_base() const override { return discrete_.log_base(); }

  const DiscreteSource& discrete() const { return discrete_; }
  std::size_t bins() const { return bins_; }

  /// Bin index of x within [lo, hi] split into `bins` equal intervals.
  static std::size_t bin_of(double x, double lo, double hi, std::size_t bins);

 private:
  static DiscreteSource quantize(const std::vector<std::vector<double>>& samples, std::size_t bins,
                                 double log_base, std::vector<std::string> names);
  std::size_t bins_;
  DiscreteSource discrete_;
};

}  // namespace infoclust
