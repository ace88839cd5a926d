#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "infoclust/subset.hpp"

namespace infoclust {

class WeightedHypergraph;

enum class CutKind {
  kCoverage,       // total weight of edges touching B (hypergraph entropy)
  kInCut,          // c(δ⁻(B)): head outside B, some vertex inside
  kUndirectedCut,  // edges with vertices both inside and outside B
};

/// Closed form f(B) = scale * g(B) + sum_{i in B} modular[i] + constant,
/// with g one of the hypergraph functions above. Oracles that can express
/// themselves this way unlock the min-cut SFM route. The constant applies to
/// non-empty B only. `graph` is non-owning; the oracle keeps it alive.
struct CutForm {
  const WeightedHypergraph* graph = nullptr;
  CutKind kind = CutKind::kCoverage;
  double scale = 1.0;
  std::vector<double> modular;
  double constant = 0.0;
};

/// A real set function on subsets of {0..size()-1}.
///
/// Implementations are immutable after construction and evaluation is pure,
/// so one oracle may be evaluated concurrently from many threads.
/// Evaluation of the empty set returns the function's value at ∅ (0 for
/// entropy-like functions).
class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;

  virtual std::size_t size() const = 0;
  virtual double operator()(const Subset& b) const = 0;

  virtual std::optional<CutForm> cut_form() const { return std::nullopt; }

  /// h restricted to subsets of `b`, re-indexed so that the k-th smallest
  /// element of `b` becomes element k.
  virtual std::shared_ptr<const SubmodularOracle> restrict_to(const Subset& b) const;

  /// Values are reported in units of this log base (0 when meaningless).
  virtual double log_base() const { return 0.0; }
};

using OraclePtr = std::shared_ptr<const SubmodularOracle>;

/// Does not own the referenced oracle; callers guarantee its lifetime.
OraclePtr borrow(const SubmodularOracle& oracle);

/// Explicit value table over all 2^m subsets.
class TableSource : public SubmodularOracle {
 public:
  /// values[mask] = f(mask); requires values.size() == 2^m, m <= 24.
  TableSource(std::size_t m, std::vector<double> values, double log_base = 0.0);
  /// Builds the table from sparse entries; `missing` fills unspecified
  /// non-empty subsets (f(∅) defaults to 0).
  static TableSource from_entries(std::size_t m, const std::vector<std::pair<Subset, double>>& entries,
                                  std::optional<double> missing = std::nullopt);
  /// Evaluates every subset of `source` (parallel when built with OpenMP).
  static TableSource tabulate(const SubmodularOracle& source);

  std::size_t size() const override { return m_; }
  double operator()(const Subset& b) const override { return values_[b.mask()]; }
  double at(std::uint64_t mask) const { return values_[mask]; }
  const std::vector<double>& values() const { return values_; }
  double log_base() const override { return log_base_; }

 private:
  std::size_t m_;
  std::vector<double> values_;
  double log_base_;
};

/// f restricted to a subset of its ground set (see restrict_to).
class RestrictedOracle : public SubmodularOracle {
 public:
  RestrictedOracle(OraclePtr base, const Subset& domain);

  std::size_t size() const override { return local_to_global_.size(); }
  double operator()(const Subset& b) const override;
  double log_base() const override { return base_->log_base(); }
  Subset to_global(const Subset& local) const;

 private:
  OraclePtr base_;
  std::vector<std::size_t> local_to_global_;
};

/// f'(B) = scale * f(B) + shift_per_element * |B| + offset (offset on B ≠ ∅).
class AffineOracle : public SubmodularOracle {
 public:
  AffineOracle(OraclePtr base, double scale, double shift_per_element, double offset = 0.0);

  std::size_t size() const override { return base_->size(); }
  double operator()(const Subset& b) const override;
  std::optional<CutForm> cut_form() const override;
  double log_base() const override { return base_->log_base(); }

 private:
  OraclePtr base_;
  double scale_;
  double shift_;
  double offset_;
};

/// B ↦ f(B) - gamma - sum_{i∈B} x[i] for non-empty B; the function the
/// Dilworth greedy hands to SFM.
class ResidualOracle : public SubmodularOracle {
 public:
  ResidualOracle(const SubmodularOracle& base, double gamma, const std::vector<double>& x);
  // x is read live; it must outlive the oracle.
  ResidualOracle(const SubmodularOracle&, double, std::vector<double>&&) = delete;

  std::size_t size() const override { return base_.size(); }
  double operator()(const Subset& b) const override;
  std::optional<CutForm> cut_form() const override;

 private:
  const SubmodularOracle& base_;
  double gamma_;
  const std::vector<double>& x_;
};

}  // namespace infoclust
