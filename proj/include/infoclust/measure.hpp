#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "infoclust/oracle.hpp"
#include "infoclust/psp.hpp"

namespace infoclust {

/// A multivariate information measure B ↦ I(Z_B) for |B| >= 2.
class InfoMeasure {
 public:
  virtual ~InfoMeasure() = default;
  virtual std::size_t size() const = 0;
  virtual double operator()(const Subset& b) const = 0;
};

/// Explicit values; sets not listed take `otherwise`.
class TableMeasure : public InfoMeasure {
 public:
  TableMeasure(std::size_t m, const std::vector<std::pair<Subset, double>>& values, double otherwise);

  std::size_t size() const override { return m_; }
  double operator()(const Subset& b) const override;

 private:
  std::size_t m_;
  std::vector<double> values_;
};

/// I(Z_B) of a source, by the solver or by brute force. Values are cached
/// per subset (ground sets up to 16 elements), so an instance must not be
/// shared between threads.
class MmiMeasure : public InfoMeasure {
 public:
  enum class Method { kSolver, kBrute };
  MmiMeasure(OraclePtr source, Method method, PspOptions options = {});

  std::size_t size() const override { return source_->size(); }
  double operator()(const Subset& b) const override;
  /// I(Z_B) and P*(Z_B), indexed like restrict_to(b).
  MmiResult result(const Subset& b) const;

 private:
  OraclePtr source_;
  Method method_;
  PspOptions options_;
  mutable std::vector<std::optional<double>> cache_;
};

}  // namespace infoclust
