#pragma once

#include <Eigen/Dense>
#include <numbers>
#include <string>
#include <vector>

#include "infoclust/oracle.hpp"

namespace infoclust {

/// Jointly Gaussian source given by its covariance matrix.
/// h(B) is the differential entropy ½(|B| log 2πe + log det Σ_B).
class GaussianSource : public SubmodularOracle {
 public:
  /// Natural log by default. Throws InputError unless the matrix is square,
  /// symmetric and positive definite (smallest eigenvalue above 1e-12 times
  /// the largest).
  explicit GaussianSource(Eigen::MatrixXd covariance, double log_base = std::numbers::e,
                          std::vector<std::string> names = {});

  std::size_t size() const override { return static_cast<std::size_t>(cov_.rows()); }
  double operator()(const Subset& b) const override;
  double log_base() const override { return log_base_; }

  /// Throws InputError for empty B or when Σ_B is numerically singular.
  double entropy(const Subset& b) const;
  /// log det Σ_B in the configured base.
  double log_det(const Subset& b) const;

  const Eigen::MatrixXd& covariance() const { return cov_; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  Eigen::MatrixXd cov_;
  double log_base_;
  double log_scale_;  // 1 / ln(base)
  std::vector<std::string> names_;
};

}  // namespace infoclust
