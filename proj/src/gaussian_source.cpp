#include "infoclust/gaussian_source.hpp"

#include <cmath>

#include "infoclust/error.hpp"

namespace infoclust {

namespace {

constexpr double kPivotThreshold = 1e-12;

}  // namespace

GaussianSource::GaussianSource(Eigen::MatrixXd covariance, double log_base, std::vector<std::string> names)
    : cov_(std::move(covariance)), log_base_(log_base), names_(std::move(names)) {
  if (!(log_base_ > 0.0) || log_base_ == 1.0 || !std::isfinite(log_base_)) {
    throw InputError("log base must be positive, finite and different from 1");
  }
  log_scale_ = 1.0 / std::log(log_base_);
  if (cov_.rows() == 0 || cov_.rows() != cov_.cols()) throw InputError("covariance must be a non-empty square matrix");
  if (cov_.rows() > 64) throw InputError("Gaussian source limited to 64 variables");
  if (!cov_.allFinite()) throw InputError("covariance has non-finite entries");
  const double scale = std::max(1.0, cov_.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < cov_.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < cov_.cols(); ++j) {
      if (std::abs(cov_(i, j) - cov_(j, i)) > 1e-9 * scale) {
        throw InputError("covariance is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
  cov_ = 0.5 * (cov_ + cov_.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov_, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  if (!(ev.minCoeff() > kPivotThreshold * ev.maxCoeff()) || !(ev.maxCoeff() > 0.0)) {
    throw InputError("covariance is not positive definite");
  }
  const auto m = static_cast<std::size_t>(cov_.rows());
  if (names_.empty()) {
    for (std::size_t i = 0; i < m; ++i) names_.push_back(std::to_string(i + 1));
  }
  if (names_.size() != m) throw InputError("number of names does not match covariance size");
}

double GaussianSource::log_det(const Subset& b) const {
  if (b.empty()) throw InputError("entropy of the empty set is undefined");
  if (b.bound() > size()) throw InputError("subset " + b.to_string() + " is outside the ground set");
  const auto elems = b.elements();
  const auto k = static_cast<Eigen::Index>(elems.size());
  Eigen::MatrixXd sub(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) {
      sub(r, c) = cov_(static_cast<Eigen::Index>(elems[r]), static_cast<Eigen::Index>(elems[c]));
    }
  }
  Eigen::LDLT<Eigen::MatrixXd> ldlt(sub);
  const Eigen::VectorXd d = ldlt.vectorD();
  const double dmax = d.cwiseAbs().maxCoeff();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (!(d(i) > kPivotThreshold * dmax)) {
      throw InputError("covariance restricted to " + b.to_string() + " is numerically singular");
    }
    sum += std::log(d(i));
  }
  return sum * log_scale_;
}

double GaussianSource::entropy(const Subset& b) const {
  const double ld = log_det(b);
  const double c = std::log(2.0 * std::numbers::pi * std::numbers::e) * log_scale_;
  return 0.5 * (static_cast<double>(b.count()) * c + ld);
}

double GaussianSource::operator()(const Subset& b) const {
  if (b.empty()) return 0.0;
  return entropy(b);
}

}  // namespace infoclust
