#pragma once

#include <stdexcept>
#include <string>

namespace infoclust {

/// Malformed input: bad files, invalid parameters, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solver could not produce a trustworthy answer.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what, double best_bound = 0.0)
      : std::runtime_error(what), best_bound_(best_bound) {}
  /// Best objective bound reached before giving up (meaningful for SFM).
  double best_bound() const { return best_bound_; }

 private:
  double best_bound_;
};

}  // namespace infoclust
