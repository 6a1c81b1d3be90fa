#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace approach {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (columns vs. mixed-action length, d mismatch, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on a scalar argument was violated (negative alpha, T = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The optimizer stopped before meeting its tolerances. Carries the best
/// iterate it had, in the problem's own variable order.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, std::vector<double> best_iterate)
      : Error(what), best_iterate_(std::move(best_iterate)) {}

  const std::vector<double>& best_iterate() const noexcept { return best_iterate_; }

 private:
  std::vector<double> best_iterate_;
};

/// A constrained problem has no point satisfying its hard constraint.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Bad configuration file or CLI input. `key()` names the offending entry.
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& message)
      : Error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Raised in audit mode when an invariant that the theory guarantees fails
/// (adversary leaves K, Blackwell inner-product inequality violated, ...).
class AuditError : public Error {
 public:
  using Error::Error;
};

}  // namespace approach
