#pragma once

#include <string>
#include <vector>

#include "approach/run_record.hpp"

namespace approach {

/// Least squares of log(distance) on log(t) over the points with t >= t_min.
/// When some distance there is <= 0 no fit is made and `converged` is set.
struct RateFit {
  bool converged = false;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int points = 0;
};

/// Needs at least 5 points with t >= t_min (DomainError otherwise).
RateFit fit_rate(const std::vector<double>& t, const std::vector<double>& distances, double t_min);
RateFit fit_rate(const RunRecord& record, const std::string& column, double t_min);

}  // namespace approach
