#include "approach/rate_fit.hpp"

#include <cmath>

#include "approach/error.hpp"

namespace approach {

RateFit fit_rate(const std::vector<double>& t, const std::vector<double>& distances, double t_min) {
  if (t.size() != distances.size()) throw DimensionError("rate fit inputs differ in length");
  std::vector<double> xs, ys;
  bool zero = false;
  int eligible = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t_min) continue;
    ++eligible;
    if (!(distances[i] > 0.0)) {
      zero = true;
      continue;
    }
    xs.push_back(std::log(t[i]));
    ys.push_back(std::log(distances[i]));
  }
  RateFit fit;
  fit.points = eligible;
  if (fit.points < 5) throw DomainError("rate fit needs at least 5 checkpoints beyond t_min");
  if (zero) {
    fit.converged = true;
    return fit;
  }
  const auto n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx <= 0.0) throw DomainError("rate fit needs distinct t values");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

RateFit fit_rate(const RunRecord& record, const std::string& column, double t_min) {
  return fit_rate(record.column("t"), record.column(column), t_min);
}

}  // namespace approach
