#pragma once

#include <vector>

#include "approach/geometry.hpp"

namespace approach {

/// An affinely parameterized box of payoff matrices,
///   m(theta) = base + sum_i theta_i * directions[i],  lower <= theta <= upper.
/// Dimension 0 is a single point. The worked examples are of this form and
/// the oracles (concave envelopes, decompositions) work on the parameter box.
class ParamSpace {
 public:
  ParamSpace(PayoffMatrix base, std::vector<PayoffMatrix> directions, Vec lower, Vec upper);
  static ParamSpace point(PayoffMatrix m);

  int params() const noexcept { return static_cast<int>(directions_.size()); }
  int dim() const noexcept { return base_.dim(); }
  int actions() const noexcept { return base_.actions(); }
  const Vec& lower() const noexcept { return lower_; }
  const Vec& upper() const noexcept { return upper_; }

  PayoffMatrix at(const Vec& theta) const;
  /// Least-squares parameter of m (exact when m lies in the affine span).
  Vec locate(const PayoffMatrix& m) const;
  bool contains(const Vec& theta, double tol = 1e-9) const;

  /// Uniform grid with `per_axis` points on each axis (row-major, first
  /// parameter slowest).
  std::vector<Vec> grid(int per_axis) const;
  /// The 2^k box corners mapped to payoff matrices.
  ConvexBody body() const;

 private:
  PayoffMatrix base_;
  std::vector<PayoffMatrix> directions_;
  Vec lower_;
  Vec upper_;
  Mat basis_;  // columns: flattened directions
  Eigen::CompleteOrthogonalDecomposition<Mat> solver_;
};

}  // namespace approach
