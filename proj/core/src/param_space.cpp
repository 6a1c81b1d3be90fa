#include "approach/param_space.hpp"

#include "approach/error.hpp"

namespace approach {

ParamSpace::ParamSpace(PayoffMatrix base, std::vector<PayoffMatrix> directions, Vec lower,
                       Vec upper)
    : base_(std::move(base)),
      directions_(std::move(directions)),
      lower_(std::move(lower)),
      upper_(std::move(upper)) {
  const auto k = static_cast<Eigen::Index>(directions_.size());
  if (lower_.size() != k || upper_.size() != k) throw DimensionError("bounds length differs");
  for (Eigen::Index i = 0; i < k; ++i) {
    if (!(lower_(i) <= upper_(i))) throw DomainError("empty parameter interval");
  }
  basis_ = Mat::Zero(base_.entries().size(), k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const auto& dir = directions_[static_cast<std::size_t>(i)];
    if (dir.dim() != base_.dim() || dir.actions() != base_.actions()) {
      throw DimensionError("direction shape differs from base");
    }
    basis_.col(i) = dir.flattened();
  }
  if (k > 0) solver_.compute(basis_);
}

ParamSpace ParamSpace::point(PayoffMatrix m) {
  return ParamSpace(std::move(m), {}, Vec(0), Vec(0));
}

PayoffMatrix ParamSpace::at(const Vec& theta) const {
  if (theta.size() != params()) throw DimensionError("parameter length differs");
  Mat m = base_.entries();
  for (int i = 0; i < params(); ++i) m += theta(i) * directions_[static_cast<std::size_t>(i)].entries();
  return PayoffMatrix(std::move(m));
}

Vec ParamSpace::locate(const PayoffMatrix& m) const {
  if (m.dim() != dim() || m.actions() != actions()) throw DimensionError("shape mismatch");
  if (params() == 0) return Vec(0);
  return solver_.solve(Vec(m.flattened() - base_.flattened()));
}

bool ParamSpace::contains(const Vec& theta, double tol) const {
  if (theta.size() != params()) return false;
  for (int i = 0; i < params(); ++i) {
    if (theta(i) < lower_(i) - tol || theta(i) > upper_(i) + tol) return false;
  }
  return true;
}

std::vector<Vec> ParamSpace::grid(int per_axis) const {
  if (params() > 0 && per_axis < 2) throw DomainError("grid needs at least 2 points per axis");
  std::vector<Vec> out;
  const int k = params();
  int total = 1;
  for (int i = 0; i < k; ++i) total *= per_axis;
  out.reserve(static_cast<std::size_t>(total));
  for (int idx = 0; idx < total; ++idx) {
    Vec theta(k);
    int rest = idx;
    for (int i = k - 1; i >= 0; --i) {
      const int j = rest % per_axis;
      rest /= per_axis;
      theta(i) = lower_(i) + (upper_(i) - lower_(i)) * j / (per_axis - 1);
    }
    out.push_back(std::move(theta));
  }
  return out;
}

ConvexBody ParamSpace::body() const {
  const int k = params();
  std::vector<PayoffMatrix> verts;
  for (int mask = 0; mask < (1 << k); ++mask) {
    Vec theta(k);
    for (int i = 0; i < k; ++i) theta(i) = (mask >> i) & 1 ? upper_(i) : lower_(i);
    verts.push_back(at(theta));
  }
  return ConvexBody(std::move(verts));
}

}  // namespace approach
