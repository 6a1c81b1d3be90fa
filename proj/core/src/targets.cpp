#include "approach/targets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "approach/error.hpp"

namespace approach {

double phi_star(const PayoffMatrix& m, const TargetSet& target) {
  return GenericXStar(target).solve(m).value;
}

double alpha_x(const PayoffMatrix& m, const MixedAction& x, const TargetSet& target) {
  return distance(combine(x, m), target);
}

PhiStarTarget::PhiStarTarget(TargetSet target) : plain_(std::in_place, std::move(target)) {}

PhiStarTarget::PhiStarTarget(CostConstraint constraint)
    : constrained_(std::in_place, std::move(constraint)) {}

double PhiStarTarget::operator()(const PayoffMatrix& m) const {
  return plain_ ? plain_->solve(m).value : constrained_->solve(m).value;
}

// ---------------------------------------------------------------- cav

std::vector<double> cav_oracle(const ParamSpace& space, const std::function<double(const Vec&)>& f,
                               int per_axis) {
  const auto grid = space.grid(per_axis);
  std::vector<double> values;
  values.reserve(grid.size());
  for (const auto& theta : grid) values.push_back(f(theta));
  if (space.params() == 0) return values;
  if (grid.size() < 2) throw DomainError("envelope needs at least 2 grid points");

  std::vector<double> out(grid.size());
  if (space.params() == 1) {
    std::vector<double> xs;
    for (const auto& theta : grid) xs.push_back(theta(0));
    const UpperEnvelope1d env(xs, values);
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = env(xs[i]);
    return out;
  }
  if (space.params() == 2) {
    std::vector<std::array<double, 2>> sites;
    for (const auto& theta : grid) sites.push_back({theta(0), theta(1)});
    const UpperEnvelope2d env(sites, values);
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = env(sites[i][0], sites[i][1]);
    return out;
  }
  throw DomainError("concave envelopes are available for 1 or 2 parameters");
}

// ---------------------------------------------------------------- phi^Psi

PhiPsiOracle::PhiPsiOracle(ParamSpace space, ResponsePtr psi, const TargetSet& target, int per_axis,
                           int budget)
    : PhiPsiOracle(std::move(space), std::move(psi),
                   [target](const Vec& r) { return distance(r, target); }, per_axis, budget) {}

PhiPsiOracle::PhiPsiOracle(ParamSpace space, ResponsePtr psi, ScoreFn score, int per_axis, int budget)
    : space_(std::move(space)),
      psi_(std::move(psi)),
      score_(std::move(score)),
      per_axis_(per_axis),
      budget_(budget) {
  if (!psi_) throw DomainError("oracle needs a response function");
  const int cap = space_.dim() * space_.actions() + 1;
  if (budget_ < 1 || budget_ > cap) throw DomainError("decomposition budget must be in [1, dA+1]");
  if (space_.params() > 2) throw DomainError("oracle supports at most 2 parameters");
  if (space_.params() == 0) return;
  atoms_ = space_.grid(per_axis_);
  payoffs_.reserve(atoms_.size());
  for (const auto& theta : atoms_) {
    const PayoffMatrix m = space_.at(theta);
    payoffs_.push_back(combine(psi_->respond(m), m));
  }
  if (space_.params() == 2 && space_.dim() == 1 && budget_ >= 3) {
    std::vector<std::array<double, 2>> sites;
    std::vector<double> up, down;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      sites.push_back({atoms_[i](0), atoms_[i](1)});
      up.push_back(payoffs_[i](0));
      down.push_back(-payoffs_[i](0));
    }
    upper_ = std::make_shared<UpperEnvelope2d>(sites, up);
    lower_ = std::make_shared<UpperEnvelope2d>(sites, down);
  }
}

double PhiPsiOracle::direct(const Vec& theta) const {
  const PayoffMatrix m = space_.at(theta);
  return score_(combine(psi_->respond(m), m));
}

double PhiPsiOracle::at(const Vec& theta) const {
  if (theta.size() != space_.params()) throw DimensionError("parameter length differs");
  double best = direct(theta);
  if (budget_ == 1 || space_.params() == 0) return best;
  if (space_.params() == 1) return std::max(best, one_parameter(theta(0)));
  if (budget_ == 2) return std::max(best, lattice_pairs(theta));
  if (upper_) {
    Vec hi(1), lo(1);
    hi(0) = (*upper_)(theta(0), theta(1));
    lo(0) = -(*lower_)(theta(0), theta(1));
    return std::max({best, score_(hi), score_(lo)});
  }
  return std::max({best, lattice_pairs(theta), triples(theta)});
}

double PhiPsiOracle::one_parameter(double theta) const {
  const double tol = 1e-12 * (1.0 + std::abs(theta));
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const double a = atoms_[i](0);
    if (a > theta + tol) break;
    for (std::size_t j = atoms_.size(); j-- > i;) {
      const double b = atoms_[j](0);
      if (b < theta - tol) break;
      if (b - a <= tol) {
        best = std::max(best, score_(payoffs_[i]));
        continue;
      }
      const double lambda = std::clamp((b - theta) / (b - a), 0.0, 1.0);
      best = std::max(best, score_(lambda * payoffs_[i] + (1.0 - lambda) * payoffs_[j]));
    }
  }
  return best;
}

double PhiPsiOracle::lattice_pairs(const Vec& theta) const {
  const int n = per_axis_;
  const auto index_of = [&](int axis) {
    const double lo = space_.lower()(axis), hi = space_.upper()(axis);
    const double s = hi > lo ? (theta(axis) - lo) / (hi - lo) * (n - 1) : 0.0;
    return std::clamp(static_cast<int>(std::lround(s)), 0, n - 1);
  };
  // Pairs are enumerated on the lattice, so theta is snapped to it.
  const int ci = index_of(0), cj = index_of(1);
  const auto flat = [&](int i, int j) { return static_cast<std::size_t>(i * n + j); };
  double best = score_(payoffs_[flat(ci, cj)]);
  for (int ai = 0; ai < n; ++ai) {
    for (int aj = 0; aj < n; ++aj) {
      const int di = ci - ai, dj = cj - aj;
      if (di == 0 && dj == 0) continue;
      const int g = std::gcd(std::abs(di), std::abs(dj));
      const int si = di / g, sj = dj / g;
      for (int k = 1;; ++k) {
        const int bi = ci + k * si, bj = cj + k * sj;
        if (bi < 0 || bi >= n || bj < 0 || bj >= n) break;
        const double lambda = static_cast<double>(k) / static_cast<double>(g + k);
        best = std::max(best, score_(lambda * payoffs_[flat(ai, aj)] +
                                     (1.0 - lambda) * payoffs_[flat(bi, bj)]));
      }
    }
  }
  return best;
}

double PhiPsiOracle::triples(const Vec& theta) const {
  double best = -std::numeric_limits<double>::infinity();
  const std::size_t n = atoms_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec& a = atoms_[i];
        const Vec& b = atoms_[j];
        const Vec& c = atoms_[k];
        const double det = (b(0) - a(0)) * (c(1) - a(1)) - (b(1) - a(1)) * (c(0) - a(0));
        if (std::abs(det) < 1e-14) continue;
        const double l1 = ((theta(0) - a(0)) * (c(1) - a(1)) - (theta(1) - a(1)) * (c(0) - a(0))) / det;
        const double l2 = ((b(0) - a(0)) * (theta(1) - a(1)) - (b(1) - a(1)) * (theta(0) - a(0))) / det;
        const double l0 = 1.0 - l1 - l2;
        if (l0 < -1e-12 || l1 < -1e-12 || l2 < -1e-12) continue;
        best = std::max(best, score_(l0 * payoffs_[i] + l1 * payoffs_[j] + l2 * payoffs_[k]));
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------- graph

double graph_distance(const PayoffMatrix& mbar, const Vec& rbar, const ParamSpace& space,
                      const std::function<double(const Vec&)>& phi, const TargetSet& target,
                      int per_axis) {
  double best = std::numeric_limits<double>::infinity();
  const auto grid = space.params() == 0 ? std::vector<Vec>{Vec(0)} : space.grid(per_axis);
  for (const auto& theta : grid) {
    const double dm = (mbar.entries() - space.at(theta).entries()).norm();
    if (dm >= best) continue;
    const double dr = euclidean_distance_to_expansion(rbar, target, std::max(0.0, phi(theta)));
    best = std::min(best, std::hypot(dm, dr));
  }
  return best;
}

}  // namespace approach
