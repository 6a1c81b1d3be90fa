#include "approach/worked_examples.hpp"

#include <algorithm>
#include <cmath>

#include "approach/error.hpp"

namespace approach {

namespace example1 {

PayoffMatrix m_dagger() { return PayoffMatrix::from_columns({{3.0, 4.0}, {0.0, 5.0}}); }
PayoffMatrix m_sharp() { return PayoffMatrix::from_columns({{4.0, 3.0}, {5.0, 0.0}}); }

PayoffMatrix at(double nu) { return nu * m_dagger() + (1.0 - nu) * m_sharp(); }

ParamSpace space() {
  return ParamSpace(m_sharp(), {m_dagger() - m_sharp()}, Vec::Constant(1, 0.0),
                    Vec::Constant(1, 1.0));
}

TargetSet target() { return TargetSet::negative_orthant(2, Norm::Linf); }

double alpha(double x, double nu) {
  const double slope = 5.0 - 4.0 * x;
  return std::max(5.0 - x - nu * slope, 3.0 * x + nu * slope);
}

double phi_star(double nu) {
  if (nu <= 0.25) return 4.0 - nu;
  if (nu <= 0.5) return 5.0 - 5.0 * nu;
  if (nu <= 0.75) return 5.0 * nu;
  return 3.0 + nu;
}

double cav_phi_star(double /*nu*/) { return 4.0; }

double phi_xstar(double nu) { return alpha(1.0, nu); }

MixedAction xstar(double nu) {
  if (nu <= 0.25 || nu >= 0.75) return MixedAction::pure(2, 0);
  return MixedAction::pure(2, 1);
}

}  // namespace example1

namespace example2 {

PayoffMatrix at(double v, double w) { return PayoffMatrix::from_columns({{v}, {w}}); }

ParamSpace space() {
  return ParamSpace(PayoffMatrix::zero(1, 2),
                    {PayoffMatrix::from_columns({{1.0}, {0.0}}),
                     PayoffMatrix::from_columns({{0.0}, {1.0}})},
                    Vec::Constant(2, -1.0), Vec::Constant(2, 1.0));
}

TargetSet target() { return TargetSet::singleton(Vec::Zero(1), Norm::L2); }

double phi_star(double v, double w) {
  if (v * w > 0.0) return std::min(std::abs(v), std::abs(w));
  return 0.0;
}

double cav_phi_star(double v, double w) { return 1.0 - std::abs(v - w) / 2.0; }

double phi_xstar(double v, double w) {
  const double s = v + w;
  if (std::abs(2.0 * w - v) <= 1.0 && std::abs(2.0 * v - w) <= 1.0) return (1.0 + std::abs(s)) / 3.0;
  if (s >= 0.0) {
    if (2.0 * w - v >= 1.0) return (1.0 + v) / 2.0;
    return (1.0 + w) / 2.0;
  }
  if (2.0 * w - v <= -1.0) return (1.0 - v) / 2.0;
  return (1.0 - w) / 2.0;
}

double alpha_half(double v, double w) { return std::abs(v + w) / 2.0; }

MixedAction xstar(double v, double w) {
  if ((0.0 < v && v <= w) || (0.0 > v && v >= w)) return MixedAction::pure(2, 0);
  if ((0.0 < w && w < v) || (0.0 > w && w > v)) return MixedAction::pure(2, 1);
  const double total = std::abs(v) + std::abs(w);
  if (total == 0.0) return MixedAction::uniform(2);
  Vec x(2);
  x << std::abs(w) / total, std::abs(v) / total;
  return MixedAction(x);
}

}  // namespace example2

}  // namespace approach
