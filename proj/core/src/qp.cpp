#include "approach/qp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "approach/error.hpp"

namespace approach {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Dense {
  MatrixXd Q;  // objective 0.5 x'Qx + c'x + constant
  VectorXd c;
  MatrixXd A;
  VectorXd b;
  double constant = 0.0;
};

double objective(const Dense& p, const VectorXd& x) {
  return 0.5 * x.dot(p.Q * x) + p.c.dot(x) + p.constant;
}

// Largest step in (0, 1] keeping v + step * dv >= 0.
double max_step(const VectorXd& v, const VectorXd& dv) {
  double step = 1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (dv(i) < 0.0) step = std::min(step, -v(i) / dv(i));
  }
  return step;
}

class NewtonSystem {
 public:
  NewtonSystem(const Dense& p, const VectorXd& x, const VectorXd& z) : p_(p), x_(x) {
    const Eigen::Index n = x.size();
    MatrixXd h = p.Q;
    for (Eigen::Index i = 0; i < n; ++i) h(i, i) += z(i) / x(i);
    const double reg = 1e-14 * (1.0 + h.diagonal().cwiseAbs().maxCoeff());
    h.diagonal().array() += reg;
    h_.compute(h);
    if (p.A.rows() > 0) {
      MatrixXd hinv_at = h_.solve(p.A.transpose());
      MatrixXd s = p.A * hinv_at;
      const double sreg = 1e-13 * (1.0 + s.diagonal().cwiseAbs().maxCoeff());
      s.diagonal().array() += sreg;
      s_.compute(s);
    }
  }

  // Solves for (dx, dy, dz) given the residuals; rc is the complementarity target.
  void solve(const VectorXd& rd, const VectorXd& rp, const VectorXd& rc, const VectorXd& z,
             VectorXd& dx, VectorXd& dy, VectorXd& dz) const {
    const VectorXd g = -rd - rc.cwiseQuotient(x_);
    const VectorXd hinv_g = h_.solve(g);
    if (p_.A.rows() > 0) {
      dy = s_.solve(-rp - p_.A * hinv_g);
      dx = h_.solve(g + p_.A.transpose() * dy);
    } else {
      dy.resize(0);
      dx = hinv_g;
    }
    dz = (-rc - z.cwiseProduct(dx)).cwiseQuotient(x_);
  }

 private:
  const Dense& p_;
  const VectorXd& x_;
  Eigen::LDLT<MatrixXd> h_;
  Eigen::LDLT<MatrixXd> s_;
};

// Equality-constrained solve on the identified support. Returns true and
// overwrites x when the polished point is feasible and no worse.
bool polish(const Dense& p, const VectorXd& z, VectorXd& x) {
  const Eigen::Index n = x.size();
  const Eigen::Index m = p.A.rows();
  std::vector<Eigen::Index> free;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (x(i) > z(i)) free.push_back(i);
  }
  const auto nf = static_cast<Eigen::Index>(free.size());
  if (nf == 0) return false;

  MatrixXd kkt = MatrixXd::Zero(nf + m, nf + m);
  VectorXd rhs(nf + m);
  for (Eigen::Index i = 0; i < nf; ++i) {
    for (Eigen::Index j = 0; j < nf; ++j) kkt(i, j) = p.Q(free[i], free[j]);
    for (Eigen::Index r = 0; r < m; ++r) {
      kkt(i, nf + r) = p.A(r, free[i]);
      kkt(nf + r, i) = p.A(r, free[i]);
    }
    rhs(i) = -p.c(free[i]);
  }
  rhs.tail(m) = p.b;
  const VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);

  VectorXd candidate = VectorXd::Zero(n);
  const double scale = 1.0 + x.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < nf; ++i) {
    const double v = sol(i);
    if (!std::isfinite(v) || v < -1e-12 * scale) return false;
    candidate(free[i]) = std::max(v, 0.0);
  }
  if (m > 0) {
    const double res = (p.A * candidate - p.b).cwiseAbs().maxCoeff();
    if (res > 1e-11 * (1.0 + p.b.cwiseAbs().maxCoeff())) return false;
  }
  const double before = objective(p, x);
  const double after = objective(p, candidate);
  if (after > before + 1e-12 * (1.0 + std::abs(before))) return false;
  x = candidate;
  return true;
}

}  // namespace

double AffineExpr::evaluate(const std::vector<double>& x) const {
  double v = constant;
  for (const auto& t : terms) v += t.coef * x.at(static_cast<std::size_t>(t.var));
  return v;
}

int QpModel::add_variables(int n) {
  const int first = nvars_;
  nvars_ += n;
  return first;
}

void QpModel::add_equality(const AffineExpr& e, double rhs) {
  rows_.push_back({e.terms, rhs - e.constant});
}

void QpModel::add_less_equal(const AffineExpr& e, double rhs) {
  Row row{e.terms, rhs - e.constant};
  row.terms.push_back({add_variable(), 1.0});
  rows_.push_back(std::move(row));
}

void QpModel::add_greater_equal(const AffineExpr& e, double rhs) {
  Row row{e.terms, rhs - e.constant};
  row.terms.push_back({add_variable(), -1.0});
  rows_.push_back(std::move(row));
}

void QpModel::add_linear_cost(const AffineExpr& e, double weight) {
  for (const auto& t : e.terms) linear_.push_back({t.var, weight * t.coef});
  constant_ += weight * e.constant;
}

void QpModel::add_squared_cost(const AffineExpr& e, double weight) {
  squares_.push_back({e, weight});
}

QpResult QpModel::solve(const QpOptions& options) const {
  const Eigen::Index n = nvars_;
  const auto m = static_cast<Eigen::Index>(rows_.size());

  Dense p;
  p.Q = MatrixXd::Zero(n, n);
  p.c = VectorXd::Zero(n);
  p.A = MatrixXd::Zero(m, n);
  p.b = VectorXd::Zero(m);
  p.constant = constant_;
  for (Eigen::Index r = 0; r < m; ++r) {
    for (const auto& t : rows_[static_cast<std::size_t>(r)].terms) p.A(r, t.var) += t.coef;
    p.b(r) = rows_[static_cast<std::size_t>(r)].rhs;
  }
  for (const auto& t : linear_) p.c(t.var) += t.coef;
  for (const auto& sq : squares_) {
    // w (a.x + k)^2 = 0.5 x'(2w aa')x + 2wk a.x + w k^2
    VectorXd a = VectorXd::Zero(n);
    for (const auto& t : sq.expr.terms) a(t.var) += t.coef;
    p.Q.noalias() += 2.0 * sq.weight * a * a.transpose();
    p.c += 2.0 * sq.weight * sq.expr.constant * a;
    p.constant += sq.weight * sq.expr.constant * sq.expr.constant;
  }

  const bool linear_program = p.Q.cwiseAbs().maxCoeff() == 0.0;
  const double bnorm = 1.0 + (m > 0 ? p.b.cwiseAbs().maxCoeff() : 0.0);
  const double cnorm =
      1.0 + (n > 0 ? p.c.cwiseAbs().maxCoeff() : 0.0) + (n > 0 ? p.Q.cwiseAbs().maxCoeff() : 0.0);

  VectorXd x = VectorXd::Ones(n);
  VectorXd z = VectorXd::Ones(n);
  VectorXd y = VectorXd::Zero(m);

  VectorXd best = x;
  double best_merit = std::numeric_limits<double>::infinity();

  QpResult result;
  bool converged = false;
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    const VectorXd rp = p.A * x - p.b;
    const VectorXd rd = p.Q * x + p.c - p.A.transpose() * y - z;
    const double pres = m > 0 ? rp.cwiseAbs().maxCoeff() / bnorm : 0.0;
    const double dres = rd.cwiseAbs().maxCoeff() / cnorm;
    const double gap = x.dot(z);
    const double obj = objective(p, x);
    const double merit = std::max({pres, dres, gap / (1.0 + std::abs(obj))});
    if (merit < best_merit) {
      best_merit = merit;
      best = x;
    }
    if (pres < options.tolerance && dres < options.tolerance &&
        gap < options.tolerance * (1.0 + std::abs(obj))) {
      converged = true;
      break;
    }

    const double mu = gap / static_cast<double>(n);
    NewtonSystem newton(p, x, z);

    VectorXd dx, dy, dz;
    VectorXd rc = x.cwiseProduct(z);
    newton.solve(rd, rp, rc, z, dx, dy, dz);
    double ap = max_step(x, dx);
    double ad = max_step(z, dz);
    if (!linear_program) ap = ad = std::min(ap, ad);
    const double mu_aff = (x + ap * dx).dot(z + ad * dz) / static_cast<double>(n);
    const double sigma = std::pow(mu_aff / mu, 3.0);

    rc = x.cwiseProduct(z) + dx.cwiseProduct(dz) - VectorXd::Constant(n, sigma * mu);
    newton.solve(rd, rp, rc, z, dx, dy, dz);
    ap = std::min(1.0, 0.995 * max_step(x, dx) / 1.0);
    ad = std::min(1.0, 0.995 * max_step(z, dz) / 1.0);
    if (!linear_program) ap = ad = std::min(ap, ad);
    x += ap * dx;
    y += ad * dy;
    z += ad * dz;
    // Keep strictly interior against round-off.
    x = x.cwiseMax(1e-300);
    z = z.cwiseMax(1e-300);
    if (!x.allFinite() || !z.allFinite()) break;
  }

  if (!converged && best_merit > 1e-7) {
    throw SolverError("interior-point solver did not converge",
                      std::vector<double>(best.data(), best.data() + best.size()));
  }
  if (!converged) x = best;

  result.iterations = it;
  if (options.polish) result.polished = polish(p, z, x);
  x = x.cwiseMax(0.0);
  result.x.assign(x.data(), x.data() + x.size());
  result.objective = objective(p, x);
  return result;
}

}  // namespace approach
