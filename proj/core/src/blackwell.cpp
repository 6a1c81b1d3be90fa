#include "approach/blackwell.hpp"

#include <limits>

#include "approach/error.hpp"

namespace approach {

BlackwellStrategy::BlackwellStrategy(ConvexBody body, ResponsePtr response, double tolerance)
    : body_(std::move(body)), response_(std::move(response)), tolerance_(tolerance),
      delta_(Vec::Zero(body_.dim())) {
  if (!response_) throw DomainError("strategy needs a response function");
}

BlackwellStrategy::Choice BlackwellStrategy::choose() const {
  const auto& verts = body_.vertices();
  const int actions = body_.actions();
  Mat game(actions, static_cast<Eigen::Index>(verts.size()));
  for (std::size_t j = 0; j < verts.size(); ++j) {
    game.col(static_cast<Eigen::Index>(j)) = verts[j].entries().transpose() * delta_;
  }
  const GameSolution s = solve_matrix_game(game);
  Mat point = Mat::Zero(body_.dim(), actions);
  for (std::size_t j = 0; j < verts.size(); ++j) point += s.column[static_cast<int>(j)] * verts[j].entries();
  return {s.row, PayoffMatrix(std::move(point)), s.value, s.upper_value - s.lower_value};
}

void BlackwellStrategy::step(const PayoffMatrix& m, const Choice& choice) {
  if (m.dim() != body_.dim() || m.actions() != body_.actions()) throw DimensionError("shape mismatch");
  const Vec obtained = combine(choice.x, m);
  const Vec reference = combine(response_->respond(choice.m_tilde), choice.m_tilde);
  const double violation = delta_.dot(obtained) - delta_.dot(reference);
  worst_ = std::max(worst_, violation);
  if (violation > tolerance_) {
    throw AuditError("inner-product inequality violated by " + std::to_string(violation) +
                     " at round " + std::to_string(t_ + 1));
  }
  delta_ += obtained - reference;
  ++t_;
}

MixedAction BlackwellStrategy::act() {
  if (!pending_) pending_ = choose();
  return pending_->x;
}

void BlackwellStrategy::observe(const PayoffMatrix& m) {
  if (!pending_) pending_ = choose();
  const Choice c = std::move(*pending_);
  pending_.reset();
  step(m, c);
}

}  // namespace approach
