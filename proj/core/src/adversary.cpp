#include "approach/adversary.hpp"

#include <fstream>
#include <sstream>

#include "approach/error.hpp"
#include "approach/strategy.hpp"

namespace approach {

PeriodicAdversary::PeriodicAdversary(std::vector<PayoffMatrix> schedule, bool per_block)
    : schedule_(std::move(schedule)), per_block_(per_block) {
  if (schedule_.empty()) throw DomainError("periodic schedule is empty");
}

PayoffMatrix PeriodicAdversary::next(const History& h) {
  const long n = per_block_ ? completed_blocks(h.t) : h.t;
  return schedule_[static_cast<std::size_t>(n % static_cast<long>(schedule_.size()))];
}

SwitchingAdversary::SwitchingAdversary(PayoffMatrix anchor, PayoffMatrix other, Vec target, double eps0)
    : anchor_(std::move(anchor)), other_(std::move(other)), target_(std::move(target)), eps_(eps0) {
  if (!(eps0 > 0.0)) throw DomainError("initial epsilon must be positive");
  if (target_.size() != anchor_.dim()) throw DimensionError("target point has the wrong dimension");
}

PayoffMatrix SwitchingAdversary::next(const History& h) {
  if (switched_) {
    if (h.t < until_) return other_;
    switched_ = false;
    eps_ /= 2.0;
  }
  if (h.t >= 1 && (h.rbar - target_).lpNorm<Eigen::Infinity>() <= eps_) {
    switched_ = true;
    switches_.push_back(h.t);
    until_ = 2 * h.t;
    return other_;
  }
  return anchor_;
}

RandomAdversary::RandomAdversary(std::vector<PayoffMatrix> support, std::vector<double> weights,
                                 std::uint64_t seed)
    : support_(std::move(support)), rng_(seed) {
  if (support_.empty()) throw DomainError("random adversary needs a support");
  if (weights.empty()) weights.assign(support_.size(), 1.0);
  if (weights.size() != support_.size()) throw DimensionError("weights and support differ in size");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw DomainError("negative weight");
    total += w;
    cumulative_.push_back(total);
  }
  if (!(total > 0.0)) throw DomainError("weights sum to zero");
  for (double& c : cumulative_) c /= total;
}

PayoffMatrix RandomAdversary::next(const History&) {
  const double u = rng_.uniform();
  for (std::size_t i = 0; i < cumulative_.size(); ++i) {
    if (u < cumulative_[i]) return support_[i];
  }
  return support_.back();
}

ScriptedAdversary::ScriptedAdversary(std::vector<PayoffMatrix> sequence) : sequence_(std::move(sequence)) {
  if (sequence_.empty()) throw DomainError("script is empty");
}

ScriptedAdversary ScriptedAdversary::load(const std::string& path, const ParamSpace& space) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open adversary script");
  std::vector<PayoffMatrix> seq;
  std::string line;
  int lineno = 0;
  const int flat = space.dim() * space.actions();
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    for (char& ch : line) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream row(line);
    std::vector<double> values;
    double v = 0.0;
    while (row >> v) values.push_back(v);
    if (!row.eof()) throw ConfigError(path + ":" + std::to_string(lineno), "not a number");
    if (values.empty()) continue;
    const Vec vec = Eigen::Map<Vec>(values.data(), static_cast<Eigen::Index>(values.size()));
    if (static_cast<int>(values.size()) == space.params()) {
      seq.push_back(space.at(vec));
    } else if (static_cast<int>(values.size()) == flat) {
      seq.push_back(PayoffMatrix::from_flat(space.dim(), space.actions(), vec));
    } else {
      throw ConfigError(path + ":" + std::to_string(lineno), "expected parameters or d*A entries");
    }
  }
  return ScriptedAdversary(std::move(seq));
}

PayoffMatrix ScriptedAdversary::next(const History& h) {
  return sequence_[static_cast<std::size_t>(h.t % static_cast<long>(sequence_.size()))];
}

}  // namespace approach
