#include "rdisc/grid.hpp"

#include <stdexcept>

namespace rdisc {

DiscountGrid::DiscountGrid(std::vector<Rat> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("discount grid must be nonempty");
  if (factors_.front() > 1 || factors_.back() < 0) {
    throw std::invalid_argument("discount factors must lie in [0,1]");
  }
  for (std::size_t m = 1; m < factors_.size(); ++m) {
    if (!(factors_[m - 1] > factors_[m])) {
      throw std::invalid_argument("discount factors must be strictly decreasing");
    }
  }
}

Belief::Belief(std::vector<Rat> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw std::invalid_argument("belief must be nonempty");
  Rat sum(0);
  for (const Rat& p : probs_) {
    if (p < 0 || p > 1) throw std::invalid_argument("belief entries must lie in [0,1]");
    sum += p;
  }
  if (sum != 1) throw std::invalid_argument("belief must sum to 1");
}

Belief Belief::padded(std::size_t new_size) const {
  if (new_size < probs_.size()) throw std::invalid_argument("cannot pad belief to smaller size");
  std::vector<Rat> out = probs_;
  out.resize(new_size, Rat(0));
  return Belief(std::move(out));
}

BeliefProfile::BeliefProfile(std::vector<Belief> beliefs, std::vector<Rat> lambdas)
    : beliefs_(std::move(beliefs)), lambdas_(std::move(lambdas)) {
  if (beliefs_.empty()) throw std::invalid_argument("profile needs at least one agent");
  if (lambdas_.size() != beliefs_.size()) {
    throw std::invalid_argument("one aggregation weight per agent required");
  }
  const std::size_t m = beliefs_.front().size();
  for (const Belief& b : beliefs_) {
    if (b.size() != m) throw std::invalid_argument("beliefs must share one grid");
  }
  Rat sum(0);
  for (const Rat& l : lambdas_) {
    if (l < 0) throw std::invalid_argument("aggregation weights must be nonnegative");
    sum += l;
  }
  if (sum != 1) throw std::invalid_argument("aggregation weights must sum to 1");
}

}  // namespace rdisc
