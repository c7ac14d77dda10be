#pragma once

#include <cstddef>
#include <vector>

#include "rdisc/rational.hpp"

namespace rdisc {

/// Strictly decreasing discount factors 1 >= b_1 > ... > b_M >= 0.
class DiscountGrid {
 public:
  explicit DiscountGrid(std::vector<Rat> factors);

  std::size_t size() const { return factors_.size(); }
  const Rat& factor(std::size_t m) const { return factors_[m]; }
  const std::vector<Rat>& factors() const { return factors_; }

  bool operator==(const DiscountGrid& other) const { return factors_ == other.factors_; }

 private:
  std::vector<Rat> factors_;
};

/// Probability vector over a discount grid (aligned by index).
class Belief {
 public:
  explicit Belief(std::vector<Rat> probs);

  std::size_t size() const { return probs_.size(); }
  const Rat& prob(std::size_t m) const { return probs_[m]; }
  const std::vector<Rat>& probs() const { return probs_; }

  /// Same belief over a grid extended with extra factors (zero mass appended).
  Belief padded(std::size_t new_size) const;

  bool operator==(const Belief& other) const { return probs_ == other.probs_; }
  bool operator!=(const Belief& other) const { return !(*this == other); }

 private:
  std::vector<Rat> probs_;
};

/// N individual beliefs plus nonnegative aggregation weights summing to one.
class BeliefProfile {
 public:
  BeliefProfile(std::vector<Belief> beliefs, std::vector<Rat> lambdas);

  std::size_t agents() const { return beliefs_.size(); }
  std::size_t grid_size() const { return beliefs_.front().size(); }
  const Belief& belief(std::size_t n) const { return beliefs_[n]; }
  const std::vector<Belief>& beliefs() const { return beliefs_; }
  const Rat& lambda(std::size_t n) const { return lambdas_[n]; }
  const std::vector<Rat>& lambdas() const { return lambdas_; }

 private:
  std::vector<Belief> beliefs_;
  std::vector<Rat> lambdas_;
};

}  // namespace rdisc
