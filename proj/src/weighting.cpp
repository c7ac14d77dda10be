#include "rdisc/weighting.hpp"

#include <cmath>
#include <stdexcept>

namespace rdisc {

WeightingSpec::WeightingSpec(Kind kind, Rat theta, Rat gamma)
    : kind_(kind), theta_(std::move(theta)), gamma_(std::move(gamma)) {
  theta_d_ = to_double(theta_);
  gamma_d_ = to_double(gamma_);
}

WeightingSpec WeightingSpec::identity() {
  return WeightingSpec(Kind::kIdentity, Rat(1), Rat(1));
}

WeightingSpec WeightingSpec::gonzalez_wu(const Rat& theta, const Rat& gamma) {
  if (theta <= 0 || gamma <= 0) {
    throw std::invalid_argument("weighting parameters must be positive");
  }
  return WeightingSpec(Kind::kGonzalezWu, theta, gamma);
}

double WeightingSpec::eval(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("weighting argument outside [0,1]");
  if (kind_ == Kind::kIdentity) return p;
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  const double a = theta_d_ * std::pow(p, gamma_d_);
  const double b = std::pow(1.0 - p, gamma_d_);
  return a / (a + b);
}

bool WeightingSpec::operator==(const WeightingSpec& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::kIdentity) return true;
  return theta_ == other.theta_ && gamma_ == other.gamma_;
}

}  // namespace rdisc
