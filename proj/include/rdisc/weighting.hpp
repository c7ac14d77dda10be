#pragma once

#include "rdisc/rational.hpp"

namespace rdisc {

/// Probability weighting function: continuous, strictly increasing,
/// w(0) = 0, w(1) = 1. Identity evaluates exactly; the Gonzalez-Wu family
/// w(p) = theta*p^gamma / (theta*p^gamma + (1-p)^gamma) evaluates in double
/// with relative error well inside 1e-12.
class WeightingSpec {
 public:
  enum class Kind { kIdentity, kGonzalezWu };

  static WeightingSpec identity();
  static WeightingSpec gonzalez_wu(const Rat& theta, const Rat& gamma);

  Kind kind() const { return kind_; }
  bool is_identity() const { return kind_ == Kind::kIdentity; }
  const Rat& theta() const { return theta_; }
  const Rat& gamma() const { return gamma_; }

  /// w(p); throws std::domain_error when p is outside [0,1].
  double eval(double p) const;

  bool operator==(const WeightingSpec& other) const;

 private:
  WeightingSpec(Kind kind, Rat theta, Rat gamma);

  Kind kind_;
  Rat theta_, gamma_;
  double theta_d_ = 1.0, gamma_d_ = 1.0;
};

}  // namespace rdisc
