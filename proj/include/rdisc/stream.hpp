#pragma once

#include <cstddef>
#include <vector>

#include "rdisc/rational.hpp"

namespace rdisc {

/// A project: a finite stream of nonnegative per-period payoffs x_0..x_T.
/// Stored in canonical form (trailing zeros trimmed, at least one entry), so
/// two streams that pay the same amounts compare equal.
class PayoffStream {
 public:
  explicit PayoffStream(std::vector<Rat> payoffs);

  std::size_t length() const { return payoffs_.size(); }
  const Rat& operator[](std::size_t t) const { return payoffs_[t]; }
  Rat at_or_zero(std::size_t t) const;
  const std::vector<Rat>& payoffs() const { return payoffs_; }

  bool operator==(const PayoffStream& other) const { return payoffs_ == other.payoffs_; }
  bool operator!=(const PayoffStream& other) const { return !(*this == other); }

 private:
  std::vector<Rat> payoffs_;
};

/// alpha*x + (1-alpha)*y componentwise, padded to the longer stream.
PayoffStream blend(const Rat& alpha, const PayoffStream& x, const PayoffStream& y);

/// Componentwise scaling by a nonnegative factor.
PayoffStream scale(const Rat& factor, const PayoffStream& x);

}  // namespace rdisc
