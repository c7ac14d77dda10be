#pragma once

#include <cstdint>

#include "rdisc/rational.hpp"

namespace rdisc {

/// Deterministic splittable generator (splitmix64 core). Substreams derived
/// from (seed, index) are independent of draws already taken from the parent,
/// so trial k always sees the same randomness regardless of evaluation order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  Rng substream(std::uint64_t stream) const;

  std::uint64_t next();

  /// Uniform index in [0, n); n must be positive.
  std::size_t index(std::size_t n);

  /// Uniform dyadic rational k/2^bits in [0,1); bits in [1, 63].
  Rat dyadic(unsigned bits);

  /// lo + (hi - lo) * dyadic(bits).
  Rat dyadic_between(const Rat& lo, const Rat& hi, unsigned bits);

 private:
  std::uint64_t state_;
};

}  // namespace rdisc
