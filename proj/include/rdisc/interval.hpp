#pragma once

#include <utility>
#include <vector>

#include "rdisc/rational.hpp"

namespace rdisc {

/// A real value known exactly (lo == hi) or only bracketed to [lo, hi].
struct Enclosure {
  Rat lo, hi;

  Enclosure() = default;
  Enclosure(Rat lo_in, Rat hi_in) : lo(std::move(lo_in)), hi(std::move(hi_in)) {}
  static Enclosure point(Rat v) {
    Enclosure e;
    e.lo = v;
    e.hi = std::move(v);
    return e;
  }

  bool exact() const { return lo == hi; }
  Rat width() const { return Rat(hi - lo); }
};

/// Closed interval [a, b] whose endpoints may be enclosures.
struct ClosedInterval {
  Enclosure a, b;
  bool degenerate() const { return a.exact() && b.exact() && a.lo == b.lo; }
};

/// Sorted union of closed subintervals of [0,1] with pairwise disjoint
/// interiors. Endpoints are exact rationals or certified root enclosures.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<ClosedInterval> pieces) : pieces_(std::move(pieces)) {}

  static IntervalUnion full() {
    return IntervalUnion({ClosedInterval{Enclosure::point(Rat(0)), Enclosure::point(Rat(1))}});
  }

  bool empty() const { return pieces_.empty(); }
  std::size_t size() const { return pieces_.size(); }
  const std::vector<ClosedInterval>& pieces() const { return pieces_; }

  /// All endpoints exact rationals?
  bool exact() const {
    for (const ClosedInterval& p : pieces_) {
      if (!p.a.exact() || !p.b.exact()) return false;
    }
    return true;
  }

 private:
  std::vector<ClosedInterval> pieces_;
};

}  // namespace rdisc
