#pragma once

#include <span>
#include <vector>

#include "rdisc/interval.hpp"
#include "rdisc/rational.hpp"

namespace rdisc {

/// Nonatomic measure on [0,1]: a finite mixture of uniform densities on
/// intervals with pairwise disjoint interiors and positive masses summing
/// to one. Measures of interval unions with rational endpoints are exact.
class TieBreaker {
 public:
  struct Piece {
    Rat lo, hi, mass;
  };

  explicit TieBreaker(std::vector<Piece> pieces);

  static TieBreaker uniform();  // Lebesgue on [0,1]

  /// Convex combination of tie-breakers, re-expressed on a common refinement.
  static TieBreaker mixture(std::span<const TieBreaker> parts, std::span<const Rat> weights);

  const std::vector<Piece>& pieces() const { return pieces_; }

  /// Piece endpoints; useful as exact-root candidates.
  std::vector<Rat> endpoints() const;

  /// Cumulative distribution at x (clamped to [0,1] outside the support).
  Rat cdf(const Rat& x) const;

  /// Measure of an interval union; exact when all endpoints are exact,
  /// otherwise an enclosure whose width is bounded by the CDF's Lipschitz
  /// constant times the widest endpoint enclosure.
  Enclosure measure(const IntervalUnion& set) const;

 private:
  std::vector<Piece> pieces_;  // sorted by lo
};

}  // namespace rdisc
