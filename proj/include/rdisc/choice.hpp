#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rdisc/core.hpp"
#include "rdisc/interval.hpp"
#include "rdisc/menu.hpp"
#include "rdisc/polynomial.hpp"
#include "rdisc/tie_breaker.hpp"

namespace rdisc {

/// Pairwise difference of discounted-value polynomials: coefficient t is
/// x_t - y_t (padded). Zero polynomial iff x == y.
Poly diff_polynomial(const PayoffStream& x, const PayoffStream& y);

/// Indices of the projects attaining maximal discounted value at beta,
/// decided by exact rational comparison. Never empty.
std::vector<std::size_t> maximizer_set(const Rat& beta, const Menu& menu);

/// The set of beta in [0,1] where the given project is weakly optimal:
/// a finite union of closed intervals. Unions over the menu cover [0,1].
IntervalUnion normal_cone(const Menu& menu, std::size_t project,
                          const Rat& eps = default_root_eps(),
                          std::span<const Rat> candidates = {});

/// All cones of a menu from one shared subdivision (endpoints coincide
/// exactly across projects, so coverage checks are exact).
std::vector<IntervalUnion> normal_cones(const Menu& menu,
                                        const Rat& eps = default_root_eps(),
                                        std::span<const Rat> candidates = {});

/// Choice probabilities for one menu, aligned with menu order.
struct ChoiceDistribution {
  std::vector<Enclosure> probabilities;
  bool exact() const {
    for (const Enclosure& e : probabilities) {
      if (!e.exact()) return false;
    }
    return true;
  }
  Enclosure total() const {
    Rat lo(0), hi(0);
    for (const Enclosure& e : probabilities) {
      lo += e.lo;
      hi += e.hi;
    }
    return Enclosure(lo, hi);
  }
};

/// Lexicographic random choice rule: first draw a grid atom by P, then break
/// ties with the nonatomic second draw. Computed per atom as the tie-breaker
/// measure of the project's cone within the atom's maximizer set. Exact
/// whenever grid atoms and tie-breaker endpoints pin down all cone endpoints.
ChoiceDistribution rcr(const DiscountGrid& grid, const Belief& p, const TieBreaker& tb,
                       const Menu& menu, const Rat& eps = default_root_eps());

/// Sampling oracle for the same rule: draw an atom, then a second factor from
/// the tie-breaker (as an exact dyadic rational), pick the winner. Returns
/// empirical frequencies in menu order; fully reproducible from the seed.
std::vector<double> simulate_rcr(const DiscountGrid& grid, const Belief& p,
                                 const TieBreaker& tb, const Menu& menu,
                                 std::size_t samples, std::uint64_t seed);

}  // namespace rdisc
