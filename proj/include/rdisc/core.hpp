#pragma once

#include <vector>

#include "rdisc/grid.hpp"
#include "rdisc/stream.hpp"
#include "rdisc/weighting.hpp"

namespace rdisc {

/// Discounted value sum_t beta^t x_t, exact (0^0 == 1, so beta = 0 keeps x_0).
Rat dot_discount(const Rat& beta, const PayoffStream& x);

/// Rank-dependent decision weights w(C_m) - w(C_{m-1}) over cumulative
/// probabilities C_m (C_0 = 0), beliefs aligned with a descending grid.
/// Entries are nonnegative; identity weighting reproduces the belief itself.
std::vector<double> decision_weights(const Belief& p, const WeightingSpec& w);

/// Rank-dependent utility of x: sum_m decision_weights_m * <beta_m, x>.
double rdu_value(const DiscountGrid& grid, const Belief& p, const WeightingSpec& w,
                 const PayoffStream& x);

/// Identity-weighting special case sum_m P_m <beta_m, x>, exact.
Rat expected_discounted_value(const DiscountGrid& grid, const Belief& p,
                              const PayoffStream& x);

}  // namespace rdisc
