#include "rdisc/core.hpp"

#include <stdexcept>

namespace rdisc {

Rat dot_discount(const Rat& beta, const PayoffStream& x) {
  // Horner from the tail keeps everything in one pass: x_0 + beta*(x_1 + ...).
  Rat acc(0);
  for (std::size_t i = x.length(); i-- > 0;) {
    acc = x[i] + beta * acc;
  }
  return acc;
}

std::vector<double> decision_weights(const Belief& p, const WeightingSpec& w) {
  std::vector<double> out(p.size());
  if (w.is_identity()) {
    for (std::size_t m = 0; m < p.size(); ++m) out[m] = to_double(p.prob(m));
    return out;
  }
  Rat cum(0);
  double prev = 0.0;
  for (std::size_t m = 0; m < p.size(); ++m) {
    cum += p.prob(m);
    // Cumulative kept exact so w sees the true C_m, not a drifted float sum.
    const double cur = w.eval(to_double(cum));
    out[m] = cur - prev;
    prev = cur;
  }
  return out;
}

double rdu_value(const DiscountGrid& grid, const Belief& p, const WeightingSpec& w,
                 const PayoffStream& x) {
  if (p.size() != grid.size()) throw std::invalid_argument("belief/grid size mismatch");
  if (w.is_identity()) return to_double(expected_discounted_value(grid, p, x));
  const std::vector<double> dw = decision_weights(p, w);
  double acc = 0.0;
  for (std::size_t m = 0; m < grid.size(); ++m) {
    acc += dw[m] * to_double(dot_discount(grid.factor(m), x));
  }
  return acc;
}

Rat expected_discounted_value(const DiscountGrid& grid, const Belief& p,
                              const PayoffStream& x) {
  if (p.size() != grid.size()) throw std::invalid_argument("belief/grid size mismatch");
  Rat acc(0);
  for (std::size_t m = 0; m < grid.size(); ++m) {
    acc += p.prob(m) * dot_discount(grid.factor(m), x);
  }
  return acc;
}

}  // namespace rdisc
