#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "rdisc/core.hpp"
#include "rdisc/grid.hpp"

namespace rdisc {

/// Social-discounting variant: e = expected-utility benchmark (identity
/// weighting everywhere), a = ex ante (aggregate weighted RDU values),
/// p = ex post (aggregate beliefs first, then apply the planner's weighting).
enum class Mode { kEu, kExAnte, kExPost };

char mode_tag(Mode mode);  // 'e', 'a' or 'p'

/// Linear belief aggregation sum_n lambda_n P^n, exact.
Belief ex_post_belief(const BeliefProfile& profile);

/// Mixture coefficients over the grid for the requested mode; a probability
/// vector in every mode. Exact variant is the identity-weighting path.
std::vector<Rat> alpha_coefficients_exact(Mode mode, const BeliefProfile& profile);
std::vector<double> alpha_coefficients(Mode mode, const BeliefProfile& profile,
                                       std::span<const WeightingSpec> agent_weightings,
                                       const WeightingSpec& social_weighting);

namespace detail {
template <class Scalar>
Scalar from_rat(const Rat& r);
template <>
inline Rat from_rat<Rat>(const Rat& r) {
  return r;
}
template <>
inline double from_rat<double>(const Rat& r) {
  return to_double(r);
}
}  // namespace detail

/// delta(t) = sum_m alpha_m beta_m^t for t = 0..horizon; delta(0) = 1.
template <class Scalar>
std::vector<Scalar> delta_curve(std::span<const Scalar> alpha, const DiscountGrid& grid,
                                std::size_t horizon) {
  if (alpha.size() != grid.size()) throw std::invalid_argument("alpha/grid size mismatch");
  std::vector<Scalar> powers(alpha.size());
  std::vector<Scalar> factors(alpha.size());
  for (std::size_t m = 0; m < alpha.size(); ++m) {
    powers[m] = detail::from_rat<Scalar>(Rat(1));
    factors[m] = detail::from_rat<Scalar>(grid.factor(m));
  }
  std::vector<Scalar> out;
  out.reserve(horizon + 1);
  for (std::size_t t = 0; t <= horizon; ++t) {
    Scalar acc = detail::from_rat<Scalar>(Rat(0));
    for (std::size_t m = 0; m < alpha.size(); ++m) acc += alpha[m] * powers[m];
    out.push_back(acc);
    if (t < horizon) {
      for (std::size_t m = 0; m < alpha.size(); ++m) powers[m] *= factors[m];
    }
  }
  return out;
}

/// Single point delta(t), with binary powering (cheap for large t).
template <class Scalar>
Scalar delta_at(std::span<const Scalar> alpha, const DiscountGrid& grid, unsigned long t) {
  if (alpha.size() != grid.size()) throw std::invalid_argument("alpha/grid size mismatch");
  Scalar acc = detail::from_rat<Scalar>(Rat(0));
  for (std::size_t m = 0; m < alpha.size(); ++m) {
    acc += alpha[m] * detail::from_rat<Scalar>(rat_pow(grid.factor(m), t));
  }
  return acc;
}

/// Per-period discount rates eta(t) = delta(t)/delta(t+1) - 1.
template <class Scalar>
std::vector<Scalar> rate_curve(std::span<const Scalar> deltas) {
  if (deltas.size() < 2) throw std::invalid_argument("rate curve needs at least two deltas");
  const Scalar zero = detail::from_rat<Scalar>(Rat(0));
  std::vector<Scalar> out;
  out.reserve(deltas.size() - 1);
  for (std::size_t t = 0; t + 1 < deltas.size(); ++t) {
    if (deltas[t + 1] == zero) {
      throw std::domain_error("discount curve hit zero; rate undefined");
    }
    out.push_back(deltas[t] / deltas[t + 1] - detail::from_rat<Scalar>(Rat(1)));
  }
  return out;
}

/// Discount factors delta(0..T) and rates eta(0..T-1) for one mode.
struct TermStructure {
  Mode mode;
  std::vector<double> deltas;
  std::vector<double> rates;
};

struct TermStructureExact {
  Mode mode;
  std::vector<Rat> deltas;
  std::vector<Rat> rates;
};

/// Identity-weighting term structure, fully exact.
TermStructureExact term_structure_exact(Mode mode, const DiscountGrid& grid,
                                        const BeliefProfile& profile, std::size_t horizon);

/// General term structure; routes through the exact path when every
/// weighting involved is the identity.
TermStructure term_structure(Mode mode, const DiscountGrid& grid, const BeliefProfile& profile,
                             std::span<const WeightingSpec> agent_weightings,
                             const WeightingSpec& social_weighting, std::size_t horizon);

/// max_{t <= horizon} |delta_a(t) - delta_p(t)|; zero exactly under identity
/// weighting (the consistency direction), and generically positive otherwise.
Rat consistency_gap_exact(const DiscountGrid& grid, const BeliefProfile& profile,
                          std::size_t horizon);
double consistency_gap(const DiscountGrid& grid, const BeliefProfile& profile,
                       std::span<const WeightingSpec> agent_weightings,
                       const WeightingSpec& social_weighting, std::size_t horizon);

}  // namespace rdisc
