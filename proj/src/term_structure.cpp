#include "rdisc/term_structure.hpp"

#include <cmath>

namespace rdisc {

char mode_tag(Mode mode) {
  switch (mode) {
    case Mode::kEu:
      return 'e';
    case Mode::kExAnte:
      return 'a';
    case Mode::kExPost:
      return 'p';
  }
  throw std::logic_error("unknown mode");
}

Belief ex_post_belief(const BeliefProfile& profile) {
  std::vector<Rat> out(profile.grid_size(), Rat(0));
  for (std::size_t n = 0; n < profile.agents(); ++n) {
    for (std::size_t m = 0; m < out.size(); ++m) {
      out[m] += profile.lambda(n) * profile.belief(n).prob(m);
    }
  }
  return Belief(std::move(out));
}

std::vector<Rat> alpha_coefficients_exact(Mode mode, const BeliefProfile& profile) {
  // With identity weighting the three modes coincide with the aggregated
  // belief; keeping the dispatch explicit documents the mapping.
  (void)mode;
  return ex_post_belief(profile).probs();
}

std::vector<double> alpha_coefficients(Mode mode, const BeliefProfile& profile,
                                       std::span<const WeightingSpec> agent_weightings,
                                       const WeightingSpec& social_weighting) {
  if (agent_weightings.size() != profile.agents()) {
    throw std::invalid_argument("one weighting per agent required");
  }
  const std::size_t m_count = profile.grid_size();
  std::vector<double> alpha(m_count, 0.0);
  switch (mode) {
    case Mode::kEu: {
      const Belief pooled = ex_post_belief(profile);
      for (std::size_t m = 0; m < m_count; ++m) alpha[m] = to_double(pooled.prob(m));
      break;
    }
    case Mode::kExAnte: {
      for (std::size_t n = 0; n < profile.agents(); ++n) {
        const std::vector<double> dw = decision_weights(profile.belief(n), agent_weightings[n]);
        const double lambda = to_double(profile.lambda(n));
        for (std::size_t m = 0; m < m_count; ++m) alpha[m] += lambda * dw[m];
      }
      break;
    }
    case Mode::kExPost: {
      alpha = decision_weights(ex_post_belief(profile), social_weighting);
      break;
    }
  }
  return alpha;
}

namespace {

bool all_identity(std::span<const WeightingSpec> agent_weightings,
                  const WeightingSpec& social_weighting) {
  if (!social_weighting.is_identity()) return false;
  for (const WeightingSpec& w : agent_weightings) {
    if (!w.is_identity()) return false;
  }
  return true;
}

}  // namespace

TermStructureExact term_structure_exact(Mode mode, const DiscountGrid& grid,
                                        const BeliefProfile& profile, std::size_t horizon) {
  const std::vector<Rat> alpha = alpha_coefficients_exact(mode, profile);
  TermStructureExact ts;
  ts.mode = mode;
  ts.deltas = delta_curve<Rat>(alpha, grid, horizon);
  ts.rates = rate_curve<Rat>(ts.deltas);
  return ts;
}

TermStructure term_structure(Mode mode, const DiscountGrid& grid, const BeliefProfile& profile,
                             std::span<const WeightingSpec> agent_weightings,
                             const WeightingSpec& social_weighting, std::size_t horizon) {
  TermStructure ts;
  ts.mode = mode;
  if (all_identity(agent_weightings, social_weighting)) {
    const TermStructureExact exact = term_structure_exact(mode, grid, profile, horizon);
    ts.deltas.reserve(exact.deltas.size());
    ts.rates.reserve(exact.rates.size());
    for (const Rat& d : exact.deltas) ts.deltas.push_back(to_double(d));
    for (const Rat& r : exact.rates) ts.rates.push_back(to_double(r));
    return ts;
  }
  const std::vector<double> alpha =
      alpha_coefficients(mode, profile, agent_weightings, social_weighting);
  ts.deltas = delta_curve<double>(alpha, grid, horizon);
  ts.rates = rate_curve<double>(ts.deltas);
  return ts;
}

Rat consistency_gap_exact(const DiscountGrid& grid, const BeliefProfile& profile,
                          std::size_t horizon) {
  const std::vector<Rat> alpha_a = alpha_coefficients_exact(Mode::kExAnte, profile);
  const std::vector<Rat> alpha_p = alpha_coefficients_exact(Mode::kExPost, profile);
  const std::vector<Rat> da = delta_curve<Rat>(alpha_a, grid, horizon);
  const std::vector<Rat> dp = delta_curve<Rat>(alpha_p, grid, horizon);
  Rat gap(0);
  for (std::size_t t = 0; t < da.size(); ++t) {
    Rat diff = rat_abs(Rat(da[t] - dp[t]));
    if (diff > gap) gap = diff;
  }
  return gap;
}

double consistency_gap(const DiscountGrid& grid, const BeliefProfile& profile,
                       std::span<const WeightingSpec> agent_weightings,
                       const WeightingSpec& social_weighting, std::size_t horizon) {
  if (all_identity(agent_weightings, social_weighting)) {
    return to_double(consistency_gap_exact(grid, profile, horizon));
  }
  const std::vector<double> alpha_a =
      alpha_coefficients(Mode::kExAnte, profile, agent_weightings, social_weighting);
  const std::vector<double> alpha_p =
      alpha_coefficients(Mode::kExPost, profile, agent_weightings, social_weighting);
  const std::vector<double> da = delta_curve<double>(alpha_a, grid, horizon);
  const std::vector<double> dp = delta_curve<double>(alpha_p, grid, horizon);
  double gap = 0.0;
  for (std::size_t t = 0; t < da.size(); ++t) {
    gap = std::max(gap, std::fabs(da[t] - dp[t]));
  }
  return gap;
}

}  // namespace rdisc
