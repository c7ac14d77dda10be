#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rdisc/choice.hpp"
#include "rdisc/grid.hpp"
#include "rdisc/menu.hpp"
#include "rdisc/tie_breaker.hpp"

namespace rdisc {

/// Hyperplane direction a with P.a = -|Q-P|^2/2 < 0 < Q.a = +|Q-P|^2/2,
/// via a = (Q - P) - c*1 with c = ((P+Q)/2).(Q-P). Throws when P == Q.
std::vector<Rat> separating_direction(const Belief& p, const Belief& q);

/// Menu plus per-agent tie-breakers built so each agent's choice probability
/// for the target equals P^n.b^n under beliefs P and Q^n.b^n under beliefs Q,
/// with P^n.b^n < 1/2 < Q^n.b^n. Every quantity is an exact rational.
struct SeparatingMenu {
  DiscountGrid grid;               // enlarged copy of the input when M == 2
  std::vector<Rat> gammas;         // gamma_1..gamma_{M+1}, interleaving the grid
  Menu menu;                       // {target, rival_1..rival_M}; target at index 0
  std::vector<Belief> p_beliefs;   // padded to the working grid
  std::vector<Belief> q_beliefs;

  struct Agent {
    std::vector<Rat> direction;          // separating vector a
    Rat tau;                             // scaling bound
    std::vector<Rat> threshold_weights;  // b = (a + tau) / (2 tau), entries in (0,1)
    std::vector<Rat> tie_masses;         // c_m > 0 with sum < 1
    TieBreaker tiebreaker;
  };
  std::vector<Agent> agents;
};

SeparatingMenu build_separating_menu(const DiscountGrid& grid, std::span<const Belief> p_profile,
                                     std::span<const Belief> q_profile);

/// Re-derives every agent's choice probabilities through the full choice
/// machinery and checks the exact identities and threshold inequalities.
/// Failures are reported, not thrown.
struct SeparatingMenuReport {
  struct Agent {
    Enclosure rho_p, rho_q;       // computed choice probability of the target
    Rat pb, qb;                   // P^n.b^n and Q^n.b^n
    bool identity_p = false;      // rho_p exact and equal to pb
    bool identity_q = false;
    bool threshold = false;       // pb < 1/2 < qb
    bool ok() const { return identity_p && identity_q && threshold; }
  };
  std::vector<Agent> agents;
  bool pass = false;
};

SeparatingMenuReport verify_separating_menu(const SeparatingMenu& cons,
                                            std::span<const Belief> p_profile,
                                            std::span<const Belief> q_profile);

/// Belief-aggregation rule F: Delta^N -> Delta.
class AggregatorSpec {
 public:
  enum class Kind { kLinear, kDictator, kCustom };

  static AggregatorSpec linear(std::vector<Rat> lambdas);
  static AggregatorSpec dictator(std::size_t agent);
  static AggregatorSpec custom(std::function<Belief(std::span<const Belief>)> fn);

  Kind kind() const { return kind_; }
  const std::vector<Rat>& lambdas() const { return lambdas_; }
  std::size_t dictator_index() const { return dictator_; }

  /// Applies F; enforces the agreement axiom F(P,...,P) = P on the fly.
  Belief apply(std::span<const Belief> beliefs) const;

 private:
  Kind kind_ = Kind::kLinear;
  std::vector<Rat> lambdas_;
  std::size_t dictator_ = 0;
  std::function<Belief(std::span<const Belief>)> fn_;
};

enum class TieBreakerPolicy { kCommon, kFree };

struct UnanimityCounterexample {
  DiscountGrid grid;
  std::vector<Belief> profile;
  Belief social;
  Menu menu;
  std::size_t project = 0;
  std::vector<Enclosure> individual_rho;
  Enclosure social_rho;
  bool premise_at_least_half = true;  // which implication failed
  std::string note;
};

struct UnanimityResult {
  bool pass = true;
  std::size_t trials_run = 0;
  std::optional<UnanimityCounterexample> counterexample;
};

/// Randomized search for violations of the unanimity conditions, seeded and
/// fully reproducible. In free mode with a non-dictatorial linear rule the
/// deterministic separating-menu attack runs first and always produces a
/// certified counterexample.
UnanimityResult unanimity_check(const AggregatorSpec& aggregator, TieBreakerPolicy policy,
                                std::size_t trials, std::uint64_t seed,
                                std::size_t agents = 2);

}  // namespace rdisc
