#include "rdisc/pareto.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rdisc/rng.hpp"

namespace rdisc {

std::vector<Rat> separating_direction(const Belief& p, const Belief& q) {
  if (p.size() != q.size()) throw std::invalid_argument("beliefs live on different grids");
  if (p == q) throw std::invalid_argument("identical beliefs cannot be separated");
  const std::size_t m = p.size();
  Rat c(0);
  for (std::size_t i = 0; i < m; ++i) {
    const Rat mid = (p.prob(i) + q.prob(i)) / 2;
    c += mid * (q.prob(i) - p.prob(i));
  }
  std::vector<Rat> a(m);
  for (std::size_t i = 0; i < m; ++i) {
    a[i] = q.prob(i) - p.prob(i) - c;
  }
  return a;
}

namespace {

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  Rat acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat dot(const Belief& p, std::span<const Rat> b) { return dot(p.probs(), b); }

// tau = 2 * max{ max_i[(M-2)a_i - sum_{j!=i} a_j], sum(a)/(M-2), max|a_i|, 1 }.
// Strictly dominates every bound needed for b in (0,1), c > 0 and sum(c) < 1.
Rat choose_tau(std::span<const Rat> a) {
  const std::size_t m = a.size();
  Rat sum(0);
  for (const Rat& v : a) sum += v;
  Rat best(1);
  for (std::size_t i = 0; i < m; ++i) {
    Rat term = Rat(static_cast<long>(m) - 2) * a[i] - (sum - a[i]);
    if (term > best) best = term;
    Rat mag = rat_abs(a[i]);
    if (mag > best) best = mag;
  }
  Rat spread = sum / Rat(static_cast<long>(m) - 2);
  if (spread > best) best = spread;
  return Rat(2 * best);
}

}  // namespace

SeparatingMenu build_separating_menu(const DiscountGrid& grid_in,
                                     std::span<const Belief> p_profile,
                                     std::span<const Belief> q_profile) {
  if (p_profile.empty() || p_profile.size() != q_profile.size()) {
    throw std::invalid_argument("profiles must be nonempty and the same size");
  }
  const std::size_t m_in = grid_in.size();
  for (std::size_t n = 0; n < p_profile.size(); ++n) {
    if (p_profile[n].size() != m_in || q_profile[n].size() != m_in) {
      throw std::invalid_argument("profile beliefs must match the grid");
    }
    if (p_profile[n] == q_profile[n]) {
      throw std::invalid_argument("profiles must differ for every agent");
    }
  }

  std::vector<Rat> factors = grid_in.factors();
  if (factors.size() == 2) {
    // interleave a third factor so the cubic construction has room
    factors.push_back(factors[1] / 2);
  }
  if (factors.size() < 3) throw std::invalid_argument("construction needs at least two factors");
  if (!(factors.front() < 1) || !(factors.back() > 0)) {
    throw std::invalid_argument("grid must lie strictly inside (0,1) after enlargement");
  }
  DiscountGrid grid(factors);  // re-validates strict descent
  const std::size_t m = factors.size();

  std::vector<Rat> gammas(m + 1);
  for (std::size_t i = 0; i < m + 1; ++i) {
    const Rat upper = (i == 0) ? Rat(1) : factors[i - 1];
    const Rat lower = (i == m) ? Rat(0) : factors[i];
    gammas[i] = (upper + lower) / 2;  // gamma_{i+1} in paper indexing
  }
  const Rat& gamma_last = gammas[m];

  PayoffStream target(std::vector<Rat>{Rat(0), Rat(2), Rat(0), Rat(1)});
  std::vector<PayoffStream> projects{target};
  for (std::size_t k = 0; k < m; ++k) {
    const Rat& beta = factors[k];
    const Rat& gamma = gammas[k];
    // Vieta on (X - gamma_last)(X - beta)(X - gamma) against the target
    Rat y0 = gamma_last * beta * gamma;
    Rat y1 = Rat(2) - gamma_last * (beta + gamma) - beta * gamma;
    Rat y2 = gamma_last + beta + gamma;
    if (y0 < 0 || y1 < 0 || y2 < 0) {
      throw std::logic_error("rival project has a negative payoff");
    }
    projects.emplace_back(std::vector<Rat>{std::move(y0), std::move(y1), std::move(y2)});
  }

  SeparatingMenu cons{std::move(grid), std::move(gammas), Menu(std::move(projects)), {}, {}, {}};
  for (std::size_t n = 0; n < p_profile.size(); ++n) {
    cons.p_beliefs.push_back(p_profile[n].padded(m));
    cons.q_beliefs.push_back(q_profile[n].padded(m));
  }

  for (std::size_t n = 0; n < p_profile.size(); ++n) {
    SeparatingMenu::Agent agent{
        separating_direction(cons.p_beliefs[n], cons.q_beliefs[n]),
        Rat(0),
        {},
        {},
        TieBreaker::uniform()};
    agent.tau = choose_tau(agent.direction);

    agent.threshold_weights.resize(m);
    Rat bsum(0);
    for (std::size_t k = 0; k < m; ++k) {
      agent.threshold_weights[k] = (agent.direction[k] + agent.tau) / (2 * agent.tau);
      if (!(agent.threshold_weights[k] > 0 && agent.threshold_weights[k] < 1)) {
        throw std::logic_error("threshold weight escaped (0,1)");
      }
      bsum += agent.threshold_weights[k];
    }

    agent.tie_masses.resize(m);
    Rat csum(0);
    for (std::size_t k = 0; k < m; ++k) {
      agent.tie_masses[k] = bsum / Rat(static_cast<long>(m) - 1) - agent.threshold_weights[k];
      if (!(agent.tie_masses[k] > 0)) throw std::logic_error("tie mass must be positive");
      csum += agent.tie_masses[k];
    }
    if (!(csum < 1)) throw std::logic_error("tie masses must leave slack");

    std::vector<TieBreaker::Piece> pieces;
    pieces.push_back(TieBreaker::Piece{Rat(0), cons.gammas[m], Rat(1 - csum)});
    for (std::size_t k = 0; k < m; ++k) {
      pieces.push_back(
          TieBreaker::Piece{cons.grid.factor(k), cons.gammas[k], agent.tie_masses[k]});
    }
    agent.tiebreaker = TieBreaker(std::move(pieces));
    cons.agents.push_back(std::move(agent));
  }
  return cons;
}

SeparatingMenuReport verify_separating_menu(const SeparatingMenu& cons,
                                            std::span<const Belief> p_profile,
                                            std::span<const Belief> q_profile) {
  if (p_profile.size() != cons.agents.size() || q_profile.size() != cons.agents.size()) {
    throw std::invalid_argument("profile size does not match the construction");
  }
  const std::size_t m = cons.grid.size();
  const Rat half(1, 2);
  SeparatingMenuReport report;
  report.pass = true;
  for (std::size_t n = 0; n < cons.agents.size(); ++n) {
    const Belief p = p_profile[n].padded(m);
    const Belief q = q_profile[n].padded(m);
    SeparatingMenuReport::Agent agent;
    agent.rho_p = rcr(cons.grid, p, cons.agents[n].tiebreaker, cons.menu).probabilities[0];
    agent.rho_q = rcr(cons.grid, q, cons.agents[n].tiebreaker, cons.menu).probabilities[0];
    agent.pb = dot(p, cons.agents[n].threshold_weights);
    agent.qb = dot(q, cons.agents[n].threshold_weights);
    agent.identity_p = agent.rho_p.exact() && agent.rho_p.lo == agent.pb;
    agent.identity_q = agent.rho_q.exact() && agent.rho_q.lo == agent.qb;
    agent.threshold = agent.pb < half && half < agent.qb;
    report.pass = report.pass && agent.ok();
    report.agents.push_back(std::move(agent));
  }
  return report;
}

AggregatorSpec AggregatorSpec::linear(std::vector<Rat> lambdas) {
  if (lambdas.empty()) throw std::invalid_argument("linear rule needs weights");
  Rat sum(0);
  for (const Rat& l : lambdas) {
    if (l < 0) throw std::invalid_argument("weights must be nonnegative");
    sum += l;
  }
  if (sum != 1) throw std::invalid_argument("weights must sum to 1");
  AggregatorSpec spec;
  spec.kind_ = Kind::kLinear;
  spec.lambdas_ = std::move(lambdas);
  return spec;
}

AggregatorSpec AggregatorSpec::dictator(std::size_t agent) {
  AggregatorSpec spec;
  spec.kind_ = Kind::kDictator;
  spec.dictator_ = agent;
  return spec;
}

AggregatorSpec AggregatorSpec::custom(std::function<Belief(std::span<const Belief>)> fn) {
  if (!fn) throw std::invalid_argument("custom rule needs a function");
  AggregatorSpec spec;
  spec.kind_ = Kind::kCustom;
  spec.fn_ = std::move(fn);
  return spec;
}

Belief AggregatorSpec::apply(std::span<const Belief> beliefs) const {
  if (beliefs.empty()) throw std::invalid_argument("no beliefs to aggregate");
  Belief out = [&] {
    switch (kind_) {
      case Kind::kLinear: {
        if (beliefs.size() != lambdas_.size()) {
          throw std::invalid_argument("belief count does not match weight count");
        }
        std::vector<Rat> acc(beliefs.front().size(), Rat(0));
        for (std::size_t n = 0; n < beliefs.size(); ++n) {
          for (std::size_t k = 0; k < acc.size(); ++k) {
            acc[k] += lambdas_[n] * beliefs[n].prob(k);
          }
        }
        return Belief(std::move(acc));
      }
      case Kind::kDictator:
        if (dictator_ >= beliefs.size()) {
          throw std::invalid_argument("dictator index out of range");
        }
        return beliefs[dictator_];
      case Kind::kCustom:
        return fn_(beliefs);
    }
    throw std::logic_error("unknown aggregator kind");
  }();
  bool all_same = true;
  for (const Belief& b : beliefs) {
    if (!(b == beliefs.front())) {
      all_same = false;
      break;
    }
  }
  if (all_same && !(out == beliefs.front())) {
    throw std::invalid_argument("aggregator breaks the agreement axiom F(P,...,P) = P");
  }
  return out;
}

namespace {

DiscountGrid random_grid(Rng& rng, std::size_t m) {
  std::set<Rat> vals;
  int guard = 0;
  while (vals.size() < m) {
    if (++guard > 1000) throw std::logic_error("grid sampling stalled");
    Rat v(static_cast<long>(1 + rng.index(63)), 64);
    v.canonicalize();
    vals.insert(v);
  }
  std::vector<Rat> factors(vals.rbegin(), vals.rend());
  return DiscountGrid(std::move(factors));
}

Belief random_belief(Rng& rng, std::size_t m) {
  const long scale = 32;
  std::vector<long> cuts{0, scale};
  for (std::size_t i = 0; i + 1 < m; ++i) cuts.push_back(static_cast<long>(rng.index(scale + 1)));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rat> probs(m);
  for (std::size_t i = 0; i < m; ++i) {
    probs[i] = Rat(cuts[i + 1] - cuts[i], scale);
    probs[i].canonicalize();
  }
  return Belief(std::move(probs));
}

Menu random_menu(Rng& rng) {
  const std::size_t count = 2 + rng.index(3);
  std::vector<PayoffStream> projects;
  int guard = 0;
  while (projects.size() < count) {
    if (++guard > 1000) throw std::logic_error("menu sampling stalled");
    const std::size_t len = 1 + rng.index(4);
    std::vector<Rat> payoffs(len);
    for (Rat& v : payoffs) {
      v = Rat(static_cast<long>(rng.index(17)), 4);
      v.canonicalize();
    }
    PayoffStream candidate(std::move(payoffs));
    bool dup = false;
    for (const PayoffStream& p : projects) {
      if (p == candidate) {
        dup = true;
        break;
      }
    }
    if (!dup) projects.push_back(std::move(candidate));
  }
  return Menu(std::move(projects));
}

TieBreaker random_tiebreaker(Rng& rng) {
  const std::size_t count = 1 + rng.index(3);
  std::set<Rat> ends;
  int guard = 0;
  while (ends.size() < 2 * count) {
    if (++guard > 1000) throw std::logic_error("tie-breaker sampling stalled");
    Rat v(static_cast<long>(rng.index(65)), 64);
    v.canonicalize();
    ends.insert(v);
  }
  std::vector<Rat> sorted(ends.begin(), ends.end());
  std::set<long> cut_set;
  while (cut_set.size() < count - 1) cut_set.insert(static_cast<long>(1 + rng.index(31)));
  std::vector<long> cuts{0};
  cuts.insert(cuts.end(), cut_set.begin(), cut_set.end());
  cuts.push_back(32);
  std::vector<TieBreaker::Piece> pieces;
  for (std::size_t k = 0; k < count; ++k) {
    Rat mass(cuts[k + 1] - cuts[k], 32);
    mass.canonicalize();
    pieces.push_back(TieBreaker::Piece{sorted[2 * k], sorted[2 * k + 1], std::move(mass)});
  }
  return TieBreaker(std::move(pieces));
}

struct ImplicationCheck {
  bool found = false;
  std::size_t project = 0;
  bool premise_at_least_half = true;
};

// Certified violations only: the premise must hold for every agent with the
// pessimistic end of the enclosure, and the conclusion must fail with the
// optimistic end.
ImplicationCheck check_conditions(const std::vector<ChoiceDistribution>& individual,
                                  const ChoiceDistribution& social, bool strict_side_too) {
  const Rat half(1, 2);
  ImplicationCheck out;
  const std::size_t projects = social.probabilities.size();
  for (std::size_t x = 0; x < projects; ++x) {
    bool all_ge = true, all_lt = true;
    for (const ChoiceDistribution& rho : individual) {
      if (!(rho.probabilities[x].lo >= half)) all_ge = false;
      if (!(rho.probabilities[x].hi < half)) all_lt = false;
    }
    if (all_ge && social.probabilities[x].hi < half) {
      out.found = true;
      out.project = x;
      out.premise_at_least_half = true;
      return out;
    }
    if (strict_side_too && all_lt && social.probabilities[x].lo >= half) {
      out.found = true;
      out.project = x;
      out.premise_at_least_half = false;
      return out;
    }
  }
  return out;
}

UnanimityResult run_attack(const AggregatorSpec& aggregator) {
  const std::vector<Rat>& lambdas = aggregator.lambdas();
  const std::size_t n_agents = lambdas.size();
  std::vector<std::size_t> positive;
  for (std::size_t n = 0; n < n_agents; ++n) {
    if (lambdas[n] > 0) positive.push_back(n);
  }
  if (positive.size() < 2) throw std::logic_error("attack needs a non-dictatorial rule");

  Rat lambda_min = lambdas[positive[0]];
  for (std::size_t n : positive) {
    if (lambdas[n] < lambda_min) lambda_min = lambdas[n];
  }
  const Rat t = lambda_min / 4;

  // Perturbations d_n with sum_n lambda_n d_n = 0 and every d_n != 0, so the
  // two profiles disagree agent by agent yet aggregate identically.
  std::vector<Rat> d(n_agents, Rat(1, 4));
  std::size_t i = 0;
  while (i + 1 < positive.size()) {
    if (i + 3 == positive.size()) break;  // keep a triple for the odd tail
    d[positive[i]] = t / lambdas[positive[i]];
    d[positive[i + 1]] = -t / lambdas[positive[i + 1]];
    i += 2;
  }
  if (i + 3 == positive.size()) {
    d[positive[i]] = t / lambdas[positive[i]];
    d[positive[i + 1]] = t / lambdas[positive[i + 1]];
    d[positive[i + 2]] = -2 * t / lambdas[positive[i + 2]];
  }

  const Belief base(std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(0)});
  std::vector<Belief> p_profile(n_agents, base);
  std::vector<Belief> q_profile;
  for (std::size_t n = 0; n < n_agents; ++n) {
    q_profile.push_back(
        Belief(std::vector<Rat>{Rat(1, 2) + d[n], Rat(1, 2) - d[n], Rat(0)}));
  }

  const DiscountGrid grid(std::vector<Rat>{Rat(3, 4), Rat(1, 2), Rat(1, 4)});
  const SeparatingMenu cons = build_separating_menu(grid, p_profile, q_profile);
  const SeparatingMenuReport rep = verify_separating_menu(cons, p_profile, q_profile);
  if (!rep.pass) throw std::logic_error("separating construction failed verification");

  const Belief social = aggregator.apply(p_profile);
  {
    const Belief social_q = aggregator.apply(q_profile);
    if (!(social == social_q)) throw std::logic_error("attack profiles aggregate differently");
  }

  std::vector<TieBreaker> tbs;
  for (const SeparatingMenu::Agent& a : cons.agents) tbs.push_back(a.tiebreaker);
  std::vector<Rat> mix_weights(tbs.size(), Rat(1, static_cast<long>(tbs.size())));
  for (Rat& w : mix_weights) w.canonicalize();
  const std::vector<TieBreaker> socials{tbs[0], TieBreaker::mixture(tbs, mix_weights)};

  UnanimityResult result;
  result.pass = false;
  const Rat half(1, 2);
  for (std::size_t g = 0; g < socials.size(); ++g) {
    const Enclosure rho0 =
        rcr(cons.grid, social, socials[g], cons.menu).probabilities[0];
    if (!rho0.exact()) throw std::logic_error("attack probability did not evaluate exactly");
    UnanimityCounterexample ce{cons.grid,
                               {},
                               social,
                               cons.menu,
                               0,
                               {},
                               rho0,
                               true,
                               ""};
    if (rho0.lo >= half) {
      // everyone rejects under P yet the planner accepts
      ce.premise_at_least_half = false;
      for (std::size_t n = 0; n < cons.agents.size(); ++n) {
        ce.profile.push_back(cons.p_beliefs[n]);
        ce.individual_rho.push_back(rep.agents[n].rho_p);
      }
    } else {
      // everyone accepts under Q yet the planner rejects
      ce.premise_at_least_half = true;
      for (std::size_t n = 0; n < cons.agents.size(); ++n) {
        ce.profile.push_back(cons.q_beliefs[n]);
        ce.individual_rho.push_back(rep.agents[n].rho_q);
      }
    }
    ce.note = g == 0 ? "separating-menu attack, social tie-breaker = agent 1's"
                     : "separating-menu attack, social tie-breaker = uniform mixture";
    if (!result.counterexample) result.counterexample = std::move(ce);
  }
  return result;
}

}  // namespace

UnanimityResult unanimity_check(const AggregatorSpec& aggregator, TieBreakerPolicy policy,
                                std::size_t trials, std::uint64_t seed, std::size_t agents) {
  std::size_t n_agents = agents;
  if (aggregator.kind() == AggregatorSpec::Kind::kLinear) {
    n_agents = aggregator.lambdas().size();
  } else if (aggregator.kind() == AggregatorSpec::Kind::kDictator) {
    n_agents = std::max(agents, aggregator.dictator_index() + 1);
  }
  if (n_agents == 0) throw std::invalid_argument("need at least one agent");

  if (policy == TieBreakerPolicy::kFree &&
      aggregator.kind() == AggregatorSpec::Kind::kLinear) {
    bool dictatorial = false;
    for (const Rat& l : aggregator.lambdas()) {
      if (l == 1) dictatorial = true;
    }
    if (!dictatorial) return run_attack(aggregator);
  }

  Rng root(seed);
  UnanimityResult result;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng = root.substream(trial);
    const std::size_t m = 2 + rng.index(3);
    const DiscountGrid grid = random_grid(rng, m);
    std::vector<Belief> beliefs;
    for (std::size_t n = 0; n < n_agents; ++n) beliefs.push_back(random_belief(rng, m));
    const Menu menu = random_menu(rng);
    const Belief social = aggregator.apply(beliefs);

    std::vector<TieBreaker> tbs;
    std::vector<TieBreaker> social_tbs;
    if (policy == TieBreakerPolicy::kCommon) {
      const TieBreaker shared = random_tiebreaker(rng);
      tbs.assign(n_agents, shared);
      social_tbs.push_back(shared);
    } else {
      for (std::size_t n = 0; n < n_agents; ++n) tbs.push_back(random_tiebreaker(rng));
      if (aggregator.kind() == AggregatorSpec::Kind::kDictator) {
        social_tbs.push_back(tbs[aggregator.dictator_index()]);
      } else {
        social_tbs.push_back(tbs[0]);
        std::vector<Rat> w(n_agents, Rat(1, static_cast<long>(n_agents)));
        for (Rat& v : w) v.canonicalize();
        social_tbs.push_back(TieBreaker::mixture(tbs, w));
      }
    }

    std::vector<ChoiceDistribution> individual;
    for (std::size_t n = 0; n < n_agents; ++n) {
      individual.push_back(rcr(grid, beliefs[n], tbs[n], menu));
    }
    for (const TieBreaker& social_tb : social_tbs) {
      const ChoiceDistribution social_rho = rcr(grid, social, social_tb, menu);
      const ImplicationCheck check = check_conditions(
          individual, social_rho, policy == TieBreakerPolicy::kFree);
      if (check.found) {
        UnanimityCounterexample ce{grid,
                                   beliefs,
                                   social,
                                   menu,
                                   check.project,
                                   {},
                                   social_rho.probabilities[check.project],
                                   check.premise_at_least_half,
                                   "randomized trial " + std::to_string(trial)};
        for (const ChoiceDistribution& rho : individual) {
          ce.individual_rho.push_back(rho.probabilities[check.project]);
        }
        result.pass = false;
        result.counterexample = std::move(ce);
        result.trials_run = trial + 1;
        return result;
      }
    }
    result.trials_run = trial + 1;
  }
  return result;
}

}  // namespace rdisc
