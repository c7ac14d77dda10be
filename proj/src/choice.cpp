#include "rdisc/choice.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "rdisc/rng.hpp"

namespace rdisc {

Poly diff_polynomial(const PayoffStream& x, const PayoffStream& y) {
  const std::size_t n = std::max(x.length(), y.length());
  std::vector<Rat> coeffs(n);
  for (std::size_t t = 0; t < n; ++t) {
    coeffs[t] = x.at_or_zero(t) - y.at_or_zero(t);
  }
  return Poly(std::move(coeffs));
}

std::vector<std::size_t> maximizer_set(const Rat& beta, const Menu& menu) {
  if (beta < 0 || beta > 1) throw std::invalid_argument("discount factor outside [0,1]");
  std::vector<Rat> values(menu.size());
  for (std::size_t i = 0; i < menu.size(); ++i) {
    values[i] = dot_discount(beta, menu.project(i));
  }
  Rat best = values[0];
  for (std::size_t i = 1; i < menu.size(); ++i) {
    if (values[i] > best) best = values[i];
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < menu.size(); ++i) {
    if (values[i] == best) out.push_back(i);
  }
  return out;
}

namespace {

// One breakpoint of the menu's sign arrangement on [0,1].
struct Breakpoint {
  Enclosure where;
  std::optional<Poly> sf;  // refinement witness when inexact
  bool exact() const { return !sf.has_value(); }
};

struct Arrangement {
  // bounds[0] == 0 and bounds.back() == 1; breakpoints strictly between.
  std::vector<Breakpoint> bounds;
  // cell j lies between bounds[j] and bounds[j+1]
  struct Cell {
    Rat sample;
    std::size_t winner;
  };
  std::vector<Cell> cells;
  // maximizer set at exact boundaries (empty for enclosures)
  std::vector<std::vector<std::size_t>> max_at_bound;
};

bool overlap(const RootEnclosure& a, const RootEnclosure& b) {
  return !(a.hi < b.lo || b.hi < a.lo);
}

// Collapses enclosures that sit on rational points, merges enclosures of the
// same algebraic number, and separates everything else.
void resolve_breakpoints(std::set<Rat>* exact_pts, std::vector<RootEnclosure>* encs) {
  bool changed = true;
  while (changed) {
    changed = false;

    // enclosures never straddle a known rational breakpoint or 0/1
    for (std::size_t i = 0; i < encs->size(); ++i) {
      RootEnclosure& e = (*encs)[i];
      std::vector<Rat> inside{Rat(0), Rat(1)};
      for (auto it = exact_pts->lower_bound(e.lo); it != exact_pts->end() && *it <= e.hi; ++it) {
        inside.push_back(*it);
      }
      bool drop = false;
      for (const Rat& pt : inside) {
        if (pt < e.lo || pt > e.hi) continue;
        if (e.sf(pt) == 0) {
          // the bracketed root is this exact rational
          exact_pts->insert(pt);
          drop = true;
          break;
        }
        refine_to_exclude(&e, pt);
        if (e.exact()) {
          exact_pts->insert(e.lo);
          drop = true;
          break;
        }
      }
      if (drop) {
        encs->erase(encs->begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
    if (changed) continue;

    std::sort(encs->begin(), encs->end(),
              [](const RootEnclosure& a, const RootEnclosure& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i < encs->size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < encs->size() && !changed; ++j) {
        RootEnclosure& a = (*encs)[i];
        RootEnclosure& b = (*encs)[j];
        if (!overlap(a, b)) continue;
        const Poly g = Poly::gcd(a.sf, b.sf);
        bool same_root = false;
        if (g.degree() >= 1) {
          Rat olo = std::max(a.lo, b.lo);
          Rat ohi = std::min(a.hi, b.hi);
          if (g(olo) == 0 || g(ohi) == 0) {
            exact_pts->insert(g(olo) == 0 ? olo : ohi);
            encs->erase(encs->begin() + static_cast<std::ptrdiff_t>(j));
            encs->erase(encs->begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            break;
          }
          if (olo < ohi && SturmChain(g).count_in(olo, ohi) >= 1) same_root = true;
        }
        if (same_root) {
          RootEnclosure merged{std::max(a.lo, b.lo), std::min(a.hi, b.hi), a.sf};
          if (sgn(merged.sf(merged.lo)) * sgn(merged.sf(merged.hi)) >= 0) {
            throw std::logic_error("merged enclosure lost its sign change");
          }
          (*encs)[i] = std::move(merged);
          encs->erase(encs->begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          break;
        }
        int guard = 0;
        while (overlap(a, b)) {
          if (++guard > 256) throw std::logic_error("failed to separate root enclosures");
          refine_enclosure(&a, a.exact() ? Rat(0) : Rat((a.hi - a.lo) / 2));
          if (a.exact()) break;
          refine_enclosure(&b, b.exact() ? Rat(0) : Rat((b.hi - b.lo) / 2));
          if (b.exact()) break;
        }
        if (a.exact() || b.exact()) {
          // a midpoint landed on the root; fold it into the exact set
          if (a.exact()) exact_pts->insert(a.lo);
          if (b.exact()) exact_pts->insert(b.lo);
          if (b.exact()) encs->erase(encs->begin() + static_cast<std::ptrdiff_t>(j));
          if (a.exact()) encs->erase(encs->begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
        }
      }
    }
  }
}

Arrangement build_arrangement(const Menu& menu, const Rat& eps, std::span<const Rat> candidates) {
  std::set<Rat> exact_pts;
  std::vector<RootEnclosure> encs;
  for (std::size_t i = 0; i < menu.size(); ++i) {
    for (std::size_t j = i + 1; j < menu.size(); ++j) {
      const Poly d = diff_polynomial(menu.project(i), menu.project(j));
      if (d.is_zero()) throw std::logic_error("distinct menu projects with zero difference");
      for (IsolatedRoot& r : isolate_roots(d, eps, candidates)) {
        if (r.exact) {
          exact_pts.insert(r.value);
        } else {
          encs.push_back(std::move(*r.enclosure));
        }
      }
    }
  }
  resolve_breakpoints(&exact_pts, &encs);

  Arrangement arr;
  arr.bounds.push_back(Breakpoint{Enclosure::point(Rat(0)), std::nullopt});
  {
    std::vector<Breakpoint> mid;
    for (const Rat& r : exact_pts) {
      if (r > 0 && r < 1) mid.push_back(Breakpoint{Enclosure::point(r), std::nullopt});
    }
    for (RootEnclosure& e : encs) {
      mid.push_back(Breakpoint{Enclosure(e.lo, e.hi), std::move(e.sf)});
    }
    std::sort(mid.begin(), mid.end(), [](const Breakpoint& a, const Breakpoint& b) {
      return a.where.lo < b.where.lo;
    });
    for (Breakpoint& bp : mid) arr.bounds.push_back(std::move(bp));
  }
  arr.bounds.push_back(Breakpoint{Enclosure::point(Rat(1)), std::nullopt});

  arr.cells.resize(arr.bounds.size() - 1);
  for (std::size_t j = 0; j + 1 < arr.bounds.size(); ++j) {
    const Rat& gap_lo = arr.bounds[j].where.hi;
    const Rat& gap_hi = arr.bounds[j + 1].where.lo;
    if (!(gap_lo < gap_hi)) throw std::logic_error("empty cell in menu arrangement");
    Rat sample = (gap_lo + gap_hi) / 2;
    std::vector<std::size_t> winners = maximizer_set(sample, menu);
    if (winners.size() != 1) {
      throw std::logic_error("tie at a cell sample point; missed breakpoint");
    }
    arr.cells[j] = Arrangement::Cell{std::move(sample), winners[0]};
  }

  arr.max_at_bound.resize(arr.bounds.size());
  for (std::size_t j = 0; j < arr.bounds.size(); ++j) {
    if (arr.bounds[j].exact()) {
      arr.max_at_bound[j] = maximizer_set(arr.bounds[j].where.lo, menu);
    }
  }
  return arr;
}

bool contains_index(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

IntervalUnion cone_from_arrangement(const Arrangement& arr, std::size_t project) {
  std::vector<ClosedInterval> pieces;
  bool open = false;
  Enclosure start;
  const std::size_t nb = arr.bounds.size();
  for (std::size_t j = 0; j < nb; ++j) {
    const bool prev_won = j > 0 && arr.cells[j - 1].winner == project;
    const bool next_won = j + 1 < nb && arr.cells[j].winner == project;
    if (open && !next_won) {
      pieces.push_back(ClosedInterval{start, arr.bounds[j].where});
      open = false;
    }
    if (!prev_won && !next_won && arr.bounds[j].exact() &&
        contains_index(arr.max_at_bound[j], project)) {
      pieces.push_back(ClosedInterval{arr.bounds[j].where, arr.bounds[j].where});
    }
    if (!open && next_won) {
      start = arr.bounds[j].where;
      open = true;
    }
  }
  if (open) throw std::logic_error("unterminated cone piece");
  return IntervalUnion(std::move(pieces));
}

}  // namespace

IntervalUnion normal_cone(const Menu& menu, std::size_t project, const Rat& eps,
                          std::span<const Rat> candidates) {
  if (project >= menu.size()) throw std::invalid_argument("project index out of range");
  if (menu.size() == 1) return IntervalUnion::full();
  const Arrangement arr = build_arrangement(menu, eps, candidates);
  return cone_from_arrangement(arr, project);
}

std::vector<IntervalUnion> normal_cones(const Menu& menu, const Rat& eps,
                                        std::span<const Rat> candidates) {
  std::vector<IntervalUnion> out(menu.size());
  if (menu.size() == 1) {
    out[0] = IntervalUnion::full();
    return out;
  }
  const Arrangement arr = build_arrangement(menu, eps, candidates);
  for (std::size_t i = 0; i < menu.size(); ++i) {
    out[i] = cone_from_arrangement(arr, i);
  }
  return out;
}

ChoiceDistribution rcr(const DiscountGrid& grid, const Belief& p, const TieBreaker& tb,
                       const Menu& menu, const Rat& eps) {
  if (p.size() != grid.size()) throw std::invalid_argument("belief/grid size mismatch");
  std::vector<Rat> candidates = grid.factors();
  for (Rat& e : tb.endpoints()) candidates.push_back(std::move(e));

  ChoiceDistribution out;
  out.probabilities.assign(menu.size(), Enclosure(Rat(0), Rat(0)));
  for (std::size_t m = 0; m < grid.size(); ++m) {
    const Rat& pm = p.prob(m);
    if (pm == 0) continue;
    const std::vector<std::size_t> winners = maximizer_set(grid.factor(m), menu);
    if (winners.size() == 1) {
      out.probabilities[winners[0]].lo += pm;
      out.probabilities[winners[0]].hi += pm;
      continue;
    }
    std::vector<PayoffStream> tied;
    tied.reserve(winners.size());
    for (std::size_t idx : winners) tied.push_back(menu.project(idx));
    const Menu submenu(std::move(tied));
    const std::vector<IntervalUnion> cones = normal_cones(submenu, eps, candidates);
    for (std::size_t k = 0; k < winners.size(); ++k) {
      const Enclosure meas = tb.measure(cones[k]);
      out.probabilities[winners[k]].lo += pm * meas.lo;
      out.probabilities[winners[k]].hi += pm * meas.hi;
    }
  }
  return out;
}

std::vector<double> simulate_rcr(const DiscountGrid& grid, const Belief& p,
                                 const TieBreaker& tb, const Menu& menu,
                                 std::size_t samples, std::uint64_t seed) {
  if (p.size() != grid.size()) throw std::invalid_argument("belief/grid size mismatch");
  if (samples == 0) throw std::invalid_argument("sample count must be positive");

  std::vector<Rat> cum_belief(grid.size());
  Rat acc(0);
  for (std::size_t m = 0; m < grid.size(); ++m) {
    acc += p.prob(m);
    cum_belief[m] = acc;
  }
  std::vector<Rat> cum_mass(tb.pieces().size());
  acc = 0;
  for (std::size_t k = 0; k < tb.pieces().size(); ++k) {
    acc += tb.pieces()[k].mass;
    cum_mass[k] = acc;
  }
  std::vector<std::vector<std::size_t>> tied_at(grid.size());
  for (std::size_t m = 0; m < grid.size(); ++m) {
    if (p.prob(m) > 0) tied_at[m] = maximizer_set(grid.factor(m), menu);
  }

  Rng rng(seed);
  std::vector<std::size_t> counts(menu.size(), 0);
  for (std::size_t s = 0; s < samples; ++s) {
    const Rat u = rng.dyadic(53);
    std::size_t m = 0;
    while (m + 1 < grid.size() && !(u < cum_belief[m])) ++m;
    const std::vector<std::size_t>& tied = tied_at[m];
    if (tied.size() == 1) {
      ++counts[tied[0]];
      continue;
    }
    const Rat u2 = rng.dyadic(53);
    std::size_t k = 0;
    while (k + 1 < cum_mass.size() && !(u2 < cum_mass[k])) ++k;
    const TieBreaker::Piece& piece = tb.pieces()[k];
    const Rat beta2 = piece.lo + (piece.hi - piece.lo) * rng.dyadic(53);
    std::size_t best = tied[0];
    Rat best_val = dot_discount(beta2, menu.project(best));
    for (std::size_t idx : tied) {
      const Rat v = dot_discount(beta2, menu.project(idx));
      if (v > best_val) {
        best_val = v;
        best = idx;
      }
    }
    ++counts[best];
  }
  std::vector<double> out(menu.size());
  for (std::size_t i = 0; i < menu.size(); ++i) {
    out[i] = static_cast<double>(counts[i]) / static_cast<double>(samples);
  }
  return out;
}

}  // namespace rdisc
