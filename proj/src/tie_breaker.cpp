#include "rdisc/tie_breaker.hpp"

#include <algorithm>
#include <stdexcept>

namespace rdisc {

TieBreaker::TieBreaker(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("tie-breaker needs at least one piece");
  std::sort(pieces_.begin(), pieces_.end(),
            [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  Rat total(0);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (p.lo < 0 || p.hi > 1 || !(p.lo < p.hi)) {
      throw std::invalid_argument("tie-breaker piece must satisfy 0 <= lo < hi <= 1");
    }
    if (p.mass <= 0) throw std::invalid_argument("tie-breaker masses must be positive");
    if (i > 0 && pieces_[i - 1].hi > p.lo) {
      throw std::invalid_argument("tie-breaker pieces must have disjoint interiors");
    }
    total += p.mass;
  }
  if (total != 1) throw std::invalid_argument("tie-breaker masses must sum to 1");
}

TieBreaker TieBreaker::uniform() {
  return TieBreaker({Piece{Rat(0), Rat(1), Rat(1)}});
}

TieBreaker TieBreaker::mixture(std::span<const TieBreaker> parts, std::span<const Rat> weights) {
  if (parts.empty() || parts.size() != weights.size()) {
    throw std::invalid_argument("mixture needs matching parts and weights");
  }
  Rat wsum(0);
  for (const Rat& w : weights) {
    if (w < 0) throw std::invalid_argument("mixture weights must be nonnegative");
    wsum += w;
  }
  if (wsum != 1) throw std::invalid_argument("mixture weights must sum to 1");

  std::vector<Rat> cuts;
  for (const TieBreaker& tb : parts) {
    for (const Piece& p : tb.pieces_) {
      cuts.push_back(p.lo);
      cuts.push_back(p.hi);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Piece> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rat& lo = cuts[i];
    const Rat& hi = cuts[i + 1];
    Rat mass(0);
    for (std::size_t n = 0; n < parts.size(); ++n) {
      if (weights[n] == 0) continue;
      for (const Piece& p : parts[n].pieces_) {
        if (p.lo <= lo && hi <= p.hi) {
          mass += weights[n] * p.mass * (hi - lo) / (p.hi - p.lo);
        }
      }
    }
    if (mass > 0) out.push_back(Piece{lo, hi, mass});
  }
  return TieBreaker(std::move(out));
}

std::vector<Rat> TieBreaker::endpoints() const {
  std::vector<Rat> out;
  out.reserve(pieces_.size() * 2);
  for (const Piece& p : pieces_) {
    out.push_back(p.lo);
    out.push_back(p.hi);
  }
  return out;
}

Rat TieBreaker::cdf(const Rat& x) const {
  Rat acc(0);
  for (const Piece& p : pieces_) {
    if (x >= p.hi) {
      acc += p.mass;
    } else if (x > p.lo) {
      acc += p.mass * (x - p.lo) / (p.hi - p.lo);
    }
  }
  return acc;
}

Enclosure TieBreaker::measure(const IntervalUnion& set) const {
  Rat lo(0), hi(0);
  for (const ClosedInterval& piece : set.pieces()) {
    const Rat fa_lo = cdf(piece.a.lo);
    const Rat fa_hi = cdf(piece.a.hi);
    const Rat fb_lo = cdf(piece.b.lo);
    const Rat fb_hi = cdf(piece.b.hi);
    Rat piece_lo = fb_lo - fa_hi;
    if (piece_lo < 0) piece_lo = 0;
    lo += piece_lo;
    hi += fb_hi - fa_lo;
  }
  if (hi > 1) hi = 1;
  if (lo > hi) lo = hi;
  return Enclosure(lo, hi);
}

}  // namespace rdisc
