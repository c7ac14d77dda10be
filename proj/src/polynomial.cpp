#include "rdisc/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rdisc {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::from_roots(std::span<const Rat> roots) {
  std::vector<Rat> c{Rat(1)};
  for (const Rat& r : roots) {
    std::vector<Rat> next(c.size() + 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return Poly(std::move(c));
}

const Rat& Poly::leading() const {
  if (is_zero()) throw std::logic_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = coeffs_[i] + x * acc;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rat> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * Rat(static_cast<unsigned long>(i));
  }
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  std::vector<Rat> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& other) const {
  std::vector<Rat> out(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
  return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& other) const {
  if (is_zero() || other.is_zero()) return Poly();
  std::vector<Rat> out(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

void Poly::divrem(const Poly& a, const Poly& b, Poly* quotient, Poly* remainder) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rat> r = a.coeffs_;
  const int db = b.degree();
  std::vector<Rat> q;
  if (a.degree() >= db) q.assign(a.degree() - db + 1, Rat(0));
  while (static_cast<int>(r.size()) - 1 >= db) {
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (static_cast<int>(r.size()) - 1 < db) break;
    const std::size_t shift = r.size() - 1 - db;
    Rat f = r.back() / b.leading();
    q[shift] = f;
    for (int i = 0; i <= db; ++i) {
      r[shift + i] -= f * b.coeffs_[i];
    }
    r.pop_back();
  }
  if (quotient) *quotient = Poly(std::move(q));
  if (remainder) *remainder = Poly(std::move(r));
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r;
    divrem(a, b, nullptr, &r);
    a = std::move(b);
    b = r.is_zero() ? Poly() : r.normalized();
  }
  if (a.is_zero()) throw std::invalid_argument("gcd of zero polynomials");
  // make monic
  std::vector<Rat> c = a.coeffs_;
  const Rat lead = c.back();
  for (Rat& v : c) v /= lead;
  return Poly(std::move(c));
}

Poly Poly::squarefree_part() const {
  if (is_zero()) throw std::invalid_argument("square-free part of zero polynomial");
  if (degree() == 0) return normalized();
  Poly g = gcd(*this, derivative());
  if (g.degree() == 0) return normalized();
  Poly q, r;
  divrem(*this, g, &q, &r);
  if (!r.is_zero()) throw std::logic_error("inexact square-free division");
  return q.normalized();
}

Poly Poly::deflated(const Rat& root) const {
  // synthetic division by (X - root)
  if (degree() < 1) throw std::invalid_argument("cannot deflate constant polynomial");
  std::vector<Rat> out(coeffs_.size() - 1);
  Rat carry = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    out[i] = carry;
    carry = coeffs_[i] + root * carry;
  }
  if (carry != 0) throw std::invalid_argument("deflation point is not a root");
  return Poly(std::move(out));
}

Poly Poly::normalized() const {
  if (is_zero()) return Poly();
  std::vector<Rat> c = coeffs_;
  Rat lead = rat_abs(c.back());
  for (Rat& v : c) v /= lead;
  return Poly(std::move(c));
}

SturmChain::SturmChain(Poly squarefree) {
  if (squarefree.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
  chain_.push_back(squarefree.normalized());
  if (squarefree.degree() >= 1) {
    chain_.push_back(squarefree.derivative().normalized());
    while (chain_.back().degree() >= 1) {
      Poly r;
      Poly::divrem(chain_[chain_.size() - 2], chain_.back(), nullptr, &r);
      if (r.is_zero()) {
        // only happens with a repeated factor, which square-free input excludes
        throw std::logic_error("Sturm chain hit a zero remainder");
      }
      chain_.push_back((-r).normalized());
    }
  }
}

int SturmChain::variations_at(const Rat& x) const {
  int variations = 0;
  int prev = 0;
  for (const Poly& p : chain_) {
    const Rat v = p(x);
    const int s = sgn(v);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int SturmChain::count_in(const Rat& a, const Rat& b) const {
  if (!(a < b)) throw std::invalid_argument("empty interval in root count");
  if (chain_.front()(a) == 0 || chain_.front()(b) == 0) {
    throw std::invalid_argument("root count endpoints must not be roots");
  }
  return variations_at(a) - variations_at(b);
}

const Rat& default_root_eps() {
  static const Rat eps = Rat(1, mpz_class(1) << 40);
  return eps;
}

namespace {

// Divisors of |n|, ascending, or nullopt when n resists quick factoring.
std::optional<std::vector<mpz_class>> small_divisors(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  if (n == 0) return std::nullopt;
  std::vector<std::pair<mpz_class, unsigned>> factors;
  mpz_class d = 2;
  const unsigned long trial_limit = 100000;
  while (d * d <= n) {
    if (mpz_cmp_ui(d.get_mpz_t(), trial_limit) > 0) break;
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      factors.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 40) return std::nullopt;  // big cofactor: give up
    factors.emplace_back(n, 1);
  }
  std::vector<mpz_class> divisors{mpz_class(1)};
  for (const auto& [prime, exp] : factors) {
    const std::size_t before = divisors.size();
    mpz_class power = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < before; ++i) divisors.push_back(divisors[i] * power);
      if (divisors.size() > 4096) return std::nullopt;
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

// Rational-root-theorem scan on sf (integer-cleared); deflates found roots.
void rational_root_scan(Poly* sf, std::vector<Rat>* found) {
  if (sf->degree() < 1) return;
  mpz_class den_lcm = 1;
  for (const Rat& c : sf->coeffs()) {
    mpz_class d = c.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  std::vector<mpz_class> ic(sf->coeffs().size());
  for (std::size_t i = 0; i < ic.size(); ++i) {
    Rat scaled = sf->coeffs()[i] * Rat(den_lcm);
    ic[i] = scaled.get_num();
  }
  const auto lead_divs = small_divisors(ic.back());
  const auto const_divs = small_divisors(ic.front());
  if (!lead_divs || !const_divs) return;
  std::set<Rat> tried;
  for (const mpz_class& p : *const_divs) {
    for (const mpz_class& q : *lead_divs) {
      Rat cand(p, q);
      cand.canonicalize();
      if (cand <= 0 || cand >= 1) continue;  // 0/1 handled by exact candidates
      if (!tried.insert(cand).second) continue;
      while (sf->degree() >= 1 && (*sf)(cand) == 0) {
        found->push_back(cand);
        *sf = sf->deflated(cand);
      }
    }
  }
}

int sign_of(const Rat& v) { return sgn(v); }

}  // namespace

void refine_enclosure(RootEnclosure* enc, const Rat& max_width) {
  if (enc->exact()) return;
  int sign_lo = sign_of(enc->sf(enc->lo));
  while (enc->hi - enc->lo > max_width) {
    Rat mid = (enc->lo + enc->hi) / 2;
    const Rat v = enc->sf(mid);
    if (v == 0) {
      enc->lo = mid;
      enc->hi = mid;
      return;
    }
    if (sign_of(v) == sign_lo) {
      enc->lo = mid;
    } else {
      enc->hi = mid;
    }
  }
}

void refine_to_exclude(RootEnclosure* enc, const Rat& point) {
  while (!enc->exact() && enc->lo <= point && point <= enc->hi) {
    Rat width = (enc->hi - enc->lo) / 2;
    refine_enclosure(enc, width);
  }
}

std::vector<IsolatedRoot> isolate_roots(const Poly& p, const Rat& eps,
                                        std::span<const Rat> candidates) {
  if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");

  Poly sf = p.squarefree_part();
  std::vector<Rat> exact;

  std::set<Rat> cand_set{Rat(0), Rat(1)};
  for (const Rat& c : candidates) {
    if (c >= 0 && c <= 1) cand_set.insert(c);
  }
  for (const Rat& c : cand_set) {
    if (sf.degree() >= 1 && sf(c) == 0) {
      exact.push_back(c);
      sf = sf.deflated(c);
    }
  }
  rational_root_scan(&sf, &exact);

  std::vector<RootEnclosure> enclosures;
  if (sf.degree() >= 1) {
    bool restart = true;
    while (restart) {
      restart = false;
      enclosures.clear();
      if (sf.degree() < 1) break;
      if (sf(Rat(0)) == 0 || sf(Rat(1)) == 0) throw std::logic_error("endpoint root not deflated");
      SturmChain chain(sf);
      std::vector<std::pair<std::pair<Rat, Rat>, int>> stack;
      stack.push_back({{Rat(0), Rat(1)}, chain.count_in(Rat(0), Rat(1))});
      while (!stack.empty()) {
        auto [iv, count] = stack.back();
        stack.pop_back();
        if (count == 0) continue;
        auto& [a, b] = iv;
        if (count == 1) {
          RootEnclosure enc{a, b, sf};
          // the unique root in (a,b) of a square-free poly flips the sign
          if (sign_of(sf(a)) * sign_of(sf(b)) >= 0) {
            throw std::logic_error("isolating interval without sign change");
          }
          refine_enclosure(&enc, eps);
          if (enc.exact()) {
            exact.push_back(enc.lo);
            sf = sf.deflated(enc.lo);
            restart = true;
            break;
          }
          // keep known rational roots strictly outside the bracket
          for (const Rat& r : exact) {
            if (enc.lo <= r && r <= enc.hi) refine_to_exclude(&enc, r);
            if (enc.exact()) break;
          }
          if (enc.exact()) {
            exact.push_back(enc.lo);
            sf = sf.deflated(enc.lo);
            restart = true;
            break;
          }
          enclosures.push_back(std::move(enc));
          continue;
        }
        Rat mid = (a + b) / 2;
        if (sf(mid) == 0) {
          exact.push_back(mid);
          sf = sf.deflated(mid);
          restart = true;
          break;
        }
        stack.push_back({{a, mid}, chain.count_in(a, mid)});
        stack.push_back({{mid, b}, chain.count_in(mid, b)});
      }
    }
  }

  std::vector<IsolatedRoot> out;
  std::sort(exact.begin(), exact.end());
  exact.erase(std::unique(exact.begin(), exact.end()), exact.end());
  for (const Rat& r : exact) {
    IsolatedRoot ir;
    ir.exact = true;
    ir.value = r;
    out.push_back(std::move(ir));
  }
  for (RootEnclosure& enc : enclosures) {
    IsolatedRoot ir;
    ir.exact = false;
    ir.enclosure = std::move(enc);
    out.push_back(std::move(ir));
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lower() < y.lower(); });
  return out;
}

}  // namespace rdisc
