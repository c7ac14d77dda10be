#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rdisc/rational.hpp"

namespace rdisc {

/// Univariate polynomial with exact rational coefficients, ascending degree.
class Poly {
 public:
  Poly() = default;  // zero polynomial
  explicit Poly(std::vector<Rat> coeffs);

  /// Monic product of (X - r) over the given roots.
  static Poly from_roots(std::span<const Rat> roots);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& leading() const;

  Rat operator()(const Rat& x) const;  // Horner
  Poly derivative() const;

  Poly operator-() const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }

  /// Euclidean division a = q*b + r with deg r < deg b. b must be nonzero.
  static void divrem(const Poly& a, const Poly& b, Poly* quotient, Poly* remainder);

  /// Monic greatest common divisor; gcd(p, 0) is monic p.
  static Poly gcd(Poly a, Poly b);

  /// this / gcd(this, this'), made monic. Same real roots, all simple.
  Poly squarefree_part() const;

  /// Exact division by (X - root); root must actually be a root.
  Poly deflated(const Rat& root) const;

  /// Divides by |leading coefficient| (positive scaling, signs preserved).
  Poly normalized() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Sturm chain over a square-free polynomial; counts distinct real roots.
class SturmChain {
 public:
  explicit SturmChain(Poly squarefree);

  /// Number of roots in the open interval (a, b); requires p(a), p(b) != 0.
  int count_in(const Rat& a, const Rat& b) const;

 private:
  int variations_at(const Rat& x) const;
  std::vector<Poly> chain_;
};

/// Bracket around a single real root: sf(lo) and sf(hi) have opposite signs
/// unless lo == hi, in which case the root is the exact rational lo.
struct RootEnclosure {
  Rat lo, hi;
  Poly sf;  // square-free witness used for refinement
  bool exact() const { return lo == hi; }
};

struct IsolatedRoot {
  bool exact = false;
  Rat value;                              // set when exact
  std::optional<RootEnclosure> enclosure; // set otherwise
  const Rat& lower() const { return exact ? value : enclosure->lo; }
  const Rat& upper() const { return exact ? value : enclosure->hi; }
};

const Rat& default_root_eps();  // 2^-40

/// All real roots of p in [0,1], sorted ascending. Candidates (plus 0 and 1)
/// are tested by exact evaluation first and reported as exact points; small
/// rational roots are detected by a bounded rational-root scan; remaining
/// roots come back as disjoint enclosures of width <= eps holding exactly one
/// root each. Throws std::invalid_argument on the zero polynomial.
std::vector<IsolatedRoot> isolate_roots(const Poly& p, const Rat& eps,
                                        std::span<const Rat> candidates = {});

/// Bisects until width <= max_width. May collapse to an exact point when a
/// midpoint lands on the root.
void refine_enclosure(RootEnclosure* enc, const Rat& max_width);

/// Bisects until the point lies strictly outside [lo, hi]. The point must not
/// be a root of enc->sf.
void refine_to_exclude(RootEnclosure* enc, const Rat& point);

}  // namespace rdisc
