#pragma once

// The limiting ratio zeta of C(x,y) = C(x-a, y+b): its defining polynomial,
// rational root enclosures, the bracket every interior solution obeys, and
// the exact ratio identity that characterizes solutions.

#include <cstdint>
#include <utility>
#include <vector>

#include "binomrep/exact.hpp"
#include "binomrep/poly.hpp"

namespace binomrep {

/// Shift parameters (a, b) of C(x,y) = C(x-a, y+b). Both must be >= 1.
class ShiftPair {
 public:
  ShiftPair(std::uint64_t a, std::uint64_t b);

  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t b() const noexcept { return b_; }
  std::uint64_t degree() const noexcept { return a_ + b_; }

  friend bool operator==(const ShiftPair&, const ShiftPair&) = default;
  friend auto operator<=>(const ShiftPair&, const ShiftPair&) = default;

 private:
  std::uint64_t a_;
  std::uint64_t b_;
};

struct Interval {
  Rat lo;
  Rat hi;

  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rat& q) const { return lo <= q && q <= hi; }
};

struct RatioList {
  std::vector<Rat> ratios;

  bool strictly_decreasing() const;
  Rat product() const;
};

/// t^(a+b) - (t+1)^a.
UniPoly zeta_poly(const ShiftPair& shift);

/// Bisection enclosure of the unique positive root of zeta_poly with
/// width <= eps. Endpoints carry opposite signs (lo negative, hi positive).
Interval isolate_zeta(const ShiftPair& shift, const Rat& eps);

/// Enclosure tight enough that candidate windows for y <= y_max stay
/// O(a+b) wide: width * (y_max + b) <= 1.
Interval zeta_for_search(const ShiftPair& shift, std::uint64_t y_max);

/// Exact comparison of a positive rational against zeta: returns -1, 0, +1
/// as q < zeta, q == zeta, q > zeta. Signs of zeta_poly decide it because
/// zeta is its only positive root and the value at 0 is negative.
int compare_with_zeta(const Rat& q, const ShiftPair& shift);

struct RationalRootWitness {
  Int candidate;
  Int value;  // zeta_poly(candidate), nonzero for every candidate
};

struct IrrationalityVerdict {
  bool irrational = false;
  std::vector<RationalRootWitness> witnesses;
};

/// Rational root test on zeta_poly: every candidate p/q with p | c0, q | lc
/// is evaluated and must be nonzero.
IrrationalityVerdict irrationality_check(const ShiftPair& shift);

struct Bracket {
  Rat lo;  // (x-a-y-b+1)/(y+b)
  Rat hi;  // (x-y)/(y-a+1)
};

/// Throws PreconditionViolated when y <= a.
Bracket bracket(const Nat& x, const Nat& y, const ShiftPair& shift);

/// r_i = (x-y-i+1)/(y-a+i), i = 1..a+b. Throws when x < y or y < a.
RatioList successive_ratios(const Nat& x, const Nat& y, const ShiftPair& shift);

/// Evaluates sum_{j<=a} C(a,j) r_1..r_j against r_1..r_{a+b} exactly.
/// Requires y > a and x >= y.
bool ratio_identity_check(const Nat& x, const Nat& y, const ShiftPair& shift);

/// C(n,k) == sum_{s=0}^{r} C(r,s) C(n-r, k-s). Requires r <= n.
bool row_expansion_check(const Nat& n, const Nat& k, const Nat& r);

struct GapComparison {
  Rat coefficient_gap;  // (n+1)/((k+1)(k+2))
  Rat convergent_bound; // 3/(2 q^2)
  bool gap_exceeds_bound = false;
};

GapComparison gap_compare(const Nat& n, const Nat& k, const Nat& q);

}  // namespace binomrep
