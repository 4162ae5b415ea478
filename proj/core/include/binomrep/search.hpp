#pragma once

// Solutions of C(x,y) = C(x-a, y+b): a bracket-pruned search, the
// exhaustive oracle it is checked against, and the Fibonacci family of
// the (1,1) equation.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "binomrep/exact.hpp"
#include "binomrep/ratio.hpp"

namespace binomrep {

struct Solution {
  ShiftPair shift;
  Nat x;
  Nat y;
  Nat value;     // C(x,y) = C(x-a,y+b)
  bool trivial;  // value <= 1

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Orders by (y, x), then by shift.
bool solution_less(const Solution& l, const Solution& r);

/// Builds a Solution after verifying it; throws PreconditionViolated otherwise.
Solution make_solution(const ShiftPair& shift, const Nat& x, const Nat& y);

/// C(x,y) == C(x-a,y+b) for x >= y. Uses the factored product form when
/// x-a >= y+b and a direct binomial comparison otherwise (C(m,k) = 0 for m < 0).
bool equality_check(const Nat& x, const Nat& y, const ShiftPair& shift);

struct Window {
  Nat lo;
  Nat hi;
  bool empty() const { return hi < lo; }
};

/// Range of x allowed by the bracket for this y, given an enclosure of zeta.
/// Throws PreconditionViolated when y <= a.
Window candidate_window(const Nat& y, const ShiftPair& shift, const Interval& zeta);

struct SearchOptions {
  unsigned workers = 1;
  /// Stop every scan at this x; nullopt scans the full y range.
  std::optional<std::uint64_t> x_cap;
};

/// All solutions with 0 <= y <= y_max, sorted by (y, x).
std::vector<Solution> search(const ShiftPair& shift, std::uint64_t y_max, const SearchOptions& opts = {});

/// All solutions with 0 <= y <= x <= x_max, sorted by (y, x).
std::vector<Solution> search_box(const ShiftPair& shift, std::uint64_t x_max, unsigned workers = 1);

/// Exhaustive scan of 0 <= y <= x <= x_max, sorted by (y, x).
std::vector<Solution> brute_search(const ShiftPair& shift, std::uint64_t x_max);

struct FamilyMember {
  std::uint64_t i;
  Nat n;
  Nat k;
  Nat value;  // C(n+1,k+1)
};

/// n = F_{2i+2} F_{2i+3} - 1, k = F_{2i} F_{2i+3} - 1.
std::pair<Nat, Nat> family_coordinates(std::uint64_t i);

/// Full member including its binomial value. The value has roughly n bits,
/// so this is only practical for small i (i <= 6 takes well under a second).
FamilyMember family_member(std::uint64_t i);

/// C(n+1,k+1) == C(n,k+2), decided exactly by the (1,1) product form.
bool family_identity_holds(const Nat& n, const Nat& k);

/// Conjunction of family_identity_holds over 1 <= i <= i_max.
bool family_verify(std::uint64_t i_max);

/// If q = F_{j+1}/F_j for some j >= 1, returns j.
std::optional<std::uint64_t> fibonacci_quotient_index(const Rat& q);

struct ConvergentBracket {
  Bracket bracket;
  std::optional<std::uint64_t> lo_index;
  std::optional<std::uint64_t> hi_index;
  bool straddles_phi = false;
  bool holds = false;
};

ConvergentBracket convergent_bracket(std::uint64_t i);

/// Both bracket endpoints of the i-th family solution are consecutive
/// Fibonacci quotients and straddle the golden ratio.
bool convergent_bracket_check(std::uint64_t i);

}  // namespace binomrep
