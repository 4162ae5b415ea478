#pragma once

// Multiplicities N(t) in Pascal's triangle and intersections of the
// shift curves, where repeated entries show up.

#include <cstdint>
#include <utility>
#include <vector>

#include "binomrep/exact.hpp"
#include "binomrep/ratio.hpp"

namespace binomrep {

struct Occurrence {
  Nat n;
  Nat k;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

struct MultiplicityRecord {
  Nat t;
  std::uint64_t count = 0;
  std::vector<Occurrence> occurrences;  // sorted by (n, k)
};

/// Exact N(t) with all witnesses. Throws DomainError for t <= 1.
MultiplicityRecord multiplicity(const Nat& t);

/// Every t <= t_max with N(t) >= m_min, ascending. Requires t_max >= 2 and m_min >= 3.
std::vector<MultiplicityRecord> scan_high_multiplicity(const Nat& t_max, std::uint64_t m_min,
                                                       unsigned workers = 1);

/// Common solutions (x, y), 0 <= y <= x <= x_max, of both shift equations,
/// sorted by (y, x). Throws PreconditionViolated when s1 == s2.
std::vector<std::pair<Nat, Nat>> intersect_curves(const ShiftPair& s1, const ShiftPair& s2,
                                                  std::uint64_t x_max, unsigned workers = 1);

}  // namespace binomrep
