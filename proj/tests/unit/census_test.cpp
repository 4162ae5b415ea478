#include <gtest/gtest.h>

#include <algorithm>

#include "binomrep/census.hpp"
#include "binomrep/search.hpp"
#include "oracles.hpp"

using namespace binomrep;

namespace {

using Pairs = std::vector<std::pair<long, long>>;

Pairs as_pairs(const std::vector<Occurrence>& occ) {
  Pairs out;
  for (const auto& o : occ) out.emplace_back(o.n.to_u64(), o.k.to_u64());
  return out;
}

std::vector<long> values(const std::vector<MultiplicityRecord>& recs) {
  std::vector<long> out;
  for (const auto& r : recs) out.push_back(static_cast<long>(r.t.to_u64()));
  return out;
}

bool is_central_binomial(long t) {
  for (std::uint64_t m = 1;; ++m) {
    const Nat c = binomial(2 * m, m);
    if (c == Nat(t)) return true;
    if (c > Nat(t)) return false;
  }
}

}  // namespace

TEST(Multiplicity, Examples) {
  const auto r3003 = multiplicity(3003);
  EXPECT_EQ(r3003.count, 8U);
  EXPECT_EQ(as_pairs(r3003.occurrences),
            (Pairs{{14, 6}, {14, 8}, {15, 5}, {15, 10}, {78, 2}, {78, 76}, {3003, 1}, {3003, 3002}}));

  const auto r120 = multiplicity(120);
  EXPECT_EQ(r120.count, 6U);
  const Pairs p120 = as_pairs(r120.occurrences);
  for (auto want : {std::pair{120L, 1L}, {16L, 2L}, {10L, 3L}}) {
    EXPECT_NE(std::find(p120.begin(), p120.end(), want), p120.end());
  }

  EXPECT_EQ(multiplicity(6).count, 3U);
  EXPECT_EQ(multiplicity(2).count, 1U);
  EXPECT_EQ(multiplicity(7).count, 2U);
}

TEST(Multiplicity, RejectsTrivialValues) {
  EXPECT_THROW(multiplicity(0), DomainError);
  EXPECT_THROW(multiplicity(1), DomainError);
}

TEST(Multiplicity, AgreesWithTriangleTally) {
  const auto tally = oracle::triangle_tally(5000);
  for (long t = 2; t <= 5000; ++t) {
    const auto rec = multiplicity(t);
    const auto it = tally.find(t);
    Pairs expected = it == tally.end() ? Pairs{} : it->second;
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(as_pairs(rec.occurrences), expected) << t;
    ASSERT_EQ(rec.count, expected.size());
  }
}

TEST(Multiplicity, ParityAndReevaluation) {
  for (long t = 2; t <= 3000; ++t) {
    const auto rec = multiplicity(t);
    ASSERT_EQ(rec.count % 2 == 1, is_central_binomial(t)) << t;
    for (const auto& o : rec.occurrences) ASSERT_EQ(binomial(o.n, o.k), Nat(t));
    ASSERT_TRUE(std::is_sorted(rec.occurrences.begin(), rec.occurrences.end()));
  }
  // Far out on the edge of the triangle.
  const Nat big = binomial(1000, 3);
  const auto rec = multiplicity(big);
  EXPECT_GE(rec.count, 4U);
  for (const auto& o : rec.occurrences) EXPECT_EQ(binomial(o.n, o.k), big);
}

TEST(ScanHighMultiplicity, Examples) {
  EXPECT_EQ(values(scan_high_multiplicity(10'000, 8)), (std::vector<long>{3003}));
  EXPECT_EQ(values(scan_high_multiplicity(200, 6)), (std::vector<long>{120}));
  const auto wide = values(scan_high_multiplicity(100'000, 6));
  for (long t : {120L, 210L, 1540L, 3003L, 7140L}) {
    EXPECT_NE(std::find(wide.begin(), wide.end(), t), wide.end()) << t;
  }
}

TEST(ScanHighMultiplicity, AgreesWithTriangleTally) {
  const auto tally = oracle::triangle_tally(5000);
  for (std::uint64_t m_min : {3U, 4U, 5U, 6U}) {
    std::vector<long> expected;
    for (const auto& [t, occ] : tally) {
      if (occ.size() >= m_min) expected.push_back(t);
    }
    EXPECT_EQ(values(scan_high_multiplicity(5000, m_min)), expected) << m_min;
    EXPECT_EQ(values(scan_high_multiplicity(5000, m_min, 4)), expected) << m_min;
  }
}

TEST(ScanHighMultiplicity, Preconditions) {
  EXPECT_THROW(scan_high_multiplicity(1, 3), PreconditionViolated);
  EXPECT_THROW(scan_high_multiplicity(100, 2), PreconditionViolated);
}

// Three left-half occurrences of one value put the deepest one on two
// distinct shift curves at once.
TEST(Intersect, HighMultiplicityValuesAreCurveIntersections) {
  for (const auto& rec : scan_high_multiplicity(2000, 6)) {
    std::vector<Occurrence> left;
    for (const auto& o : rec.occurrences) {
      if (Nat(2) * o.k <= o.n) left.push_back(o);
    }
    ASSERT_GE(left.size(), 3U);
    std::sort(left.begin(), left.end(), [](const auto& l, const auto& r) { return l.n > r.n; });
    const auto& deep = left[0];
    const ShiftPair s1((deep.n - left[1].n).to_u64(), (left[1].k - deep.k).to_u64());
    const ShiftPair s2((deep.n - left[2].n).to_u64(), (left[2].k - deep.k).to_u64());
    const auto common = intersect_curves(s1, s2, deep.n.to_u64());
    EXPECT_NE(std::find(common.begin(), common.end(), std::pair{deep.n, deep.k}), common.end())
        << rec.t.str();
  }
}

TEST(Intersect, Examples) {
  const auto common = intersect_curves(ShiftPair(104, 1), ShiftPair(110, 2), 200);
  EXPECT_NE(std::find(common.begin(), common.end(), std::pair<Nat, Nat>{120, 1}), common.end());
  EXPECT_THROW(intersect_curves(ShiftPair(1, 1), ShiftPair(1, 1), 10), PreconditionViolated);
}

TEST(Intersect, MatchesBruteIntersection) {
  const ShiftPair s1(1, 1);
  const ShiftPair s2(1, 2);
  std::vector<std::pair<Nat, Nat>> expected;
  for (const auto& a : brute_search(s1, 300)) {
    for (const auto& b : brute_search(s2, 300)) {
      if (a.x == b.x && a.y == b.y) expected.emplace_back(a.x, a.y);
    }
  }
  EXPECT_EQ(intersect_curves(s1, s2, 300), expected);
  const auto rows = oracle::pascal_rows(300);
  for (const auto& [x, y] : expected) {
    const long xl = static_cast<long>(x.to_u64());
    const long yl = static_cast<long>(y.to_u64());
    EXPECT_EQ(oracle::entry(rows, xl, yl), oracle::entry(rows, xl - 1, yl + 1));
    EXPECT_EQ(oracle::entry(rows, xl, yl), oracle::entry(rows, xl - 1, yl + 2));
  }
}
