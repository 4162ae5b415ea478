// Acceptance gate: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "binomrep/census.hpp"
#include "binomrep/curve.hpp"
#include "binomrep/search.hpp"
#include "oracles.hpp"

using namespace binomrep;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // <= 0: untimed
  std::function<Outcome()> body;
};

Outcome singmaster_family() {
  const auto sols = search(ShiftPair(1, 1), 2000);
  std::vector<Solution> nontrivial;
  for (const auto& s : sols) {
    if (!s.trivial) nontrivial.push_back(s);
  }
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> expected{
      {15, 5}, {104, 39}, {714, 272}, {4895, 1869}};
  if (nontrivial.size() != expected.size()) {
    return {false, std::to_string(nontrivial.size()) + " nontrivial solutions"};
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& s = nontrivial[i];
    if (s.x != Nat(expected[i].first) || s.y != Nat(expected[i].second)) {
      return {false, "unexpected solution (" + s.x.str() + "," + s.y.str() + ")"};
    }
    if (s.value != family_member(i + 1).value) return {false, "value mismatch at i=" + std::to_string(i + 1)};
  }
  if (nontrivial.front().value != Nat(3003)) return {false, "first value " + nontrivial.front().value.str()};
  return {true, "4 solutions, first value 3003"};
}

Outcome bracket_around_phi() {
  const ShiftPair s(1, 1);
  const Interval phi = isolate_zeta(s, parse_rat("1e-12"));
  if (phi.width() > parse_rat("1e-12")) return {false, "enclosure too wide"};
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> sols{{15, 5}, {104, 39}, {714, 272}, {4895, 1869}};
  for (const auto& [x, y] : sols) {
    const Bracket br = bracket(x, y, s);
    if (!(br.lo < phi.lo && phi.hi < br.hi)) {
      return {false, "bracket at (" + std::to_string(x) + "," + std::to_string(y) + ") misses phi"};
    }
  }
  const Bracket b1 = bracket(15, 5, s);
  const Bracket b2 = bracket(104, 39, s);
  if (b1.lo != make_rat(3, 2) || b1.hi != Rat(2)) return {false, "i=1 endpoints"};
  if (b2.lo != make_rat(8, 5) || b2.hi != make_rat(5, 3)) return {false, "i=2 endpoints"};
  return {true, "phi inside all 4 brackets; (3/2,2) and (8/5,5/3) exact"};
}

Outcome oracle_equivalence() {
  for (std::uint64_t a = 1; a <= 3; ++a) {
    for (std::uint64_t b = 1; b <= 3; ++b) {
      const ShiftPair s(a, b);
      if (search_box(s, 600) != brute_search(s, 600)) {
        return {false, "disagreement for (" + std::to_string(a) + "," + std::to_string(b) + ")"};
      }
    }
  }
  return {true, "9 shifts agree on x <= 600"};
}

Outcome census() {
  const auto r3003 = multiplicity(3003);
  if (r3003.count != 8) return {false, "N(3003) = " + std::to_string(r3003.count)};
  const auto r120 = multiplicity(120);
  if (r120.count != 6) return {false, "N(120) = " + std::to_string(r120.count)};
  for (const Occurrence want : {Occurrence{120, 1}, Occurrence{16, 2}, Occurrence{10, 3}}) {
    if (std::find(r120.occurrences.begin(), r120.occurrences.end(), want) == r120.occurrences.end()) {
      return {false, "120 missing (" + want.n.str() + "," + want.k.str() + ")"};
    }
  }
  const auto scan = scan_high_multiplicity(10'000, 8);
  if (scan.size() != 1 || scan.front().t != Nat(3003)) return {false, "scan(1e4, 8) != {3003}"};
  return {true, "N(3003)=8, N(120)=6, scan = {3003}"};
}

Outcome curve_certification() {
  const Certificate c22 = certify(ShiftPair(2, 2));
  if (c22.affine.verdict != Verdict::Yes) return {false, "(2,2) affine " + std::string(to_string(c22.affine.verdict))};
  if (c22.infinity.verdict != Verdict::Yes) {
    return {false, "(2,2) infinity " + std::string(to_string(c22.infinity.verdict))};
  }
  if (c22.genus != std::optional<std::uint64_t>(3)) return {false, "(2,2) genus"};
  const Certificate c11 = certify(ShiftPair(1, 1));
  if (c11.genus != std::optional<std::uint64_t>(0)) return {false, "(1,1) genus"};
  if (c11.finiteness != Finiteness::InfiniteFamily) return {false, "(1,1) finiteness"};
  return {true, "(2,2) nonsingular genus 3; (1,1) genus 0 InfiniteFamily"};
}

Outcome quadratic_factor_sweep() {
  const UniPoly golden{-1, -1, 1};
  int found = 0;
  for (std::uint64_t n = 2; n <= 40; ++n) {
    for (std::uint64_t r = 1; r < n; ++r) {
      const auto f = quad_factor_test(n, r);
      if (f.has_value() != (n == 2 * r)) {
        return {false, "n=" + std::to_string(n) + " r=" + std::to_string(r)};
      }
      if (f) {
        if (*f != golden) return {false, "wrong factor at r=" + std::to_string(r)};
        ++found;
      }
    }
  }
  return {true, std::to_string(found) + " factors, all x^2-x-1 at n=2r"};
}

Outcome intersection() {
  const auto common = intersect_curves(ShiftPair(104, 1), ShiftPair(110, 2), 200);
  const std::pair<Nat, Nat> want{120, 1};
  if (std::find(common.begin(), common.end(), want) == common.end()) return {false, "(120,1) missing"};
  return {true, std::to_string(common.size()) + " common points, includes (120,1)"};
}

Outcome identity_suites() {
  const long x_max = 600;
  const auto rows = oracle::pascal_rows(x_max);
  long checked = 0;
  for (long a = 1; a <= 3; ++a) {
    for (long b = 1; b <= 3; ++b) {
      const ShiftPair s(a, b);
      for (long x = 0; x <= x_max; ++x) {
        for (long y = a + 1; y <= x; ++y) {
          const bool direct = oracle::entry(rows, x, y) == oracle::entry(rows, x - a, y + b);
          if (ratio_identity_check(x, y, s) != direct) {
            return {false, "ratio identity at (" + std::to_string(x) + "," + std::to_string(y) + ")"};
          }
          ++checked;
        }
      }
    }
  }
  std::mt19937_64 gen(20261014);
  for (int t = 0; t < 500; ++t) {
    const long n = std::uniform_int_distribution<long>(0, 100)(gen);
    const long k = std::uniform_int_distribution<long>(0, n)(gen);
    const long r = std::uniform_int_distribution<long>(0, n)(gen);
    if (!row_expansion_check(n, k, r)) return {false, "row expansion at " + std::to_string(n)};
  }
  return {true, std::to_string(checked) + " ratio identities, 500 row expansions"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "singmaster family", 1.0, singmaster_family},
      {2, "bracket around phi", 0, bracket_around_phi},
      {3, "search vs brute force", 60.0, oracle_equivalence},
      {4, "census", 5.0, census},
      {5, "curve certification", 10.0, curve_certification},
      {6, "quadratic factor sweep", 5.0, quadratic_factor_sweep},
      {7, "curve intersection", 0, intersection},
      {8, "identity suites", 0, identity_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o = {false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s"};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %d %-24s %7.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
