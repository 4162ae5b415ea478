#include "binomrep/census.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "binomrep/search.hpp"

namespace binomrep {

namespace {

void add_edges(MultiplicityRecord& rec) {
  const Nat& t = rec.t;
  rec.occurrences.push_back({t, Nat(1)});
  if (t != Nat(2)) rec.occurrences.push_back({t, t - Nat(1)});
}

void finalize(MultiplicityRecord& rec) {
  std::sort(rec.occurrences.begin(), rec.occurrences.end());
  rec.occurrences.erase(std::unique(rec.occurrences.begin(), rec.occurrences.end()), rec.occurrences.end());
  rec.count = rec.occurrences.size();
}

using Tally = std::map<Nat, std::vector<Occurrence>>;

// Interior entries C(n,k), 2 <= k <= n/2, of rows [row_begin, row_end) that do not exceed t_max.
Tally tally_rows(const Nat& t_max, std::uint64_t row_begin, std::uint64_t row_end) {
  Tally tally;
  Int entry;
  for (std::uint64_t n = row_begin; n < row_end; ++n) {
    entry = n;  // C(n,1)
    for (std::uint64_t k = 2; 2 * k <= n; ++k) {
      entry *= n - k + 1;
      mpz_divexact_ui(entry.get_mpz_t(), entry.get_mpz_t(), k);
      if (entry > t_max.value()) break;
      auto& occ = tally[Nat(entry)];
      occ.push_back({Nat(n), Nat(k)});
      if (2 * k != n) occ.push_back({Nat(n), Nat(n - k)});
    }
  }
  return tally;
}

}  // namespace

MultiplicityRecord multiplicity(const Nat& t) {
  if (t <= Nat(1)) throw DomainError("N(t) is only finite for t >= 2 (got t=" + t.str() + ")");
  MultiplicityRecord rec{t, 0, {}};
  add_edges(rec);
  for (std::uint64_t k = 2;; ++k) {
    const Nat kk(k);
    if (binomial(kk + kk, kk) > t) break;
    // C(n,k) is increasing in n on [2k, t].
    Nat lo = kk + kk;
    Nat hi = t;
    while (lo <= hi) {
      const Nat mid = (lo + hi) / Nat(2);
      const Nat value = binomial(mid, kk);
      if (value == t) {
        rec.occurrences.push_back({mid, kk});
        if (mid != kk + kk) rec.occurrences.push_back({mid, mid - kk});
        break;
      }
      if (value < t) {
        lo = mid + Nat(1);
      } else {
        if (mid.is_zero()) break;
        hi = mid - Nat(1);
      }
    }
  }
  finalize(rec);
  return rec;
}

std::vector<MultiplicityRecord> scan_high_multiplicity(const Nat& t_max, std::uint64_t m_min,
                                                       unsigned workers) {
  if (t_max < Nat(2)) throw PreconditionViolated("scan_high_multiplicity requires t_max >= 2");
  if (m_min < 3) throw PreconditionViolated("scan_high_multiplicity requires m_min >= 3");

  // Rows with C(n,2) <= t_max hold every interior entry in range.
  std::uint64_t row_end = 4;
  while (binomial(Nat(row_end), Nat(2)) <= t_max) ++row_end;

  Tally tally;
  workers = std::max(1U, workers);
  if (workers == 1 || row_end < 64) {
    tally = tally_rows(t_max, 4, row_end);
  } else {
    // Later rows hold fewer in-range entries; equal row counts are a fair split.
    std::vector<std::future<Tally>> parts;
    const std::uint64_t span = row_end - 4;
    const std::uint64_t chunk = (span + workers - 1) / workers;
    for (std::uint64_t begin = 4; begin < row_end; begin += chunk) {
      const std::uint64_t end = std::min(begin + chunk, row_end);
      parts.push_back(std::async(std::launch::async, [&t_max, begin, end] { return tally_rows(t_max, begin, end); }));
    }
    for (auto& part : parts) {
      for (auto& [t, occ] : part.get()) {
        auto& dst = tally[t];
        dst.insert(dst.end(), occ.begin(), occ.end());
      }
    }
  }

  std::vector<MultiplicityRecord> out;
  for (auto& [t, occ] : tally) {
    MultiplicityRecord rec{t, 0, std::move(occ)};
    add_edges(rec);
    finalize(rec);
    if (rec.count >= m_min) out.push_back(std::move(rec));
  }
  return out;
}

std::vector<std::pair<Nat, Nat>> intersect_curves(const ShiftPair& s1, const ShiftPair& s2,
                                                  std::uint64_t x_max, unsigned workers) {
  if (s1 == s2) throw PreconditionViolated("intersect_curves requires two distinct shifts");
  std::vector<std::pair<Nat, Nat>> first, second;
  for (const auto& s : search_box(s1, x_max, workers)) first.emplace_back(s.y, s.x);
  for (const auto& s : search_box(s2, x_max, workers)) second.emplace_back(s.y, s.x);
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  std::vector<std::pair<Nat, Nat>> common;
  std::set_intersection(first.begin(), first.end(), second.begin(), second.end(), std::back_inserter(common));
  for (auto& p : common) std::swap(p.first, p.second);
  return common;
}

}  // namespace binomrep
