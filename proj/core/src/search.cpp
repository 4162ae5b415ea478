#include "binomrep/search.hpp"

#include <algorithm>
#include <future>
#include <string>

namespace binomrep {

bool solution_less(const Solution& l, const Solution& r) {
  if (l.y != r.y) return l.y < r.y;
  if (l.x != r.x) return l.x < r.x;
  return l.shift < r.shift;
}

Solution make_solution(const ShiftPair& shift, const Nat& x, const Nat& y) {
  if (x < y || !equality_check(x, y, shift)) {
    throw PreconditionViolated("(" + x.str() + ", " + y.str() + ") is not a solution for (a,b)=(" +
                               std::to_string(shift.a()) + "," + std::to_string(shift.b()) + ")");
  }
  Nat value = binomial(x, y);
  const bool trivial = value <= Nat(1);
  return {shift, x, y, std::move(value), trivial};
}

bool equality_check(const Nat& x, const Nat& y, const ShiftPair& shift) {
  if (x < y) throw PreconditionViolated("equality_check requires x >= y");
  const Int& xv = x.value();
  const Int& yv = y.value();
  const Int shifted_row = xv - shift.a();
  const Int shifted_col = yv + shift.b();
  if (shifted_row >= shifted_col) {
    const Int lhs = falling_factorial(Int(xv - yv), shift.degree());
    const Int rhs = falling_factorial(xv, shift.a()) * falling_factorial(shifted_col, shift.b());
    return lhs == rhs;
  }
  return binomial(x, y).value() == binomial_or_zero(shifted_row, shifted_col);
}

namespace {

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Nat clamp_nat(const Int& v) { return sgn(v) < 0 ? Nat(0) : Nat(v); }

// y <= a: the bracket does not apply. Scan x upward from the first row
// where C(x-a, y+b) is nonzero while tracking both binomials exactly. The
// ratio C(x-a,y+b)/C(x,y) is increasing in x on this region, so once it
// passes 1 and keeps increasing no further equality can occur.
void scan_cutoff_row(const ShiftPair& shift, std::uint64_t y, std::optional<std::uint64_t> x_cap,
                     std::vector<Solution>& out) {
  const std::uint64_t a = shift.a();
  const std::uint64_t b = shift.b();
  const std::uint64_t required_streak = 2 * (a + b);

  std::uint64_t x = y + a + b;
  Int upper = 1;                              // C(x-a, y+b)
  Int lower = binomial(Nat(x), Nat(y)).value();  // C(x, y)
  std::uint64_t streak = 0;
  Int next_upper, next_lower;

  while (!x_cap || x <= *x_cap) {
    if (upper == lower) out.push_back(make_solution(shift, Nat(x), Nat(y)));
    if (upper > lower && streak >= required_streak) break;

    const std::uint64_t nx = x + 1;
    next_upper = upper * (nx - a);
    mpz_divexact_ui(next_upper.get_mpz_t(), next_upper.get_mpz_t(), nx - a - y - b);
    next_lower = lower * nx;
    mpz_divexact_ui(next_lower.get_mpz_t(), next_lower.get_mpz_t(), nx - y);

    const bool increased = next_upper * lower > upper * next_lower;
    streak = increased ? streak + 1 : 0;
    upper.swap(next_upper);
    lower.swap(next_lower);
    x = nx;
  }
}

void scan_interior_rows(const ShiftPair& shift, std::uint64_t y_begin, std::uint64_t y_end,
                        const Interval& zeta, std::optional<std::uint64_t> x_cap,
                        std::vector<Solution>& out) {
  for (std::uint64_t y = y_begin; y < y_end; ++y) {
    const Window w = candidate_window(Nat(y), shift, zeta);
    std::uint64_t lo = std::max(w.lo.fits_u64() ? w.lo.to_u64() : UINT64_MAX, y + shift.degree());
    std::uint64_t hi = w.hi.to_u64();
    if (x_cap) hi = std::min(hi, *x_cap);
    for (std::uint64_t x = lo; x <= hi; ++x) {
      if (equality_check(Nat(x), Nat(y), shift)) out.push_back(make_solution(shift, Nat(x), Nat(y)));
    }
  }
}

}  // namespace

Window candidate_window(const Nat& y, const ShiftPair& shift, const Interval& zeta) {
  if (y <= Nat(shift.a())) {
    throw PreconditionViolated("candidate_window requires y > a (a=" + std::to_string(shift.a()) +
                               ", y=" + y.str() + ")");
  }
  const Int& yv = y.value();
  const Rat lo = zeta.lo * Int(yv - shift.a() + 1) + yv;
  const Rat hi = zeta.hi * Int(yv + shift.b()) + Int(yv + shift.degree() - 1);
  return {clamp_nat(ceil_rat(lo)), clamp_nat(floor_rat(hi))};
}

std::vector<Solution> search(const ShiftPair& shift, std::uint64_t y_max, const SearchOptions& opts) {
  if (y_max < 1) throw PreconditionViolated("search requires y_max >= 1");
  std::vector<Solution> out;

  const std::uint64_t cutoff_end = std::min<std::uint64_t>(shift.a(), y_max);
  for (std::uint64_t y = 0; y <= cutoff_end; ++y) scan_cutoff_row(shift, y, opts.x_cap, out);

  if (y_max > shift.a()) {
    const Interval zeta = zeta_for_search(shift, y_max);
    const std::uint64_t first = shift.a() + 1;
    const std::uint64_t count = y_max - shift.a();
    const unsigned workers = std::max(1U, std::min<unsigned>(opts.workers, static_cast<unsigned>(
                                                                  std::min<std::uint64_t>(count, 1024))));
    if (workers == 1) {
      scan_interior_rows(shift, first, y_max + 1, zeta, opts.x_cap, out);
    } else {
      std::vector<std::future<std::vector<Solution>>> parts;
      const std::uint64_t chunk = (count + workers - 1) / workers;
      for (std::uint64_t begin = first; begin <= y_max; begin += chunk) {
        const std::uint64_t end = std::min(begin + chunk, y_max + 1);
        parts.push_back(std::async(std::launch::async, [&, begin, end] {
          std::vector<Solution> local;
          scan_interior_rows(shift, begin, end, zeta, opts.x_cap, local);
          return local;
        }));
      }
      for (auto& part : parts) {
        auto local = part.get();
        out.insert(out.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
      }
    }
  }

  std::sort(out.begin(), out.end(), solution_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Solution> search_box(const ShiftPair& shift, std::uint64_t x_max, unsigned workers) {
  if (x_max < shift.degree()) return {};
  // x >= y + a + b for every solution, which bounds y inside the box.
  const std::uint64_t y_max = std::max<std::uint64_t>(1, x_max - shift.degree());
  auto out = search(shift, y_max, {workers, x_max});
  std::erase_if(out, [&](const Solution& s) { return s.x > Nat(x_max); });
  return out;
}

std::vector<Solution> brute_search(const ShiftPair& shift, std::uint64_t x_max) {
  std::vector<Solution> out;
  for (std::uint64_t x = 0; x <= x_max; ++x) {
    for (std::uint64_t y = 0; y <= x; ++y) {
      if (equality_check(Nat(x), Nat(y), shift)) out.push_back(make_solution(shift, Nat(x), Nat(y)));
    }
  }
  std::sort(out.begin(), out.end(), solution_less);
  return out;
}

std::pair<Nat, Nat> family_coordinates(std::uint64_t i) {
  if (i < 1) throw PreconditionViolated("family index must be >= 1");
  const Nat f2i = fibonacci(2 * i);
  const Nat f2i2 = fibonacci(2 * i + 2);
  const Nat f2i3 = fibonacci(2 * i + 3);
  return {f2i2 * f2i3 - Nat(1), f2i * f2i3 - Nat(1)};
}

FamilyMember family_member(std::uint64_t i) {
  auto [n, k] = family_coordinates(i);
  Nat value = binomial(n + Nat(1), k + Nat(1));
  return {i, std::move(n), std::move(k), std::move(value)};
}

bool family_identity_holds(const Nat& n, const Nat& k) {
  return equality_check(n + Nat(1), k + Nat(1), ShiftPair(1, 1));
}

bool family_verify(std::uint64_t i_max) {
  if (i_max < 1) throw PreconditionViolated("family_verify requires i_max >= 1");
  for (std::uint64_t i = 1; i <= i_max; ++i) {
    auto [n, k] = family_coordinates(i);
    if (!family_identity_holds(n, k)) return false;
  }
  return true;
}

std::optional<std::uint64_t> fibonacci_quotient_index(const Rat& q) {
  if (sgn(q) <= 0) return std::nullopt;
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  Int prev = 1;  // F_1
  Int cur = 1;   // F_2
  for (std::uint64_t j = 1; prev <= den; ++j) {
    if (prev == den && cur == num) return j;
    Int next = prev + cur;
    prev.swap(cur);
    cur.swap(next);
  }
  return std::nullopt;
}

ConvergentBracket convergent_bracket(std::uint64_t i) {
  const ShiftPair golden(1, 1);
  auto [n, k] = family_coordinates(i);
  ConvergentBracket out{bracket(n + Nat(1), k + Nat(1), golden), {}, {}, false, false};
  out.lo_index = fibonacci_quotient_index(out.bracket.lo);
  out.hi_index = fibonacci_quotient_index(out.bracket.hi);
  out.straddles_phi = compare_with_zeta(out.bracket.lo, golden) < 0 &&
                      compare_with_zeta(out.bracket.hi, golden) > 0;
  out.holds = out.lo_index && out.hi_index && out.straddles_phi;
  return out;
}

bool convergent_bracket_check(std::uint64_t i) { return convergent_bracket(i).holds; }

}  // namespace binomrep
