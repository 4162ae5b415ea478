#include "binomrep/ratio.hpp"

#include <string>

namespace binomrep {

ShiftPair::ShiftPair(std::uint64_t a, std::uint64_t b) : a_(a), b_(b) {
  if (a == 0 || b == 0) {
    throw PreconditionViolated("shift pair requires a >= 1 and b >= 1 (got a=" + std::to_string(a) +
                               ", b=" + std::to_string(b) + ")");
  }
}

bool RatioList::strictly_decreasing() const {
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    if (!(ratios[i] < ratios[i - 1])) return false;
  }
  return true;
}

Rat RatioList::product() const {
  Rat p = 1;
  for (const auto& r : ratios) p *= r;
  return p;
}

UniPoly zeta_poly(const ShiftPair& shift) {
  return UniPoly::monomial(1, shift.degree()) - UniPoly{1, 1}.pow(shift.a());
}

Interval isolate_zeta(const ShiftPair& shift, const Rat& eps) {
  if (sgn(eps) <= 0) throw PreconditionViolated("isolate_zeta: eps must be positive");
  const UniPoly p = zeta_poly(shift);
  Int right;
  mpz_ui_pow_ui(right.get_mpz_t(), 2, shift.degree());
  Interval iv{Rat(1), Rat(right)};
  if (p.sign_at(iv.lo) >= 0 || p.sign_at(iv.hi) <= 0) {
    throw InternalError("isolate_zeta: no sign change on the initial bracket");
  }
  while (iv.width() > eps) {
    Rat mid = iv.midpoint();
    const int s = p.sign_at(mid);
    if (s == 0) return {mid, mid};
    (s < 0 ? iv.lo : iv.hi) = std::move(mid);
  }
  return iv;
}

Interval zeta_for_search(const ShiftPair& shift, std::uint64_t y_max) {
  return isolate_zeta(shift, make_rat(1, Int(y_max) + shift.b()));
}

int compare_with_zeta(const Rat& q, const ShiftPair& shift) {
  if (sgn(q) <= 0) return -1;
  return zeta_poly(shift).sign_at(q);
}

namespace {

std::vector<Int> positive_divisors(Int n) {
  n = abs(n);
  std::vector<Int> out;
  // Constant and leading terms of zeta_poly are +-1; the general loop is
  // only ever run on tiny magnitudes.
  for (Int d = 1; d * d <= n; ++d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

IrrationalityVerdict irrationality_check(const ShiftPair& shift) {
  const UniPoly p = zeta_poly(shift);
  IrrationalityVerdict out;
  out.irrational = true;
  const auto numerators = positive_divisors(p.coeff(0));
  const auto denominators = positive_divisors(p.leading());
  for (const auto& num : numerators) {
    for (const auto& den : denominators) {
      for (int sign : {1, -1}) {
        const Rat cand = make_rat(Int(num * sign), den);
        const Rat value = p.eval(cand);
        if (sgn(value) == 0) out.irrational = false;
        if (cand.get_den() == 1) out.witnesses.push_back({cand.get_num(), value.get_num()});
      }
    }
  }
  return out;
}

Bracket bracket(const Nat& x, const Nat& y, const ShiftPair& shift) {
  if (y <= Nat(shift.a())) {
    throw PreconditionViolated("bracket requires a < y (a=" + std::to_string(shift.a()) +
                               ", y=" + y.str() + ")");
  }
  const Int& xv = x.value();
  const Int& yv = y.value();
  const Int a(shift.a());
  const Int b(shift.b());
  return {make_rat(Int(xv - a - yv - b + 1), Int(yv + b)), make_rat(Int(xv - yv), Int(yv - a + 1))};
}

RatioList successive_ratios(const Nat& x, const Nat& y, const ShiftPair& shift) {
  if (x < y) throw PreconditionViolated("successive_ratios requires x >= y");
  if (y < Nat(shift.a())) throw PreconditionViolated("successive_ratios requires y >= a");
  const Int diff = x.value() - y.value();
  const Int base = y.value() - shift.a();
  RatioList out;
  out.ratios.reserve(shift.degree());
  for (std::uint64_t i = 1; i <= shift.degree(); ++i) {
    out.ratios.push_back(make_rat(Int(diff - i + 1), Int(base + i)));
  }
  return out;
}

bool ratio_identity_check(const Nat& x, const Nat& y, const ShiftPair& shift) {
  if (y <= Nat(shift.a())) throw PreconditionViolated("ratio_identity_check requires y > a");
  if (x < y) throw PreconditionViolated("ratio_identity_check requires x >= y");
  const RatioList r = successive_ratios(x, y, shift);
  const std::uint64_t a = shift.a();

  Rat prefix = 1;
  Rat left = 1;
  Int row_coeff = 1;  // C(a, j)
  for (std::uint64_t j = 1; j <= a; ++j) {
    prefix *= r.ratios[j - 1];
    row_coeff = row_coeff * (a - j + 1) / j;
    left += row_coeff * prefix;
  }
  Rat right = prefix;
  for (std::uint64_t j = a + 1; j <= shift.degree(); ++j) right *= r.ratios[j - 1];
  return left == right;
}

bool row_expansion_check(const Nat& n, const Nat& k, const Nat& r) {
  if (r > n) throw PreconditionViolated("row_expansion_check requires r <= n");
  const Int lhs = binomial(n, k).value();
  const Int reduced_row = n.value() - r.value();
  Int rhs = 0;
  const std::uint64_t steps = r.to_u64();
  for (std::uint64_t s = 0; s <= steps; ++s) {
    rhs += binomial(r, Nat(s)).value() * binomial_or_zero(reduced_row, Int(k.value() - s));
  }
  return lhs == rhs;
}

GapComparison gap_compare(const Nat& n, const Nat& k, const Nat& q) {
  if (q.is_zero()) throw PreconditionViolated("gap_compare requires q >= 1");
  GapComparison out;
  out.coefficient_gap = make_rat(Int(n.value() + 1), Int((k.value() + 1) * (k.value() + 2)));
  out.convergent_bound = make_rat(3, Int(2 * q.value() * q.value()));
  out.gap_exceeds_bound = out.coefficient_gap > out.convergent_bound;
  return out;
}

}  // namespace binomrep
