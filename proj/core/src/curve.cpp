#include "binomrep/curve.hpp"

namespace binomrep {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(Finiteness f) noexcept {
  switch (f) {
    case Finiteness::ProvenFinite: return "ProvenFinite";
    case Finiteness::InfiniteFamily: return "InfiniteFamily";
    case Finiteness::Open: return "Open";
  }
  return "Open";
}

BiPoly build_curve(const ShiftPair& shift) {
  const BiPoly diff = BiPoly::x() - BiPoly::y();
  BiPoly falling = BiPoly::constant(1);
  for (std::uint64_t r = 0; r < shift.degree(); ++r) falling *= diff - BiPoly::constant(Int(r));
  BiPoly rising = BiPoly::constant(1);
  for (std::uint64_t p = 0; p < shift.a(); ++p) rising *= BiPoly::x() - BiPoly::constant(Int(p));
  for (std::uint64_t q = 1; q <= shift.b(); ++q) rising *= BiPoly::y() + BiPoly::constant(Int(q));
  return falling - rising;
}

BiPoly top_form(const ShiftPair& shift) {
  const auto a = static_cast<std::uint32_t>(shift.a());
  const auto b = static_cast<std::uint32_t>(shift.b());
  return (BiPoly::x() - BiPoly::y()).pow(shift.degree()) - BiPoly::term(1, a, b);
}

BiPoly partial(const BiPoly& p, Var v) { return p.partial(v); }

AffineCheck affine_singular_check(const ShiftPair& shift) {
  const BiPoly f = build_curve(shift);
  const BiPoly fx = f.partial(Var::X);
  const BiPoly fy = f.partial(Var::Y);
  AffineCheck out;
  for (Var eliminated : {Var::Y, Var::X}) {
    EliminationEvidence ev{eliminated, resultant(f, fx, eliminated), resultant(f, fy, eliminated), {}};
    ev.common = gcd(ev.with_fx, ev.with_fy);
    const bool coprime = ev.common.degree() == 0;
    out.evidence.push_back(std::move(ev));
    if (coprime) {
      out.verdict = Verdict::Yes;
      return out;
    }
  }
  out.verdict = Verdict::Inconclusive;
  return out;
}

InfinityCheck infinity_singular_check(const ShiftPair& shift) {
  const BiPoly f = build_curve(shift);
  const int d = static_cast<int>(shift.degree());
  const BiPoly top = f.homogeneous_part(d);
  // At z = 0 the z-partial of the homogenization is the degree d-1 part.
  const std::array<BiPoly, 3> forms = {top.partial(Var::X), top.partial(Var::Y), f.homogeneous_part(d - 1)};

  InfinityCheck out;
  out.vanish_at_x_axis_point = true;
  out.vanish_at_y_axis_point = true;
  const auto edge = static_cast<std::uint32_t>(d - 1);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    out.forms[i] = forms[i].specialize(Var::X, Rat(1));
    if (sgn(forms[i].coeff(edge, 0)) != 0) out.vanish_at_x_axis_point = false;
    if (sgn(forms[i].coeff(0, edge)) != 0) out.vanish_at_y_axis_point = false;
  }
  out.common = gcd(gcd(out.forms[0], out.forms[1]), out.forms[2]);
  const bool no_finite_common_root = out.common.degree() == 0;
  out.verdict = no_finite_common_root && !out.vanish_at_x_axis_point && !out.vanish_at_y_axis_point
                    ? Verdict::Yes
                    : Verdict::Inconclusive;
  return out;
}

Finiteness classify_finiteness(const ShiftPair& shift) {
  if (shift.a() != shift.b()) return Finiteness::ProvenFinite;
  return shift.a() == 1 ? Finiteness::InfiniteFamily : Finiteness::Open;
}

Certificate certify(const ShiftPair& shift) {
  Certificate cert{shift, shift.degree(), affine_singular_check(shift), infinity_singular_check(shift),
                   std::nullopt, false, classify_finiteness(shift)};
  if (cert.affine.verdict == Verdict::Yes && cert.infinity.verdict == Verdict::Yes) {
    const std::uint64_t d = cert.degree;
    cert.genus = (d - 1) * (d - 2) / 2;
    cert.irreducible = true;
  }
  return cert;
}

const std::array<UniPoly, 4>& quadratic_candidates() {
  static const std::array<UniPoly, 4> candidates = {
      UniPoly{1, 1, 1},    // x^2 + x + 1
      UniPoly{1, 3, 1},    // x^2 + 3x + 1
      UniPoly{-1, -1, 1},  // x^2 - x - 1
      UniPoly{-1, 1, 1},   // x^2 + x - 1
  };
  return candidates;
}

std::vector<UniPoly> quad_factor_divisors(std::uint64_t n, std::uint64_t r) {
  if (!(n > r && r >= 1)) throw PreconditionViolated("quad_factor_test requires n > r >= 1");
  const UniPoly p = UniPoly::monomial(1, n) - UniPoly{1, 1}.pow(r);
  std::vector<UniPoly> out;
  for (const auto& cand : quadratic_candidates()) {
    const auto division = divide(p, cand);
    if (division.exact && division.remainder.is_zero()) out.push_back(cand);
  }
  return out;
}

std::optional<UniPoly> quad_factor_test(std::uint64_t n, std::uint64_t r) {
  for (auto& cand : quad_factor_divisors(n, r)) {
    const Int disc = cand.coeff(1) * cand.coeff(1) - 4 * cand.coeff(2) * cand.coeff(0);
    if (sgn(disc) > 0) return std::move(cand);
  }
  return std::nullopt;
}

std::vector<Branches> real_branches(const ShiftPair& shift, const std::vector<Rat>& y_values) {
  const BiPoly f = build_curve(shift);
  const Rat width = make_rat(1, 1'000'000'000);
  std::vector<Branches> out;
  out.reserve(y_values.size());
  for (const auto& y : y_values) {
    out.push_back({y, isolate_real_roots(f.specialize(Var::X, y), width)});
  }
  return out;
}

std::vector<std::pair<Int, Int>> lattice_points_in_box(const ShiftPair& shift, const IntRange& x,
                                                       const IntRange& y) {
  std::vector<std::pair<Int, Int>> out;
  if (x.lo > x.hi || y.lo > y.hi) return out;
  const BiPoly f = build_curve(shift);
  for (Int xv = x.lo; xv <= x.hi; ++xv) {
    const UniPoly column = f.specialize(Var::Y, Rat(xv));
    for (Int yv = y.lo; yv <= y.hi; ++yv) {
      if (sgn(column.eval(yv)) == 0) out.emplace_back(xv, yv);
    }
  }
  return out;
}

}  // namespace binomrep
