#include <utility>
#include <vector>

#include "binomrep/curve.hpp"

namespace binomrep {

namespace {

// Coefficient-ring adaptors for the subresultant algorithm. Polynomials over
// the ring are vectors indexed by degree with no trailing zeros.

struct IntRing {
  using Elem = Int;
  static bool is_zero(const Int& v) { return sgn(v) == 0; }
  static Int zero() { return 0; }
  static Int one() { return 1; }
  static Int neg(const Int& v) { return -v; }
  static Int divexact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static Int pow(const Int& a, std::uint64_t e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
  }
};

struct PolyRing {
  using Elem = UniPoly;
  static bool is_zero(const UniPoly& v) { return v.is_zero(); }
  static UniPoly zero() { return {}; }
  static UniPoly one() { return UniPoly::constant(1); }
  static UniPoly neg(const UniPoly& v) { return -v; }
  static UniPoly divexact(const UniPoly& a, const UniPoly& b) { return divide_exact(a, b); }
  static UniPoly pow(const UniPoly& a, std::uint64_t e) { return a.pow(e); }
};

template <class Ring>
using RPoly = std::vector<typename Ring::Elem>;

template <class Ring>
void trim(RPoly<Ring>& p) {
  while (!p.empty() && Ring::is_zero(p.back())) p.pop_back();
}

template <class Ring>
int deg(const RPoly<Ring>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class Ring>
RPoly<Ring> prem(RPoly<Ring> a, const RPoly<Ring>& b) {
  using Elem = typename Ring::Elem;
  const Elem& lb = b.back();
  int pending = deg<Ring>(a) - deg<Ring>(b) + 1;
  while (!a.empty() && deg<Ring>(a) >= deg<Ring>(b)) {
    const Elem lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = c * lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = a[shift + j] - lead * b[j];
    trim<Ring>(a);
    --pending;
  }
  if (pending > 0) {
    const Elem f = Ring::pow(lb, static_cast<std::uint64_t>(pending));
    for (auto& c : a) c = c * f;
  }
  return a;
}

template <class Ring>
typename Ring::Elem subresultant(RPoly<Ring> A, RPoly<Ring> B) {
  using Elem = typename Ring::Elem;
  trim<Ring>(A);
  trim<Ring>(B);
  if (A.empty() || B.empty()) throw ZeroPolynomial("resultant of the zero polynomial");

  bool negate = false;
  if (deg<Ring>(A) < deg<Ring>(B)) {
    if ((deg<Ring>(A) * deg<Ring>(B)) % 2 != 0) negate = true;
    std::swap(A, B);
  }
  auto apply_sign = [&](Elem v) { return negate ? Ring::neg(v) : v; };

  if (deg<Ring>(B) == 0) return apply_sign(Ring::pow(B.back(), static_cast<std::uint64_t>(deg<Ring>(A))));

  Elem g = Ring::one();
  Elem h = Ring::one();
  while (true) {
    const int delta = deg<Ring>(A) - deg<Ring>(B);
    if (deg<Ring>(A) % 2 != 0 && deg<Ring>(B) % 2 != 0) negate = !negate;
    RPoly<Ring> R = prem<Ring>(A, B);
    A = std::move(B);
    const Elem divisor = g * Ring::pow(h, static_cast<std::uint64_t>(delta));
    for (auto& c : R) c = Ring::divexact(c, divisor);
    B = std::move(R);
    g = A.back();
    if (delta > 0) {
      h = Ring::divexact(Ring::pow(g, static_cast<std::uint64_t>(delta)),
                         Ring::pow(h, static_cast<std::uint64_t>(delta - 1)));
    }
    if (B.empty()) return Ring::zero();
    if (deg<Ring>(B) == 0) break;
  }
  const auto dA = static_cast<std::uint64_t>(deg<Ring>(A));
  Elem result = Ring::divexact(Ring::pow(B.back(), dA), Ring::pow(h, dA - 1));
  return apply_sign(std::move(result));
}

}  // namespace

UniPoly resultant(const BiPoly& p, const BiPoly& q, Var eliminate) {
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomial("resultant of the zero polynomial");
  return subresultant<PolyRing>(p.as_poly_in(eliminate), q.as_poly_in(eliminate));
}

Int resultant(const UniPoly& p, const UniPoly& q) {
  return subresultant<IntRing>(p.coefficients(), q.coefficients());
}

}  // namespace binomrep
