#include "binomrep/poly.hpp"

#include <algorithm>
#include <sstream>

namespace binomrep {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

UniPoly::UniPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::constant(const Int& c) { return UniPoly(std::vector<Int>{c}); }

UniPoly UniPoly::monomial(const Int& c, std::size_t degree) {
  std::vector<Int> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Int& UniPoly::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Int UniPoly::eval(const Int& t) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Rat UniPoly::eval(const Rat& t) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

int UniPoly::sign_at(const Rat& t) const {
  if (coeffs_.empty()) return 0;
  // q^d p(p/q) evaluated homogeneously; q > 0 so the sign is preserved.
  const Int& p = t.get_num();
  const Int& q = t.get_den();
  Int acc = coeffs_.back();
  Int qpow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    qpow *= q;
    acc *= p;
    acc += coeffs_[static_cast<std::size_t>(i)] * qpow;
  }
  return sgn(acc);
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Int> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(d));
}

Int UniPoly::content() const {
  Int g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UniPoly UniPoly::primitive_part() const {
  if (coeffs_.empty()) return {};
  Int g = content();
  if (sgn(coeffs_.back()) < 0) g = -g;
  std::vector<Int> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), o.coeffs_[j].get_mpz_t());
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const Int& c) {
  for (auto& v : coeffs_) v *= c;
  normalize();
  return *this;
}

UniPoly UniPoly::pow(std::uint64_t e) const {
  UniPoly result = constant(1);
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::string UniPoly::str(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && i > 0;
    if (!unit) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

DivisionResult divide(const UniPoly& dividend, const UniPoly& divisor) {
  if (divisor.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  DivisionResult out;
  if (dividend.degree() < divisor.degree()) {
    out.remainder = dividend;
    return out;
  }
  std::vector<Int> rem = dividend.coefficients();
  const auto& dv = divisor.coefficients();
  const int dd = divisor.degree();
  const Int& lead = dv.back();
  std::vector<Int> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  for (int i = dividend.degree(); i >= dd; --i) {
    Int& top = rem[static_cast<std::size_t>(i)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      out.exact = false;
      return out;
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    const auto shift = static_cast<std::size_t>(i - dd);
    for (std::size_t j = 0; j < dv.size(); ++j) {
      mpz_submul(rem[shift + j].get_mpz_t(), q.get_mpz_t(), dv[j].get_mpz_t());
    }
    quot[shift] = std::move(q);
  }
  out.quotient = UniPoly(std::move(quot));
  out.remainder = UniPoly(std::move(rem));
  return out;
}

UniPoly divide_exact(const UniPoly& dividend, const UniPoly& divisor) {
  auto r = divide(dividend, divisor);
  if (!r.exact || !r.remainder.is_zero()) {
    throw InternalError("inexact polynomial division: (" + dividend.str() + ") / (" +
                        divisor.str() + ")");
  }
  return std::move(r.quotient);
}

UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const Int lb = b.leading();
  int pending = a.degree() - b.degree() + 1;
  UniPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    UniPoly step = UniPoly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - b.degree())) * b;
    r *= lb;
    r -= step;
    --pending;
  }
  if (pending > 0) {
    Int f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(pending));
    r *= f;
  }
  return r;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  UniPoly p = a.primitive_part();
  UniPoly q = b.primitive_part();
  if (p.degree() < q.degree()) std::swap(p, q);
  while (!q.is_zero()) {
    UniPoly r = pseudo_remainder(p, q);
    p = std::move(q);
    q = r.primitive_part();
  }
  return p.primitive_part();
}

unsigned descartes_sign_changes(const UniPoly& p) {
  unsigned changes = 0;
  int last = 0;
  for (const auto& c : p.coefficients()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

char var_name(Var v) noexcept { return v == Var::X ? 'x' : 'y'; }
Var other(Var v) noexcept { return v == Var::X ? Var::Y : Var::X; }

// ----------------------------------------------------------------- BiPoly

BiPoly BiPoly::constant(const Int& c) { return term(c, 0, 0); }
BiPoly BiPoly::x() { return term(1, 1, 0); }
BiPoly BiPoly::y() { return term(1, 0, 1); }

BiPoly BiPoly::term(const Int& c, std::uint32_t ex, std::uint32_t ey) {
  BiPoly p;
  p.add_term({ex, ey}, c);
  return p;
}

void BiPoly::add_term(const Exponent& e, const Int& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Int BiPoly::coeff(std::uint32_t ex, std::uint32_t ey) const {
  auto it = terms_.find({ex, ey});
  return it == terms_.end() ? Int(0) : it->second;
}

int BiPoly::total_degree() const noexcept {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.x + e.y));
  return d;
}

int BiPoly::degree_in(Var v) const noexcept {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(v == Var::X ? e.x : e.y));
  return d;
}

Int BiPoly::eval(const Int& x, const Int& y) const {
  Int acc = 0;
  Int xp, yp;
  for (const auto& [e, c] : terms_) {
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), e.x);
    mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), e.y);
    acc += c * xp * yp;
  }
  return acc;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
  // Horner in x over coefficient polynomials in y.
  const auto rows = as_poly_in(Var::X);
  Rat acc = 0;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    acc *= x;
    acc += it->eval(y);
  }
  return acc;
}

BiPoly BiPoly::homogeneous_part(int degree) const {
  BiPoly out;
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(e.x + e.y) == degree) out.terms_.emplace(e, c);
  }
  return out;
}

BiPoly BiPoly::partial(Var v) const {
  BiPoly out;
  for (const auto& [e, c] : terms_) {
    const std::uint32_t power = v == Var::X ? e.x : e.y;
    if (power == 0) continue;
    Exponent d = e;
    (v == Var::X ? d.x : d.y) -= 1;
    out.add_term(d, c * power);
  }
  return out;
}

std::vector<UniPoly> BiPoly::as_poly_in(Var main) const {
  const int d = degree_in(main);
  if (d < 0) return {};
  std::vector<std::vector<Int>> rows(static_cast<std::size_t>(d + 1));
  for (const auto& [e, c] : terms_) {
    const std::uint32_t m = main == Var::X ? e.x : e.y;
    const std::uint32_t o = main == Var::X ? e.y : e.x;
    auto& row = rows[m];
    if (row.size() <= o) row.resize(o + 1);
    row[o] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  return out;
}

UniPoly BiPoly::specialize(Var main, const Rat& value) const {
  const int d_other = degree_in(other(main));
  if (d_other < 0) return {};
  const Int& p = value.get_num();
  const Int& q = value.get_den();
  std::vector<Int> ppow(static_cast<std::size_t>(d_other + 1)), qpow(static_cast<std::size_t>(d_other + 1));
  ppow[0] = 1;
  qpow[0] = 1;
  for (std::size_t i = 1; i < ppow.size(); ++i) {
    ppow[i] = ppow[i - 1] * p;
    qpow[i] = qpow[i - 1] * q;
  }
  std::vector<Int> out(static_cast<std::size_t>(degree_in(main) + 1));
  for (const auto& [e, c] : terms_) {
    const std::uint32_t m = main == Var::X ? e.x : e.y;
    const std::uint32_t o = main == Var::X ? e.y : e.x;
    out[m] += c * ppow[o] * qpow[static_cast<std::size_t>(d_other) - o];
  }
  return UniPoly(std::move(out));
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, Int(-c));
  return *this;
}

BiPoly operator*(const BiPoly& l, const BiPoly& r) {
  BiPoly out;
  for (const auto& [el, cl] : l.terms_) {
    for (const auto& [er, cr] : r.terms_) {
      out.add_term({el.x + er.x, el.y + er.y}, cl * cr);
    }
  }
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) { return *this = *this * o; }

BiPoly BiPoly::pow(std::uint64_t e) const {
  BiPoly result = constant(1);
  BiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Int>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    const auto dl = l.first.x + l.first.y;
    const auto dr = r.first.x + r.first.y;
    if (dl != dr) return dl > dr;
    return l.first.x > r.first.x;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Int mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool has_var = e.x + e.y > 0;
    const bool unit = mag == 1 && has_var;
    if (!unit) os << mag.get_str();
    bool need_star = !unit;
    auto emit = [&](char v, std::uint32_t p) {
      if (p == 0) return;
      if (need_star) os << '*';
      os << v;
      if (p > 1) os << '^' << p;
      need_star = true;
    };
    emit('x', e.x);
    emit('y', e.y);
  }
  return os.str();
}

}  // namespace binomrep
