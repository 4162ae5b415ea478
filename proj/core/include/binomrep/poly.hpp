#pragma once

// Integer-coefficient polynomials: dense univariate and sparse bivariate.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "binomrep/exact.hpp"

namespace binomrep {

/// Dense polynomial over Z; coefficient i multiplies t^i. The zero
/// polynomial has no coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<long> coeffs);
  explicit UniPoly(std::vector<Int> coeffs);
  static UniPoly constant(const Int& c);
  static UniPoly monomial(const Int& c, std::size_t degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<Int>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of t^i; zero past the degree.
  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  const Int& leading() const;

  Int eval(const Int& t) const;
  Rat eval(const Rat& t) const;
  /// Sign of the value at t, computed without materializing the rational value.
  int sign_at(const Rat& t) const;

  UniPoly derivative() const;
  /// gcd of the coefficients, non-negative.
  Int content() const;
  /// Divides out the content and makes the leading coefficient positive.
  UniPoly primitive_part() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Int& c);

  friend UniPoly operator+(UniPoly l, const UniPoly& r) { return l += r; }
  friend UniPoly operator-(UniPoly l, const UniPoly& r) { return l -= r; }
  friend UniPoly operator*(UniPoly l, const UniPoly& r) { return l *= r; }
  friend UniPoly operator*(UniPoly l, const Int& c) { return l *= c; }
  friend bool operator==(const UniPoly& l, const UniPoly& r) { return l.coeffs_ == r.coeffs_; }

  UniPoly pow(std::uint64_t e) const;

  /// Human-readable form in the given variable, highest degree first.
  std::string str(char var = 't') const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

/// Quotient and remainder when the divisor's leading coefficient divides
/// every step exactly; otherwise `exact` is false and the pair is unspecified.
struct DivisionResult {
  UniPoly quotient;
  UniPoly remainder;
  bool exact = true;
};

DivisionResult divide(const UniPoly& dividend, const UniPoly& divisor);

/// Exact quotient; throws InternalError when the division leaves a remainder.
UniPoly divide_exact(const UniPoly& dividend, const UniPoly& divisor);

/// lc(b)^(deg a - deg b + 1) * a mod b.
UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b);

/// Primitive gcd with positive leading coefficient; gcd(0,0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Sign changes in the coefficient sequence, zeros skipped.
unsigned descartes_sign_changes(const UniPoly& p);

enum class Var { X, Y };

char var_name(Var v) noexcept;
Var other(Var v) noexcept;

struct Exponent {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Sparse bivariate polynomial over Z. Zero coefficients are never stored.
class BiPoly {
 public:
  using Terms = std::map<Exponent, Int>;

  BiPoly() = default;
  static BiPoly constant(const Int& c);
  static BiPoly x();
  static BiPoly y();
  static BiPoly term(const Int& c, std::uint32_t ex, std::uint32_t ey);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Int coeff(std::uint32_t ex, std::uint32_t ey) const;
  int total_degree() const noexcept;
  int degree_in(Var v) const noexcept;

  Int eval(const Int& x, const Int& y) const;
  Rat eval(const Rat& x, const Rat& y) const;

  /// Terms of the given total degree.
  BiPoly homogeneous_part(int degree) const;
  BiPoly partial(Var v) const;

  /// Coefficients in `main` as polynomials in the other variable:
  /// result[i] multiplies main^i.
  std::vector<UniPoly> as_poly_in(Var main) const;
  /// Substitutes other(main) := value and clears denominators, giving an
  /// integer polynomial in `main` with the same real roots.
  UniPoly specialize(Var main, const Rat& value) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);

  friend BiPoly operator+(BiPoly l, const BiPoly& r) { return l += r; }
  friend BiPoly operator-(BiPoly l, const BiPoly& r) { return l -= r; }
  friend BiPoly operator*(const BiPoly& l, const BiPoly& r);
  friend bool operator==(const BiPoly& l, const BiPoly& r) { return l.terms_ == r.terms_; }

  BiPoly pow(std::uint64_t e) const;

  std::string str() const;

 private:
  void add_term(const Exponent& e, const Int& c);
  Terms terms_;
};

}  // namespace binomrep
