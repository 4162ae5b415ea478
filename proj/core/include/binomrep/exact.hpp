#pragma once

// Exact arithmetic kernel: arbitrary-precision naturals, integers and
// rationals plus the combinatorial primitives built on them.

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "binomrep/errors.hpp"

namespace binomrep {

using Int = mpz_class;
using Rat = mpq_class;

/// Non-negative arbitrary-precision integer. Subtraction that would go
/// negative throws PreconditionViolated.
class Nat {
 public:
  Nat() = default;

  template <std::integral T>
  Nat(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (v < 0) throw PreconditionViolated("Nat: negative value");
      value_ = static_cast<long>(v);
    } else {
      value_ = static_cast<unsigned long>(v);
    }
  }

  explicit Nat(Int v);

  static Nat parse(std::string_view decimal);

  const Int& value() const noexcept { return value_; }
  operator const Int&() const noexcept { return value_; }  // NOLINT

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool fits_u64() const noexcept;
  std::uint64_t to_u64() const;
  std::string str() const { return value_.get_str(); }

  Nat& operator+=(const Nat& o) { value_ += o.value_; return *this; }
  Nat& operator*=(const Nat& o) { value_ *= o.value_; return *this; }
  Nat& operator-=(const Nat& o);

  friend Nat operator+(Nat l, const Nat& r) { return l += r; }
  friend Nat operator*(Nat l, const Nat& r) { return l *= r; }
  friend Nat operator-(Nat l, const Nat& r) { return l -= r; }
  friend Nat operator/(const Nat& l, const Nat& r);
  friend Nat operator%(const Nat& l, const Nat& r);

  friend bool operator==(const Nat& l, const Nat& r) noexcept { return cmp(l.value_, r.value_) == 0; }
  friend std::strong_ordering operator<=>(const Nat& l, const Nat& r) noexcept {
    const int c = cmp(l.value_, r.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Int value_;
};

/// Reduced rational num/den. Throws PreconditionViolated on a zero denominator.
Rat make_rat(const Int& num, const Int& den);

/// Parses "p", "p/q", decimal "0.001" or scientific "1e-12" exactly.
Rat parse_rat(std::string_view text);

/// Fixed-point rendering rounded half away from zero, e.g. "1.618034" for 6 places.
std::string to_decimal(const Rat& q, unsigned places);

/// Exact "num/den" rendering ("3" when the denominator is 1).
std::string to_fraction(const Rat& q);

/// C(n,k) with min(k, n-k) limited to 64 bits; 0 when k > n.
Nat binomial(const Nat& n, const Nat& k);

/// Signed variant used by lattice scans: C(n,k) = 0 whenever n < 0 or k < 0 or k > n.
Int binomial_or_zero(const Int& n, const Int& k);

/// s (s-1) ... (s-len+1); 1 for len = 0.
Int falling_factorial(const Int& s, std::uint64_t len);

/// F_0 = 0, F_1 = F_2 = 1.
Nat fibonacci(std::uint64_t i);

Nat factorial(std::uint64_t n);

}  // namespace binomrep
