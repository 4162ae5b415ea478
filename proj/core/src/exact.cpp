#include "binomrep/exact.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace binomrep {

Nat::Nat(Int v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw PreconditionViolated("Nat: negative value " + value_.get_str());
}

Nat Nat::parse(std::string_view decimal) {
  if (decimal.empty() || !std::all_of(decimal.begin(), decimal.end(),
                                      [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw PreconditionViolated("not a natural number: '" + std::string(decimal) + "'");
  }
  return Nat(Int(std::string(decimal), 10));
}

bool Nat::fits_u64() const noexcept {
  return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64;
}

std::uint64_t Nat::to_u64() const {
  if (!fits_u64()) throw PreconditionViolated("value exceeds 64 bits: " + str());
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return value_.get_ui();
}

Nat& Nat::operator-=(const Nat& o) {
  if (cmp(value_, o.value_) < 0) {
    throw PreconditionViolated("Nat subtraction underflow: " + str() + " - " + o.str());
  }
  value_ -= o.value_;
  return *this;
}

Nat operator/(const Nat& l, const Nat& r) {
  if (r.is_zero()) throw PreconditionViolated("Nat division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), l.value_.get_mpz_t(), r.value_.get_mpz_t());
  return Nat(std::move(q));
}

Nat operator%(const Nat& l, const Nat& r) {
  if (r.is_zero()) throw PreconditionViolated("Nat modulo by zero");
  Int m;
  mpz_fdiv_r(m.get_mpz_t(), l.value_.get_mpz_t(), r.value_.get_mpz_t());
  return Nat(std::move(m));
}

Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw PreconditionViolated("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

Int pow10(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const std::string original(text);
  auto bad = [&] { return PreconditionViolated("not an exact rational: '" + original + "'"); };
  if (text.empty()) throw bad();

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rat result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    result = make_rat(Int(std::string(num)), Int(std::string(den)));
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) throw bad();
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      text = text.substr(0, e);
    }
    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      auto whole = text.substr(0, dot);
      auto frac = text.substr(dot + 1);
      if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
          (whole.empty() && frac.empty())) {
        throw bad();
      }
      digits = std::string(whole) + std::string(frac);
      exponent -= static_cast<long>(frac.size());
    } else {
      if (!all_digits(text)) throw bad();
      digits = std::string(text);
    }
    Int mantissa(digits, 10);
    if (exponent >= 0) {
      result = Rat(mantissa * pow10(static_cast<unsigned long>(exponent)));
    } else {
      result = make_rat(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    }
  }
  return negative ? Rat(-result) : result;
}

std::string to_decimal(const Rat& q, unsigned places) {
  const Int scale = pow10(places);
  Int scaled = abs(q.get_num()) * scale * 2 + q.get_den();
  Int rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_mpz_t(), Int(q.get_den() * 2).get_mpz_t());

  std::string digits = rounded.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out;
  if (sgn(q) < 0 && sgn(rounded) != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - places);
  }
  return out;
}

std::string to_fraction(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Nat binomial(const Nat& n, const Nat& k) {
  if (k > n) return Nat(0);
  Nat kk = k;
  if (Nat twice = k + k; twice > n) kk = n - k;
  Int result;
  mpz_bin_ui(result.get_mpz_t(), n.value().get_mpz_t(), kk.to_u64());
  return Nat(std::move(result));
}

Int binomial_or_zero(const Int& n, const Int& k) {
  if (sgn(n) < 0 || sgn(k) < 0 || k > n) return 0;
  return binomial(Nat(n), Nat(k)).value();
}

Int falling_factorial(const Int& s, std::uint64_t len) {
  Int result = 1;
  Int term = s;
  for (std::uint64_t i = 0; i < len; ++i) {
    result *= term;
    --term;
  }
  return result;
}

Nat fibonacci(std::uint64_t i) {
  Int f;
  mpz_fib_ui(f.get_mpz_t(), i);
  return Nat(std::move(f));
}

Nat factorial(std::uint64_t n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Nat(std::move(f));
}

}  // namespace binomrep
