#include <algorithm>

#include "binomrep/curve.hpp"

namespace binomrep {

namespace {

// Divides by the positive content only, keeping the sign pattern intact.
UniPoly strip_content(const UniPoly& p) {
  if (p.is_zero()) return p;
  const Int g = p.content();
  std::vector<Int> out(p.coefficients().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), p.coefficients()[i].get_mpz_t(), g.get_mpz_t());
  }
  return UniPoly(std::move(out));
}

Int floor_of(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Rational with the smallest denominator in [lo, hi], lo <= hi.
Rat simplest_between(const Rat& lo, const Rat& hi) {
  if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
  if (sgn(lo) <= 0) return 0;
  const Int f = floor_of(lo);
  if (f == lo || f + 1 <= hi) return f == lo ? Rat(f) : Rat(f + 1);
  return Rat(f) + 1 / simplest_between(1 / (hi - f), 1 / (lo - f));
}

class SturmChain {
 public:
  explicit SturmChain(const UniPoly& square_free) {
    chain_.push_back(strip_content(square_free));
    chain_.push_back(strip_content(square_free.derivative()));
    while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
      const UniPoly& a = chain_[chain_.size() - 2];
      const UniPoly& b = chain_.back();
      UniPoly r = pseudo_remainder(a, b);
      // prem scales by lc(b)^(da-db+1); undo a negative scale factor.
      const int scale_power = a.degree() - b.degree() + 1;
      const bool flipped = sgn(b.leading()) < 0 && scale_power % 2 != 0;
      if (!flipped) r = -r;
      if (r.is_zero()) break;
      chain_.push_back(strip_content(r));
    }
  }

  unsigned variations(const Rat& t) const {
    unsigned changes = 0;
    int last = 0;
    for (const auto& p : chain_) {
      const int s = p.sign_at(t);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  const UniPoly& base() const { return chain_.front(); }

 private:
  std::vector<UniPoly> chain_;
};

class Isolator {
 public:
  Isolator(const UniPoly& p, Rat width) : sturm_(p), width_(std::move(width)) {}

  // Roots in the open interval (lo, hi); neither endpoint is a root.
  void isolate(const Rat& lo, const Rat& hi, unsigned vlo, unsigned vhi) {
    const unsigned count = vlo - vhi;
    if (count == 0) return;
    if (count == 1) {
      refine(lo, hi);
      return;
    }
    const Rat mid = split_point(lo, hi);
    const unsigned vmid = sturm_.variations(mid);
    isolate(lo, mid, vlo, vmid);
    isolate(mid, hi, vmid, vhi);
  }

  std::vector<Interval> take() { return std::move(found_); }
  const SturmChain& chain() const { return sturm_; }

 private:
  // A point in (lo, hi) that is not a root; at most deg(p) candidates fail.
  Rat split_point(const Rat& lo, const Rat& hi) const {
    const Rat span = hi - lo;
    for (unsigned k = 0;; ++k) {
      const unsigned num = k % 2 == 0 ? 32 - k / 2 : 32 + (k + 1) / 2;
      Rat mid = lo + span * make_rat(num, 64);
      if (sturm_.base().sign_at(mid) != 0) return mid;
    }
  }

  // A rational root p/q is the simplest rational of any enclosure narrower
  // than 1/q^2, so the final enclosure is snapped to it when it is a root.
  void refine(Rat lo, Rat hi) {
    const UniPoly& p = sturm_.base();
    const int slo = p.sign_at(lo);
    if (Rat c = simplest_between(lo, hi); p.sign_at(c) == 0) {
      found_.push_back({c, c});
      return;
    }
    while (hi - lo > width_) {
      Rat mid = (lo + hi) / 2;
      const int s = p.sign_at(mid);
      if (s == 0) {
        found_.push_back({mid, mid});
        return;
      }
      (s == slo ? lo : hi) = std::move(mid);
    }
    if (Rat c = simplest_between(lo, hi); p.sign_at(c) == 0) {
      found_.push_back({c, c});
      return;
    }
    found_.push_back({std::move(lo), std::move(hi)});
  }

  SturmChain sturm_;
  Rat width_;
  std::vector<Interval> found_;
};

}  // namespace

std::vector<Interval> isolate_real_roots(const UniPoly& p, const Rat& width) {
  if (p.is_zero()) throw ZeroPolynomial("isolate_real_roots of the zero polynomial");
  if (sgn(width) <= 0) throw PreconditionViolated("isolate_real_roots requires a positive width");
  if (p.degree() == 0) return {};

  UniPoly square_free = p.primitive_part();
  const UniPoly g = gcd(square_free, square_free.derivative());
  if (g.degree() > 0) square_free = divide_exact(square_free, g);

  // Cauchy bound: every root satisfies |t| < 1 + max |c_i / c_n|.
  Rat bound = 0;
  const Int lead = abs(square_free.leading());
  for (int i = 0; i < square_free.degree(); ++i) {
    bound = std::max(bound, Rat(make_rat(abs(square_free.coeff(static_cast<std::size_t>(i))), lead)));
  }
  bound += 1;

  Isolator iso(square_free, width);
  const Rat lo = -bound;
  const Rat hi = bound;
  iso.isolate(lo, hi, iso.chain().variations(lo), iso.chain().variations(hi));
  auto roots = iso.take();
  std::sort(roots.begin(), roots.end(), [](const Interval& l, const Interval& r) { return l.lo < r.lo; });
  return roots;
}

}  // namespace binomrep
