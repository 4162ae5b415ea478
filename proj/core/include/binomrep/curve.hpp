#pragma once

// Plane curves F_{a,b}(x,y) = prod_{r<a+b}(x-y-r) - prod_{p<a}(x-p) prod_{q=1..b}(y+q)
// whose lattice points in the region x-a >= y+b are exactly the solutions of
// C(x,y) = C(x-a,y+b). Singularity certification is done with resultants.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "binomrep/exact.hpp"
#include "binomrep/poly.hpp"
#include "binomrep/ratio.hpp"

namespace binomrep {

enum class Verdict { Yes, No, Inconclusive };
enum class Finiteness { ProvenFinite, InfiniteFamily, Open };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Finiteness f) noexcept;

BiPoly build_curve(const ShiftPair& shift);

/// (x-y)^(a+b) - x^a y^b, the total-degree-(a+b) part of build_curve.
BiPoly top_form(const ShiftPair& shift);

BiPoly partial(const BiPoly& p, Var v);

/// Sylvester resultant of p and q with respect to `eliminate`, as a
/// polynomial in the other variable. Sign follows the Sylvester matrix with
/// the rows of p first. Computed by the subresultant PRS over Z[t].
/// Throws ZeroPolynomial if either input is zero.
UniPoly resultant(const BiPoly& p, const BiPoly& q, Var eliminate);

/// Univariate Sylvester resultant over Z, same sign convention.
Int resultant(const UniPoly& p, const UniPoly& q);

struct EliminationEvidence {
  Var eliminated;
  UniPoly with_fx;  // Res(F, F_x)
  UniPoly with_fy;  // Res(F, F_y)
  UniPoly common;   // gcd of the two, primitive
};

struct AffineCheck {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<EliminationEvidence> evidence;
};

/// No affine singular point when the eliminants Res_y(F,F_x), Res_y(F,F_y)
/// are coprime (retried eliminating x). The y^(a+b) coefficient of F is the
/// constant (-1)^(a+b), so specialization never degenerates. A common
/// factor in both directions gives Inconclusive, never No.
AffineCheck affine_singular_check(const ShiftPair& shift);

struct InfinityCheck {
  Verdict verdict = Verdict::Inconclusive;
  /// dF/dx, dF/dy, dF/dz of the homogenized curve restricted to z = 0, as
  /// binary forms dehomogenized at y = 1 (coefficient i multiplies x^i).
  std::array<UniPoly, 3> forms;
  UniPoly common;
  bool vanish_at_x_axis_point = false;  // all forms vanish at [1:0:0]
  bool vanish_at_y_axis_point = false;  // all forms vanish at [0:1:0]
};

InfinityCheck infinity_singular_check(const ShiftPair& shift);

Finiteness classify_finiteness(const ShiftPair& shift);

struct Certificate {
  ShiftPair shift;
  std::uint64_t degree;
  AffineCheck affine;
  InfinityCheck infinity;
  std::optional<std::uint64_t> genus;  // present iff both checks say Yes
  bool irreducible = false;            // follows from nonsingularity
  Finiteness finiteness;
};

Certificate certify(const ShiftPair& shift);

/// Candidates among x^2+x+1, x^2+3x+1, x^2-x-1, x^2+x-1 that divide
/// x^n - (x+1)^r exactly, in that order. Requires n > r >= 1.
std::vector<UniPoly> quad_factor_divisors(std::uint64_t n, std::uint64_t r);

/// First exact divisor with real roots (positive discriminant). x^2+x+1
/// divides for some (n, r), e.g. (4, 2), but contributes no real root.
std::optional<UniPoly> quad_factor_test(std::uint64_t n, std::uint64_t r);

/// The four quadratic candidates above, in that order.
const std::array<UniPoly, 4>& quadratic_candidates();

/// Real roots of a nonzero integer polynomial, isolated by Sturm counts and
/// refined by bisection until each enclosure is at most `width` wide.
/// A rational root p/q comes back as the degenerate interval [p/q, p/q]
/// whenever width < 1/q^2. Sorted ascending; multiple roots are reported once.
std::vector<Interval> isolate_real_roots(const UniPoly& p, const Rat& width);

struct Branches {
  Rat y;
  std::vector<Interval> x;
};

/// For each y, enclosures (width <= 1e-9) of every real x with F(x, y) = 0.
std::vector<Branches> real_branches(const ShiftPair& shift, const std::vector<Rat>& y_values);

struct IntRange {
  Int lo;
  Int hi;
};

/// Integer zeros of F in [x.lo, x.hi] x [y.lo, y.hi], sorted by (x, y).
std::vector<std::pair<Int, Int>> lattice_points_in_box(const ShiftPair& shift, const IntRange& x,
                                                       const IntRange& y);

}  // namespace binomrep
