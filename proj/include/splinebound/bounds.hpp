#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "splinebound/error_series.hpp"
#include "splinebound/ext_real.hpp"
#include "splinebound/pi_rational.hpp"
#include "splinebound/poly.hpp"
#include "splinebound/spline_core.hpp"
#include "splinebound/types.hpp"

namespace splinebound {

using RealFn = std::function<ExtReal(const ExtReal&)>;

/// Value (and, when known, first derivative) of a bound at a fixed context.
struct Evaluator {
  RealFn value;
  RealFn derivative;  ///< empty when not available
};

/// A bound or approximant over [0, pi/2], either an exact polynomial or a
/// closed form evaluated in extended precision.
struct BoundFn {
  std::string family;
  int order = 0;
  Direction direction = Direction::approximation;
  Target target = Target::sin;
  std::optional<ExactPoly> poly;  ///< monomial form in the target's abscissa
  RealFn closed_form;             ///< used when poly is empty
  RealFn closed_form_derivative;  ///< optional

  /// Fixes the precision context: polynomial coefficients are converted once.
  Evaluator make_evaluator(int digits) const;
  /// One-off evaluation at x's context.
  ExtReal eval(const ExtReal& x) const;
  std::string id() const;
};

/// f_n as a lower bound for sin, sharp at 0 and pi/2.
BoundFn sine_lower(int n);
/// 2 f_n - f_{n-1}. Throws std::invalid_argument for n < 2.
BoundFn sine_upper(int n);
/// Substitutes x -> pi/2 - y in a polynomial sin bound; direction preserved.
BoundFn reflect_to_cos(const BoundFn& sin_bound);
/// h_n(x) = integral_0^x f_n(l)/l dl, lower bound for Si.
BoundFn si_lower(int n);
/// Truncated Taylor polynomial through x^k, k odd. Upper when floor(k/2) is
/// even, lower otherwise. Throws for even or non-positive k.
BoundFn taylor_sine(int k);
/// The same bound divided by x, as a bound for sin(x)/x.
BoundFn to_sinc(const BoundFn& sin_bound);
/// Truncated sine series from the order-1 or order-2 spline error, n being
/// the upper summation index.
BoundFn sine_series_approx(SeriesVariant variant, int n);

/// Si(x) by its power series, stopped once the next term drops below
/// 10^-(digits+5).
ExtReal si_reference(const ExtReal& x, int digits);

struct SufficiencyCertificate {
  int max_index = 0;
  std::vector<PiRational> margins;  ///< c_k - 2 d_{k+1}, k = 2..K
  std::vector<int> signs;
  bool all_positive = false;
};

/// Checks c_k - 2 d_{k+1} > 0 for 2 <= k <= K with exact margins.
SufficiencyCertificate sufficiency_check(int max_index);

/// Zhu's general-order bound for sin(x)/x. Lower and upper, order n >= 0.
BoundFn zhu_bound(int n, Direction direction);
/// alpha_0 .. alpha_count-1 of Zhu's recurrence.
std::vector<PiRational> zhu_alphas(int count);
/// Orders 0..2 typed in from their explicit forms.
BoundFn zhu_explicit(int n, Direction direction);

/// Table of published sin(x)/x bounds, row 1..10, lower or upper.
BoundFn table11_bound(int row, Direction direction);
BoundFn jordan_bound(Direction direction);
BoundFn cusa_huygens_upper();
BoundFn redheffer_lower();
/// Lv's lower bound for Si.
BoundFn lv_si_lower();

/// Every catalogued baseline bound.
std::vector<BoundFn> baseline_catalog();

}  // namespace splinebound
