#pragma once

#include <vector>

#include "splinebound/ext_real.hpp"
#include "splinebound/pi_rational.hpp"
#include "splinebound/poly.hpp"

namespace splinebound {

/// eps_n(t) = sum_{k >= start_index} c_k t^k (1-t)^p(k), the error of the
/// order-n sine spline written in t = 2x/pi.
struct ErrorSeries {
  int spline_order = 1;          ///< 1 or 2
  std::vector<PiRational> coeffs;  ///< c_0..c_K, including the seed values below start_index
  int start_index = 2;

  int max_index() const { return static_cast<int>(coeffs.size()) - 1; }
  int exponent(int k) const;
};

/// c_0..c_K for the order-1 error series. K >= 2.
ErrorSeries order1_coefficients(int max_index);
/// c_0..c_K for the order-2 error series. K >= 3.
ErrorSeries order2_coefficients(int max_index);

/// pi^k / (2^k k!)
PiRational quarter_turn_term(int k);

/// p(k) from the explicit index-set listing. Throws std::invalid_argument
/// for k below the start index (2 for order 1, 3 for order 2) or an
/// unsupported order.
int exponent_rule(int spline_order, int k);
/// Same exponent from the compressed floor expression; kept for cross-checks.
int exponent_rule_floor_form(int spline_order, int k);

/// Partial sum over k = start .. start+terms-1 at t's precision context.
/// Exactly zero at t = 0 and t = 1; throws for t outside [0, 1] or when the
/// series holds too few coefficients.
ExtReal eval_error_series(const ErrorSeries& series, const ExtReal& t, int terms);

/// The same partial sum expanded into monomials in t (exact).
ExactPoly error_series_poly(const ErrorSeries& series, int terms);

/// Monomial coefficients of sin(pi t/2) - f_n(pi t/2) for powers 0..count-1.
std::vector<PiRational> taylor_error_coefficients(int spline_order, int count);

enum class SeriesVariant { order1, order2 };

/// Series for sin built on the order-1 or order-2 spline error.
struct SineSeries {
  SeriesVariant variant = SeriesVariant::order1;
  ExactPoly head;                 ///< closed-form leading terms, in t
  int first_index = 1;            ///< k of the first series term
  std::vector<PiRational> coeffs;  ///< indexed by k, entries below first_index unused

  int exponent(int k) const;
  int max_index() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Coefficients up to index K (K >= 2).
SineSeries make_sine_series(SeriesVariant variant, int max_index);

/// head + sum_{k=first}^{n} c_k t^k (1-t)^p(k) with t = 2x/pi, evaluated at
/// x's precision. n is the upper summation index. Throws for x outside
/// [0, pi/2].
ExtReal sine_series_eval(SeriesVariant variant, const ExtReal& x, int n);

/// Same truncation as an exact polynomial in x.
ExactPoly sine_series_poly(SeriesVariant variant, int n);

std::string to_string(SeriesVariant v);

}  // namespace splinebound
