#include "splinebound/bounds.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace splinebound {

Evaluator BoundFn::make_evaluator(int digits) const {
  if (poly) {
    // Convert at a few guard digits so Horner rounding stays below the context.
    const int work = digits + 10;
    auto p = std::make_shared<DecimalPoly>(to_decimal_poly(*poly, work));
    auto dp = std::make_shared<DecimalPoly>(to_decimal_poly(poly->derivative(), work));
    return {[p, digits](const ExtReal& x) { return horner_eval(*p, x.with_digits(digits + 10)).with_digits(digits); },
            [dp, digits](const ExtReal& x) { return horner_eval(*dp, x.with_digits(digits + 10)).with_digits(digits); }};
  }
  if (!closed_form) throw std::logic_error("bound " + id() + " has no body");
  return {[f = closed_form, digits](const ExtReal& x) { return f(x.with_digits(digits)); },
          closed_form_derivative
              ? RealFn([f = closed_form_derivative, digits](const ExtReal& x) { return f(x.with_digits(digits)); })
              : RealFn()};
}

ExtReal BoundFn::eval(const ExtReal& x) const { return make_evaluator(x.digits()).value(x); }

std::string BoundFn::id() const {
  return family + ":" + std::to_string(order) + ":" + to_string(direction) + ":" + to_string(target);
}

namespace {

BoundFn poly_bound(std::string family, int order, Direction direction, Target target, ExactPoly p) {
  BoundFn b;
  b.family = std::move(family);
  b.order = order;
  b.direction = direction;
  b.target = target;
  b.poly = std::move(p);
  return b;
}

PiRational half_pi() { return PiRational::pi_power(1, mpq_class(1, 2)); }

}  // namespace

BoundFn sine_lower(int n) { return poly_bound("spline", n, Direction::lower, Target::sin, sine_spline(n).poly); }

BoundFn sine_upper(int n) {
  if (n < 2) throw std::invalid_argument("upper bound from lower bounds needs n >= 2, got " + std::to_string(n));
  const ExactPoly p = sine_spline(n).poly * PiRational(2L) - sine_spline(n - 1).poly;
  return poly_bound("spline_upper", n, Direction::upper, Target::sin, p);
}

BoundFn reflect_to_cos(const BoundFn& sin_bound) {
  if (sin_bound.target != Target::sin || !sin_bound.poly) {
    throw std::invalid_argument("reflection needs a polynomial bound for sin, got " + sin_bound.id());
  }
  BoundFn out = sin_bound;
  out.target = Target::cos;
  out.poly = sin_bound.poly->compose_affine(half_pi(), PiRational(-1L), Variable::X_on_0_halfpi);
  return out;
}

BoundFn si_lower(int n) {
  return poly_bound("spline_si", n, Direction::lower, Target::si, integrate_over_lambda(sine_spline(n).poly));
}

BoundFn taylor_sine(int k) {
  if (k < 1 || k % 2 == 0) throw std::invalid_argument("Taylor order must be odd and positive, got " + std::to_string(k));
  std::vector<PiRational> c(static_cast<std::size_t>(k) + 1);
  mpz_class fact(1);
  for (int j = 1; j <= k; ++j) {
    fact *= j;
    if (j % 2 == 1) c[static_cast<std::size_t>(j)] = PiRational(mpq_class(j % 4 == 1 ? 1 : -1, fact));
  }
  const Direction dir = (k / 2) % 2 == 0 ? Direction::upper : Direction::lower;
  return poly_bound("taylor", k, dir, Target::sin, ExactPoly(std::move(c), Variable::X_on_0_halfpi));
}

BoundFn to_sinc(const BoundFn& sin_bound) {
  if (sin_bound.target != Target::sin || !sin_bound.poly) {
    throw std::invalid_argument("sin(x)/x form needs a polynomial bound for sin, got " + sin_bound.id());
  }
  BoundFn out = sin_bound;
  out.target = Target::sinc;
  out.poly = divide_by_variable(*sin_bound.poly);
  return out;
}

BoundFn sine_series_approx(SeriesVariant variant, int n) {
  return poly_bound("series_" + to_string(variant), n, Direction::approximation, Target::sin,
                    sine_series_poly(variant, n));
}

ExtReal si_reference(const ExtReal& x, int digits) {
  const int work = digits + 10;
  const ExtReal xw = x.with_digits(work);
  if (xw.is_zero()) return ExtReal::zero(digits);
  const ExtReal x2 = xw * xw;
  const ExtReal tol = pow(ExtReal(10L, work), -static_cast<long>(digits + 5));
  // term_k = (-1)^k x^(2k+1) / (2k+1)!, added as term_k / (2k+1)
  ExtReal term = xw;
  ExtReal sum = xw;
  for (long k = 1;; ++k) {
    term = -term * x2 / ExtReal((2 * k) * (2 * k + 1), work);
    const ExtReal next = term / ExtReal(2 * k + 1, work);
    sum += next;
    const ExtReal scale = abs(sum) < ExtReal(1L, work) ? abs(sum) : ExtReal(1L, work);
    if (abs(next) < tol * scale) break;
  }
  return sum.with_digits(digits);
}

SufficiencyCertificate sufficiency_check(int max_index) {
  if (max_index < 2) throw std::invalid_argument("sufficiency check needs K >= 2");
  const auto c = order1_coefficients(max_index).coeffs;
  const auto d = order2_coefficients(max_index + 1).coeffs;
  SufficiencyCertificate cert;
  cert.max_index = max_index;
  cert.all_positive = true;
  for (int k = 2; k <= max_index; ++k) {
    PiRational m = c[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(k + 1)] * mpq_class(2);
    const int s = sign(m);
    cert.all_positive = cert.all_positive && s > 0;
    cert.signs.push_back(s);
    cert.margins.push_back(std::move(m));
  }
  return cert;
}

}  // namespace splinebound
