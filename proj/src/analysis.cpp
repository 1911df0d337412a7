#include "splinebound/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace splinebound {

void Grid::validate() const {
  if (count < 2) throw std::invalid_argument("grid needs at least 2 points, got " + std::to_string(count));
  if (sign(right - left) <= 0) throw std::invalid_argument("grid needs left < right");
}

PiRational Grid::exact_point(int i) const {
  if (i < 0 || i >= count) throw std::out_of_range("grid index " + std::to_string(i));
  if (i == count - 1) return right;
  return left + (right - left) * mpq_class(i, count - 1);
}

ExtReal Grid::point(int i, int digits) const { return to_ext_real(exact_point(i), digits); }

std::vector<ExtReal> Grid::points(int digits) const {
  std::vector<ExtReal> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(point(i, digits));
  return out;
}

Grid Grid::standard(int count) {
  Grid g;
  g.count = count;
  g.validate();
  return g;
}

Reference reference_for(Target target) {
  Reference r;
  r.target = target;
  switch (target) {
    case Target::sin:
      r.value = [](const ExtReal& x) { return sin(x); };
      r.derivative = [](const ExtReal& x) { return cos(x); };
      r.zero = PiRational();
      break;
    case Target::sinc:
      r.value = [](const ExtReal& x) { return x.is_zero() ? ExtReal(1L, x.digits()) : sin(x) / x; };
      break;
    case Target::cos:
      r.value = [](const ExtReal& x) { return cos(x); };
      r.derivative = [](const ExtReal& x) { return -sin(x); };
      r.zero = PiRational::pi_power(1, mpq_class(1, 2));
      break;
    case Target::si:
      r.value = [](const ExtReal& x) { return si_reference(x, x.digits()); };
      r.derivative = [](const ExtReal& x) { return x.is_zero() ? ExtReal(1L, x.digits()) : sin(x) / x; };
      r.zero = PiRational();
      break;
    case Target::generic:
      throw std::invalid_argument("no built-in reference for a generic target");
  }
  return r;
}

ExtReal relative_error(const Evaluator& approx, const Reference& reference, const PiRational& x, int digits) {
  const ExtReal one(1L, digits);
  const ExtReal xv = to_ext_real(x, digits);
  if (reference.zero && *reference.zero == x) {
    if (!approx.derivative || !reference.derivative) {
      throw std::domain_error("reference vanishes at x = " + x.to_string() + " and no derivative limit is available");
    }
    return one - approx.derivative(xv) / reference.derivative(xv);
  }
  const ExtReal ref = reference.value(xv);
  if (ref.is_zero()) throw std::domain_error("reference vanishes at x = " + x.to_string() + " with no declared limit");
  return one - approx.value(xv) / ref;
}

ExtReal relative_error(const BoundFn& approx, const Reference& reference, const PiRational& x, int digits) {
  return relative_error(approx.make_evaluator(digits), reference, x, digits);
}

int escalated_digits(const ExtReal& expected) {
  if (expected.is_zero()) return kDefaultDigits;
  const double lg = -std::log10(std::fabs(expected.to_double()));
  // to_double underflows near 1e-308; fall back on the decimal exponent
  const long e = std::isfinite(lg) ? static_cast<long>(std::ceil(lg)) : -decimal_exponent(expected);
  return std::max<long>(kDefaultDigits, 2 * e + 20);
}

namespace {

constexpr int kMaxAutoDigits = 4000;

RelErrReport scan_at(const BoundFn& approx, const Reference& reference, const Grid& grid, int digits) {
  RelErrReport rep;
  rep.bound_id = approx.id();
  rep.grid = grid;
  rep.digits = digits;
  const Evaluator ev = approx.make_evaluator(digits);
  rep.re_bound = ExtReal::zero(digits);
  // Noise floor for direction checks: a few units in the last place.
  const ExtReal tol = pow(ExtReal(10L, digits), -static_cast<long>(digits - 5));
  rep.re_values.reserve(static_cast<std::size_t>(grid.count));
  for (int i = 0; i < grid.count; ++i) {
    ExtReal re = relative_error(ev, reference, grid.exact_point(i), digits);
    const ExtReal mag = abs(re);
    if (mag > rep.re_bound) {
      rep.re_bound = mag;
      rep.argmax_index = i;
    }
    const bool wrong_side = (approx.direction == Direction::lower && re < -tol) ||
                            (approx.direction == Direction::upper && re > tol);
    if (wrong_side) {
      ++rep.violations;
      rep.violation_indices.push_back(i);
    }
    rep.re_values.push_back(std::move(re));
  }
  rep.argmax = grid.point(rep.argmax_index, digits);
  return rep;
}

}  // namespace

RelErrReport re_bound_scan(const BoundFn& approx, const Reference& reference, const Grid& grid, int digits,
                           int min_digits) {
  grid.validate();
  if (digits > 0) return scan_at(approx, reference, grid, digits);
  int work = std::max(min_digits, 10);
  for (;;) {
    RelErrReport rep = scan_at(approx, reference, grid, work);
    // A zero maximum means everything cancelled; keep doubling until it resolves.
    if (rep.re_bound.is_zero()) {
      if (work >= kMaxAutoDigits) return rep;
      work = std::min(2 * work, kMaxAutoDigits);
      continue;
    }
    const int needed = escalated_digits(rep.re_bound);
    if (needed <= work) return rep;
    work = needed;
  }
}

RelErrReport re_bound_scan(const BoundFn& approx, const Grid& grid, int digits, int min_digits) {
  return re_bound_scan(approx, reference_for(approx.target), grid, digits, min_digits);
}

ScaleCheckReport scale_check(const BoundFn& f_in_x, const Grid& grid, int digits) {
  if (f_in_x.target != Target::sin || !f_in_x.poly) {
    throw std::invalid_argument("scale check needs a polynomial approximant to sin");
  }
  grid.validate();
  const DecimalPoly px = to_decimal_poly(*f_in_x.poly, digits);
  const DecimalPoly pt = to_decimal_poly(x_to_t(*f_in_x.poly), digits);
  const ExtReal half_pi = pi(digits) / ExtReal(2L, digits);
  ScaleCheckReport rep;
  rep.max_difference = ExtReal::zero(digits);
  for (int i = 0; i < grid.count; ++i) {
    const ExtReal x = grid.point(i, digits);
    if (x.is_zero()) continue;  // both forms use the same limit there
    const ExtReal t = x / half_pi;
    const ExtReal s = sin(x);
    const ExtReal re_x = ExtReal(1L, digits) - horner_eval(px, x, Variable::X_on_0_halfpi) / s;
    const ExtReal re_t = ExtReal(1L, digits) - horner_eval(pt, t, Variable::T_on_0_1) / sin(half_pi * t);
    const ExtReal d = abs(re_x - re_t);
    if (d > rep.max_difference) rep.max_difference = d;
    ++rep.points;
  }
  return rep;
}

bool TableResult::all_pass() const {
  for (const auto& r : rows) {
    if (!r.pass) return false;
  }
  return true;
}

bool matches_to_sig_figs(const ExtReal& computed, const std::string& expected, int sig) {
  const ExtReal e = ExtReal::from_string(expected, computed.digits());
  return computed.to_string_fixed_width(sig) == e.to_string_fixed_width(sig);
}

}  // namespace splinebound
