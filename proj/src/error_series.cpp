#include "splinebound/error_series.hpp"

#include <stdexcept>
#include <string>

#include "splinebound/spline_core.hpp"

namespace splinebound {

namespace {

int start_index_for(int spline_order) {
  if (spline_order == 1) return 2;
  if (spline_order == 2) return 3;
  throw std::invalid_argument("error series exist for spline orders 1 and 2 only, got " +
                              std::to_string(spline_order));
}

// t^k (1-t)^p in t
ExactPoly basis_term(int k, int p) {
  const ExactPoly one_minus_t({PiRational(1L), PiRational(-1L)}, Variable::T_on_0_1);
  ExactPoly out = ExactPoly::monomial(PiRational(1L), static_cast<std::size_t>(k), Variable::T_on_0_1);
  for (int i = 0; i < p; ++i) out *= one_minus_t;
  return out;
}

ExtReal basis_value(const ExtReal& t, const ExtReal& one_minus_t, int k, int p) {
  return pow(t, static_cast<long>(k)) * pow(one_minus_t, static_cast<long>(p));
}

void require_unit_interval(const ExtReal& t) {
  if (t.sign() < 0 || t > ExtReal(1L, t.digits())) {
    throw std::invalid_argument("t must lie in [0, 1], got " + t.to_string(10));
  }
}

}  // namespace

PiRational quarter_turn_term(int k) {
  mpz_class denom;
  mpz_fac_ui(denom.get_mpz_t(), static_cast<unsigned long>(k));
  denom <<= static_cast<mp_bitcnt_t>(k);
  return PiRational(mpq_class(mpz_class(1), denom), k);
}

int exponent_rule(int spline_order, int k) {
  const int start = start_index_for(spline_order);
  if (k < start) {
    throw std::invalid_argument("exponent rule starts at k = " + std::to_string(start) +
                                ", got k = " + std::to_string(k));
  }
  const int r = k % 4;
  if (spline_order == 1) return (r == 1 || r == 2) ? 2 : 3;
  return (r == 2 || r == 3) ? 3 : 4;
}

int exponent_rule_floor_form(int spline_order, int k) {
  start_index_for(spline_order);
  // floor(5/2 + (-1)^floor((k+1)/2) / 2) and floor(7/2 + (-1)^floor(k/2) / 2)
  if (spline_order == 1) {
    const int s = ((k + 1) / 2) % 2 == 0 ? 1 : -1;
    return (5 + s) / 2;
  }
  const int s = (k / 2) % 2 == 0 ? 1 : -1;
  return (7 + s) / 2;
}

int ErrorSeries::exponent(int k) const { return exponent_rule(spline_order, k); }

ErrorSeries order1_coefficients(int max_index) {
  if (max_index < 2) throw std::invalid_argument("order-1 error series needs K >= 2");
  std::vector<PiRational> c;
  c.reserve(static_cast<std::size_t>(max_index) + 1);
  c.emplace_back(-1L);
  c.push_back(c[0] * mpq_class(2) + PiRational::pi_power(1, mpq_class(1, 2)));
  c.push_back(c[1] * mpq_class(2) - c[0]);
  if (max_index >= 3) c.push_back(c[2] + c[1] - c[0] - quarter_turn_term(3));
  for (int k = 4; k <= max_index; ++k) {
    const auto at = [&](int j) -> const PiRational& { return c[static_cast<std::size_t>(k - j)]; };
    PiRational next;
    switch (k % 4) {
      case 0:
        next = at(1) * mpq_class(3) - at(2);
        break;
      case 1:
        next = at(1) * mpq_class(2) - at(3) + quarter_turn_term(k);
        break;
      case 2:
        next = at(1) * mpq_class(2) - at(2) * mpq_class(3) + at(3);
        break;
      default:
        next = at(2) * mpq_class(3) - at(3) * mpq_class(4) - at(4) + at(5) - quarter_turn_term(k);
        break;
    }
    c.push_back(std::move(next));
  }
  return {1, std::move(c), 2};
}

ErrorSeries order2_coefficients(int max_index) {
  if (max_index < 3) throw std::invalid_argument("order-2 error series needs K >= 3");
  std::vector<PiRational> c;
  c.reserve(static_cast<std::size_t>(max_index) + 1);
  c.emplace_back(-1L);
  c.push_back(c[0] * mpq_class(2) + PiRational::pi_power(1, mpq_class(1, 2)));
  c.push_back(c[1] * mpq_class(2) - c[0] + quarter_turn_term(2));
  c.push_back(c[2] + c[1] * mpq_class(4) - c[0] - quarter_turn_term(3));
  if (max_index >= 4) c.push_back(c[3] * mpq_class(3) - c[2] * mpq_class(2) - c[1] * mpq_class(4) - c[0]);
  if (max_index >= 5) c.push_back(c[4] * mpq_class(3) - c[2] - c[1] * mpq_class(3) + quarter_turn_term(5));
  for (int k = 6; k <= max_index; ++k) {
    const auto at = [&](int j) -> const PiRational& { return c[static_cast<std::size_t>(k - j)]; };
    PiRational next;
    switch (k % 4) {
      case 2:
        next = at(1) * mpq_class(4) - at(2) * mpq_class(6) + at(3);
        break;
      case 3:
        next = at(1) * mpq_class(2) - at(2) * mpq_class(2) - at(3) * mpq_class(2) + at(4) -
               quarter_turn_term(k);
        break;
      case 0:
        next = at(1) * mpq_class(3) - at(2) * mpq_class(3) + at(3) * mpq_class(4) - at(4);
        break;
      default:
        next = at(1) * mpq_class(4) - at(2) * mpq_class(3) + at(3) - at(4) + quarter_turn_term(k);
        break;
    }
    c.push_back(std::move(next));
  }
  return {2, std::move(c), 3};
}

ExtReal eval_error_series(const ErrorSeries& series, const ExtReal& t, int terms) {
  require_unit_interval(t);
  if (terms < 0) throw std::invalid_argument("term count must be >= 0");
  const int last = series.start_index + terms - 1;
  if (last > series.max_index()) {
    throw std::invalid_argument("series holds coefficients up to k = " +
                                std::to_string(series.max_index()) + ", need " + std::to_string(last));
  }
  const int digits = t.digits();
  if (t.is_zero() || t == ExtReal(1L, digits)) return ExtReal::zero(digits);
  const ExtReal one_minus_t = ExtReal(1L, digits) - t;
  ExtReal sum = ExtReal::zero(digits);
  for (int k = series.start_index; k <= last; ++k) {
    sum += to_ext_real(series.coeffs[static_cast<std::size_t>(k)], digits) *
           basis_value(t, one_minus_t, k, series.exponent(k));
  }
  return sum;
}

ExactPoly error_series_poly(const ErrorSeries& series, int terms) {
  const int last = series.start_index + terms - 1;
  if (terms < 0) throw std::invalid_argument("term count must be >= 0");
  if (last > series.max_index()) {
    throw std::invalid_argument("series holds coefficients up to k = " +
                                std::to_string(series.max_index()) + ", need " + std::to_string(last));
  }
  ExactPoly out(Variable::T_on_0_1);
  for (int k = series.start_index; k <= last; ++k) {
    out += basis_term(k, series.exponent(k)) * series.coeffs[static_cast<std::size_t>(k)];
  }
  return out;
}

std::vector<PiRational> taylor_error_coefficients(int spline_order, int count) {
  start_index_for(spline_order);
  const ExactPoly f_t = x_to_t(sine_spline(spline_order).poly);
  std::vector<PiRational> out;
  for (int j = 0; j < count; ++j) {
    PiRational sin_term;
    if (j % 2 == 1) {
      sin_term = quarter_turn_term(j) * mpq_class(j % 4 == 1 ? 1 : -1);
    }
    out.push_back(sin_term - f_t.coefficient(static_cast<std::size_t>(j)));
  }
  return out;
}

std::string to_string(SeriesVariant v) { return v == SeriesVariant::order1 ? "order1" : "order2"; }

int SineSeries::exponent(int k) const {
  if (k < first_index) throw std::invalid_argument("index below first series term");
  if (variant == SeriesVariant::order1) return k == 1 ? 2 : exponent_rule(1, k);
  if (k <= 1) return 4;
  if (k == 2) return 3;
  return exponent_rule(2, k);
}

SineSeries make_sine_series(SeriesVariant variant, int max_index) {
  if (max_index < 2) throw std::invalid_argument("sine series needs K >= 2");
  const PiRational pi_sq_8 = PiRational::pi_power(2, mpq_class(1, 8));
  SineSeries s;
  s.variant = variant;
  if (variant == SeriesVariant::order1) {
    // t + t(1-t)
    s.head = ExactPoly({PiRational(), PiRational(2L), PiRational(-1L)}, Variable::T_on_0_1);
    s.first_index = 1;
    s.coeffs = order1_coefficients(max_index).coeffs;
    // 2(-1 + pi/4), the same value as the error-series seed
    s.coeffs[1] = PiRational(-2L) + PiRational::pi_power(1, mpq_class(1, 2));
    return s;
  }
  // 1 - pi^2/8 (1-t)^2
  s.head = ExactPoly({PiRational(1L) - pi_sq_8, pi_sq_8 * mpq_class(2), -pi_sq_8}, Variable::T_on_0_1);
  s.first_index = 0;
  s.coeffs = max_index >= 3 ? order2_coefficients(max_index).coeffs : std::vector<PiRational>(3);
  s.coeffs.resize(static_cast<std::size_t>(max_index) + 1);
  s.coeffs[0] = PiRational(-1L) + pi_sq_8;
  s.coeffs[1] = PiRational(-4L) + PiRational::pi_power(1, mpq_class(1, 2)) + pi_sq_8 * mpq_class(2);
  s.coeffs[2] = PiRational(-10L) + PiRational::pi_power(1, mpq_class(2)) + pi_sq_8 * mpq_class(3);
  return s;
}

ExtReal sine_series_eval(SeriesVariant variant, const ExtReal& x, int n) {
  const int digits = x.digits();
  const ExtReal half_pi = pi(digits) / ExtReal(2L, digits);
  if (x.sign() < 0 || x > half_pi) {
    throw std::invalid_argument("x must lie in [0, pi/2], got " + x.to_string(10));
  }
  const SineSeries s = make_sine_series(variant, n < 2 ? 2 : n);
  const ExtReal t = x / half_pi;
  const ExtReal one_minus_t = ExtReal(1L, digits) - t;
  ExtReal sum = horner_eval(s.head, t, Variable::T_on_0_1);
  for (int k = s.first_index; k <= n; ++k) {
    sum += to_ext_real(s.coeffs[static_cast<std::size_t>(k)], digits) *
           basis_value(t, one_minus_t, k, s.exponent(k));
  }
  return sum;
}

ExactPoly sine_series_poly(SeriesVariant variant, int n) {
  const SineSeries s = make_sine_series(variant, n < 2 ? 2 : n);
  ExactPoly out = s.head;
  for (int k = s.first_index; k <= n; ++k) {
    out += basis_term(k, s.exponent(k)) * s.coeffs[static_cast<std::size_t>(k)];
  }
  return t_to_x(out);
}

}  // namespace splinebound
