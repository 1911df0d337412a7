#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "splinebound/poly.hpp"
#include "splinebound/types.hpp"

namespace splinebound {

/// Function values and derivatives f^(k) at the two interpolation points.
template <class Scalar>
struct EndpointData {
  Scalar alpha;
  Scalar beta;
  std::vector<Scalar> derivs_alpha;  ///< f(alpha), f'(alpha), ..., f^(n)(alpha)
  std::vector<Scalar> derivs_beta;
};

/// Degree <= 2n+1 polynomial matching value and first n derivatives at both
/// endpoints.
template <class Scalar>
struct SplineApproximant {
  int order = 0;
  Poly<Scalar> poly;
  Target target = Target::generic;
};

namespace detail {

// (n+i)! / (i! n!) = C(n+i, i)
inline mpz_class spline_weight(unsigned n, unsigned i) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n + i, i);
  return out;
}

inline mpz_class factorial(unsigned k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

// Integer-coefficient polynomial in u.
template <class Scalar>
Poly<Scalar> integer_poly(const std::vector<long>& c) {
  std::vector<Scalar> out;
  out.reserve(c.size());
  for (long v : c) out.push_back(Scalar(v));
  return Poly<Scalar>(std::move(out), Variable::X_on_0_halfpi);
}

}  // namespace detail

/// Two-point spline approximant of order n.
///
/// Works in the normalized abscissa u = (x - alpha)/h, h = beta - alpha:
///
///   f_n = (1-u)^(n+1) sum_k [h^k f^(k)(alpha)/k!] u^k sum_i C(n+i,i) u^i
///       + u^(n+1) sum_k [(-h)^k f^(k)(beta)/k!] (1-u)^k sum_i C(n+i,i) (1-u)^i
///
/// and then substitutes u back in terms of x. For PiRational data h must be a
/// single pi-power term (its inverse has to stay pi-rational); the sine and
/// cosine cases on [0, pi/2] satisfy this.
template <class Scalar>
SplineApproximant<Scalar> two_point_spline(const EndpointData<Scalar>& data, int n,
                                           Target target = Target::generic) {
  if (n < 0) throw std::invalid_argument("spline order must be >= 0");
  const auto need = static_cast<std::size_t>(n) + 1;
  if (data.derivs_alpha.size() != need || data.derivs_beta.size() != need) {
    throw std::invalid_argument("endpoint data must hold exactly n+1 = " + std::to_string(need) +
                                " derivative values at each end");
  }
  const Variable u_var = Variable::X_on_0_halfpi;
  const Scalar h = data.beta - data.alpha;
  if (sign(h) <= 0) throw std::invalid_argument("spline interval needs alpha < beta");
  const Poly<Scalar> u = detail::integer_poly<Scalar>({0, 1});
  const Poly<Scalar> one_minus_u = detail::integer_poly<Scalar>({1, -1});
  const auto un = static_cast<unsigned>(n);

  // Powers of u and (1-u) up to n+1.
  std::vector<Poly<Scalar>> u_pow{Poly<Scalar>::constant(Scalar(1L), u_var)};
  std::vector<Poly<Scalar>> w_pow{Poly<Scalar>::constant(Scalar(1L), u_var)};
  for (unsigned k = 0; k <= un; ++k) {
    u_pow.push_back(u_pow.back() * u);
    w_pow.push_back(w_pow.back() * one_minus_u);
  }

  Poly<Scalar> left(u_var);
  Poly<Scalar> right(u_var);
  Scalar h_pow(1L);
  Scalar neg_h_pow(1L);
  for (unsigned k = 0; k <= un; ++k) {
    Poly<Scalar> inner_u(u_var);
    Poly<Scalar> inner_w(u_var);
    for (unsigned i = 0; i + k <= un; ++i) {
      const Scalar weight(mpq_class(detail::spline_weight(un, i)));
      inner_u += u_pow[i] * weight;
      inner_w += w_pow[i] * weight;
    }
    const mpq_class inv_fact(mpz_class(1), detail::factorial(k));
    const Scalar a = h_pow * data.derivs_alpha[k] * Scalar(inv_fact);
    const Scalar b = neg_h_pow * data.derivs_beta[k] * Scalar(inv_fact);
    left += u_pow[k] * inner_u * a;
    right += w_pow[k] * inner_w * b;
    h_pow = h_pow * h;
    neg_h_pow = neg_h_pow * (-h);
  }
  const Poly<Scalar> in_u = w_pow[un + 1] * left + u_pow[un + 1] * right;

  // u = (x - alpha)/h
  const Scalar h_inv = inverse(h);
  const Scalar offset = -(data.alpha * h_inv);
  return {n, in_u.compose_affine(offset, h_inv, Variable::X_on_0_halfpi), target};
}

/// Endpoint data for sin on [0, pi/2]: f^(k)(x) = sin(x + k pi/2).
EndpointData<PiRational> sine_endpoint_data(int n);
/// Endpoint data for cos on [0, pi/2].
EndpointData<PiRational> cosine_endpoint_data(int n);

/// f_n: the order-n spline approximant to sin(x) on [0, pi/2].
SplineApproximant<PiRational> sine_spline(int n);

/// g_n: the order-n spline approximant to cos(y) on [0, pi/2], built
/// directly from cosine endpoint data.
SplineApproximant<PiRational> cosine_spline(int n);

}  // namespace splinebound
