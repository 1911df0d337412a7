#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "splinebound/ext_real.hpp"
#include "splinebound/pi_rational.hpp"

namespace splinebound {

/// Which abscissa a polynomial is written in.
enum class Variable {
  X_on_0_halfpi,  ///< x in [0, pi/2]
  T_on_0_1,       ///< t = 2x/pi in [0, 1]
};

std::string to_string(Variable v);

/// Dense univariate polynomial, coefficients indexed by power.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients and degree -1. Arithmetic between polynomials in
/// different variables throws std::invalid_argument.
template <class Scalar>
class Poly {
 public:
  explicit Poly(Variable variable = Variable::X_on_0_halfpi) : variable_(variable) {}
  Poly(std::vector<Scalar> coefficients, Variable variable)
      : coefficients_(std::move(coefficients)), variable_(variable) {
    trim();
  }

  static Poly constant(const Scalar& value, Variable variable) { return Poly({value}, variable); }
  /// value * v^power
  static Poly monomial(const Scalar& value, std::size_t power, Variable variable) {
    std::vector<Scalar> c(power + 1, Scalar{});
    c[power] = value;
    return Poly(std::move(c), variable);
  }

  Variable variable() const { return variable_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coefficients_; }

  /// Coefficient of v^power; zero beyond the degree.
  Scalar coefficient(std::size_t power) const {
    return power < coefficients_.size() ? coefficients_[power] : Scalar{};
  }

  Poly operator-() const {
    Poly out(*this);
    for (auto& c : out.coefficients_) c = -c;
    return out;
  }

  Poly& operator+=(const Poly& rhs) {
    require_same_variable(rhs);
    if (rhs.coefficients_.size() > coefficients_.size()) {
      coefficients_.resize(rhs.coefficients_.size(), Scalar{});
    }
    for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) coefficients_[k] += rhs.coefficients_[k];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& rhs) { return *this += -rhs; }

  Poly& operator*=(const Poly& rhs) {
    require_same_variable(rhs);
    if (is_zero() || rhs.is_zero()) {
      coefficients_.clear();
      return *this;
    }
    std::vector<Scalar> product(coefficients_.size() + rhs.coefficients_.size() - 1, Scalar{});
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
      if (is_zero_scalar(coefficients_[i])) continue;
      for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
        product[i + j] += coefficients_[i] * rhs.coefficients_[j];
      }
    }
    coefficients_ = std::move(product);
    trim();
    return *this;
  }

  Poly& operator*=(const Scalar& s) {
    for (auto& c : coefficients_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.variable_ == b.variable_ && a.coefficients_ == b.coefficients_;
  }

  Poly derivative() const {
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < coefficients_.size(); ++k) {
      d.push_back(coefficients_[k] * Scalar(static_cast<long>(k)));
    }
    return Poly(std::move(d), variable_);
  }

  /// p(offset + scale * v), written in `result_variable`.
  Poly compose_affine(const Scalar& offset, const Scalar& scale, Variable result_variable) const {
    Poly linear({offset, scale}, result_variable);
    Poly result(result_variable);
    for (std::size_t k = coefficients_.size(); k-- > 0;) {
      result = result * linear + Poly::constant(coefficients_[k], result_variable);
    }
    return result;
  }

  /// Same coefficients under another variable tag.
  Poly retagged(Variable variable) const { return Poly(coefficients_, variable); }

 private:
  static bool is_zero_scalar(const Scalar& s) { return splinebound::is_zero(s); }

  void require_same_variable(const Poly& rhs) const {
    if (rhs.variable_ != variable_) {
      throw std::invalid_argument("polynomial variable mismatch: " + to_string(variable_) +
                                  " vs " + to_string(rhs.variable_));
    }
  }

  void trim() {
    while (!coefficients_.empty() && is_zero_scalar(coefficients_.back())) coefficients_.pop_back();
  }

  std::vector<Scalar> coefficients_;
  Variable variable_;
};

using ExactPoly = Poly<PiRational>;
using DecimalPoly = Poly<ExtReal>;

/// Coefficient-wise to_ext_real at `digits` significant digits.
DecimalPoly to_decimal_poly(const ExactPoly& p, int digits);

/// Nested-multiplication evaluation at x's precision context. `x_variable`
/// states the convention x is expressed in; a mismatch throws
/// std::invalid_argument.
ExtReal horner_eval(const DecimalPoly& p, const ExtReal& x, Variable x_variable);
ExtReal horner_eval(const ExactPoly& p, const ExtReal& x, Variable x_variable);
/// Evaluation in the polynomial's own convention.
ExtReal horner_eval(const DecimalPoly& p, const ExtReal& x);

/// Exact evaluation at a pi-rational point.
PiRational exact_eval(const ExactPoly& p, const PiRational& x);

/// Maps sum a_k v^k (k >= 1) to sum (a_k / k) v^k, i.e. the integral of
/// p(lambda)/lambda from 0 to v. Throws std::invalid_argument on a nonzero
/// constant term or a polynomial not written in x.
ExactPoly integrate_over_lambda(const ExactPoly& p);

/// t = 2x/pi substitution in either direction.
ExactPoly x_to_t(const ExactPoly& p);
ExactPoly t_to_x(const ExactPoly& p);

/// p(v) / v for a polynomial with zero constant term.
ExactPoly divide_by_variable(const ExactPoly& p);

/// sum (v^k coefficient) as text, e.g. "x + (12*pi^-2 - 4*pi^-1)*x^2".
std::string to_string(const ExactPoly& p);

}  // namespace splinebound
