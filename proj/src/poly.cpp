#include "splinebound/poly.hpp"

namespace splinebound {

std::string to_string(Variable v) {
  switch (v) {
    case Variable::X_on_0_halfpi:
      return "x";
    case Variable::T_on_0_1:
      return "t";
  }
  return "?";
}

DecimalPoly to_decimal_poly(const ExactPoly& p, int digits) {
  std::vector<ExtReal> c;
  c.reserve(p.coefficients().size());
  for (const auto& a : p.coefficients()) c.push_back(to_ext_real(a, digits));
  return DecimalPoly(std::move(c), p.variable());
}

ExtReal horner_eval(const DecimalPoly& p, const ExtReal& x) {
  ExtReal acc = ExtReal::zero(x.digits());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc.with_digits(x.digits());
}

ExtReal horner_eval(const DecimalPoly& p, const ExtReal& x, Variable x_variable) {
  if (x_variable != p.variable()) {
    throw std::invalid_argument("evaluation point is in " + to_string(x_variable) +
                                " but polynomial is in " + to_string(p.variable()));
  }
  return horner_eval(p, x);
}

ExtReal horner_eval(const ExactPoly& p, const ExtReal& x, Variable x_variable) {
  if (x_variable != p.variable()) {
    throw std::invalid_argument("evaluation point is in " + to_string(x_variable) +
                                " but polynomial is in " + to_string(p.variable()));
  }
  return horner_eval(to_decimal_poly(p, x.digits()), x);
}

PiRational exact_eval(const ExactPoly& p, const PiRational& x) {
  PiRational acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactPoly integrate_over_lambda(const ExactPoly& p) {
  if (p.variable() != Variable::X_on_0_halfpi) {
    throw std::invalid_argument("integrate_over_lambda expects a polynomial in x");
  }
  if (!p.coefficient(0).is_zero()) {
    throw std::invalid_argument("integrand p(lambda)/lambda is singular at 0: constant term " +
                                p.coefficient(0).to_string());
  }
  std::vector<PiRational> c(p.coefficients().size());
  for (std::size_t k = 1; k < c.size(); ++k) c[k] = p.coefficients()[k] / static_cast<long>(k);
  return ExactPoly(std::move(c), Variable::X_on_0_halfpi);
}

namespace {

// Multiplies the v^k coefficient by factor^k.
ExactPoly rescale(const ExactPoly& p, const PiRational& factor, Variable result) {
  std::vector<PiRational> c(p.coefficients().size());
  PiRational scale(1L);
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = p.coefficients()[k] * scale;
    scale *= factor;
  }
  return ExactPoly(std::move(c), result);
}

}  // namespace

ExactPoly x_to_t(const ExactPoly& p) {
  if (p.variable() != Variable::X_on_0_halfpi) throw std::invalid_argument("x_to_t expects x");
  return rescale(p, PiRational::pi_power(1, mpq_class(1, 2)), Variable::T_on_0_1);
}

ExactPoly t_to_x(const ExactPoly& p) {
  if (p.variable() != Variable::T_on_0_1) throw std::invalid_argument("t_to_x expects t");
  return rescale(p, PiRational::pi_power(-1, 2), Variable::X_on_0_halfpi);
}

ExactPoly divide_by_variable(const ExactPoly& p) {
  if (!p.coefficient(0).is_zero()) {
    throw std::invalid_argument("polynomial has a nonzero constant term");
  }
  if (p.is_zero()) return p;
  std::vector<PiRational> c(p.coefficients().begin() + 1, p.coefficients().end());
  return ExactPoly(std::move(c), p.variable());
}

std::string to_string(const ExactPoly& p) {
  if (p.is_zero()) return "0";
  const std::string v = to_string(p.variable());
  std::string out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    const auto& a = p.coefficients()[k];
    if (a.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string power = k == 0 ? "" : (k == 1 ? v : v + "^" + std::to_string(k));
    if (power.empty()) {
      out += "(" + a.to_string() + ")";
    } else if (a == PiRational(1L)) {
      out += power;
    } else {
      out += "(" + a.to_string() + ")*" + power;
    }
  }
  return out;
}

}  // namespace splinebound
