#include "splinebound/pi_rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace splinebound {

PiRational::PiRational(long value) : PiRational(mpq_class(value)) {}

PiRational::PiRational(const mpq_class& value, int pi_power) {
  add_term(pi_power, value);
}

PiRational PiRational::pi_power(int power, const mpq_class& q) { return PiRational(q, power); }

PiRational PiRational::from_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw std::invalid_argument("not a decimal literal: " + std::string(text));
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') {
      throw std::invalid_argument("not a decimal literal: " + std::string(text));
    }
    std::string exponent(text.substr(pos + 1));
    char* end = nullptr;
    long e = std::strtol(exponent.c_str(), &end, 10);
    if (exponent.empty() || *end != '\0') {
      throw std::invalid_argument("bad exponent in decimal literal: " + std::string(text));
    }
    scale += e;
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  mpq_class q = scale < 0 ? mpq_class(mantissa, ten_power) : mpq_class(mantissa * ten_power);
  q.canonicalize();
  return PiRational(q);
}

mpq_class PiRational::coefficient(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void PiRational::add_term(int power, const mpq_class& raw) {
  mpq_class q(raw);
  q.canonicalize();
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(power, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

PiRational PiRational::operator-() const {
  PiRational out(*this);
  for (auto& [power, q] : out.terms_) q = -q;
  return out;
}

PiRational& PiRational::operator+=(const PiRational& rhs) {
  for (const auto& [power, q] : rhs.terms_) add_term(power, q);
  return *this;
}

PiRational& PiRational::operator-=(const PiRational& rhs) {
  for (const auto& [power, q] : rhs.terms_) add_term(power, -q);
  return *this;
}

PiRational& PiRational::operator*=(const PiRational& rhs) {
  PiRational product;
  for (const auto& [pa, qa] : terms_) {
    for (const auto& [pb, qb] : rhs.terms_) product.add_term(pa + pb, qa * qb);
  }
  terms_ = std::move(product.terms_);
  return *this;
}

PiRational& PiRational::operator*=(const mpq_class& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [power, q] : terms_) q *= rhs;
  return *this;
}

PiRational& PiRational::operator/=(const mpq_class& rhs) {
  if (rhs == 0) throw std::domain_error("PiRational division by zero");
  for (auto& [power, q] : terms_) q /= rhs;
  return *this;
}

std::string PiRational::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [power, q] : terms_) {
    mpq_class magnitude = abs(q);
    if (first) {
      if (q < 0) out += "-";
    } else {
      out += q < 0 ? " - " : " + ";
    }
    first = false;
    std::string factor;
    if (power == 1) {
      factor = "pi";
    } else if (power != 0) {
      factor = "pi^" + std::to_string(power);
    }
    if (factor.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += factor;
    } else {
      out += magnitude.get_str() + "*" + factor;
    }
  }
  return out;
}

PiRational inverse(const PiRational& value) {
  if (value.is_zero()) throw std::domain_error("inverse of zero");
  if (!value.is_monomial()) {
    throw std::domain_error("inverse of " + value.to_string() + " is not pi-rational");
  }
  const auto& [power, q] = *value.terms().begin();
  return PiRational::pi_power(-power, 1 / q);
}

PiRational power(const PiRational& base, unsigned exponent) {
  PiRational result(1L);
  PiRational square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

ExtReal to_ext_real(const PiRational& value, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  if (value.is_zero()) return ExtReal::zero(digits);

  const long term_count = static_cast<long>(value.terms().size());
  int work = digits + 10;
  for (;;) {
    const ExtReal p = pi(work);
    ExtReal sum = ExtReal::zero(work);
    ExtReal weighted_magnitude = ExtReal::zero(work);
    for (const auto& [power, q] : value.terms()) {
      ExtReal term = ExtReal(q, work) * pow(p, static_cast<long>(power));
      sum += term;
      weighted_magnitude += abs(term) * ExtReal(std::labs(power) + 3 + term_count, work);
    }
    // Each term carries relative error below (|j| + 3) units of roundoff and
    // the summation adds at most term_count more.
    ExtReal error_bound = weighted_magnitude;
    mpfr_mul_2si(error_bound.get(), error_bound.get(), -static_cast<long>(bits_for_digits(work)),
                 MPFR_RNDU);
    if (!sum.is_zero()) {
      ExtReal tolerance = abs(sum) * ExtReal(mpq_class(1, 4), work);
      ExtReal ten_power = pow(ExtReal(10L, work), -static_cast<long>(digits));
      if (error_bound <= tolerance * ten_power) return sum.with_digits(digits);
    }
    work *= 2;
  }
}

int sign(const PiRational& value) {
  if (value.is_zero()) return 0;
  return to_ext_real(value, 5).sign();
}

nlohmann::json to_json(const PiRational& value) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [power, q] : value.terms()) {
    terms.push_back({{"pi_pow", power},
                     {"num", q.get_num().get_str()},
                     {"den", q.get_den().get_str()}});
  }
  return {{"terms", terms}};
}

PiRational pi_rational_from_json(const nlohmann::json& doc) {
  PiRational out;
  for (const auto& term : doc.at("terms")) {
    mpz_class num(term.at("num").get<std::string>(), 10);
    mpz_class den(term.at("den").get<std::string>(), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in PiRational JSON");
    mpq_class q(num, den);
    q.canonicalize();
    out += PiRational(q, term.at("pi_pow").get<int>());
  }
  return out;
}

}  // namespace splinebound
