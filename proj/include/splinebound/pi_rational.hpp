#pragma once

#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include "json.hpp"

#include "splinebound/ext_real.hpp"

namespace splinebound {

/// Exact number of the form sum_j q_j * pi^j with rational q_j and integer j.
///
/// Canonical form: every q_j is in lowest terms with a positive denominator
/// and no stored q_j is zero, so structural equality is value equality
/// (pi is transcendental). Negative powers are allowed; coefficients such
/// as 80/pi^3 need them.
class PiRational {
 public:
  using Terms = std::map<int, mpq_class>;

  PiRational() = default;
  PiRational(long value);                          // NOLINT(implicit)
  PiRational(const mpq_class& value, int pi_power = 0);  // NOLINT(implicit)

  /// q * pi^power.
  static PiRational pi_power(int power, const mpq_class& q = 1);
  static PiRational pi() { return pi_power(1); }

  /// Exact rational from a decimal literal ("8.33165e-3", "-0.1699", "7").
  static PiRational from_decimal(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Zero or a single q * pi^j term.
  bool is_monomial() const { return terms_.size() <= 1; }
  /// q_j, zero when absent.
  mpq_class coefficient(int power) const;

  PiRational operator-() const;
  PiRational& operator+=(const PiRational& rhs);
  PiRational& operator-=(const PiRational& rhs);
  PiRational& operator*=(const PiRational& rhs);
  PiRational& operator*=(const mpq_class& rhs);
  PiRational& operator/=(const mpq_class& rhs);

  friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
  friend PiRational operator-(PiRational a, const PiRational& b) { return a -= b; }
  friend PiRational operator*(PiRational a, const PiRational& b) { return a *= b; }
  friend PiRational operator/(PiRational a, const mpq_class& b) { return a /= b; }
  friend PiRational operator/(PiRational a, long b) { return a /= mpq_class(b); }

  friend bool operator==(const PiRational& a, const PiRational& b) {
    return a.terms_ == b.terms_;
  }

  /// Human-readable form, e.g. "-3 + pi + 1/8*pi^2" or "80*pi^-3".
  std::string to_string() const;

 private:
  void add_term(int power, const mpq_class& q);

  Terms terms_;
};

/// Multiplicative inverse of a monomial; throws std::domain_error otherwise
/// (1/(pi - 3) has no pi-rational form).
PiRational inverse(const PiRational& value);

/// Non-negative integer power.
PiRational power(const PiRational& base, unsigned exponent);

inline bool is_zero(const PiRational& x) { return x.is_zero(); }

/// Decimal value correct to `digits` significant digits:
/// |result - exact| <= 10^(1 - digits) * |exact|.
/// Working precision is raised until cancellation between pi-power terms is
/// resolved, so tiny results built from O(1) terms are still accurate.
ExtReal to_ext_real(const PiRational& value, int digits);

/// Sign of the exact value (-1, 0, 1).
int sign(const PiRational& value);

/// {"terms": [{"pi_pow": j, "num": "...", "den": "..."}]}
nlohmann::json to_json(const PiRational& value);
PiRational pi_rational_from_json(const nlohmann::json& doc);

}  // namespace splinebound
