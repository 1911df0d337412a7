#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace splinebound {

/// Default working context, in significant decimal digits.
inline constexpr int kDefaultDigits = 50;

/// Extended-precision real backed by MPFR.
///
/// Every value carries its own precision context, expressed in significant
/// decimal digits. Binary operations run at the larger of the two operand
/// contexts, so there is no global precision state to manage.
class ExtReal {
 public:
  ExtReal() : ExtReal(0L) {}
  ExtReal(long value, int digits = kDefaultDigits);  // NOLINT(implicit)
  ExtReal(const mpq_class& value, int digits = kDefaultDigits);
  ExtReal(const mpz_class& value, int digits = kDefaultDigits);

  /// Parses a decimal literal such as "-1.98412876e-4".
  static ExtReal from_string(std::string_view text, int digits = kDefaultDigits);
  static ExtReal zero(int digits) { return ExtReal(0L, digits); }

  ExtReal(const ExtReal& other);
  ExtReal(ExtReal&& other) noexcept;
  ExtReal& operator=(const ExtReal& other);
  ExtReal& operator=(ExtReal&& other) noexcept;
  ~ExtReal();

  int digits() const { return digits_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  /// Copy re-rounded to a different context.
  ExtReal with_digits(int digits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific decimal rendering with `sig_digits` significant digits,
  /// rounded to nearest (ties to even). Trailing zeros in the mantissa are
  /// dropped; zero renders as "0".
  std::string to_string(int sig_digits) const;
  /// Same as to_string but keeps trailing zeros.
  std::string to_string_fixed_width(int sig_digits) const;

  ExtReal operator-() const;
  ExtReal& operator+=(const ExtReal& rhs);
  ExtReal& operator-=(const ExtReal& rhs);
  ExtReal& operator*=(const ExtReal& rhs);
  ExtReal& operator/=(const ExtReal& rhs);

  friend ExtReal operator+(ExtReal lhs, const ExtReal& rhs) { return lhs += rhs; }
  friend ExtReal operator-(ExtReal lhs, const ExtReal& rhs) { return lhs -= rhs; }
  friend ExtReal operator*(ExtReal lhs, const ExtReal& rhs) { return lhs *= rhs; }
  friend ExtReal operator/(ExtReal lhs, const ExtReal& rhs) { return lhs /= rhs; }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const ExtReal& a, const ExtReal& b);

 private:
  void reset_precision(int digits);

  mpfr_t value_;
  int digits_;
};

/// Binary precision used for a context of `digits` significant decimal digits.
mpfr_prec_t bits_for_digits(int digits);

/// pi at the requested context. Each context is computed once and cached.
ExtReal pi(int digits);

ExtReal abs(const ExtReal& x);
ExtReal sqrt(const ExtReal& x);
ExtReal sin(const ExtReal& x);
ExtReal cos(const ExtReal& x);
ExtReal tan(const ExtReal& x);
ExtReal exp(const ExtReal& x);
ExtReal log(const ExtReal& x);
ExtReal pow(const ExtReal& base, const ExtReal& exponent);
ExtReal pow(const ExtReal& base, long exponent);
ExtReal inverse(const ExtReal& x);

/// floor(log10(|x|)) for nonzero x.
long decimal_exponent(const ExtReal& x);

inline bool is_zero(const ExtReal& x) { return x.is_zero(); }

inline int sign(const ExtReal& v) { return v.sign(); }

}  // namespace splinebound
