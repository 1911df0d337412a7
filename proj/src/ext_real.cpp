#include "splinebound/ext_real.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace splinebound {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;

void require_digits(int digits) {
  if (digits < 1) throw std::invalid_argument("precision context must be >= 1 digit");
}

}  // namespace

mpfr_prec_t bits_for_digits(int digits) {
  require_digits(digits);
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 8;
}

ExtReal::ExtReal(long value, int digits) : digits_(digits) {
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

ExtReal::ExtReal(const mpq_class& value, int digits) : digits_(digits) {
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

ExtReal::ExtReal(const mpz_class& value, int digits) : digits_(digits) {
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

ExtReal ExtReal::from_string(std::string_view text, int digits) {
  ExtReal out = zero(digits);
  std::string buffer(text);
  char* end = nullptr;
  mpfr_strtofr(out.value_, buffer.c_str(), &end, 10, MPFR_RNDN);
  if (buffer.empty() || end != buffer.c_str() + buffer.size()) {
    throw std::invalid_argument("not a decimal number: '" + buffer + "'");
  }
  return out;
}

ExtReal::ExtReal(const ExtReal& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

ExtReal::ExtReal(ExtReal&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

ExtReal& ExtReal::operator=(const ExtReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

ExtReal& ExtReal::operator=(ExtReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  return *this;
}

ExtReal::~ExtReal() { mpfr_clear(value_); }

void ExtReal::reset_precision(int digits) {
  if (digits == digits_) return;
  mpfr_prec_round(value_, bits_for_digits(digits), MPFR_RNDN);
  digits_ = digits;
}

ExtReal ExtReal::with_digits(int digits) const {
  ExtReal out(*this);
  out.reset_precision(digits);
  return out;
}

std::string ExtReal::to_string_fixed_width(int sig_digits) const {
  require_digits(sig_digits);
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<size_t>(sig_digits), value_,
                           MPFR_RNDN);
  std::string mantissa(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  std::string out = sign + mantissa.substr(0, 1);
  if (mantissa.size() > 1) out += "." + mantissa.substr(1);
  long e = static_cast<long>(exponent) - 1;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

std::string ExtReal::to_string(int sig_digits) const {
  std::string s = to_string_fixed_width(sig_digits);
  auto epos = s.find('e');
  std::string tail = epos == std::string::npos ? "" : s.substr(epos);
  std::string head = s.substr(0, epos);
  if (head.find('.') != std::string::npos) {
    while (head.back() == '0') head.pop_back();
    if (head.back() == '.') head.pop_back();
  }
  return head + tail;
}

ExtReal ExtReal::operator-() const {
  ExtReal out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

ExtReal& ExtReal::operator+=(const ExtReal& rhs) {
  reset_precision(std::max(digits_, rhs.digits_));
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ExtReal& ExtReal::operator-=(const ExtReal& rhs) {
  reset_precision(std::max(digits_, rhs.digits_));
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ExtReal& ExtReal::operator*=(const ExtReal& rhs) {
  reset_precision(std::max(digits_, rhs.digits_));
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

ExtReal& ExtReal::operator/=(const ExtReal& rhs) {
  if (rhs.is_zero()) throw std::domain_error("ExtReal division by zero");
  reset_precision(std::max(digits_, rhs.digits_));
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

ExtReal pi(int digits) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const ExtReal>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[digits];
  if (!slot) {
    auto value = std::make_unique<ExtReal>(0L, digits);
    mpfr_const_pi(value->get(), MPFR_RNDN);
    slot = std::move(value);
  }
  return *slot;
}

namespace {

template <class Fn>
ExtReal unary(const ExtReal& x, Fn fn) {
  ExtReal out = ExtReal::zero(x.digits());
  fn(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

ExtReal abs(const ExtReal& x) { return unary(x, mpfr_abs); }
ExtReal sqrt(const ExtReal& x) { return unary(x, mpfr_sqrt); }
ExtReal sin(const ExtReal& x) { return unary(x, mpfr_sin); }
ExtReal cos(const ExtReal& x) { return unary(x, mpfr_cos); }
ExtReal tan(const ExtReal& x) { return unary(x, mpfr_tan); }
ExtReal exp(const ExtReal& x) { return unary(x, mpfr_exp); }
ExtReal log(const ExtReal& x) { return unary(x, mpfr_log); }

ExtReal pow(const ExtReal& base, const ExtReal& exponent) {
  ExtReal out = ExtReal::zero(std::max(base.digits(), exponent.digits()));
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

ExtReal pow(const ExtReal& base, long exponent) {
  ExtReal out = ExtReal::zero(base.digits());
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

ExtReal inverse(const ExtReal& x) { return ExtReal(1L, x.digits()) / x; }

long decimal_exponent(const ExtReal& x) {
  if (x.is_zero()) throw std::domain_error("decimal_exponent of zero");
  // mpfr_get_str yields 0.d1d2... x 10^e.
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, 20, x.get(), MPFR_RNDN);
  mpfr_free_str(raw);
  return static_cast<long>(e) - 1;
}

}  // namespace splinebound
