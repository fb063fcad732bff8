#include "clausen/real.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "clausen/errors.hpp"

namespace clausen {

namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;

template <int (*Fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
Real unary(const Real& x) {
  Real out(x.digits());
  mpfr_set_prec(out.raw(), x.bits());
  Fn(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

}  // namespace

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(std::max(digits, 1) * kLog2Of10)) + 8;
}

Real::Real() : digits_(17) {
  mpfr_init2(value_, 64);
  mpfr_set_zero(value_, 1);
}

Real::Real(int digits) : digits_(digits) {
  mpfr_init2(value_, digits_to_bits(digits));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, int digits) : digits_(digits) {
  mpfr_init2(value_, digits_to_bits(digits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real Real::from_double(double value, int digits) {
  Real out(digits);
  mpfr_set_d(out.value_, value, MPFR_RNDN);
  return out;
}

Real::Real(const Real& other) : digits_(other.digits_) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
  // Steal the limbs; the source keeps a null limb pointer that the
  // destructor recognises.
  *value_ = *other.value_;
  other.value_->_mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    if (value_->_mpfr_d == nullptr) {
      mpfr_init2(value_, other.bits());
    } else {
      mpfr_set_prec(value_, other.bits());
    }
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
    *value_ = *other.value_;
    other.value_->_mpfr_d = nullptr;
    digits_ = other.digits_;
  }
  return *this;
}

Real::~Real() {
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
}

Real Real::parse(std::string_view text, int digits) {
  Real out(digits);
  const std::string buffer(text);
  char* end = nullptr;
  if (!buffer.empty()) mpfr_strtofr(out.value_, buffer.c_str(), &end, 10, MPFR_RNDN);
  if (buffer.empty() || end == nullptr || *end != '\0') {
    throw ArgumentError("not a decimal number: '" + buffer + "'");
  }
  return out;
}

Real Real::rational(long p, long q, int digits) {
  if (q == 0) throw ArgumentError("rational with zero denominator");
  Real out(p, digits);
  mpfr_div_si(out.value_, out.value_, q, MPFR_RNDN);
  return out;
}

std::string Real::to_fixed(int places) const {
  char* buffer = nullptr;
  const int n = mpfr_asprintf(&buffer, "%.*Rf", places, value_);
  if (n < 0) return "nan";
  std::string out(buffer, static_cast<std::size_t>(n));
  mpfr_free_str(buffer);
  // "-0.000" is an artefact of rounding a tiny negative value.
  if (!out.empty() && out.front() == '-' &&
      out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

std::string Real::to_scientific(int significant) const {
  char* buffer = nullptr;
  const int n = mpfr_asprintf(&buffer, "%.*Re", std::max(significant - 1, 0), value_);
  if (n < 0) return "nan";
  std::string out(buffer, static_cast<std::size_t>(n));
  mpfr_free_str(buffer);
  return out;
}

Real Real::with_digits(int digits) const {
  Real out(digits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

void Real::adopt_precision(const Real& rhs) {
  if (rhs.bits() > bits()) mpfr_prec_round(value_, rhs.bits(), MPFR_RNDN);
  digits_ = std::min(digits_, rhs.digits_);
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  adopt_precision(rhs);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  adopt_precision(rhs);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  adopt_precision(rhs);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  adopt_precision(rhs);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real operator-(long lhs, const Real& rhs) {
  Real out(rhs);
  mpfr_si_sub(out.value_, lhs, rhs.value_, MPFR_RNDN);
  return out;
}

Real operator/(long lhs, const Real& rhs) {
  Real out(rhs);
  mpfr_si_div(out.value_, lhs, rhs.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) noexcept {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real abs(const Real& x) { return unary<mpfr_abs>(x); }
Real sqrt(const Real& x) { return unary<mpfr_sqrt>(x); }
Real exp(const Real& x) { return unary<mpfr_exp>(x); }
Real log(const Real& x) { return unary<mpfr_log>(x); }
Real log10(const Real& x) { return unary<mpfr_log10>(x); }
Real sin(const Real& x) { return unary<mpfr_sin>(x); }
Real cos(const Real& x) { return unary<mpfr_cos>(x); }
Real tan(const Real& x) { return unary<mpfr_tan>(x); }
Real cot(const Real& x) { return unary<mpfr_cot>(x); }
Real atan(const Real& x) { return unary<mpfr_atan>(x); }
Real sinh(const Real& x) { return unary<mpfr_sinh>(x); }
Real cosh(const Real& x) { return unary<mpfr_cosh>(x); }
Real tanh(const Real& x) { return unary<mpfr_tanh>(x); }

Real pow(const Real& base, const Real& exponent) {
  Real out(std::min(base.digits(), exponent.digits()));
  mpfr_set_prec(out.raw(), std::max(base.bits(), exponent.bits()));
  mpfr_pow(out.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
  return out;
}

Real pow(const Real& base, long exponent) {
  Real out(base);
  mpfr_pow_si(out.raw(), base.raw(), exponent, MPFR_RNDN);
  return out;
}

Real round(const Real& x) {
  Real out(x);
  mpfr_round(out.raw(), x.raw());
  return out;
}

Real floor(const Real& x) {
  Real out(x);
  mpfr_floor(out.raw(), x.raw());
  return out;
}

Real fmod(const Real& x, const Real& y) {
  Real out(x);
  mpfr_prec_round(out.raw(), std::max(x.bits(), y.bits()), MPFR_RNDN);
  mpfr_fmod(out.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return out;
}

Real min(const Real& a, const Real& b) { return b < a ? b : a; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

int agree_digits(const Real& a, const Real& b, int cap) {
  mpfr_t diff;
  mpfr_init2(diff, std::max(a.bits(), b.bits()));
  mpfr_sub(diff, a.raw(), b.raw(), MPFR_RNDN);
  if (mpfr_nan_p(diff)) {
    mpfr_clear(diff);
    return 0;
  }
  if (mpfr_zero_p(diff)) {
    mpfr_clear(diff);
    return cap;
  }
  mpfr_abs(diff, diff, MPFR_RNDN);
  mpfr_t lg;
  mpfr_init2(lg, 64);
  mpfr_log10(lg, diff, MPFR_RNDN);
  mpfr_neg(lg, lg, MPFR_RNDN);
  const long digits = mpfr_get_si(lg, MPFR_RNDD);
  mpfr_clear(lg);
  mpfr_clear(diff);
  return static_cast<int>(std::clamp<long>(digits, -1000000, cap));
}

}  // namespace clausen
