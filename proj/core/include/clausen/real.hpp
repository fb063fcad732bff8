#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace clausen {

/// Binary precision needed to carry `digits` significant decimal digits.
mpfr_prec_t digits_to_bits(int digits);

/// An MPFR value tagged with the decimal precision at which it was produced.
///
/// Binary operations run at the larger of the two operand precisions and
/// carry the smaller of the two tags, so a value computed from a
/// low-precision input never claims more digits than it had.
class Real {
 public:
  /// Zero at 64 bits, tagged with 17 digits (double-like).
  Real();
  /// Zero at the precision for `digits`.
  explicit Real(int digits);
  Real(long value, int digits);
  static Real from_double(double value, int digits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Parses a decimal literal ("1.25", "-3e-7").  Throws ArgumentError.
  static Real parse(std::string_view text, int digits);
  /// p / q rounded to the precision for `digits`.
  static Real rational(long p, long q, int digits);

  int digits() const noexcept { return digits_; }
  mpfr_prec_t bits() const noexcept { return mpfr_get_prec(value_); }

  mpfr_ptr raw() noexcept { return value_; }
  mpfr_srcptr raw() const noexcept { return value_; }

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Fixed notation with exactly `places` digits after the point.
  std::string to_fixed(int places) const;
  /// Scientific notation with `significant` digits ("1.2345e-100").
  std::string to_scientific(int significant) const;

  /// Rounds into a new precision/tag.
  Real with_digits(int digits) const;

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(long rhs);
  Real& operator-=(long rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator+(Real lhs, long rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, long rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, long rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, long rhs) { return lhs /= rhs; }
  friend Real operator+(long lhs, Real rhs) { return rhs += lhs; }
  friend Real operator*(long lhs, Real rhs) { return rhs *= lhs; }
  friend Real operator-(long lhs, const Real& rhs);
  friend Real operator/(long lhs, const Real& rhs);

  friend bool operator==(const Real& a, const Real& b) noexcept {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept;
  friend std::partial_ordering operator<=>(const Real& a, long b) noexcept;
  friend bool operator==(const Real& a, long b) noexcept { return mpfr_cmp_si(a.value_, b) == 0; }

 private:
  void adopt_precision(const Real& rhs);

  mpfr_t value_;
  int digits_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real cot(const Real& x);
Real atan(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
/// Nearest integer, ties away from zero.
Real round(const Real& x);
Real floor(const Real& x);
Real fmod(const Real& x, const Real& y);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

/// floor(-log10|a - b|), the number of decimal digits on which two order-one
/// quantities agree.  Exact equality returns `cap`.
int agree_digits(const Real& a, const Real& b, int cap);

}  // namespace clausen
