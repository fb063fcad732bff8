#include <cmath>
#include <optional>

#include "clausen/errors.hpp"
#include "clausen/specfun.hpp"

namespace clausen {

namespace {

// x^-s, using the exact integer power when s is a machine integer.
Real inverse_power(const Real& x, const Real& s, std::optional<long> s_int) {
  if (s_int) return pow(x, -*s_int);
  return pow(x, -s);
}

}  // namespace

Real hurwitz_zeta(const Real& s_in, const Real& a_in, const PrecisionContext& ctx) {
  const int wd = ctx.working_digits();
  const Real s = s_in.with_digits(wd);
  const Real a = a_in.with_digits(wd);
  if (!(s > 1)) throw DomainError("hurwitz_zeta: requires s > 1, got s = " + s.to_scientific(10));
  if (!(a > 0) || a > 1) {
    throw DomainError("hurwitz_zeta: requires 0 < a <= 1, got a = " + a.to_scientific(10));
  }
  std::optional<long> s_int;
  if (mpfr_integer_p(s.raw()) && mpfr_fits_slong_p(s.raw(), MPFR_RNDN)) {
    s_int = mpfr_get_si(s.raw(), MPFR_RNDN);
  }

  // Shift so that the Euler-Maclaurin remainder, roughly exp(-2 pi (N + a)),
  // falls below 10^-wd.
  const double s_approx = s.to_double();
  const long shift = static_cast<long>(std::ceil(wd * std::log(10.0) / (2 * M_PI))) +
                     static_cast<long>(std::ceil(std::min(s_approx, 1e6))) + 10;

  Real sum(wd);
  for (long k = 0; k < shift; ++k) sum += inverse_power(a + k, s, s_int);

  const Real q = a + shift;
  const Real q_pow_s = inverse_power(q, s, s_int);  // q^-s
  sum += q_pow_s * q / (s - 1);                      // q^(1-s) / (s - 1)
  sum += q_pow_s / 2;

  // B_2j / (2j)! (s)_(2j-1) q^(-s-2j+1), with B_2j / (2j)! = (-1)^(j+1) 2 c_j.
  Real eps(1, wd);
  mpfr_mul_2si(eps.raw(), eps.raw(), -static_cast<long>(ctx.bits()), MPFR_RNDN);
  eps *= abs(sum);
  const Real inv_q2 = 1 / (q * q);
  Real rising = s;            // (s)_(2j-1)
  Real q_power = q_pow_s / q;  // q^(-s-2j+1)
  Real previous_magnitude(wd);
  for (int j = 1;; ++j) {
    if (j > 1) {
      rising *= s + (2L * j - 3);
      rising *= s + (2L * j - 2);
      q_power *= inv_q2;
    }
    Real term = ctx.zeta_even(j) * rising * q_power * 2;
    const Real magnitude = abs(term);
    if (j % 2 == 0) term = -term;
    sum += term;
    if (magnitude < eps) break;
    if (j > 1 && magnitude > previous_magnitude) {
      throw ConvergenceError("hurwitz_zeta: Euler-Maclaurin terms began to grow", j);
    }
    previous_magnitude = magnitude;
  }
  return sum;
}

Real riemann_zeta(const Real& s, const PrecisionContext& ctx) {
  return hurwitz_zeta(s, ctx.integer(1), ctx);
}

}  // namespace clausen
