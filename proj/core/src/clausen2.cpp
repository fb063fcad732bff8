#include <string>

#include "clausen/errors.hpp"
#include "clausen/specfun.hpp"

namespace clausen {

namespace {

Real epsilon(const PrecisionContext& ctx) {
  Real eps(1, ctx.working_digits());
  mpfr_mul_2si(eps.raw(), eps.raw(), -static_cast<long>(ctx.bits()), MPFR_RNDN);
  return eps;
}

// Cl2 on [0, 2pi/3]: t - t ln t + sum c_n t^(2n+1) / (n (2n+1)).
Real ascending_series(const Real& t, const PrecisionContext& ctx) {
  const Real eps = epsilon(ctx);
  const Real t2 = t * t;
  Real sum = t - t * log(t);
  Real power = t;
  for (int n = 1;; ++n) {
    power *= t2;
    Real term = ctx.zeta_even(n) * power;
    term /= static_cast<long>(n) * (2L * n + 1);
    sum += term;
    if (abs(term) < eps) break;
  }
  return sum;
}

// Cl2(pi - x) for x in [0, pi/3]: x ln 2 - sum (4^n - 1) c_n x^(2n+1) / (n (2n+1)).
Real series_about_pi(const Real& x, const PrecisionContext& ctx) {
  const Real eps = epsilon(ctx);
  const Real x2 = x * x;
  Real sum = x * ctx.ln2();
  Real power = x;
  Real four_n(1, ctx.working_digits());
  for (int n = 1;; ++n) {
    power *= x2;
    four_n *= 4;
    Real term = ctx.zeta_even(n) * power;
    term *= four_n - 1;
    term /= static_cast<long>(n) * (2L * n + 1);
    sum -= term;
    if (abs(term) < eps) break;
  }
  return sum;
}

// theta in [0, pi].
Real clausen2_reduced(const Real& theta, const PrecisionContext& ctx) {
  if (theta.is_zero()) return ctx.zero();
  const Real two_thirds_pi = ctx.pi_times(2, 3);
  if (theta <= two_thirds_pi) return ascending_series(theta, ctx);
  const Real x = ctx.pi() - theta;
  if (x.sign() <= 0) return ctx.zero();
  return series_about_pi(x, ctx);
}

}  // namespace

Real clausen2(const Real& theta, const PrecisionContext& ctx) {
  if (!theta.is_finite()) throw ArgumentError("clausen2: argument is not finite");
  const Real two_pi = ctx.pi() * 2;
  Real r = fmod(theta.with_digits(ctx.working_digits()), two_pi);  // sign of theta
  if (r.sign() < 0) r += two_pi;
  if (r > ctx.pi()) return -clausen2_reduced(two_pi - r, ctx);
  return clausen2_reduced(r, ctx);
}

Real clausen2_pi(std::int64_t p, std::int64_t q, const PrecisionContext& ctx) {
  if (q == 0) throw ArgumentError("clausen2_pi: zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  // Reduce p/q into [0, 2).
  std::int64_t r = p % (2 * q);
  if (r < 0) r += 2 * q;
  if (r == 0 || r == q) return ctx.zero();
  if (r > q) return -clausen2_reduced(ctx.pi_times(2 * q - r, q), ctx);
  return clausen2_reduced(ctx.pi_times(r, q), ctx);
}

Real clausen2_integral(const Real& theta, const TanhSinh& quad, int target_digits) {
  const PrecisionContext& ctx = quad.context();
  const Real two_pi = ctx.pi() * 2;
  const Real upper = theta.with_digits(ctx.working_digits());
  if (upper.sign() < 0 || upper > two_pi) {
    throw DomainError("clausen2_integral: theta must lie in [0, 2 pi]");
  }
  if (upper.is_zero()) return ctx.zero();
  const Real gap = two_pi - upper;
  // -ln(2 sin(t/2)); near t = 2pi the argument is taken from the distance to
  // 2pi so both log singularities keep full relative precision.
  auto f = [&ctx, &gap](const Abscissa& p) {
    Real half = p.from_lower <= ctx.pi() ? p.from_lower : gap + p.to_upper;
    half /= 2;
    return -log(sin(half) * 2);
  };
  return quad.integrate(f, ctx.zero(), upper, target_digits).value;
}

Real clausen2_integral(const Real& theta, const PrecisionContext& ctx, int target_digits) {
  return clausen2_integral(theta, TanhSinh(ctx), target_digits);
}

Real arccot(const Real& x, const PrecisionContext& ctx) {
  return ctx.pi() / 2 - atan(x.with_digits(ctx.working_digits()));
}

Real zagier_A(const Real& x, const PrecisionContext& ctx) {
  return clausen2(arccot(x, ctx) * 2, ctx);
}

Real zagier_A_quadrature(const Real& x, const TanhSinh& quad, int target_digits) {
  const PrecisionContext& ctx = quad.context();
  const Real upper = abs(x.with_digits(ctx.working_digits()));
  auto f = [](const Abscissa& p) {
    const Real q = p.x * p.x + 1;
    return log(4 / q) / q;
  };
  Real value = quad.integrate(f, ctx.zero(), upper, target_digits).value;
  return x.sign() < 0 ? -value : value;
}

}  // namespace clausen
