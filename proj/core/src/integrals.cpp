#include "clausen/integrals.hpp"

#include "clausen/errors.hpp"
#include "clausen/specfun.hpp"

namespace clausen {

namespace {

void check_log_tan_domain(const Real& x, const Real& phi, LogTanSide part, const PrecisionContext& ctx) {
  const Real half_pi = ctx.pi() / 2;
  if (!(phi > 0) || !(phi < half_pi)) throw DomainError("log_tan: phi must lie in (0, pi/2)");
  if (part == LogTanSide::above && (x < phi || x > half_pi)) {
    throw DomainError("log_tan (above): requires phi <= x <= pi/2");
  }
  if (part == LogTanSide::below && (x.sign() < 0 || x > phi)) {
    throw DomainError("log_tan (below): requires 0 <= x <= phi");
  }
}

}  // namespace

Real log_tan_integrand(const Real& t, const Real& phi, const Real& from_phi) {
  // tan t +- tan phi = sin(t +- phi) / (cos t cos phi)
  return log(abs(sin(t + phi) / sin(from_phi)));
}

I7Result integrate_I7(const TanhSinh& quad, int target_digits) {
  const PrecisionContext& ctx = quad.context();
  const Real& phi = ctx.phi7();

  auto below = [&phi](const Abscissa& p) { return log_tan_integrand(p.x, phi, p.to_upper); };
  auto above = [&phi](const Abscissa& p) { return log_tan_integrand(p.x, phi, p.from_lower); };

  QuadratureResult lower = quad.integrate(below, ctx.pi_times(1, 3), phi, target_digits);
  QuadratureResult upper = quad.integrate(above, phi, ctx.pi_times(1, 2), target_digits);
  Real value = (lower.value + upper.value) * 24 / (ctx.sqrt7() * 7);
  return I7Result{std::move(lower), std::move(upper), std::move(value)};
}

Real log_tan_closed_form(const Real& x_in, const Real& phi_in, LogTanSide part,
                        const PrecisionContext& ctx) {
  const Real x = x_in.with_digits(ctx.working_digits());
  const Real phi = phi_in.with_digits(ctx.working_digits());
  check_log_tan_domain(x, phi, part, ctx);
  Real value = clausen2(phi * 4, ctx) - clausen2((x + phi) * 2, ctx) + clausen2((x - phi) * 2, ctx);
  value /= 2;
  return part == LogTanSide::above ? value : -value;
}

QuadratureResult log_tan_quadrature(const Real& x_in, const Real& phi_in, LogTanSide part,
                                   const TanhSinh& quad, int target_digits) {
  const PrecisionContext& ctx = quad.context();
  const Real x = x_in.with_digits(ctx.working_digits());
  const Real phi = phi_in.with_digits(ctx.working_digits());
  check_log_tan_domain(x, phi, part, ctx);
  if (part == LogTanSide::above) {
    auto f = [&phi](const Abscissa& p) { return log_tan_integrand(p.x, phi, p.from_lower); };
    return quad.integrate(f, phi, x, target_digits);
  }
  auto f = [&phi](const Abscissa& p) { return log_tan_integrand(p.x, phi, p.to_upper); };
  return quad.integrate(f, x, phi, target_digits);
}

}  // namespace clausen
