#include "clausen/errors.hpp"
#include "clausen/specfun.hpp"

namespace clausen {

Real dirichlet_L(const LSeriesPoint& point, const PrecisionContext& ctx) {
  const Real s = point.s.with_digits(ctx.working_digits());
  if (!(s > 1)) throw DomainError("dirichlet_L: requires s > 1");
  const std::int64_t m = point.d.modulus();
  Real sum = ctx.zero();
  for (std::int64_t l = 1; l < m; ++l) {
    const int chi = kronecker(point.d, l);
    if (chi == 0) continue;
    const Real z = hurwitz_zeta(s, ctx.rational(static_cast<long>(l), static_cast<long>(m)), ctx);
    if (chi > 0) {
      sum += z;
    } else {
      sum -= z;
    }
  }
  return sum * pow(ctx.integer(static_cast<long>(m)), -s);
}

Real dirichlet_L_clausen(Discriminant d, const PrecisionContext& ctx) {
  if (d.value() > 0) {
    throw DomainError("dirichlet_L_clausen: the sine expansion needs d < 0, got " +
                      std::to_string(d.value()));
  }
  const std::int64_t m = d.modulus();
  Real sum = ctx.zero();
  for (std::int64_t l = 1; l < m; ++l) {
    const int chi = kronecker(d, l);
    if (chi == 0) continue;
    const Real c = clausen2_pi(2 * l, m, ctx);
    if (chi > 0) {
      sum += c;
    } else {
      sum -= c;
    }
  }
  return sum / sqrt(ctx.integer(static_cast<long>(m)));
}

}  // namespace clausen
