#pragma once

#include "clausen/quadrature.hpp"
#include "clausen/real.hpp"

namespace clausen {

/// The two quadrature pieces of I7 and their total.
struct I7Result {
  /// int_{pi/3}^{phi7} ln((tan phi7 + tan t) / (tan phi7 - tan t)) dt
  QuadratureResult lower;
  /// int_{phi7}^{pi/2} ln((tan t + tan phi7) / (tan t - tan phi7)) dt
  QuadratureResult upper;
  /// 24 / (7 sqrt 7) * (lower + upper)
  Real value;
};

/// I7 = 24/(7 sqrt 7) int_{pi/3}^{pi/2} ln|(tan t + sqrt 7)/(tan t - sqrt 7)| dt,
/// split at the logarithmic singularity phi7 = arctan(sqrt 7).
///
/// Each piece is evaluated in the form ln|sin(t + phi)/sin(t - phi)|, which
/// equals the tangent form and stays finite at pi/2; t - phi is taken from
/// the quadrature offset so the singular endpoint keeps full precision.
I7Result integrate_I7(const TanhSinh& quad, int target_digits);

/// ln|(tan t + tan phi)/(tan t - tan phi)| on the interval with endpoint phi.
/// `from_phi` is |t - phi| and is what carries the singularity.
Real log_tan_integrand(const Real& t, const Real& phi, const Real& from_phi);

enum class LogTanSide {
  /// int_phi^x ln((tan t + tan phi)/(tan t - tan phi)) dt, phi <= x <= pi/2
  above,
  /// int_x^phi ln((tan phi + tan t)/(tan phi - tan t)) dt, 0 <= x <= phi
  below,
};

/// Closed form of the log-tangent integrals in terms of Cl2:
///   above:  Cl2(4phi)/2 - Cl2(2x + 2phi)/2 + Cl2(2x - 2phi)/2
///   below: -Cl2(4phi)/2 + Cl2(2x + 2phi)/2 - Cl2(2x - 2phi)/2
/// Requires 0 < phi < pi/2 and the ordering of `part` (DomainError).
Real log_tan_closed_form(const Real& x, const Real& phi, LogTanSide part, const PrecisionContext& ctx);

/// The same integral by tanh-sinh quadrature.
QuadratureResult log_tan_quadrature(const Real& x, const Real& phi, LogTanSide part,
                                   const TanhSinh& quad, int target_digits);

}  // namespace clausen
