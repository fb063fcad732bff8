#pragma once

#include <cstdint>

#include "clausen/mpcontext.hpp"
#include "clausen/quadrature.hpp"
#include "clausen/real.hpp"

namespace clausen {

// ---------------------------------------------------------------------------
// Clausen function Cl2

/// Cl2(theta) = sum_{m>=1} sin(m theta) / m^2 at working precision.
///
/// theta is reduced to [0, pi] by periodicity and oddness.  On [0, 2pi/3]
/// the ascending series
///   Cl2(t) = t - t ln t + sum_n c_n t^(2n+1) / (n (2n+1)),  c_n = zeta(2n)/(2pi)^(2n)
/// is summed; on (2pi/3, pi] the expansion about pi
///   Cl2(pi - x) = x ln 2 - sum_n (4^n - 1) c_n x^(2n+1) / (n (2n+1))
/// is used instead.  Both converge at least like 9^-n.
Real clausen2(const Real& theta, const PrecisionContext& ctx);

/// Cl2(p pi / q) with the reduction done on the exact rational p/q, so
/// integer multiples of pi give exactly zero.
Real clausen2_pi(std::int64_t p, std::int64_t q, const PrecisionContext& ctx);

/// Cl2(theta) = -int_0^theta ln|2 sin(t/2)| dt by tanh-sinh quadrature.
/// Requires 0 <= theta <= 2 pi (DomainError otherwise).
Real clausen2_integral(const Real& theta, const TanhSinh& quad, int target_digits);
Real clausen2_integral(const Real& theta, const PrecisionContext& ctx, int target_digits);

// ---------------------------------------------------------------------------
// Hurwitz zeta

/// zeta(s, a) = sum_{m>=0} (m + a)^-s for s > 1 and 0 < a <= 1, by
/// Euler-Maclaurin summation.  Throws DomainError outside that range.
Real hurwitz_zeta(const Real& s, const Real& a, const PrecisionContext& ctx);

/// Riemann zeta(s) = zeta(s, 1).
Real riemann_zeta(const Real& s, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Kronecker symbol and Dirichlet L-series

/// A discriminant d: non-zero, non-square, d = 0 or 1 (mod 4).
class Discriminant {
 public:
  /// Throws ArgumentError for inadmissible d.
  explicit Discriminant(std::int64_t d);

  std::int64_t value() const noexcept { return d_; }
  std::int64_t modulus() const noexcept { return d_ < 0 ? -d_ : d_; }

  static bool admissible(std::int64_t d) noexcept;

  friend bool operator==(Discriminant, Discriminant) = default;

 private:
  std::int64_t d_;
};

/// Kronecker symbol (d/n) for n >= 1, via Jacobi reciprocity.
int kronecker(Discriminant d, std::int64_t n);

/// Kronecker symbol (a/n) for arbitrary integers a and n >= 1.
int kronecker_symbol(std::int64_t a, std::int64_t n);

struct LSeriesPoint {
  Discriminant d;
  Real s;
};

/// L_d(s) = |d|^-s sum_{l=1}^{|d|-1} (d/l) zeta(s, l/|d|).  Requires s > 1.
Real dirichlet_L(const LSeriesPoint& point, const PrecisionContext& ctx);

/// L_d(2) = |d|^(-1/2) sum_{l=1}^{|d|-1} (d/l) Cl2(2 pi l / |d|), valid for
/// d < 0 only (DomainError otherwise).
Real dirichlet_L_clausen(Discriminant d, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Zagier's A(x)

/// pi/2 - arctan(x); values in (0, pi).
Real arccot(const Real& x, const PrecisionContext& ctx);

/// A(x) = int_0^x ln(4 / (1 + t^2)) / (1 + t^2) dt, computed as Cl2(2 arccot x).
/// A is odd in x, and the Clausen form holds on the whole real line since
/// Cl2 is 2pi-periodic.
Real zagier_A(const Real& x, const PrecisionContext& ctx);

/// A(x) by direct quadrature of its defining integral.
Real zagier_A_quadrature(const Real& x, const TanhSinh& quad, int target_digits);

}  // namespace clausen
