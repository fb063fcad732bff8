#pragma once

#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "clausen/mpcontext.hpp"
#include "clausen/real.hpp"

namespace clausen {

/// One tanh-sinh sample point on [a, b].
///
/// `from_lower` = x - a and `to_upper` = b - x are produced directly from
/// the node complement 1 - tanh(u), so they keep full relative precision
/// even when x itself has rounded onto an endpoint.  Integrands with an
/// endpoint singularity should be written in terms of these offsets.
struct Abscissa {
  const Real& x;
  const Real& from_lower;
  const Real& to_upper;
};

using Integrand = std::function<Real(const Abscissa&)>;

/// Adapts a function of x alone.
Integrand integrand_of(std::function<Real(const Real&)> f);

struct QuadratureResult {
  Real value;
  /// |S_k - S_{k-1}| for the last two refinement levels.
  Real error_estimate;
  int levels_used = 0;
  long evaluations = 0;
};

struct QuadratureOptions {
  /// Finest level; level k uses step 2^-k in the transformed variable.
  int max_level = 12;
  /// Concurrent integrand evaluations per level.  Never changes results.
  int workers = 1;
};

/// Double-exponential (tanh-sinh) quadrature at a context's working precision.
///
/// Nodes and weights are generated once per level and reused by every
/// integral computed through the same engine.  Level sums are reduced in a
/// fixed order, so results are bit-identical for any worker count.
///
/// Convergence: |S_k - S_{k-1}| < 10^-target must hold on two consecutive
/// levels; the value of the later level is returned.
class TanhSinh {
 public:
  explicit TanhSinh(const PrecisionContext& ctx, QuadratureOptions options = {});

  const PrecisionContext& context() const noexcept { return ctx_; }
  const QuadratureOptions& options() const noexcept { return options_; }

  /// Integral over [a, b] to `target_digits` (a == b gives 0).  Throws
  /// ConvergenceError after max_level and IntegrandError on non-finite
  /// samples.
  QuadratureResult integrate(const Integrand& f, const Real& a, const Real& b,
                             int target_digits) const;
  QuadratureResult integrate(const Integrand& f, const Real& a, const Real& b) const {
    return integrate(f, a, b, ctx_.target_digits());
  }

  /// Sum over consecutive pieces [p_i, p_{i+1}]; interior singularities must
  /// sit on the supplied points.
  QuadratureResult integrate_split(const Integrand& f, std::span<const Real> points,
                                   int target_digits) const;

 private:
  struct Node {
    Real complement;  // 1 - tanh(pi/2 sinh t)
    Real weight;      // (pi/2) cosh t / cosh^2(pi/2 sinh t)
    bool center;
  };

  const std::vector<Node>& level(int k) const;
  std::vector<Node> build_level(int k) const;

  PrecisionContext ctx_;
  QuadratureOptions options_;
  mutable std::mutex mutex_;
  mutable std::deque<std::vector<Node>> levels_;
};

/// One-shot convenience wrapper around TanhSinh.
QuadratureResult tanh_sinh(const Integrand& f, const Real& a, const Real& b,
                           const PrecisionContext& ctx, int target_digits,
                           QuadratureOptions options = {});

}  // namespace clausen
