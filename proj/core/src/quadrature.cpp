#include "clausen/quadrature.hpp"

#include <string>

#include "clausen/errors.hpp"
#include "parallel.hpp"

namespace clausen {

Integrand integrand_of(std::function<Real(const Real&)> f) {
  return [f = std::move(f)](const Abscissa& p) { return f(p.x); };
}

TanhSinh::TanhSinh(const PrecisionContext& ctx, QuadratureOptions options)
    : ctx_(ctx), options_(options) {
  if (options_.max_level < 1) throw ArgumentError("tanh-sinh: max_level must be >= 1");
  if (options_.workers < 1) throw ArgumentError("tanh-sinh: workers must be >= 1");
}

const std::vector<TanhSinh::Node>& TanhSinh::level(int k) const {
  std::lock_guard lock(mutex_);
  while (static_cast<int>(levels_.size()) <= k) {
    levels_.push_back(build_level(static_cast<int>(levels_.size())));
  }
  return levels_[static_cast<std::size_t>(k)];
}

std::vector<TanhSinh::Node> TanhSinh::build_level(int k) const {
  const int wd = ctx_.working_digits();
  // Weights below this cannot move a sum of order-one (or logarithmically
  // large) terms at working precision.
  Real cutoff(1, wd);
  mpfr_mul_2si(cutoff.raw(), cutoff.raw(), -static_cast<long>(ctx_.bits()) - 32, MPFR_RNDN);

  const Real half_pi = ctx_.pi() / 2;
  auto make = [&](const Real& t) {
    const Real et = exp(t);
    const Real inv_et = 1 / et;
    const Real sinh_t = (et - inv_et) / 2;
    const Real cosh_t = (et + inv_et) / 2;
    const Real e2u = exp(ctx_.pi() * sinh_t);  // exp(2u), u = (pi/2) sinh t
    Node node{Real(wd), Real(wd), false};
    node.complement = 2 / (e2u + 1);
    // cosh^2 u = (e^{2u} + 2 + e^{-2u}) / 4
    node.weight = ctx_.pi() * 2 * cosh_t / (e2u + 2 + 1 / e2u);
    return node;
  };

  std::vector<Node> nodes;
  if (k == 0) {
    nodes.push_back(Node{Real(1, wd), half_pi, true});
  }
  // Level 0 samples t = 1, 2, ...; level k >= 1 samples t = (2j + 1) / 2^k.
  for (long j = 0;; ++j) {
    Real t(wd);
    if (k == 0) {
      mpfr_set_si(t.raw(), j + 1, MPFR_RNDN);
    } else {
      mpfr_set_si(t.raw(), 2 * j + 1, MPFR_RNDN);
      mpfr_mul_2si(t.raw(), t.raw(), -k, MPFR_RNDN);
    }
    Node node = make(t);
    if (node.weight < cutoff) break;
    nodes.push_back(std::move(node));
  }
  return nodes;
}

QuadratureResult TanhSinh::integrate(const Integrand& f, const Real& a, const Real& b,
                                     int target_digits) const {
  const int wd = ctx_.working_digits();
  if (!(a <= b)) throw ArgumentError("tanh-sinh: interval must satisfy a <= b");
  if (a == b) return QuadratureResult{Real(wd), Real(wd), 1, 0};

  const Real half_width = (b - a) / 2;
  Real tolerance(1, wd);
  mpfr_ui_pow_ui(tolerance.raw(), 10, static_cast<unsigned long>(target_digits), MPFR_RNDN);
  tolerance = 1 / tolerance;

  Real raw_sum(wd);  // sum of w * (f(left) + f(right)) over every node so far
  Real previous(wd);
  Real estimate(wd);
  Real last_diff(wd);
  long evaluations = 0;
  bool agreed_once = false;

  for (int k = 0; k <= options_.max_level; ++k) {
    const auto& nodes = level(k);
    std::vector<Real> contrib(nodes.size());
    detail::parallel_for(nodes.size(), options_.workers, [&](std::size_t i) {
      const Node& node = nodes[i];
      const Real near = half_width * node.complement;
      const Real far = half_width * 2 - near;
      auto sample = [&](const Real& x, const Real& from_lower, const Real& to_upper) {
        Real v = f(Abscissa{x, from_lower, to_upper});
        if (!v.is_finite()) {
          throw IntegrandError("integrand is not finite at x = " + x.to_scientific(25));
        }
        return v;
      };
      if (node.center) {
        contrib[i] = node.weight * sample(a + half_width, half_width, half_width);
      } else {
        Real s = sample(b - near, far, near);
        s += sample(a + near, near, far);
        contrib[i] = node.weight * s;
      }
    });
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      raw_sum += contrib[i];
      evaluations += nodes[i].center ? 1 : 2;
    }

    estimate = raw_sum * half_width;
    mpfr_mul_2si(estimate.raw(), estimate.raw(), -k, MPFR_RNDN);  // step h = 2^-k
    if (k > 0) {
      last_diff = abs(estimate - previous);
      if (last_diff < tolerance) {
        if (agreed_once) {
          return QuadratureResult{estimate, last_diff, k + 1, evaluations};
        }
        agreed_once = true;
      } else {
        agreed_once = false;
      }
    }
    previous = estimate;
  }
  throw ConvergenceError("tanh-sinh did not converge to " + std::to_string(target_digits) +
                             " digits after " + std::to_string(options_.max_level + 1) +
                             " levels; last two levels: " + previous.to_scientific(30) +
                             " (difference " + last_diff.to_scientific(5) + ")",
                         options_.max_level + 1);
}

QuadratureResult TanhSinh::integrate_split(const Integrand& f, std::span<const Real> points,
                                           int target_digits) const {
  if (points.size() < 2) throw ArgumentError("tanh-sinh: need at least two split points");
  QuadratureResult total{ctx_.zero(), ctx_.zero(), 0, 0};
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    QuadratureResult piece = integrate(f, points[i], points[i + 1], target_digits);
    total.value += piece.value;
    total.error_estimate += piece.error_estimate;
    total.levels_used = std::max(total.levels_used, piece.levels_used);
    total.evaluations += piece.evaluations;
  }
  return total;
}

QuadratureResult tanh_sinh(const Integrand& f, const Real& a, const Real& b,
                           const PrecisionContext& ctx, int target_digits,
                           QuadratureOptions options) {
  return TanhSinh(ctx, options).integrate(f, a, b, target_digits);
}

}  // namespace clausen
