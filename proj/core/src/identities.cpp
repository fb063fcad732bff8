#include "clausen/identities.hpp"

#include <algorithm>
#include <sstream>

#include "clausen/errors.hpp"
#include "clausen/integrals.hpp"
#include "clausen/specfun.hpp"

namespace clausen {

std::mt19937_64 EvalEnv::rng(const std::string& id) const {
  // FNV-1a of the id, mixed into the seed.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : id) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return std::mt19937_64(seed ^ h);
}

Real EvalEnv::uniform(std::mt19937_64& gen, const Real& lo, const Real& hi) const {
  Real u(static_cast<long>(gen() >> 11), ctx.working_digits());
  mpfr_mul_2si(u.raw(), u.raw(), -53, MPFR_RNDN);
  return lo + (hi - lo) * u;
}

namespace {

// 3 Cl2(2 phi7) - 3 Cl2(4 phi7) + Cl2(6 phi7)
Real phi7_combination(const PrecisionContext& ctx) {
  const Real& phi = ctx.phi7();
  return clausen2(phi * 2, ctx) * 3 - clausen2(phi * 4, ctx) * 3 + clausen2(phi * 6, ctx);
}

// Cl2(2pi/7) + Cl2(4pi/7) - Cl2(6pi/7)
Real seventh_combination(const PrecisionContext& ctx) {
  return clausen2_pi(2, 7, ctx) + clausen2_pi(4, 7, ctx) - clausen2_pi(6, 7, ctx);
}

Real l7_hurwitz(const PrecisionContext& ctx) {
  return dirichlet_L(LSeriesPoint{Discriminant(-7), ctx.integer(2)}, ctx);
}

// 7 sqrt 7
Real seven_root_seven(const PrecisionContext& ctx) { return ctx.sqrt7() * 7; }

using Evaluator = std::function<Evaluation(const EvalEnv&)>;
using Side = std::function<Real(const EvalEnv&)>;

Evaluator fixed(Side lhs, Side rhs) {
  return [lhs = std::move(lhs), rhs = std::move(rhs)](const EvalEnv& env) {
    return Evaluation{lhs(env), rhs(env), {}};
  };
}

// Keeps the sample with the widest lhs/rhs gap.
class WorstCase {
 public:
  void offer(Real lhs, Real rhs, std::string detail) {
    Real gap = abs(lhs - rhs);
    if (!best_ || gap > gap_) {
      best_ = Evaluation{std::move(lhs), std::move(rhs), std::move(detail)};
      gap_ = std::move(gap);
    }
  }
  Evaluation take(std::size_t samples) {
    best_->detail = std::to_string(samples) + " samples; worst at " + best_->detail;
    return std::move(*best_);
  }

 private:
  std::optional<Evaluation> best_;
  Real gap_;
};

std::string show(const Real& x) { return x.to_scientific(12); }

constexpr int kSymmetrySamples = 4;
constexpr int kMultiplicationSamplesPerM = 4;
constexpr int kLogTanSamples = 3;
constexpr long kMultipliers[] = {2, 3, 4, 5, 7};

std::vector<IdentitySpec> build_registry() {
  std::vector<IdentitySpec> r;

  r.push_back({"eq2", "I7 by split tanh-sinh quadrature equals L_{-7}(2) by Hurwitz zeta",
               "quadrature vs Hurwitz zeta", 100, false,
               fixed([](const EvalEnv& e) { return integrate_I7(e.quad, e.ctx.target_digits()).value; },
                     [](const EvalEnv& e) { return l7_hurwitz(e.ctx); })});

  r.push_back({"eq4", "I7 by quadrature equals 4/(7 sqrt7) [3Cl2(2phi7) - 3Cl2(4phi7) + Cl2(6phi7)]",
               "quadrature vs Clausen closed form", 100, false,
               fixed([](const EvalEnv& e) { return integrate_I7(e.quad, e.ctx.target_digits()).value; },
                     [](const EvalEnv& e) { return phi7_combination(e.ctx) * 4 / seven_root_seven(e.ctx); })});

  r.push_back({"eq5", "L_{-7}(2) by Hurwitz zeta equals 2/sqrt7 [Cl2(2pi/7) + Cl2(4pi/7) - Cl2(6pi/7)]",
               "Hurwitz zeta vs Clausen at 2pi l/7", 100, false,
               fixed([](const EvalEnv& e) { return l7_hurwitz(e.ctx); },
                     [](const EvalEnv& e) { return seventh_combination(e.ctx) * 2 / e.ctx.sqrt7(); })});

  r.push_back({"eq6", "2[3Cl2(2phi7) - 3Cl2(4phi7) + Cl2(6phi7)] = 7[Cl2(2pi/7) + Cl2(4pi/7) - Cl2(6pi/7)]",
               "six-term Clausen relation", 200, false,
               fixed([](const EvalEnv& e) { return phi7_combination(e.ctx) * 2; },
                     [](const EvalEnv& e) { return seventh_combination(e.ctx) * 7; })});

  r.push_back({"eq9", "(7 sqrt7/24) I7 = -Cl2(pi + 2phi7) + [Cl2(2phi7 + 2pi/3) + Cl2(2phi7 - 2pi/3)]/2",
               "split integral vs log-tangent closed forms", 100, false,
               fixed(
                   [](const EvalEnv& e) {
                     const I7Result i7 = integrate_I7(e.quad, e.ctx.target_digits());
                     return i7.lower.value + i7.upper.value;
                   },
                   [](const EvalEnv& e) {
                     const PrecisionContext& ctx = e.ctx;
                     const Real two_phi = ctx.phi7() * 2;
                     const Real two_thirds_pi = ctx.pi_times(2, 3);
                     Real half = clausen2(two_phi + two_thirds_pi, ctx) + clausen2(two_phi - two_thirds_pi, ctx);
                     half /= 2;
                     return half - clausen2(ctx.pi() + two_phi, ctx);
                   })});

  r.push_back({"eq10a", "2/sqrt7 [A(cot pi/7) + A(cot 2pi/7) + A(cot 4pi/7)] = L_{-7}(2)",
               "Zagier A at cotangents of pi/7 multiples", 100, false,
               fixed(
                   [](const EvalEnv& e) {
                     const PrecisionContext& ctx = e.ctx;
                     Real sum = zagier_A(cot(ctx.pi_times(1, 7)), ctx) + zagier_A(cot(ctx.pi_times(2, 7)), ctx) +
                                zagier_A(cot(ctx.pi_times(4, 7)), ctx);
                     return sum * 2 / ctx.sqrt7();
                   },
                   [](const EvalEnv& e) { return l7_hurwitz(e.ctx); })});

  r.push_back({"eq10b", "12/(7 sqrt7) [2A(sqrt7) + A(sqrt7 + 2sqrt3) + A(sqrt7 - 2sqrt3)] = L_{-7}(2)",
               "Zagier A at sqrt7, sqrt7 +- 2sqrt3", 100, false,
               fixed(
                   [](const EvalEnv& e) {
                     const PrecisionContext& ctx = e.ctx;
                     const Real two_root3 = ctx.sqrt3() * 2;
                     Real sum = zagier_A(ctx.sqrt7(), ctx) * 2 + zagier_A(ctx.sqrt7() + two_root3, ctx) +
                                zagier_A(ctx.sqrt7() - two_root3, ctx);
                     return sum * 12 / seven_root_seven(ctx);
                   },
                   [](const EvalEnv& e) { return l7_hurwitz(e.ctx); })});

  r.push_back({"eq11", "A(x) by quadrature of its integral equals Cl2(2 arccot x), x in {1/2, 1, sqrt7, cot(pi/7)}",
               "A(x) integral vs Clausen form", 50, false, [](const EvalEnv& e) {
                 const PrecisionContext& ctx = e.ctx;
                 const Real xs[] = {ctx.rational(1, 2), ctx.integer(1), ctx.sqrt7(), cot(ctx.pi_times(1, 7))};
                 WorstCase worst;
                 for (const Real& x : xs) {
                   worst.offer(zagier_A_quadrature(x, e.quad, ctx.target_digits()), zagier_A(x, ctx),
                               "x = " + show(x));
                 }
                 return worst.take(std::size(xs));
               }});

  r.push_back({"eq12", "L_{-7}(2) by Hurwitz zeta equals 4/(7 sqrt7) [3Cl2(2phi7) - 3Cl2(4phi7) + Cl2(6phi7)]",
               "Hurwitz zeta vs Clausen at phi7 multiples", 100, false,
               fixed([](const EvalEnv& e) { return l7_hurwitz(e.ctx); },
                     [](const EvalEnv& e) { return phi7_combination(e.ctx) * 4 / seven_root_seven(e.ctx); })});

  r.push_back({"lemma1a", "Cl2(-theta) = -Cl2(theta); series vs log-sine quadrature", "Clausen oddness", 50, true,
               [](const EvalEnv& e) {
                 const PrecisionContext& ctx = e.ctx;
                 auto gen = e.rng("lemma1a");
                 WorstCase worst;
                 for (int i = 0; i < kSymmetrySamples; ++i) {
                   const Real theta = e.uniform(gen, ctx.zero(), ctx.pi() * 2);
                   worst.offer(clausen2(-theta, ctx), -clausen2_integral(theta, e.quad, ctx.target_digits()),
                               "theta = " + show(theta));
                 }
                 return worst.take(kSymmetrySamples);
               }});

  r.push_back({"lemma1b", "Cl2(theta + 2m pi) = Cl2(theta), m in {-2,-1,1,2}", "Clausen periodicity", 50, true,
               [](const EvalEnv& e) {
                 const PrecisionContext& ctx = e.ctx;
                 auto gen = e.rng("lemma1b");
                 WorstCase worst;
                 const long ms[] = {-2, -1, 1, 2};
                 for (int i = 0; i < kSymmetrySamples; ++i) {
                   const Real theta = e.uniform(gen, ctx.zero(), ctx.pi() * 2);
                   const long m = ms[i % 4];
                   worst.offer(clausen2(theta + ctx.pi() * (2 * m), ctx),
                               clausen2_integral(theta, e.quad, ctx.target_digits()),
                               "theta = " + show(theta) + ", m = " + std::to_string(m));
                 }
                 return worst.take(kSymmetrySamples);
               }});

  r.push_back({"lemma1c", "Cl2(pi + theta) = -Cl2(pi - theta)", "Clausen reflection about pi", 50, true,
               [](const EvalEnv& e) {
                 const PrecisionContext& ctx = e.ctx;
                 auto gen = e.rng("lemma1c");
                 WorstCase worst;
                 for (int i = 0; i < kSymmetrySamples; ++i) {
                   const Real theta = e.uniform(gen, ctx.zero(), ctx.pi());
                   worst.offer(clausen2(ctx.pi() + theta, ctx),
                               -clausen2_integral(ctx.pi() - theta, e.quad, ctx.target_digits()),
                               "theta = " + show(theta));
                 }
                 return worst.take(kSymmetrySamples);
               }});

  r.push_back({"lemma1d", "Cl2(m pi) = 0 for m in -3..3 (largest |Cl2| reported)", "Clausen zeros", 50, false,
               [](const EvalEnv& e) {
                 Real largest = e.ctx.zero();
                 for (long m = -3; m <= 3; ++m) largest = max(largest, abs(clausen2_pi(m, 1, e.ctx)));
                 return Evaluation{largest, e.ctx.zero(), {}};
               }});

  r.push_back({"lemma2", "Cl2(m theta) = m sum_l Cl2(theta + 2 pi l / m), m in {2,3,4,5,7}", "Clausen multiplication formula", 50, true,
               [](const EvalEnv& e) {
                 const PrecisionContext& ctx = e.ctx;
                 auto gen = e.rng("lemma2");
                 WorstCase worst;
                 std::size_t count = 0;
                 for (long m : kMultipliers) {
                   for (int i = 0; i < kMultiplicationSamplesPerM; ++i, ++count) {
                     const Real theta = e.uniform(gen, -ctx.pi() * 2, ctx.pi() * 2);
                     Real sum = ctx.zero();
                     for (long l = 0; l < m; ++l) sum += clausen2(theta + ctx.pi_times(2 * l, m), ctx);
                     worst.offer(clausen2(theta * m, ctx), sum * m,
                                 "m = " + std::to_string(m) + ", theta = " + show(theta));
                   }
                 }
                 return worst.take(count);
               }});

  r.push_back({"lemma3a", "int_phi^x ln((tan t + tan phi)/(tan t - tan phi)) dt closed form", "log-tangent integral above phi", 50,
               true, [](const EvalEnv& e) {
                 const PrecisionContext& ctx = e.ctx;
                 auto gen = e.rng("lemma3a");
                 WorstCase worst;
                 const Real lo = ctx.rational(1, 5);
                 const Real half_pi = ctx.pi() / 2;
                 for (int i = 0; i < kLogTanSamples; ++i) {
                   const Real phi = e.uniform(gen, lo, half_pi - lo);
                   const Real x = e.uniform(gen, phi, half_pi);
                   worst.offer(log_tan_quadrature(x, phi, LogTanSide::above, e.quad, ctx.target_digits()).value,
                               log_tan_closed_form(x, phi, LogTanSide::above, ctx),
                               "phi = " + show(phi) + ", x = " + show(x));
                 }
                 return worst.take(kLogTanSamples);
               }});

  r.push_back({"lemma3b", "int_x^phi ln((tan phi + tan t)/(tan phi - tan t)) dt closed form", "log-tangent integral below phi", 50,
               true, [](const EvalEnv& e) {
                 const PrecisionContext& ctx = e.ctx;
                 auto gen = e.rng("lemma3b");
                 WorstCase worst;
                 const Real lo = ctx.rational(1, 5);
                 const Real half_pi = ctx.pi() / 2;
                 for (int i = 0; i < kLogTanSamples; ++i) {
                   const Real phi = e.uniform(gen, lo, half_pi - lo);
                   const Real x = e.uniform(gen, ctx.zero(), phi);
                   worst.offer(log_tan_quadrature(x, phi, LogTanSide::below, e.quad, ctx.target_digits()).value,
                               log_tan_closed_form(x, phi, LogTanSide::below, ctx),
                               "phi = " + show(phi) + ", x = " + show(x));
                 }
                 return worst.take(kLogTanSamples);
               }});

  // arccot is evaluated as arctan(1/x) here, independently of the
  // pi/2 - arctan(x) definition used by zagier_A.  For x < 0 this is the
  // branch in (-pi/2, 0) in which the sqrt7 - 2sqrt3 case holds as stated.
  r.push_back({"lemma4a", "arccot(sqrt7) = pi/2 - arctan(sqrt7)", "arccot at sqrt7", 50, false,
               fixed([](const EvalEnv& e) { return atan(1 / e.ctx.sqrt7()); },
                     [](const EvalEnv& e) { return e.ctx.pi() / 2 - e.ctx.phi7(); })});

  r.push_back({"lemma4b", "arccot(sqrt7 + 2sqrt3) = arctan(sqrt7) - pi/3", "arccot at sqrt7 + 2sqrt3", 50, false,
               fixed([](const EvalEnv& e) { return atan(1 / (e.ctx.sqrt7() + e.ctx.sqrt3() * 2)); },
                     [](const EvalEnv& e) { return e.ctx.phi7() - e.ctx.pi_times(1, 3); })});

  r.push_back({"lemma4c", "arccot(sqrt7 - 2sqrt3) = arctan(sqrt7) - 2pi/3 (arccot x = arctan(1/x))", "arccot at sqrt7 - 2sqrt3",
               50, false,
               fixed([](const EvalEnv& e) { return atan(1 / (e.ctx.sqrt7() - e.ctx.sqrt3() * 2)); },
                     [](const EvalEnv& e) { return e.ctx.phi7() - e.ctx.pi_times(2, 3); })});

  r.push_back({"hurwitz_route",
               "(1/49)[z(1/7) + z(2/7) - z(3/7) + z(4/7) - z(5/7) - z(6/7)], z(a) = zeta(2,a), equals "
               "7^(-1/2) sum_l (-7/l) Cl2(2 pi l/7)",
               "six-term Hurwitz sum vs Clausen sum", 100, false,
               fixed(
                   [](const EvalEnv& e) {
                     const PrecisionContext& ctx = e.ctx;
                     const Real two = ctx.integer(2);
                     constexpr int signs[] = {1, 1, -1, 1, -1, -1};
                     Real sum = ctx.zero();
                     for (long l = 1; l <= 6; ++l) {
                       const Real z = hurwitz_zeta(two, ctx.rational(l, 7), ctx);
                       sum += signs[l - 1] > 0 ? z : -z;
                     }
                     return sum / 49;
                   },
                   [](const EvalEnv& e) { return dirichlet_L_clausen(Discriminant(-7), e.ctx); })});

  return r;
}

}  // namespace

const std::vector<IdentitySpec>& registry() {
  static const std::vector<IdentitySpec> specs = build_registry();
  return specs;
}

const IdentitySpec& find_identity(const std::string& id) {
  const auto& specs = registry();
  const auto it = std::find_if(specs.begin(), specs.end(), [&](const IdentitySpec& s) { return s.id == id; });
  if (it == specs.end()) {
    std::ostringstream msg;
    msg << "unknown identity '" << id << "'; valid ids:";
    for (const auto& s : specs) msg << ' ' << s.id;
    throw LookupError(msg.str());
  }
  return *it;
}

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const auto& s : registry()) ids.push_back(s.id);
  return ids;
}

IdentityReport verify(const IdentitySpec& spec, const EvalEnv& env, std::optional<int> threshold) {
  const PrecisionContext& ctx = env.ctx;
  IdentityReport report;
  report.id = spec.id;
  report.target_digits = ctx.target_digits();
  report.threshold = threshold.value_or(ctx.target_digits() - ctx.guard_digits() / 2);
  if (spec.sampled) report.seed = env.seed;
  report.lhs_value = ctx.zero();
  report.rhs_value = ctx.zero();

  const auto start = std::chrono::steady_clock::now();
  try {
    Evaluation ev = spec.evaluate(env);
    report.agree_digits = agree_digits(ev.lhs, ev.rhs, ctx.working_digits());
    report.lhs_value = std::move(ev.lhs);
    report.rhs_value = std::move(ev.rhs);
    report.detail = std::move(ev.detail);
    report.passed = report.agree_digits >= report.threshold;
  } catch (const std::exception& ex) {
    report.error = ex.what();
    report.passed = false;
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

IdentityReport verify(const std::string& id, int target_digits, const VerifyOptions& options) {
  const IdentitySpec& spec = find_identity(id);
  const PrecisionContext ctx = make_context(target_digits, options.guard_digits);
  const TanhSinh quad(ctx, QuadratureOptions{.workers = options.workers});
  return verify(spec, EvalEnv{ctx, quad, options.seed}, options.threshold);
}

std::vector<IdentityReport> verify_all(int target_digits, const VerifyOptions& options) {
  const PrecisionContext ctx = make_context(target_digits, options.guard_digits);
  const TanhSinh quad(ctx, QuadratureOptions{.workers = options.workers});
  const EvalEnv env{ctx, quad, options.seed};
  std::vector<IdentityReport> reports;
  for (const auto& spec : registry()) reports.push_back(verify(spec, env, options.threshold));
  return reports;
}

VerificationSummary summarize(const std::vector<IdentityReport>& reports) {
  VerificationSummary s;
  for (const auto& r : reports) {
    ++s.total;
    (r.passed ? s.passed : s.failed) += 1;
    s.elapsed += r.elapsed;
  }
  return s;
}

}  // namespace clausen
