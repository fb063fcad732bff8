#include "clausen/relations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "clausen/errors.hpp"
#include "clausen/specfun.hpp"

namespace clausen {

std::string to_string(PslqStatus status) {
  switch (status) {
    case PslqStatus::found: return "found";
    case PslqStatus::none_within_bound: return "none_within_bound";
    case PslqStatus::iteration_limit: return "iteration_limit";
    case PslqStatus::precision_exhausted: return "precision_exhausted";
  }
  return "unknown";
}

int pslq_minimum_digits(std::size_t n, double norm_bound) {
  return static_cast<int>(std::ceil(2.0 * static_cast<double>(n) * std::log10(std::max(norm_bound, 1.0)))) + 20;
}

namespace {

using Matrix = std::vector<std::vector<Real>>;

Matrix make_matrix(std::size_t rows, std::size_t cols, int digits) {
  return Matrix(rows, std::vector<Real>(cols, Real(digits)));
}

// Column j of B as normalised machine integers, or nullopt on overflow.
std::optional<std::vector<std::int64_t>> normalised_column(const Matrix& b, std::size_t j) {
  std::vector<std::int64_t> c;
  for (const auto& row : b) {
    if (!mpfr_fits_intmax_p(row[j].raw(), MPFR_RNDN)) return std::nullopt;
    c.push_back(static_cast<std::int64_t>(mpfr_get_sj(row[j].raw(), MPFR_RNDN)));
  }
  std::int64_t g = 0;
  for (auto v : c) g = std::gcd(g, v);
  if (g == 0) return std::nullopt;
  for (auto& v : c) v /= g;
  const auto first = std::find_if(c.begin(), c.end(), [](std::int64_t v) { return v != 0; });
  if (*first < 0) {
    for (auto& v : c) v = -v;
  }
  return c;
}

}  // namespace

PslqOutcome pslq(std::span<const Real> values, const PrecisionContext& ctx, const PslqOptions& options) {
  const std::size_t n = values.size();
  if (n < 2) throw ArgumentError("pslq: need at least two values");
  const int wd = ctx.working_digits();
  int input_digits = wd;
  for (const auto& v : values) input_digits = std::min(input_digits, v.digits());
  const int required = pslq_minimum_digits(n, options.norm_bound);
  if (input_digits < required) {
    std::ostringstream msg;
    msg << "pslq: " << n << " values searched to norm " << options.norm_bound << " need " << required
        << " working digits, inputs carry " << input_digits;
    throw PrecisionError(msg.str(), required - ctx.guard_digits());
  }

  // Normalised input y = x / |x| and partial norms s_k = |x_k..x_n| / |x|.
  std::vector<Real> y(n, Real(wd));
  std::vector<Real> s(n, Real(wd));
  {
    Real acc(wd);
    for (std::size_t k = n; k-- > 0;) {
      const Real xk = values[k].with_digits(wd);
      acc += xk * xk;
      s[k] = sqrt(acc);
    }
    if (s[0].is_zero()) throw ArgumentError("pslq: all values are zero");
    const Real inv = 1 / s[0];
    for (std::size_t k = 0; k < n; ++k) {
      y[k] = values[k].with_digits(wd) * inv;
      s[k] *= inv;
    }
  }

  Matrix h = make_matrix(n, n - 1, wd);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    h[j][j] = s[j + 1] / s[j];
    for (std::size_t i = j + 1; i < n; ++i) h[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
  }
  Matrix b = make_matrix(n, n, wd);
  for (std::size_t i = 0; i < n; ++i) b[i][i] = ctx.integer(1);

  // Hermite reduction of row i against rows j <= jmax.
  auto reduce_row = [&](std::size_t i, std::size_t jmax) {
    for (std::size_t j = jmax + 1; j-- > 0;) {
      if (h[j][j].is_zero()) continue;
      const Real t = round(h[i][j] / h[j][j]);
      if (t.is_zero()) continue;
      y[j] += t * y[i];
      for (std::size_t k = 0; k <= j; ++k) h[i][k] -= t * h[j][k];
      for (std::size_t k = 0; k < n; ++k) b[k][j] += t * b[k][i];
    }
  };
  for (std::size_t i = 1; i < n; ++i) reduce_row(i, i - 1);

  Real detect(1, wd);
  mpfr_ui_pow_ui(detect.raw(), 10, static_cast<unsigned long>(std::max(ctx.target_digits() - options.safety_digits, 1)),
                 MPFR_RNDN);
  detect = 1 / detect;
  Real overflow(1, wd);
  mpfr_mul_2si(overflow.raw(), overflow.raw(), static_cast<long>(ctx.bits()) - 24, MPFR_RNDN);

  const long cap = options.max_iterations > 0 ? options.max_iterations
                                              : 10L * static_cast<long>(n * n) * static_cast<long>(wd);
  PslqOutcome outcome;
  for (long iter = 1; iter <= cap; ++iter) {
    outcome.iterations = iter;

    // Pick m maximising gamma^i |H_ii| (compared via log to avoid overflow).
    std::size_t m = 0;
    double best = -1e300;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Real mag = abs(h[i][i]);
      if (mag.is_zero()) continue;
      long exponent = 0;
      const double mant = mpfr_get_d_2exp(&exponent, mag.raw(), MPFR_RNDN);
      const double score = std::log(mant) + static_cast<double>(exponent) * std::log(2.0) +
                           static_cast<double>(i + 1) * std::log(options.gamma);
      if (score > best) {
        best = score;
        m = i;
      }
    }

    std::swap(y[m], y[m + 1]);
    std::swap(h[m], h[m + 1]);
    for (std::size_t k = 0; k < n; ++k) std::swap(b[k][m], b[k][m + 1]);

    if (m + 2 < n) {
      const Real t0 = sqrt(h[m][m] * h[m][m] + h[m][m + 1] * h[m][m + 1]);
      const Real t1 = h[m][m] / t0;
      const Real t2 = h[m][m + 1] / t0;
      for (std::size_t i = m; i < n; ++i) {
        const Real t3 = h[i][m];
        const Real t4 = h[i][m + 1];
        h[i][m] = t1 * t3 + t2 * t4;
        h[i][m + 1] = t1 * t4 - t2 * t3;
      }
    }
    for (std::size_t i = m + 1; i < n; ++i) reduce_row(i, std::min(i - 1, m + 1));

    // Relation found when some y_j vanishes; B's column j holds it.
    std::size_t smallest = 0;
    for (std::size_t j = 1; j < n; ++j) {
      if (abs(y[j]) < abs(y[smallest])) smallest = j;
    }
    if (abs(y[smallest]) < detect) {
      auto coeffs = normalised_column(b, smallest);
      if (coeffs) {
        Real residual(wd);
        for (std::size_t k = 0; k < n; ++k) residual += values[k].with_digits(wd) * static_cast<long>((*coeffs)[k]);
        residual = abs(residual);
        if (residual < detect) {
          outcome.status = PslqStatus::found;
          outcome.relation = IntegerRelation{std::move(*coeffs), residual, options.norm_bound, ctx.target_digits()};
          return outcome;
        }
      }
    }

    Real hmax(wd);
    for (std::size_t j = 0; j + 1 < n; ++j) hmax = max(hmax, abs(h[j][j]));
    outcome.certified_bound = hmax.is_zero() ? 0.0 : (1 / hmax).to_double();
    if (outcome.certified_bound > options.norm_bound) {
      outcome.status = PslqStatus::none_within_bound;
      return outcome;
    }

    for (const auto& row : b) {
      for (const auto& entry : row) {
        if (abs(entry) > overflow) {
          outcome.status = PslqStatus::precision_exhausted;
          outcome.warning = "basis entries exceed working precision";
          return outcome;
        }
      }
    }
  }
  outcome.status = PslqStatus::iteration_limit;
  outcome.warning = "iteration cap of " + std::to_string(cap) + " reached without a decision";
  return outcome;
}

std::vector<Real> six_clausen_values(const PrecisionContext& ctx) {
  const Real& phi = ctx.phi7();
  return {clausen2(phi * 2, ctx), clausen2(phi * 4, ctx),   clausen2(phi * 6, ctx),
          clausen2_pi(2, 7, ctx), clausen2_pi(4, 7, ctx), clausen2_pi(6, 7, ctx)};
}

IntegerRelation rediscover_six_term_relation(const PrecisionContext& ctx, double norm_bound) {
  const int minimum = std::max(kRediscoverMinimumDigits, pslq_minimum_digits(6, norm_bound) - ctx.guard_digits());
  if (ctx.target_digits() < minimum) {
    throw PrecisionError("rediscovery needs at least " + std::to_string(minimum) + " digits, got " +
                             std::to_string(ctx.target_digits()),
                         minimum);
  }
  const std::vector<Real> values = six_clausen_values(ctx);
  PslqOptions options;
  options.norm_bound = norm_bound;
  PslqOutcome outcome = pslq(values, ctx, options);
  if (!outcome.relation) {
    throw Error("six-term relation not found at " + std::to_string(ctx.target_digits()) +
                " digits with norm bound " + std::to_string(norm_bound) + " (" + to_string(outcome.status) + ")");
  }
  if (outcome.relation->coefficients != kSixTermRelation) {
    std::ostringstream msg;
    msg << "PSLQ returned an unexpected relation:";
    for (auto c : outcome.relation->coefficients) msg << ' ' << c;
    throw Error(msg.str());
  }
  return std::move(*outcome.relation);
}

}  // namespace clausen
