#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clausen/mpcontext.hpp"
#include "clausen/real.hpp"

namespace clausen {

/// An integer vector c with |sum c_i x_i| tiny.  Normalised: gcd 1 and the
/// first nonzero coefficient positive.
struct IntegerRelation {
  std::vector<std::int64_t> coefficients;
  /// |sum c_i x_i| at working precision.
  Real residual;
  /// Largest coefficient magnitude the search was allowed to reach.
  double norm_bound = 0;
  /// Decimal digits the inputs were trusted to (the context target).
  int precision_used = 0;
};

enum class PslqStatus {
  found,
  /// Every relation has norm above the bound (certified by the H diagonal).
  none_within_bound,
  /// Iteration cap reached; treated as no relation with a warning.
  iteration_limit,
  /// Basis entries outgrew the working precision.
  precision_exhausted,
};

std::string to_string(PslqStatus status);

struct PslqOptions {
  double norm_bound = 1e6;
  /// A relation is accepted when its residual is below 10^-(target - safety).
  int safety_digits = 10;
  /// Selection parameter, must exceed 2/sqrt(3).
  double gamma = 1.16;
  /// 0 picks 10 n^2 working_digits.
  long max_iterations = 0;
};

struct PslqOutcome {
  std::optional<IntegerRelation> relation;
  PslqStatus status = PslqStatus::none_within_bound;
  long iterations = 0;
  /// No relation of Euclidean norm below this exists (1 / max |H_jj|).
  double certified_bound = 0;
  std::string warning;
};

/// Working digits needed to search n values up to `norm_bound`:
/// 2 n log10(norm_bound) + 20.
int pslq_minimum_digits(std::size_t n, double norm_bound);

/// PSLQ integer-relation search (Ferguson-Bailey) at the context's working
/// precision.  Deterministic.  Throws PrecisionError when the inputs carry
/// fewer than pslq_minimum_digits digits, ArgumentError for n < 2.
PslqOutcome pslq(std::span<const Real> values, const PrecisionContext& ctx, const PslqOptions& options = {});

/// Cl2(2phi7), Cl2(4phi7), Cl2(6phi7), Cl2(2pi/7), Cl2(4pi/7), Cl2(6pi/7).
std::vector<Real> six_clausen_values(const PrecisionContext& ctx);

/// The relation expected among six_clausen_values: (6, -6, 2, -7, -7, 7).
inline const std::vector<std::int64_t> kSixTermRelation = {6, -6, 2, -7, -7, 7};

inline constexpr int kRediscoverMinimumDigits = 100;

/// Runs PSLQ on six_clausen_values and checks the answer against
/// kSixTermRelation.  Throws PrecisionError below 100 target digits (or
/// below the PSLQ minimum) and Error when the relation is not recovered.
IntegerRelation rediscover_six_term_relation(const PrecisionContext& ctx, double norm_bound = 1e6);

}  // namespace clausen
