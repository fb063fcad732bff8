#pragma once

#include <gmpxx.h>

#include <memory>
#include <string_view>

#include "clausen/real.hpp"

namespace clausen {

inline constexpr int kDefaultGuardDigits = 20;
inline constexpr int kMinTargetDigits = 10;
inline constexpr int kMaxTargetDigits = 10'000'000;

/// Exact Bernoulli number B_n with the B_1 = -1/2 convention.
///
/// Even indices come from a process-wide table built from the tangent
/// numbers in pure integer arithmetic and grown on demand; the table is
/// shared by every context since it does not depend on precision.
/// Odd n >= 3 throws ArgumentError (those values are zero and no caller
/// needs them).
mpq_class bernoulli(int n);

/// Working-precision configuration plus constants cached at that precision.
///
/// Contexts are immutable after construction.  Copies share the lazily
/// grown coefficient cache, which is filled under a lock and never changes
/// an entry once written, so a context can be handed to worker threads.
class PrecisionContext {
 public:
  explicit PrecisionContext(int target_digits, int guard_digits = kDefaultGuardDigits);

  int target_digits() const noexcept { return target_digits_; }
  int guard_digits() const noexcept { return guard_digits_; }
  int working_digits() const noexcept { return target_digits_ + guard_digits_; }
  mpfr_prec_t bits() const noexcept { return digits_to_bits(working_digits()); }

  const Real& pi() const noexcept;
  const Real& ln2() const noexcept;
  const Real& sqrt3() const noexcept;
  const Real& sqrt7() const noexcept;
  /// arctan(sqrt 7), the interior singularity of the I7 integrand.
  const Real& phi7() const noexcept;

  Real zero() const { return Real(working_digits()); }
  Real integer(long value) const { return Real(value, working_digits()); }
  Real rational(long p, long q) const { return Real::rational(p, q, working_digits()); }
  Real rational(const mpq_class& q) const;
  Real parse(std::string_view decimal) const { return Real::parse(decimal, working_digits()); }
  /// p*pi/q at working precision.
  Real pi_times(long p, long q) const;

  mpq_class bernoulli(int n) const { return clausen::bernoulli(n); }

  /// zeta(2n) / (2 pi)^(2n) = |B_2n| / (2 (2n)!), for n >= 1.
  const Real& zeta_even(int n) const;

 private:
  struct State;

  int target_digits_;
  int guard_digits_;
  std::shared_ptr<State> state_;
};

/// Validated construction: throws ConfigError for target_digits outside
/// [10, 10^7] or guard_digits < 10.
PrecisionContext make_context(int target_digits, int guard_digits = kDefaultGuardDigits);

}  // namespace clausen
