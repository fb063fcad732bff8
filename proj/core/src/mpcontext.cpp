#include "clausen/mpcontext.hpp"

#include <deque>
#include <mutex>
#include <string>

#include "clausen/errors.hpp"

namespace clausen {

struct PrecisionContext::State {
  Real pi;
  Real ln2;
  Real sqrt3;
  Real sqrt7;
  Real phi7;

  std::mutex zeta_mutex;
  std::deque<Real> zeta_even;  // index n - 1; deque keeps references stable
};

namespace {

Real constant(int digits, int (*fn)(mpfr_ptr, mpfr_rnd_t)) {
  Real out(digits);
  fn(out.raw(), MPFR_RNDN);
  return out;
}

}  // namespace

PrecisionContext::PrecisionContext(int target_digits, int guard_digits)
    : target_digits_(target_digits), guard_digits_(guard_digits), state_(std::make_shared<State>()) {
  if (target_digits < kMinTargetDigits || target_digits > kMaxTargetDigits) {
    throw ConfigError("target digits must lie in [" + std::to_string(kMinTargetDigits) + ", " +
                      std::to_string(kMaxTargetDigits) + "], got " + std::to_string(target_digits));
  }
  if (guard_digits < 10) {
    throw ConfigError("guard digits must be at least 10, got " + std::to_string(guard_digits));
  }
  const int wd = working_digits();
  state_->pi = constant(wd, mpfr_const_pi);
  state_->ln2 = constant(wd, mpfr_const_log2);
  state_->sqrt3 = sqrt(Real(3, wd));
  state_->sqrt7 = sqrt(Real(7, wd));
  state_->phi7 = atan(state_->sqrt7);
}

const Real& PrecisionContext::pi() const noexcept { return state_->pi; }
const Real& PrecisionContext::ln2() const noexcept { return state_->ln2; }
const Real& PrecisionContext::sqrt3() const noexcept { return state_->sqrt3; }
const Real& PrecisionContext::sqrt7() const noexcept { return state_->sqrt7; }
const Real& PrecisionContext::phi7() const noexcept { return state_->phi7; }

Real PrecisionContext::rational(const mpq_class& q) const {
  Real out(working_digits());
  mpfr_set_q(out.raw(), q.get_mpq_t(), MPFR_RNDN);
  return out;
}

Real PrecisionContext::pi_times(long p, long q) const {
  if (q == 0) throw ArgumentError("pi_times: zero denominator");
  Real out = pi() * p;
  out /= q;
  return out;
}

const Real& PrecisionContext::zeta_even(int n) const {
  if (n < 1) throw ArgumentError("zeta_even: index must be >= 1, got " + std::to_string(n));
  std::lock_guard lock(state_->zeta_mutex);
  auto& cache = state_->zeta_even;
  while (static_cast<int>(cache.size()) < n) {
    const int k = static_cast<int>(cache.size()) + 1;
    const mpq_class b = clausen::bernoulli(2 * k);
    Real value = rational(abs(b));
    Real factorial(working_digits());
    mpfr_fac_ui(factorial.raw(), static_cast<unsigned long>(2 * k), MPFR_RNDN);
    value /= factorial;
    value /= 2;
    cache.push_back(std::move(value));
  }
  return cache[static_cast<std::size_t>(n - 1)];
}

PrecisionContext make_context(int target_digits, int guard_digits) {
  return PrecisionContext(target_digits, guard_digits);
}

}  // namespace clausen
