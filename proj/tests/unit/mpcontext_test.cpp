#include <doctest.h>

#include "../oracles/oracles.hpp"
#include "clausen/errors.hpp"
#include "clausen/mpcontext.hpp"
#include "support.hpp"

using namespace clausen;
using testing_support::agree;

TEST_SUITE("mpcontext") {

TEST_CASE("context limits") {
  CHECK_THROWS_AS(make_context(9), ConfigError);
  CHECK_THROWS_AS(make_context(10'000'001), ConfigError);
  CHECK_THROWS_AS(make_context(50, 5), ConfigError);
  const auto ctx = make_context(30);
  CHECK(ctx.target_digits() == 30);
  CHECK(ctx.guard_digits() == 20);
  CHECK(ctx.working_digits() >= ctx.target_digits() + 10);
}

TEST_CASE("cached constants") {
  const auto ctx = make_context(30);
  CHECK(ctx.phi7().to_fixed(15) == "1.209429202888189");
  CHECK(agree(ctx.phi7(), testing_support::ref(testing_support::kPhi7)) >= ctx.working_digits() - 1);
  CHECK(agree(sin(ctx.pi() / 6L), ctx.rational(1, 2)) >= ctx.working_digits() - 1);

  const auto c50 = make_context(50);
  CHECK(agree(c50.sqrt7() * c50.sqrt7(), c50.integer(7)) >= 49);
  CHECK(agree(tan(c50.phi7()), c50.sqrt7()) >= c50.working_digits() - 2);
  CHECK(c50.phi7() > c50.pi() / 3L);
  CHECK(c50.phi7() < c50.pi() / 2L);
}

TEST_CASE("constants are deterministic and re-derivable at double precision") {
  const auto a = make_context(40);
  const auto b = make_context(40);
  CHECK(a.pi().to_fixed(60) == b.pi().to_fixed(60));
  CHECK(a.phi7().to_fixed(60) == b.phi7().to_fixed(60));
  const auto big = make_context(80);
  const int wd = a.working_digits();
  CHECK(agree(a.pi(), big.pi()) >= wd - 1);
  CHECK(agree(a.ln2(), big.ln2()) >= wd - 1);
  CHECK(agree(a.sqrt3(), big.sqrt3()) >= wd - 1);
  CHECK(agree(a.sqrt7(), big.sqrt7()) >= wd - 1);
  CHECK(agree(a.phi7(), big.phi7()) >= wd - 1);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(10) == mpq_class(5, 66));
  CHECK_THROWS_AS(bernoulli(3), ArgumentError);
  CHECK_THROWS_AS(bernoulli(-2), ArgumentError);

  const auto oracle_values = oracle::bernoulli_recurrence(200);
  for (int n = 0; n <= 200; n += 2) {
    CAPTURE(n);
    CHECK(bernoulli(n) == oracle_values[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("bernoulli table satisfies the defining recurrence") {
  for (int n = 2; n <= 200; n += 2) {
    mpz_class binom = 1;
    mpq_class acc = 0;
    for (int k = 0; k <= n; ++k) {
      if (k <= 1 || k % 2 == 0) acc += mpq_class(binom) * bernoulli(k);
      binom = binom * (n + 1 - k) / (k + 1);
    }
    CAPTURE(n);
    CHECK(acc == 0);
  }
}

TEST_CASE("zeta_even") {
  const auto ctx = make_context(50);
  const Real two_pi = 2L * ctx.pi();
  CHECK(agree(ctx.zeta_even(1) * two_pi * two_pi, ctx.pi() * ctx.pi() / 6L) >= ctx.working_digits() - 2);
  CHECK(agree(ctx.zeta_even(2), ctx.rational(1, 1440)) >= ctx.working_digits() - 1);
  for (int n = 1; n < 100; ++n) {
    CAPTURE(n);
    CHECK(ctx.zeta_even(n + 1) * 4L < ctx.zeta_even(n));
  }
}

}
