#include <doctest.h>

#include <random>

#include "clausen/errors.hpp"
#include "clausen/relations.hpp"
#include "clausen/specfun.hpp"
#include "support.hpp"

using namespace clausen;

TEST_SUITE("relations") {

TEST_CASE("ln 2 and ln 4") {
  const auto ctx = make_context(50);
  const Real v[] = {ctx.ln2(), log(ctx.integer(4))};
  const auto out = pslq(v, ctx);
  REQUIRE(out.relation.has_value());
  CHECK(out.status == PslqStatus::found);
  CHECK(out.relation->coefficients == std::vector<std::int64_t>{2, -1});
  CHECK(out.relation->precision_used == 50);
}

TEST_CASE("small textbook relations") {
  const auto ctx = make_context(60);
  const Real v[] = {ctx.pi(), atan(ctx.rational(1, 5)), atan(ctx.rational(1, 239))};
  const auto out = pslq(v, ctx);
  REQUIRE(out.relation.has_value());
  CHECK(out.relation->coefficients == std::vector<std::int64_t>{1, -16, 4});
}

TEST_CASE("negative control: 1, pi, Euler gamma") {
  const auto ctx = make_context(50);
  Real gamma(ctx.working_digits());
  mpfr_const_euler(gamma.raw(), MPFR_RNDN);
  const Real v[] = {ctx.integer(1), ctx.pi(), gamma};
  const auto out = pslq(v, ctx);
  CHECK_FALSE(out.relation.has_value());
  CHECK(out.status == PslqStatus::none_within_bound);
  CHECK(out.certified_bound > 1e6);
}

TEST_CASE("no false positives on seeded random reals") {
  const auto ctx = make_context(100);
  std::mt19937_64 gen(4242);
  PslqOptions opts;
  opts.norm_bound = 1e4;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Real> v;
    for (int i = 0; i < 5; ++i) {
      Real x(ctx.working_digits());
      std::string digits = "0.";
      for (int k = 0; k < ctx.working_digits(); ++k) digits += static_cast<char>('0' + gen() % 10);
      v.push_back(ctx.parse(digits));
    }
    const auto out = pslq(v, ctx, opts);
    CAPTURE(trial);
    CHECK_FALSE(out.relation.has_value());
  }
}

TEST_CASE("six-term relation") {
  const auto ctx = make_context(200);
  const auto values = six_clausen_values(ctx);
  const auto out = pslq(values, ctx);
  REQUIRE(out.relation.has_value());
  CHECK(out.relation->coefficients == kSixTermRelation);
  CHECK(out.relation->residual < Real::parse("1e-180", 220));

  // scale invariance
  std::vector<Real> scaled;
  for (const Real& x : values) scaled.push_back(x * ctx.rational(-22, 7));
  const auto s = pslq(scaled, ctx);
  REQUIRE(s.relation.has_value());
  CHECK(s.relation->coefficients == kSixTermRelation);

  // soundness at twice the precision
  const auto ctx2 = make_context(400);
  const auto values2 = six_clausen_values(ctx2);
  Real sum(ctx2.working_digits());
  for (std::size_t i = 0; i < values2.size(); ++i) sum += values2[i] * static_cast<long>(out.relation->coefficients[i]);
  CHECK(abs(sum) < Real::parse("1e-190", 420));
}

TEST_CASE("rediscovery") {
  const auto c100 = make_context(100);
  CHECK(rediscover_six_term_relation(c100).coefficients == kSixTermRelation);
  const auto c200 = make_context(200);
  const auto r200 = rediscover_six_term_relation(c200);
  const auto c400 = make_context(400);
  const auto r400 = rediscover_six_term_relation(c400);
  CHECK(r200.residual < Real::parse("1e-180", 220));
  CHECK(r400.residual < r200.residual);
  CHECK_THROWS_AS(rediscover_six_term_relation(make_context(50)), PrecisionError);
  try {
    rediscover_six_term_relation(make_context(50));
  } catch (const PrecisionError& e) {
    CHECK(e.minimum_digits() >= 100);
  }
}

TEST_CASE("precision precondition") {
  CHECK(pslq_minimum_digits(6, 1e6) == 2 * 6 * 6 + 20);
  const auto ctx = make_context(20);
  std::vector<Real> v(6, ctx.integer(1));
  CHECK_THROWS_AS(pslq(v, ctx), PrecisionError);
  const Real one[] = {ctx.integer(1)};
  CHECK_THROWS_AS(pslq(one, ctx), ArgumentError);
}

}
