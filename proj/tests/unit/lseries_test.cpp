#include <doctest.h>

#include "../oracles/oracles.hpp"
#include "clausen/errors.hpp"
#include "clausen/specfun.hpp"
#include "support.hpp"

using namespace clausen;
using namespace testing_support;

namespace {
Real L(long d, const Real& s, const PrecisionContext& ctx) { return dirichlet_L(LSeriesPoint{Discriminant(d), s}, ctx); }
}  // namespace

TEST_SUITE("lseries") {

TEST_CASE("reference values") {
  const auto ctx = make_context(60);
  CHECK(agree(L(-7, ctx.integer(2), ctx), ref(kLminus7at2)) >= 68);
  CHECK(L(-7, ctx.integer(2), ctx).to_fixed(15) == "1.151925470544491");
  CHECK(agree(L(-4, ctx.integer(2), ctx), ref(kCatalan)) >= 68);
  CHECK(agree(L(-3, ctx.integer(2), ctx), ref(kLminus3at2)) >= 68);
  CHECK(agree(L(-8, ctx.integer(2), ctx), ref(kLminus8at2)) >= 68);
  CHECK(agree(L(5, ctx.integer(2), ctx), ref(kL5at2)) >= 68);
  CHECK(agree(L(5, ctx.integer(2), ctx), 4L * ctx.pi() * ctx.pi() / (25L * sqrt(ctx.integer(5)))) >= 68);
}

TEST_CASE("non-integer s") {
  const auto ctx = make_context(50);
  CHECK(agree(L(-4, ctx.parse("2.5"), ctx), ref(kLminus4at2_5)) >= 65);
  CHECK(agree(L(-4, ctx.parse("2.5"), ctx), oracle::l_minus4(ctx.parse("2.5"), 80)) >= 65);
}

TEST_CASE("Hurwitz and Clausen routes agree") {
  const auto ctx = make_context(80);
  for (long d : {-3L, -4L, -7L, -8L}) {
    CAPTURE(d);
    CHECK(agree(L(d, ctx.integer(2), ctx), dirichlet_L_clausen(Discriminant(d), ctx)) >= 80);
  }
  CHECK(agree(L(-3, ctx.integer(2), ctx), 2L / ctx.sqrt3() * clausen2_pi(2, 3, ctx)) >= 80);
  const Real three_term = clausen2_pi(2, 7, ctx) + clausen2_pi(4, 7, ctx) - clausen2_pi(6, 7, ctx);
  CHECK(agree(dirichlet_L_clausen(Discriminant(-7), ctx), 2L / ctx.sqrt7() * three_term) >= 80);
}

TEST_CASE("errors") {
  const auto ctx = make_context(20);
  CHECK_THROWS_AS(dirichlet_L_clausen(Discriminant(5), ctx), DomainError);
  CHECK_THROWS_AS(L(-7, ctx.integer(1), ctx), DomainError);
}

}
