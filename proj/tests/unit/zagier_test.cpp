#include <doctest.h>

#include "clausen/quadrature.hpp"
#include "clausen/specfun.hpp"
#include "support.hpp"

using namespace clausen;
using namespace testing_support;

TEST_SUITE("zagier") {

TEST_CASE("A(0) and arccot branch") {
  const auto ctx = make_context(40);
  CHECK(abs(zagier_A(ctx.zero(), ctx)) < Real::parse("1e-55", 60));
  CHECK(agree(arccot(ctx.sqrt7(), ctx), ctx.pi() / 2L - ctx.phi7()) >= 58);
  CHECK(agree(arccot(ctx.zero(), ctx), ctx.pi() / 2L) >= 58);
}

TEST_CASE("A(x) against quadrature of its defining integral") {
  const auto ctx = make_context(50);
  const TanhSinh quad(ctx);
  const Real xs[] = {ctx.rational(1, 2), ctx.integer(1), ctx.sqrt7(), cot(ctx.pi() / 7L)};
  for (const Real& x : xs) {
    CAPTURE(x.to_fixed(10));
    CHECK(agree(zagier_A(x, ctx), zagier_A_quadrature(x, quad, 50)) >= 48);
  }
  const Real neg = ctx.sqrt7() - 2L * ctx.sqrt3();
  CHECK(neg.sign() < 0);
  CHECK(agree(zagier_A(neg, ctx), zagier_A_quadrature(neg, quad, 50)) >= 48);
  CHECK(agree(zagier_A(neg, ctx), -zagier_A(-neg, ctx)) >= 65);
}

TEST_CASE("three-term combinations give L_{-7}(2)") {
  const auto ctx = make_context(80);
  const Real L = ref(kLminus7at2, 100);
  const Real a = 2L / ctx.sqrt7() *
                 (zagier_A(cot(ctx.pi() / 7L), ctx) + zagier_A(cot(2L * ctx.pi() / 7L), ctx) +
                  zagier_A(cot(4L * ctx.pi() / 7L), ctx));
  CHECK(agree(a, L) >= 68);
  const Real s7 = ctx.sqrt7();
  const Real b = 12L / (7L * s7) *
                 (2L * zagier_A(s7, ctx) + zagier_A(s7 + 2L * ctx.sqrt3(), ctx) + zagier_A(s7 - 2L * ctx.sqrt3(), ctx));
  CHECK(agree(b, L) >= 68);
  CHECK(agree(a, dirichlet_L_clausen(Discriminant(-7), ctx)) >= 95);
  CHECK(agree(b, dirichlet_L_clausen(Discriminant(-7), ctx)) >= 95);
}

}
