#include <doctest.h>

#include "../oracles/oracles.hpp"
#include "support.hpp"

using namespace clausen;
using testing_support::agree;
using testing_support::ref;

TEST_SUITE("oracles") {

TEST_CASE("bernoulli recurrence oracle gives the textbook values") {
  const auto b = oracle::bernoulli_recurrence(12);
  CHECK(b[0] == 1);
  CHECK(b[1] == mpq_class(-1, 2));
  CHECK(b[2] == mpq_class(1, 6));
  CHECK(b[3] == 0);
  CHECK(b[4] == mpq_class(-1, 30));
  CHECK(b[10] == mpq_class(5, 66));
  CHECK(b[12] == mpq_class(-691, 2730));
}

TEST_CASE("kronecker oracle") {
  // (-7/n), n = 1..7
  const int expected[] = {1, 1, -1, 1, -1, -1, 0};
  for (int n = 1; n <= 7; ++n) CHECK(oracle::kronecker_euler(-7, n) == expected[n - 1]);
  const int five[] = {1, -1, -1, 1, 0};
  for (int n = 1; n <= 5; ++n) CHECK(oracle::kronecker_euler(5, n) == five[n - 1]);
}

TEST_CASE("CVZ oracle reproduces the frozen Catalan and L_{-4}(5/2)") {
  CHECK(agree(oracle::catalan(90), ref(testing_support::kCatalan)) >= 68);
  CHECK(agree(oracle::l_minus4(Real::parse("2.5", 90), 90), ref(testing_support::kLminus4at2_5)) >= 68);
}

TEST_CASE("direct L_5(2) agrees with the frozen value") {
  // 2e5 periods: block tail below 1e-16
  CHECK(agree(oracle::l5_2_direct(200000, 40), ref(testing_support::kL5at2)) >= 15);
}

TEST_CASE("direct Hurwitz sum at 1e5 terms") {
  // tail error below 1/(30 q^5) ~ 3e-27
  const Real a = Real::rational(3, 7, 40);
  CHECK(agree(oracle::hurwitz2_direct(a, 100000, 40), ref(testing_support::kHurwitzSevenths[2])) >= 25);
}

}
