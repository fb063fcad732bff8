#include <doctest.h>

#include "../oracles/oracles.hpp"
#include "clausen/errors.hpp"
#include "clausen/specfun.hpp"

using namespace clausen;

namespace {
constexpr std::int64_t kListed[] = {-8, -7, -4, -3, 5, 8, 12, 13, 17, 20, 21};
}

TEST_SUITE("kronecker") {

TEST_CASE("admissibility") {
  for (std::int64_t d : kListed) CHECK(Discriminant::admissible(d));
  for (std::int64_t d : {0, 1, 2, 3, 4, 6, 7, 9, 16, -1, -2, -5, -6, 25}) {
    CAPTURE(d);
    CHECK_FALSE(Discriminant::admissible(d));
    CHECK_THROWS_AS(Discriminant{d}, ArgumentError);
  }
}

TEST_CASE("period table") {
  const int minus7[] = {1, 1, -1, 1, -1, -1, 0};
  for (int n = 1; n <= 7; ++n) CHECK(kronecker(Discriminant(-7), n) == minus7[n - 1]);
  const int five[] = {1, -1, -1, 1, 0};
  for (int n = 1; n <= 5; ++n) CHECK(kronecker(Discriminant(5), n) == five[n - 1]);
  for (std::int64_t d : kListed) CHECK(kronecker(Discriminant(d), 1) == 1);
  CHECK_THROWS_AS(kronecker(Discriminant(-7), 0), ArgumentError);
}

TEST_CASE("oracle equivalence, multiplicativity and periodicity") {
  for (std::int64_t d : kListed) {
    const Discriminant D(d);
    const auto m = D.modulus();
    for (std::int64_t n = 1; n <= 1000; ++n) {
      const int k = kronecker(D, n);
      if (k != oracle::kronecker_euler(d, n)) FAIL("d=" << d << " n=" << n);
      if (kronecker(D, n + m) != k) FAIL("period d=" << d << " n=" << n);
    }
    for (std::int64_t a = 1; a <= 60; ++a) {
      for (std::int64_t b = 1; b <= 60; ++b) {
        if (kronecker(D, a * b) != kronecker(D, a) * kronecker(D, b)) FAIL("mult d=" << d << " " << a << "*" << b);
      }
    }
  }
}

TEST_CASE("general symbol") {
  CHECK(kronecker_symbol(2, 7) == 1);
  CHECK(kronecker_symbol(3, 7) == -1);
  CHECK(kronecker_symbol(-1, 3) == -1);
  CHECK(kronecker_symbol(6, 9) == 0);
  CHECK(kronecker_symbol(1001, 9907) == -1);
  CHECK(kronecker_symbol(19, 45) == 1);
}

}
