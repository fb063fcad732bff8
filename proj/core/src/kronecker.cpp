#include <cmath>
#include <string>

#include "clausen/errors.hpp"
#include "clausen/specfun.hpp"

namespace clausen {

namespace {

// (2/n) for odd n, indexed by n mod 8.
constexpr int kTwoTable[8] = {0, 1, 0, -1, 0, -1, 0, 1};

bool is_square(std::int64_t d) {
  if (d < 0) return false;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(d)));
  while (r * r > d) --r;
  while ((r + 1) * (r + 1) <= d) ++r;
  return r * r == d;
}

}  // namespace

bool Discriminant::admissible(std::int64_t d) noexcept {
  if (d == 0) return false;
  const std::int64_t m = ((d % 4) + 4) % 4;
  return (m == 0 || m == 1) && !is_square(d);
}

Discriminant::Discriminant(std::int64_t d) : d_(d) {
  if (!admissible(d)) {
    throw ArgumentError("inadmissible discriminant " + std::to_string(d) +
                        " (need non-square d = 0 or 1 mod 4)");
  }
}

int kronecker_symbol(std::int64_t a, std::int64_t b) {
  if (b < 1) throw ArgumentError("kronecker: n must be >= 1, got " + std::to_string(b));
  if ((a & 1) == 0 && (b & 1) == 0) return 0;

  int v = 0;
  while ((b & 1) == 0) {
    ++v;
    b >>= 1;
  }
  int k = (v % 2 == 0) ? 1 : kTwoTable[a & 7];

  // b is odd and positive from here on.
  for (;;) {
    if (a == 0) return b > 1 ? 0 : k;
    v = 0;
    while ((a & 1) == 0) {
      ++v;
      a /= 2;
    }
    if (v % 2 == 1) k *= kTwoTable[b & 7];
    if (a & b & 2) k = -k;  // both = 3 (mod 4)
    const std::int64_t r = a < 0 ? -a : a;
    a = b % r;
    b = r;
  }
}

int kronecker(Discriminant d, std::int64_t n) { return kronecker_symbol(d.value(), n); }

}  // namespace clausen
