#include <algorithm>
#include <mutex>
#include <string>
#include <vector>

#include "clausen/errors.hpp"
#include "clausen/mpcontext.hpp"

namespace clausen {

namespace {

// B_0, B_2, B_4, ... B_2k exactly.
class BernoulliTable {
 public:
  mpq_class even(int k) {
    std::lock_guard lock(mutex_);
    if (k >= static_cast<int>(values_.size())) grow(k);
    return values_[static_cast<std::size_t>(k)];
  }

 private:
  // Tangent numbers T_1..T_n by the in-place integer recurrence
  //   T_j <- (j - k) T_{j-1} + (j - k + 2) T_j,
  // then B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
  void grow(int k_needed) {
    const int n = std::max({k_needed, 2 * static_cast<int>(values_.size()), 64});
    std::vector<mpz_class> t(static_cast<std::size_t>(n) + 1);
    t[1] = 1;
    for (int k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
    for (int k = 2; k <= n; ++k) {
      for (int j = k; j <= n; ++j) {
        t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
      }
    }
    std::vector<mpq_class> values(static_cast<std::size_t>(n) + 1);
    values[0] = 1;
    for (int k = 1; k <= n; ++k) {
      mpz_class four_k;
      mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
      mpq_class b(2 * k * t[k], four_k * (four_k - 1));
      b.canonicalize();
      if (k % 2 == 0) b = -b;
      values[k] = std::move(b);
    }
    values_ = std::move(values);
  }

  std::mutex mutex_;
  std::vector<mpq_class> values_;
};

BernoulliTable& table() {
  static BernoulliTable instance;
  return instance;
}

}  // namespace

mpq_class bernoulli(int n) {
  if (n < 0) throw ArgumentError("bernoulli: negative index " + std::to_string(n));
  if (n == 1) return mpq_class(-1, 2);
  if (n % 2 != 0) throw ArgumentError("bernoulli: odd index " + std::to_string(n) + " not supported");
  return table().even(n / 2);
}

}  // namespace clausen
