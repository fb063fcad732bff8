#pragma once

// Slow, independent reference computations used only by the tests.  None of
// them call into the library's special-function code.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "clausen/real.hpp"

namespace oracle {

/// B_0..B_n from sum_{k=0}^{m} C(m+1, k) B_k = 0, with B_1 = -1/2.
std::vector<mpq_class> bernoulli_recurrence(int n);

/// Kronecker symbol (d/n), n >= 1, by trial factorisation of n, the
/// +-1 mod 8 rule at 2 and Euler's criterion at odd primes.
int kronecker_euler(std::int64_t d, std::int64_t n);

/// zeta(2, a) by summing `terms` terms directly and adding the tail
/// 1/q + 1/(2q^2) + 1/(6q^3), q = terms + a (error below 1/(30 q^5)).
clausen::Real hurwitz2_direct(const clausen::Real& a, long terms, int digits);

/// sum_{k>=0} (-1)^k a(k) by the Cohen-Villegas-Zagier acceleration
/// with n terms (error about 5.83^-n times the first term).
template <class Term>
clausen::Real alternating_sum(Term a, int n, int digits);

/// Catalan's constant sum (-1)^k / (2k+1)^2, which is also Cl2(pi/2) and L_{-4}(2).
clausen::Real catalan(int digits);

/// L_{-4}(s) = sum (-1)^k / (2k+1)^s.
clausen::Real l_minus4(const clausen::Real& s, int digits);

/// L_5(2) by direct summation over whole periods of the character
/// (1, -1, -1, 1, 0); the block tail is O(N^-3).
clausen::Real l5_2_direct(long periods, int digits);

// --- implementation of the template ---------------------------------------

template <class Term>
clausen::Real alternating_sum(Term a, int n, int digits) {
  using clausen::Real;
  // d = (3 + sqrt 8)^n, d = (d + 1/d) / 2
  Real d = clausen::pow(clausen::sqrt(Real(8L, digits)) + 3L, static_cast<long>(n));
  d = (d + Real(1L, digits) / d) / 2L;
  Real b(-1L, digits);
  Real c = -d;
  Real s(digits);
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b = 2L * b * (static_cast<long>(k) + n) * (static_cast<long>(k) - n) / ((2L * k + 1) * (static_cast<long>(k) + 1));
  }
  return s / d;
}

}  // namespace oracle
