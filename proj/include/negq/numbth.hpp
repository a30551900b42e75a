#pragma once

#include <optional>
#include <vector>

#include "negq/common.hpp"

namespace negq {

bool is_prime(long long n);

// q = p^e with p prime, e >= 1, or nullopt.
std::optional<std::pair<long long, int>> prime_power_decompose(long long q);

long long ipow(long long base, int e);

// Facts about the order A of an element of the cyclic unitary group:
// given q, odd n, and A >= 3 dividing q^n + 1, the subfield degree
// m = min{ d | n : A divides q^{2d} - 1 } satisfies
//   (i)   A divides q^m + 1,
//   (ii)  m is the smallest d >= 1 with A | q^d + 1,
//   (iii) A | q^s + q^t  iff  s - t is an odd multiple of m,
//   (iv)  A | q^s - q^t  iff  s - t is an even multiple of m,
// with (iii)/(iv) checked over the grid 0 <= s, t <= grid_bound.
struct NumbthReport {
  long long q = 0;
  int n = 0;
  long long A = 0;
  int m = 0;
  bool divides_qm_plus_1 = false;
  bool m_minimal = false;
  bool grid_sum_ok = false;
  bool grid_diff_ok = false;

  bool all_ok() const { return divides_qm_plus_1 && m_minimal && grid_sum_ok && grid_diff_ok; }
};

NumbthReport numbth_checks(long long q, int n, long long A, int grid_bound = -1);

}  // namespace negq
