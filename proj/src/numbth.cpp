#include "negq/numbth.hpp"

#include "negq/cyclotomic.hpp"  // divisors()

namespace negq {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<long long, int>> prime_power_decompose(long long q) {
  if (q < 2) return std::nullopt;
  for (long long p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    int e = 0;
    long long rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, e);
  }
  return std::make_pair(q, 1);  // q itself prime
}

long long ipow(long long base, int e) {
  if (e < 0) throw PreconditionError("ipow: negative exponent");
  long long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

NumbthReport numbth_checks(long long q, int n, long long A, int grid_bound) {
  if (q < 2 || n < 1 || n % 2 == 0) throw PreconditionError("numbth_checks: need q >= 2, n odd");
  if (A < 3) throw PreconditionError("numbth_checks: need A >= 3");
  const BigInt qn_plus_1 = bigint_pow(q, n) + 1;
  if (qn_plus_1 % A != 0) throw PreconditionError("numbth_checks: A must divide q^n + 1");
  if (grid_bound < 0) grid_bound = 4 * n;

  NumbthReport rep;
  rep.q = q;
  rep.n = n;
  rep.A = A;

  // m = smallest divisor d of n with A | q^{2d} - 1
  rep.m = 0;
  for (long long d : divisors(n)) {
    if ((bigint_pow(q, 2 * static_cast<long long>(d)) - 1) % A == 0) {
      rep.m = static_cast<int>(d);
      break;
    }
  }
  if (rep.m == 0) throw PreconditionError("numbth_checks: A does not divide q^{2n} - 1");

  rep.divides_qm_plus_1 = (bigint_pow(q, rep.m) + 1) % A == 0;

  rep.m_minimal = true;
  for (int d = 1; d < rep.m; ++d)
    if ((bigint_pow(q, d) + 1) % A == 0) rep.m_minimal = false;

  rep.grid_sum_ok = true;
  rep.grid_diff_ok = true;
  for (int s = 0; s <= grid_bound; ++s) {
    for (int t = 0; t <= grid_bound; ++t) {
      int diff = s > t ? s - t : t - s;
      bool odd_mult = diff % rep.m == 0 && (diff / rep.m) % 2 == 1;
      bool even_mult = diff % rep.m == 0 && (diff / rep.m) % 2 == 0;
      bool div_sum = (bigint_pow(q, s) + bigint_pow(q, t)) % A == 0;
      bool div_diff = (bigint_pow(q, s) - bigint_pow(q, t)) % A == 0;
      if (div_sum != odd_mult) rep.grid_sum_ok = false;
      if (div_diff != even_mult) rep.grid_diff_ok = false;
    }
  }
  return rep;
}

}  // namespace negq
