#include "negq/qbinom.hpp"

#include <map>
#include <mutex>

namespace negq {

namespace {

LaurentPoly q_monomial(long long e) { return LaurentPoly::monomial(e, 1, "q"); }

// (q)_m = (1-q)(1-q^2)...(1-q^m)
LaurentPoly q_pochhammer(int m) {
  LaurentPoly p = LaurentPoly::one("q");
  for (int i = 1; i <= m; ++i) p *= LaurentPoly::one_minus_power(i, "q");
  return p;
}

}  // namespace

LaurentPoly qbinomial_poly(int n, int k) {
  if (k < 0 || k > n) return LaurentPoly::zero("q");
  if (k == 0 || k == n) return LaurentPoly::one("q");

  static std::map<std::pair<int, int>, LaurentPoly> cache;
  static std::mutex cache_mutex;
  std::lock_guard<std::mutex> lock(cache_mutex);

  auto compute = [](auto&& self, int nn, int kk) -> const LaurentPoly& {
    auto it = cache.find({nn, kk});
    if (it != cache.end()) return it->second;
    LaurentPoly result("q");
    if (kk == 0 || kk == nn) {
      result = LaurentPoly::one("q");
    } else {
      // [n,k] = [n-1,k] + q^{n-k} [n-1,k-1]
      result = self(self, nn - 1, kk) + q_monomial(nn - kk) * self(self, nn - 1, kk - 1);
    }
    return cache.emplace(std::make_pair(nn, kk), std::move(result)).first->second;
  };
  return compute(compute, n, k);
}

QBinomial qbinomial(int n, int k) {
  if (k < 0 || k > n) throw PreconditionError("qbinomial: need 0 <= k <= n");
  return {n, k, qbinomial_poly(n, k)};
}

LaurentPoly qbinomial_by_product(int n, int k) {
  if (k < 0 || k > n) return LaurentPoly::zero("q");
  return laurent_exact_div(q_pochhammer(n), q_pochhammer(k) * q_pochhammer(n - k));
}

LaurentPoly primed_qbinomial_poly(int n, int k) {
  LaurentPoly p = qbinomial_poly(n, k).substitute_negated();
  long long s = static_cast<long long>(k) * (n - k);
  return (s % 2 == 0) ? p : -p;
}

PrimedQBinomial primed_qbinomial(int n, int k) {
  if (k < 0 || k > n) throw PreconditionError("primed_qbinomial: need 0 <= k <= n");
  return {n, k, primed_qbinomial_poly(n, k)};
}

bool check_pascal(int n, int k) {
  if (n < 2) throw PreconditionError("check_pascal: need n >= 2");
  const LaurentPoly lhs = qbinomial_poly(n, k);
  const LaurentPoly qp1 = q_monomial(1) + LaurentPoly::one("q");
  const LaurentPoly qm1 = q_monomial(1) - LaurentPoly::one("q");

  // two-term recurrence
  bool ok = lhs == qbinomial_poly(n - 1, k) + q_monomial(n - k) * qbinomial_poly(n - 1, k - 1);
  // its two-step iterate
  ok = ok && lhs == qbinomial_poly(n - 2, k) +
                        q_monomial(n - k - 1) * qp1 * qbinomial_poly(n - 2, k - 1) +
                        q_monomial(2LL * (n - k)) * qbinomial_poly(n - 2, k - 2);
  if (k % 2 == 0) {
    // primed two-term form (k even)
    ok = ok && primed_qbinomial_poly(n, k) ==
                   primed_qbinomial_poly(n - 1, k) +
                       q_monomial(n - k) * primed_qbinomial_poly(n - 1, k - 1);
  } else {
    // primed three-term form (k odd)
    ok = ok && primed_qbinomial_poly(n, k) ==
                   primed_qbinomial_poly(n - 2, k) +
                       q_monomial(n - k - 1) * qm1 * primed_qbinomial_poly(n - 2, k - 1) +
                       q_monomial(2LL * (n - k)) * primed_qbinomial_poly(n - 2, k - 2);
  }
  return ok;
}

std::vector<BigInt> omega_prime_count_series(int k, int N) {
  if (k < 0 || N < k) throw PreconditionError("omega_prime_count_series: need 0 <= k <= N");
  // denominator (1-x)^{k+1} (1+x)^{floor((k+1)/2)}
  LaurentPoly den = LaurentPoly::one("x");
  LaurentPoly one_minus = LaurentPoly::one("x") - LaurentPoly::monomial(1, 1, "x");
  LaurentPoly one_plus = LaurentPoly::one("x") + LaurentPoly::monomial(1, 1, "x");
  for (int i = 0; i <= k; ++i) den *= one_minus;
  for (int i = 0; i < (k + 1) / 2; ++i) den *= one_plus;

  // series coefficients of x^k / den, solved from den * c = x^k
  std::vector<BigInt> c(static_cast<std::size_t>(N) + 1);
  for (int j = 0; j <= N; ++j) {
    BigInt rhs = (j == k) ? 1 : 0;
    for (const auto& [e, d] : den.terms()) {
      if (e == 0 || e > j) continue;
      rhs -= d * c[static_cast<std::size_t>(j - e)];
    }
    c[static_cast<std::size_t>(j)] = rhs;  // den has constant term 1
  }
  return std::vector<BigInt>(c.begin() + k, c.end());
}

BivarPoly lucas_poly(int n) {
  if (n < 0) throw PreconditionError("lucas_poly: need n >= 0");
  BivarPoly prev2 = BivarPoly::zero();           // {0}
  BivarPoly prev1 = BivarPoly::constant(1);      // {1}
  if (n == 0) return prev2;
  if (n == 1) return prev1;
  const BivarPoly s = BivarPoly::monomial(1, 0);
  const BivarPoly t = BivarPoly::monomial(0, 1);
  for (int i = 2; i <= n; ++i) {
    BivarPoly cur = s * prev1 + t * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

BivarPoly lucasnomial(int n, int k) {
  if (k < 0 || k > n) throw PreconditionError("lucasnomial: need 0 <= k <= n");
  BivarPoly num = BivarPoly::one();
  BivarPoly den = BivarPoly::one();
  for (int i = k + 1; i <= n; ++i) num *= lucas_poly(i);  // {n}!/{k}!
  for (int i = 1; i <= n - k; ++i) den *= lucas_poly(i);
  return bivar_exact_div(num, den);
}

}  // namespace negq
