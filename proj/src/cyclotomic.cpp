#include "negq/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace negq {

std::vector<long long> divisors(long long n) {
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Cyclotomic cyclotomic(long long A) {
  if (A < 1) throw PreconditionError("cyclotomic: order must be >= 1");

  static std::map<long long, LaurentPoly> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(A);
    if (it != cache.end()) return {A, it->second};
  }

  LaurentPoly p = LaurentPoly::monomial(A) - LaurentPoly::one();  // t^A - 1
  for (long long d : divisors(A)) {
    if (d == A) continue;
    p = laurent_exact_div(p, cyclotomic(d).poly);
  }

  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(A, p);
  return {A, p};
}

LaurentPoly reduce_mod_cyclotomic(const LaurentPoly& p, long long A) {
  if (A < 1) throw PreconditionError("reduce_mod_cyclotomic: order must be >= 1");
  LaurentPoly folded(p.var());
  for (const auto& [e, c] : p.terms()) folded.add_term(((e % A) + A) % A, c);
  auto [q, r] = poly_divmod(folded, cyclotomic(A).poly);
  (void)q;
  return r;
}

BigInt eval_at_root_of_unity(const LaurentPoly& p, long long A) {
  LaurentPoly r = reduce_mod_cyclotomic(p, A);
  if (!r.is_constant())
    throw NonConstantRemainderError(
        "eval_at_root_of_unity: value at order-" + std::to_string(A) +
            " roots is not root-independent; remainder " + r.to_string(),
        r);
  return r.coefficient(0);
}

}  // namespace negq
