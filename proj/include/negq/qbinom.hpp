#pragma once

#include <vector>

#include "negq/bivar.hpp"
#include "negq/laurent.hpp"

namespace negq {

struct QBinomial {
  int n = 0, k = 0;
  LaurentPoly poly;  // in q, nonnegative coefficients, degree k(n-k)
};

struct PrimedQBinomial {
  int n = 0, k = 0;
  LaurentPoly poly;  // (-1)^{k(n-k)} [n,k]_{-q}, positive at every integer q >= 2
};

// [n,k]_q via the q-Pascal recurrence (memoized).  Returns the zero
// polynomial outside 0 <= k <= n.
LaurentPoly qbinomial_poly(int n, int k);
QBinomial qbinomial(int n, int k);

// Independent product-formula route: (q)_n / ((q)_k (q)_{n-k}) with
// (q)_m = (1-q)(1-q^2)...(1-q^m), computed by exact division.
LaurentPoly qbinomial_by_product(int n, int k);

LaurentPoly primed_qbinomial_poly(int n, int k);
PrimedQBinomial primed_qbinomial(int n, int k);

// Both q-Pascal recurrences as exact polynomial identities, plus the primed
// form matching the parity of k (two-term for k even, three-term for k odd).
bool check_pascal(int n, int k);

// Coefficients of x^k..x^N in x^k / ((1-x)^{k+1} (1+x)^{floor((k+1)/2)}),
// which count the admissible words by length.
std::vector<BigInt> omega_prime_count_series(int k, int N);

// Lucas-sequence analog {n} = s{n-1} + t{n-2}, {0}=0, {1}=1.
BivarPoly lucas_poly(int n);

// {n choose k} = {n}! / ({k}! {n-k}!) in Z[s,t]; the division is exact.
BivarPoly lucasnomial(int n, int k);

}  // namespace negq
