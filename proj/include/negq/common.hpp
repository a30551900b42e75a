#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace negq {

// Exact signed integer of arbitrary size; the coefficient type for every
// polynomial in the library.
using BigInt = boost::multiprecision::cpp_int;

// n^e for e >= 0.
inline BigInt bigint_pow(const BigInt& base, long long e) {
  if (e < 0) throw std::invalid_argument("bigint_pow: negative exponent");
  BigInt r = 1, b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

// Exact division fails: a quotient step left a nonzero remainder.
struct NotDivisibleError : std::runtime_error {
  explicit NotDivisibleError(const std::string& what) : std::runtime_error(what) {}
};

// A word carries a paired 01 where an admissible word was required.
struct NotAdmissibleError : std::runtime_error {
  explicit NotAdmissibleError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or field construction exceeds the configured budget.
struct SizeBoundError : std::runtime_error {
  explicit SizeBoundError(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A polynomial expected to land in N[t] came out with a negative coefficient.
struct NegativeCoefficientError : std::runtime_error {
  explicit NegativeCoefficientError(const std::string& what) : std::runtime_error(what) {}
};

// Default cap on brute-force subspace enumerations.
inline constexpr long long kDefaultBudget = 10'000'000;

}  // namespace negq
