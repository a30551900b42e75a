#pragma once

#include <vector>

#include "negq/laurent.hpp"

namespace negq {

// Phi_A, the minimal polynomial over Q of the primitive A-th roots of unity.
struct Cyclotomic {
  long long order = 1;
  LaurentPoly poly;  // monic, nonnegative exponents
};

// Reducing a polynomial modulo Phi_A left a non-constant remainder, i.e. its
// value at a primitive A-th root of unity depends on the chosen root.
struct NonConstantRemainderError : std::runtime_error {
  NonConstantRemainderError(const std::string& what, LaurentPoly rem)
      : std::runtime_error(what), remainder(std::move(rem)) {}
  LaurentPoly remainder;
};

std::vector<long long> divisors(long long n);

// Phi_A by recursive exact division of t^A - 1 by Phi_d over proper divisors d.
Cyclotomic cyclotomic(long long A);

// Remainder of p modulo Phi_A.  Exponents are first folded mod A (valid since
// t^A = 1 mod Phi_A), which also clears negative exponents.
LaurentPoly reduce_mod_cyclotomic(const LaurentPoly& p, long long A);

// p evaluated at any primitive A-th root of unity, provided the value is
// root-independent; otherwise throws NonConstantRemainderError carrying the
// offending remainder.
BigInt eval_at_root_of_unity(const LaurentPoly& p, long long A);

}  // namespace negq
