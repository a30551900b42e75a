#pragma once

#include <map>
#include <string>
#include <utility>

#include "negq/laurent.hpp"

namespace negq {

// Sparse polynomial in two variables with nonnegative exponents, exact
// integer coefficients.  Monomials are kept in lex order on (i, j).
class BivarPoly {
 public:
  using Key = std::pair<long long, long long>;
  using Map = std::map<Key, BigInt>;

  BivarPoly() = default;
  BivarPoly(std::string var1, std::string var2)
      : var1_(std::move(var1)), var2_(std::move(var2)) {}

  static BivarPoly zero() { return BivarPoly(); }
  static BivarPoly constant(BigInt c) {
    BivarPoly p;
    p.add_term(0, 0, std::move(c));
    return p;
  }
  static BivarPoly one() { return constant(1); }
  static BivarPoly monomial(long long i, long long j, BigInt c = 1) {
    BivarPoly p;
    p.add_term(i, j, std::move(c));
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  const Map& terms() const { return coeffs_; }
  const std::string& var1() const { return var1_; }
  const std::string& var2() const { return var2_; }

  BigInt coefficient(long long i, long long j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  void add_term(long long i, long long j, BigInt c) {
    if (c == 0) return;
    if (i < 0 || j < 0) throw PreconditionError("BivarPoly: negative exponent");
    auto [it, inserted] = coeffs_.try_emplace({i, j}, std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  BivarPoly& operator+=(const BivarPoly& rhs) {
    for (const auto& [k, c] : rhs.coeffs_) add_term(k.first, k.second, c);
    return *this;
  }
  BivarPoly& operator-=(const BivarPoly& rhs) {
    for (const auto& [k, c] : rhs.coeffs_) add_term(k.first, k.second, -c);
    return *this;
  }
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }

  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r(a.var1_, a.var2_);
    for (const auto& [ka, ca] : a.coeffs_)
      for (const auto& [kb, cb] : b.coeffs_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  BivarPoly& operator*=(const BivarPoly& rhs) { return *this = *this * rhs; }

  bool operator==(const BivarPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const BivarPoly& rhs) const { return coeffs_ != rhs.coeffs_; }

  // Substitute polynomials (in one shared variable) for both variables.
  LaurentPoly substitute(const LaurentPoly& v1, const LaurentPoly& v2) const;

  std::string to_string() const;

 private:
  Map coeffs_;
  std::string var1_ = "s";
  std::string var2_ = "t";
};

// Exact quotient in Z[var1, var2] via lex-leading-term cancellation.
// Throws NotDivisibleError when the division is not exact.
BivarPoly bivar_exact_div(const BivarPoly& num, const BivarPoly& den);

}  // namespace negq
