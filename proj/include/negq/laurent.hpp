#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "negq/common.hpp"

namespace negq {

// Exact integer-coefficient Laurent polynomial in one variable, stored as a
// sparse exponent -> coefficient map.  No zero coefficient is ever stored.
// The variable name is a display tag only and does not affect arithmetic.
class LaurentPoly {
 public:
  using Map = std::map<long long, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::string var) : var_(std::move(var)) {}

  static LaurentPoly zero(std::string var = "t") { return LaurentPoly(std::move(var)); }

  static LaurentPoly constant(BigInt c, std::string var = "t") {
    LaurentPoly p(std::move(var));
    p.add_term(0, std::move(c));
    return p;
  }

  static LaurentPoly one(std::string var = "t") { return constant(1, std::move(var)); }

  static LaurentPoly monomial(long long exp, BigInt c = 1, std::string var = "t") {
    LaurentPoly p(std::move(var));
    p.add_term(exp, std::move(c));
    return p;
  }

  // 1 - t^e  (shows up as the basic factor of every product formula here)
  static LaurentPoly one_minus_power(long long e, std::string var = "t") {
    LaurentPoly p(std::move(var));
    p.add_term(0, 1);
    p.add_term(e, -1);
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
  }

  // valid only on nonzero polynomials
  long long min_degree() const {
    if (is_zero()) throw PreconditionError("min_degree of zero polynomial");
    return coeffs_.begin()->first;
  }
  long long max_degree() const {
    if (is_zero()) throw PreconditionError("max_degree of zero polynomial");
    return coeffs_.rbegin()->first;
  }

  std::size_t term_count() const { return coeffs_.size(); }

  BigInt coefficient(long long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  void add_term(long long exp, BigInt c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exp, std::move(c));
    if (!inserted) {
      it->second += c;  // try_emplace left c intact
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  const Map& terms() const { return coeffs_; }
  const std::string& var() const { return var_; }
  void set_var(std::string v) { var_ = std::move(v); }

  LaurentPoly& operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) add_term_(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) add_term_(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.var_);
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add_term_(ea + eb, ca * cb);
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
  }

  LaurentPoly& operator*=(const BigInt& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [e, c] : coeffs_) c *= s;
    return *this;
  }
  friend LaurentPoly operator*(LaurentPoly a, const BigInt& s) { return a *= s; }
  friend LaurentPoly operator*(const BigInt& s, LaurentPoly a) { return a *= s; }

  bool operator==(const LaurentPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const LaurentPoly& rhs) const { return coeffs_ != rhs.coeffs_; }

  // p(t) * t^shift
  LaurentPoly shifted(long long shift) const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + shift, c);
    return r;
  }

  // p(t^s) for nonzero integer s (s may be negative)
  LaurentPoly substitute_power(long long s) const {
    if (s == 0) throw PreconditionError("substitute_power: zero exponent scale");
    LaurentPoly r(var_);
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e * s, c);
    return r;
  }

  // p(-t)
  LaurentPoly substitute_negated() const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, (e % 2 == 0) ? c : -c);
    return r;
  }

  // t^deg * p(1/t)
  LaurentPoly reversed(long long deg) const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(deg - e, c);
    return r;
  }

  // Exact evaluation at an integer.  Negative exponents are accepted only at
  // x = 1 or x = -1, where t^{-e} = t^{e} up to the usual sign.
  BigInt eval(const BigInt& x) const;

  BigInt eval_at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
  }

  // Human-readable form, highest power first, e.g. "q^6 - q^5 + 2*q^2 + 1".
  std::string to_string() const;

 private:
  void add_term_(long long exp, const BigInt& c) {
    if (c == 0) return;
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
      coeffs_.emplace(exp, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  Map coeffs_;
  std::string var_ = "t";
};

// Exact quotient num/den.  Both operands are normalized by their minimum
// exponent first (t^m is a unit), then ordinary long division is performed.
// Throws NotDivisibleError when the remainder is nonzero and
// PreconditionError when den == 0.
LaurentPoly laurent_exact_div(const LaurentPoly& num, const LaurentPoly& den);

// Quotient and remainder of ordinary polynomials (all exponents >= 0).
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace negq
