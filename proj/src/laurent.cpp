#include "negq/laurent.hpp"

#include <sstream>
#include <vector>

namespace negq {

BigInt LaurentPoly::eval(const BigInt& x) const {
  if (is_zero()) return 0;
  long long lo = min_degree();
  if (lo < 0) {
    if (x == 1) return eval_at_one();
    if (x == -1) {
      BigInt s = 0;
      for (const auto& [e, c] : coeffs_) s += (e % 2 == 0) ? c : -c;
      return s;
    }
    throw PreconditionError("eval: negative exponents need x in {1,-1}");
  }
  // Horner over the (possibly sparse) exponent range.
  BigInt acc = 0;
  long long prev = max_degree();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= bigint_pow(x, prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  return acc * bigint_pow(x, prev);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt abs_c = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << abs_c.str();
    } else {
      if (abs_c != 1) out << abs_c.str() << "*";
      out << var_;
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

namespace {

// Dense coefficient vector of an ordinary polynomial (min degree >= 0).
std::vector<BigInt> to_dense(const LaurentPoly& p) {
  std::vector<BigInt> v(static_cast<std::size_t>(p.max_degree()) + 1);
  for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e)] = c;
  return v;
}

LaurentPoly from_dense(const std::vector<BigInt>& v, const std::string& var) {
  LaurentPoly p(var);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) p.add_term(static_cast<long long>(i), v[i]);
  return p;
}

}  // namespace

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw PreconditionError("poly_divmod: division by zero");
  if (num.is_zero()) return {LaurentPoly::zero(num.var()), LaurentPoly::zero(num.var())};
  if (num.min_degree() < 0 || den.min_degree() < 0)
    throw PreconditionError("poly_divmod: negative exponents");

  std::vector<BigInt> r = to_dense(num);
  std::vector<BigInt> d = to_dense(den);
  const BigInt& lead = d.back();
  const std::size_t dd = d.size() - 1;
  if (r.size() - 1 < dd) return {LaurentPoly::zero(num.var()), num};

  std::vector<BigInt> q(r.size() - dd);
  for (std::size_t i = r.size(); i-- > dd;) {
    BigInt& top = r[i];
    if (top == 0) continue;
    // All divisors used here are monic or divide exactly; a coefficient that
    // the leading term cannot divide ends the reduction with the remainder
    // still carrying degree >= deg(den), which exact_div reports.
    if (top % lead != 0) break;
    BigInt f = top / lead;
    q[i - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] -= f * d[j];
  }
  return {from_dense(q, num.var()), from_dense(r, num.var())};
}

LaurentPoly laurent_exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw PreconditionError("laurent_exact_div: division by zero");
  if (num.is_zero()) return LaurentPoly::zero(num.var());

  // Normalize both operands to ordinary polynomials; t^m is a unit.
  long long num_shift = num.min_degree();
  long long den_shift = den.min_degree();
  LaurentPoly n = num.shifted(-num_shift);
  LaurentPoly d = den.shifted(-den_shift);

  auto [q, r] = poly_divmod(n, d);
  if (!r.is_zero())
    throw NotDivisibleError("laurent_exact_div: remainder " + r.to_string() +
                            " dividing " + num.to_string() + " by " + den.to_string());
  return q.shifted(num_shift - den_shift);
}

}  // namespace negq
