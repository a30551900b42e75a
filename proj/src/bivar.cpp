#include "negq/bivar.hpp"

#include <sstream>

namespace negq {

LaurentPoly BivarPoly::substitute(const LaurentPoly& v1, const LaurentPoly& v2) const {
  LaurentPoly result(v1.var());
  // Cache powers; exponents here stay tiny.
  std::map<long long, LaurentPoly> pow1{{0, LaurentPoly::one(v1.var())}};
  std::map<long long, LaurentPoly> pow2{{0, LaurentPoly::one(v1.var())}};
  auto power = [](std::map<long long, LaurentPoly>& cache, const LaurentPoly& base,
                  long long e) -> const LaurentPoly& {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    long long known = cache.rbegin()->first;
    LaurentPoly p = cache.rbegin()->second;
    while (known < e) {
      p = p * base;
      ++known;
      cache.emplace(known, p);
    }
    return cache.at(e);
  };
  for (const auto& [k, c] : coeffs_)
    result += power(pow1, v1, k.first) * power(pow2, v2, k.second) * c;
  return result;
}

std::string BivarPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [k, c] = *it;
    BigInt abs_c = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_var = k.first > 0 || k.second > 0;
    if (!has_var) {
      out << abs_c.str();
    } else {
      bool star = false;
      if (abs_c != 1) {
        out << abs_c.str();
        star = true;
      }
      if (k.first > 0) {
        if (star) out << "*";
        out << var1_;
        if (k.first > 1) out << "^" << k.first;
        star = true;
      }
      if (k.second > 0) {
        if (star) out << "*";
        out << var2_;
        if (k.second > 1) out << "^" << k.second;
      }
    }
  }
  return out.str();
}

BivarPoly bivar_exact_div(const BivarPoly& num, const BivarPoly& den) {
  if (den.is_zero()) throw PreconditionError("bivar_exact_div: division by zero");
  BivarPoly r = num;
  BivarPoly q(num.var1(), num.var2());
  const auto& dlead = *den.terms().rbegin();  // lex-largest monomial of den
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().rbegin();
    long long di = rlead.first.first - dlead.first.first;
    long long dj = rlead.first.second - dlead.first.second;
    if (di < 0 || dj < 0 || rlead.second % dlead.second != 0)
      throw NotDivisibleError("bivar_exact_div: leading term " + r.to_string() +
                              " not reducible by " + den.to_string());
    BivarPoly m = BivarPoly::monomial(di, dj, rlead.second / dlead.second);
    q += m;
    r -= m * den;
  }
  return q;
}

}  // namespace negq
