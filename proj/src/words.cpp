#include "negq/words.hpp"

#include <sstream>

namespace negq {

Word Word::from_string(const std::string& s) {
  Word w;
  w.bits.reserve(s.size());
  for (char c : s) {
    if (c == '0')
      w.bits.push_back(0);
    else if (c == '1')
      w.bits.push_back(1);
    else if (c == ' ' || c == '|')
      continue;
    else
      throw PreconditionError("Word::from_string: bad character");
  }
  return w;
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(bits.size());
  for (uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::string PairedWord::pairing_to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const Segment& seg : segments) {
    if (!first) out << "|";
    first = false;
    out << (word.bits[seg.pos] ? '1' : '0');
    if (seg.paired) out << (word.bits[seg.pos + 1] ? '1' : '0');
  }
  return out.str();
}

PairedWord pair_word(const Word& w) {
  PairedWord pw{w, {}};
  const int n = w.n();
  int ones = w.k();
  int pos = 0;
  while (pos < n) {
    if (n - pos >= 2 && ones % 2 == 1) {
      pw.segments.push_back({pos, true});
      ones -= w.bits[pos] + w.bits[pos + 1];
      pos += 2;
    } else {
      pw.segments.push_back({pos, false});
      ones -= w.bits[pos];
      pos += 1;
    }
  }
  return pw;
}

bool is_admissible(const PairedWord& pw) {
  for (const Segment& seg : pw.segments)
    if (seg.paired && pw.word.bits[seg.pos] == 0 && pw.word.bits[seg.pos + 1] == 1)
      return false;
  return true;
}

long long inversions(const Word& w) {
  long long inv = 0, zeros_seen = 0;
  for (int i = w.n() - 1; i >= 0; --i) {
    if (w.bits[i] == 0)
      ++zeros_seen;
    else
      inv += zeros_seen;
  }
  return inv;
}

WordStats word_stats(const PairedWord& pw) {
  if (!is_admissible(pw))
    throw NotAdmissibleError("word_stats: paired 01 in " + pw.word.to_string());
  WordStats st;
  st.inv = inversions(pw.word);
  for (const Segment& seg : pw.segments)
    if (seg.paired && pw.word.bits[seg.pos] == 1 && pw.word.bits[seg.pos + 1] == 0) ++st.p;
  st.a = st.inv - st.p;
  return st;
}

BigInt weight_at(const WordStats& st, const BigInt& q, int shift) {
  return bigint_pow(q, st.a) * bigint_pow(q + shift, st.p);
}

void for_each_word(int n, int k, const std::function<void(const Word&)>& fn) {
  if (k < 0 || k > n) throw PreconditionError("for_each_word: need 0 <= k <= n");
  // Lexicographically first word with k ones: all zeros then all ones.
  Word w;
  w.bits.assign(n, 0);
  for (int i = n - k; i < n; ++i) w.bits[i] = 1;
  while (true) {
    fn(w);
    // next permutation of the multiset {0^(n-k), 1^k} in lex order
    int i = n - 2;
    while (i >= 0 && w.bits[i] >= w.bits[i + 1]) --i;
    if (i < 0) break;
    int j = n - 1;
    while (w.bits[j] <= w.bits[i]) --j;
    std::swap(w.bits[i], w.bits[j]);
    for (int l = i + 1, r = n - 1; l < r; ++l, --r) std::swap(w.bits[l], w.bits[r]);
  }
}

void for_each_admissible(int n, int k,
                         const std::function<void(const PairedWord&, const WordStats&)>& fn) {
  for_each_word(n, k, [&](const Word& w) {
    PairedWord pw = pair_word(w);
    if (!is_admissible(pw)) return;
    fn(pw, word_stats(pw));
  });
}

std::vector<std::pair<PairedWord, WordStats>> enumerate_admissible(int n, int k) {
  std::vector<std::pair<PairedWord, WordStats>> out;
  for_each_admissible(n, k,
                      [&](const PairedWord& pw, const WordStats& st) { out.emplace_back(pw, st); });
  return out;
}

namespace {

// Sum of q^a (q+shift)^p over admissible words.
LaurentPoly admissible_sum(int n, int k, int shift) {
  // Accumulate densely: a + p <= inv <= k(n-k).
  std::vector<BigInt> coeffs(static_cast<std::size_t>(k) * (n - k) + 1);
  for_each_admissible(n, k, [&](const PairedWord&, const WordStats& st) {
    // (q+shift)^p expanded by the binomial theorem onto q^{a+j}
    for (long long j = 0; j <= st.p; ++j)
      coeffs[static_cast<std::size_t>(st.a + j)] +=
          binomial(static_cast<int>(st.p), static_cast<int>(j)) *
          bigint_pow(shift, st.p - j);
  });
  LaurentPoly out("q");
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) out.add_term(static_cast<long long>(i), coeffs[i]);
  return out;
}

}  // namespace

LaurentPoly primed_sum_poly(int n, int k) { return admissible_sum(n, k, -1); }

LaurentPoly plus_sum_poly(int n, int k) { return admissible_sum(n, k, +1); }

}  // namespace negq
