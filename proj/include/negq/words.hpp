#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "negq/laurent.hpp"

namespace negq {

// A binary word of length n with k ones.
struct Word {
  std::vector<uint8_t> bits;

  int n() const { return static_cast<int>(bits.size()); }
  int k() const {
    int c = 0;
    for (uint8_t b : bits) c += b;
    return c;
  }

  static Word from_string(const std::string& s);
  std::string to_string() const;

  bool operator==(const Word&) const = default;
};

struct Segment {
  int pos = 0;      // 0-based start position
  bool paired = false;  // covers pos and pos+1 when true
};

// A word together with its pairing: scanning left to right, the next two
// letters are paired when the number of ones remaining in the suffix is odd,
// otherwise the next letter is left unpaired.
struct PairedWord {
  Word word;
  std::vector<Segment> segments;

  // e.g. "0|1|10|0"
  std::string pairing_to_string() const;
};

struct WordStats {
  long long inv = 0;  // inversions: pairs i<j with w_i=1, w_j=0
  long long p = 0;    // paired 10 segments
  long long a = 0;    // inv - p
};

PairedWord pair_word(const Word& w);

// True iff no paired segment carries the letters (0,1).
bool is_admissible(const PairedWord& pw);

long long inversions(const Word& w);

// Statistics (inv, p, a) of an admissible paired word.
// Throws NotAdmissibleError when a paired 01 is present.
WordStats word_stats(const PairedWord& pw);

// wt = q^a * (q + shift)^p evaluated exactly (shift = -1 for the primed
// weight, +1 for the q-binomial expansion).
BigInt weight_at(const WordStats& st, const BigInt& q, int shift);

// All words of Omega_{n,k} in lexicographic order on the letter sequence.
void for_each_word(int n, int k, const std::function<void(const Word&)>& fn);

// The admissible subset, same order.
void for_each_admissible(int n, int k,
                         const std::function<void(const PairedWord&, const WordStats&)>& fn);

std::vector<std::pair<PairedWord, WordStats>> enumerate_admissible(int n, int k);

// Sum of q^a (q-1)^p over admissible words, expanded in q.
LaurentPoly primed_sum_poly(int n, int k);

// Sum of q^a (q+1)^p over admissible words, expanded in q.
LaurentPoly plus_sum_poly(int n, int k);

}  // namespace negq
