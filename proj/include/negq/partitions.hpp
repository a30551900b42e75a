#pragma once

#include <string>
#include <vector>

#include "negq/laurent.hpp"
#include "negq/words.hpp"

namespace negq {

// Integer partition: weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int num_parts() const { return static_cast<int>(parts.size()); }
  long long size() const;  // |lambda|
  Partition conjugate() const;

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& rhs) const { return parts < rhs.parts; }

  std::string to_string() const;  // "(3,3,1)" ; "()" for empty
};

// Lattice-path bijection from Omega_{n,k} to partitions inside an
// (n-k) x k rectangle; |lambda| = inv(omega).
Partition word_to_partition(const Word& w);
Word partition_to_word(const Partition& lam, int n, int k);

// All partitions inside a rows x cols box (including the empty one).
std::vector<Partition> partitions_in_box(int rows, int cols);

// Image of the admissible words under the bijection:
//   k even: every odd part has even multiplicity;
//   k odd:  every even part has even multiplicity and the number of parts
//           has the same parity as n-k.
bool is_admissible_partition(const Partition& lam, int n, int k);
std::vector<Partition> admissible_partitions(int n, int k);

// Number of special corner cells: one for each distinct part value with the
// same parity as k.
int special_corner_count(const Partition& lam, int k);

// Sum of q^{|lambda|-p(lambda)} (q-1)^{p(lambda)} over admissible partitions.
LaurentPoly partition_sum_poly(int n, int k);

struct HookData {
  std::vector<int> hooks;  // multiset of hook lengths, row-major order
  long long n_lambda = 0;  // sum (i-1) lambda_i
  long long n_conjugate = 0;
};

HookData hooks_and_n(const Partition& lam);

// All partitions of n (n >= 0), for iterating over shapes.
std::vector<Partition> partitions_of(int n);

// Row-by-row weight monomial, e.g. "q^2(q-1)q^3": row i contributes q^{l_i},
// except the first row of each part value with the parity of k, which
// contributes q^{l_i - 1}(q-1).
std::string weight_display(const Partition& lam, int k);

}  // namespace negq
