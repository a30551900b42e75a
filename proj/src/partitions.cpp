#include "negq/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace negq {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw PreconditionError("Partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw PreconditionError("Partition: parts must be weakly decreasing");
  }
}

long long Partition::size() const {
  long long s = 0;
  for (int p : parts) s += p;
  return s;
}

Partition Partition::conjugate() const {
  Partition c;
  if (parts.empty()) return c;
  c.parts.resize(parts[0]);
  for (int j = 0; j < parts[0]; ++j) {
    int count = 0;
    for (int p : parts)
      if (p > j) ++count;
    c.parts[j] = count;
  }
  return c;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ",";
    out << parts[i];
  }
  out << ")";
  return out.str();
}

Partition word_to_partition(const Word& w) {
  // The j-th zero from the right contributes a part equal to the number of
  // ones before it; parts come out weakly decreasing.
  Partition lam;
  int ones_seen = 0;
  std::vector<int> parts;
  for (int i = 0; i < w.n(); ++i) {
    if (w.bits[i] == 1)
      ++ones_seen;
    else if (ones_seen > 0)
      parts.push_back(ones_seen);
  }
  std::reverse(parts.begin(), parts.end());
  lam.parts = std::move(parts);
  return lam;
}

Word partition_to_word(const Partition& lam, int n, int k) {
  int rows = n - k;
  if (lam.num_parts() > rows || (lam.num_parts() > 0 && lam.parts[0] > k))
    throw PreconditionError("partition_to_word: partition exceeds the (n-k) x k box");
  // Ones before the j-th zero (from the left) = lam_{rows+1-j}, padding with 0.
  std::vector<int> padded(rows, 0);
  for (int i = 0; i < lam.num_parts(); ++i) padded[i] = lam.parts[i];
  Word w;
  w.bits.reserve(n);
  int placed_ones = 0;
  for (int j = rows - 1; j >= 0; --j) {
    while (placed_ones < padded[j]) {
      w.bits.push_back(1);
      ++placed_ones;
    }
    w.bits.push_back(0);
  }
  while (placed_ones < k) {
    w.bits.push_back(1);
    ++placed_ones;
  }
  return w;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  // depth-first over weakly decreasing part lists bounded by the box
  auto rec = [&](auto&& self, int max_part, int remaining_rows) -> void {
    out.emplace_back(Partition{});
    out.back().parts = cur;
    if (remaining_rows == 0) return;
    for (int p = std::min(max_part, cols); p >= 1; --p) {
      cur.push_back(p);
      self(self, p, remaining_rows - 1);
      cur.pop_back();
    }
  };
  rec(rec, cols, rows);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_admissible_partition(const Partition& lam, int n, int k) {
  std::map<int, int> mult;
  for (int p : lam.parts) ++mult[p];
  if (k % 2 == 0) {
    for (const auto& [part, m] : mult)
      if (part % 2 == 1 && m % 2 == 1) return false;
    return true;
  }
  for (const auto& [part, m] : mult)
    if (part % 2 == 0 && m % 2 == 1) return false;
  return lam.num_parts() % 2 == (n - k) % 2;
}

std::vector<Partition> admissible_partitions(int n, int k) {
  if (k < 0 || k > n) throw PreconditionError("admissible_partitions: need 0 <= k <= n");
  std::vector<Partition> out;
  for (Partition& lam : partitions_in_box(n - k, k))
    if (is_admissible_partition(lam, n, k)) out.push_back(std::move(lam));
  return out;
}

int special_corner_count(const Partition& lam, int k) {
  int count = 0;
  int prev = -1;
  for (int p : lam.parts) {
    if (p != prev && p % 2 == k % 2) ++count;
    prev = p;
  }
  return count;
}

LaurentPoly partition_sum_poly(int n, int k) {
  LaurentPoly out("q");
  for (const Partition& lam : admissible_partitions(n, k)) {
    int p = special_corner_count(lam, k);
    // q^{|lam|-p} (q-1)^p
    LaurentPoly term = LaurentPoly::monomial(lam.size() - p, 1, "q");
    LaurentPoly qm1 = LaurentPoly::monomial(1, 1, "q") - LaurentPoly::one("q");
    for (int i = 0; i < p; ++i) term *= qm1;
    out += term;
  }
  return out;
}

HookData hooks_and_n(const Partition& lam) {
  HookData hd;
  Partition conj = lam.conjugate();
  for (int i = 0; i < lam.num_parts(); ++i) {
    hd.n_lambda += static_cast<long long>(i) * lam.parts[i];
    for (int j = 0; j < lam.parts[i]; ++j)
      hd.hooks.push_back(lam.parts[i] - (i + 1) + conj.parts[j] - (j + 1) + 1);
  }
  for (int j = 0; j < conj.num_parts(); ++j)
    hd.n_conjugate += static_cast<long long>(j) * conj.parts[j];
  return hd;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(Partition{});
      out.back().parts = cur;
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

std::string weight_display(const Partition& lam, int k) {
  if (lam.parts.empty()) return "1";
  std::ostringstream out;
  int prev = -1;
  for (int p : lam.parts) {
    bool special_run_start = (p != prev) && (p % 2 == k % 2);
    int qexp = special_run_start ? p - 1 : p;
    if (qexp == 1)
      out << "q";
    else if (qexp > 1)
      out << "q^" << qexp;
    if (special_run_start) out << "(q-1)";
    prev = p;
  }
  return out.str();
}

}  // namespace negq
