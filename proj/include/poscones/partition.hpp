#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"

namespace poscones {

// A partition: weakly decreasing positive parts, trailing zeros stripped.
// The empty partition is the unit Schubert class / trivial shape.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
        throw RangeError("partition parts must be weakly decreasing and positive");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  // part(i) is 0 beyond the length, which lets callers treat a partition
  // as an infinite weakly decreasing sequence.
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[i] : 0;
  }
  int weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
  }
  bool empty() const { return parts_.empty(); }

  bool fits_in_box(int rows, int cols) const {
    return length() <= rows && part(0) <= cols;
  }

  // "[2,1]"; the empty partition prints as "[]".
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Basis order used everywhere: lexicographic with larger first part first.
inline bool desc_lex_less(const Partition& a, const Partition& b) {
  int n = std::max(a.length(), b.length());
  for (int i = 0; i < n; ++i) {
    if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
  }
  return false;
}

inline bool contains(const Partition& outer, const Partition& inner) {
  for (int i = 0; i < inner.length(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

// Complement inside a rows x cols box: (cols - lambda_rows, ..., cols - lambda_1).
inline Partition complement_in_box(const Partition& p, int rows, int cols) {
  if (!p.fits_in_box(rows, cols))
    throw BoxViolation("partition " + p.to_string() + " does not fit in a " +
                       std::to_string(rows) + "x" + std::to_string(cols) + " box");
  std::vector<int> c(rows);
  for (int i = 0; i < rows; ++i) c[i] = cols - p.part(rows - 1 - i);
  return Partition(std::move(c));
}

inline Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> c(p.part(0));
  for (int j = 0; j < p.part(0); ++j) {
    int count = 0;
    while (count < p.length() && p.part(count) > j) ++count;
    c[j] = count;
  }
  return Partition(std::move(c));
}

// All partitions of the given weight fitting in a rows x cols box, in
// descending lexicographic order (the generation order below is exactly
// that, largest admissible part first at each level).
inline std::vector<Partition> partitions_in_box(int rows, int cols, int weight) {
  if (rows < 0 || cols < 0 || weight < 0)
    throw RangeError("partitions_in_box: negative argument");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part, int max_len) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_len == 0) return;
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
      if (remaining - p > (max_len - 1) * p) continue;  // cannot finish below
      cur.push_back(p);
      self(self, remaining - p, p, max_len - 1);
      cur.pop_back();
    }
  };
  rec(rec, weight, cols, rows);
  return out;
}

// All partitions of the given weight with parts bounded above (any length);
// used for enumerating Schur classes s_lambda of a fixed-rank bundle.
inline std::vector<Partition> partitions_with_max_part(int weight, int max_part) {
  return partitions_in_box(weight, max_part, weight);
}

// Littlewood-Richardson coefficient c^{nu}_{lambda,mu}: the number of
// skew semistandard tableaux of shape nu/lambda and content mu whose
// reverse reading word (rows top to bottom, each row right to left) is a
// lattice word. Direct backtracking in reading order; the lattice and
// content constraints are checked incrementally, so the search tree stays
// small for the box sizes that occur here.
inline long lr_coefficient(const Partition& nu, const Partition& la,
                           const Partition& mu) {
  if (nu.weight() != la.weight() + mu.weight()) return 0;
  if (!contains(nu, la)) return 0;
  if (mu.empty()) return 1;  // nu == la forced by the weight check
  const int rows = nu.length();
  const int values = mu.length();

  struct Cell { int r, c; };
  std::vector<Cell> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = nu.part(r) - 1; c >= la.part(r); --c) cells.push_back({r, c});

  std::vector<std::vector<int>> val(rows, std::vector<int>(nu.part(0), 0));
  std::vector<int> used(values + 1, 0);
  long count = 0;

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      // used[v] <= mu_v throughout and the totals agree, so content == mu.
      ++count;
      return;
    }
    const auto [r, c] = cells[idx];
    int lo = 1;
    int hi = std::min(values, r + 1);  // lattice words keep row r within 1..r+1
    if (c + 1 < nu.part(r)) hi = std::min(hi, val[r][c + 1]);
    if (r >= 1 && c >= la.part(r - 1)) lo = std::max(lo, val[r - 1][c] + 1);
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= mu.part(v - 1)) continue;
      if (v >= 2 && used[v] + 1 > used[v - 1]) continue;  // lattice condition
      ++used[v];
      val[r][c] = v;
      self(self, idx + 1);
      val[r][c] = 0;
      --used[v];
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace poscones
