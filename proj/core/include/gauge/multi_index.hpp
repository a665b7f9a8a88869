#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gauge/errors.hpp"

namespace gauge {

inline constexpr int kMaxDim = 6;

// Strictly increasing tuple of frame indices in 1..n. Degree 0 is the empty
// tuple (scalar component).
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> idx);
  static MultiIndex from_sorted(const int* idx, int p);

  int degree() const { return size_; }
  int operator[](int k) const { return idx_[k]; }
  bool contains(int i) const;
  // Position of i within the tuple, -1 if absent.
  int position(int i) const;

  MultiIndex complement(int n) const;

  bool operator==(const MultiIndex& o) const;
  bool operator<(const MultiIndex& o) const;  // lexicographic within same degree

  void validate(int n) const;
  std::string str() const;

 private:
  std::array<std::uint8_t, kMaxDim> idx_{};
  std::uint8_t size_ = 0;
};

// Sign of the permutation (1..n) -> (I, I^C).
int parity(const MultiIndex& I, int n);

// All degree-p multi-indices for dimension n, lexicographic.
const std::vector<MultiIndex>& components(int n, int p);

// Rank of I within components(n, degree(I)); -1 if not canonical.
int component_rank(const MultiIndex& I, int n);

// dx^j ^ dx^I = sign * dx^J with J = sorted insert; sign 0 if j in I.
int insert_sign(int j, const MultiIndex& I, MultiIndex& out);

// dx^I ^ dx^J = sign * dx^K; sign 0 when the tuples intersect.
int merge_sign(const MultiIndex& I, const MultiIndex& J, MultiIndex& out);

// I = J with entry at position pos removed; returns (-1)^pos so that
// dx^{J[pos]} ^ dx^I = sign * dx^J.
MultiIndex remove_at(const MultiIndex& J, int pos);

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace gauge
