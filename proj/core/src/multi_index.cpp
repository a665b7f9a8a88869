#include "gauge/multi_index.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace gauge {

MultiIndex::MultiIndex(std::initializer_list<int> idx) {
  if (static_cast<int>(idx.size()) > kMaxDim)
    throw InvalidIndexError("multi-index longer than max dimension");
  for (int i : idx) {
    if (i < 1 || i > 255) throw InvalidIndexError("frame index out of range");
    idx_[size_++] = static_cast<std::uint8_t>(i);
  }
  for (int k = 1; k < size_; ++k)
    if (idx_[k - 1] >= idx_[k])
      throw InvalidIndexError("multi-index not strictly increasing");
}

MultiIndex MultiIndex::from_sorted(const int* idx, int p) {
  MultiIndex m;
  if (p > kMaxDim) throw InvalidIndexError("multi-index longer than max dimension");
  for (int k = 0; k < p; ++k) {
    if (idx[k] < 1) throw InvalidIndexError("frame index out of range");
    if (k > 0 && idx[k - 1] >= idx[k])
      throw InvalidIndexError("multi-index not strictly increasing");
    m.idx_[k] = static_cast<std::uint8_t>(idx[k]);
  }
  m.size_ = static_cast<std::uint8_t>(p);
  return m;
}

bool MultiIndex::contains(int i) const { return position(i) >= 0; }

int MultiIndex::position(int i) const {
  for (int k = 0; k < size_; ++k)
    if (idx_[k] == i) return k;
  return -1;
}

MultiIndex MultiIndex::complement(int n) const {
  MultiIndex c;
  for (int i = 1; i <= n; ++i)
    if (!contains(i)) c.idx_[c.size_++] = static_cast<std::uint8_t>(i);
  return c;
}

bool MultiIndex::operator==(const MultiIndex& o) const {
  if (size_ != o.size_) return false;
  return std::equal(idx_.begin(), idx_.begin() + size_, o.idx_.begin());
}

bool MultiIndex::operator<(const MultiIndex& o) const {
  return std::lexicographical_compare(idx_.begin(), idx_.begin() + size_,
                                      o.idx_.begin(), o.idx_.begin() + o.size_);
}

void MultiIndex::validate(int n) const {
  for (int k = 0; k < size_; ++k)
    if (idx_[k] < 1 || idx_[k] > n)
      throw InvalidIndexError("frame index " + std::to_string(idx_[k]) +
                              " out of 1.." + std::to_string(n));
}

std::string MultiIndex::str() const {
  std::ostringstream os;
  os << '(';
  for (int k = 0; k < size_; ++k) {
    if (k) os << ',';
    os << int(idx_[k]);
  }
  os << ')';
  return os.str();
}

int parity(const MultiIndex& I, int n) {
  I.validate(n);
  // Sign of (1..n) -> (I, I^C): count inversions of the concatenation.
  MultiIndex c = I.complement(n);
  int seq[kMaxDim];
  int p = I.degree(), q = c.degree();
  for (int k = 0; k < p; ++k) seq[k] = I[k];
  for (int k = 0; k < q; ++k) seq[p + k] = c[k];
  int inv = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (seq[a] > seq[b]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

const std::vector<MultiIndex>& components(int n, int p) {
  static std::map<std::pair<int, int>, std::vector<MultiIndex>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lk(mtx);
  auto key = std::make_pair(n, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<MultiIndex> out;
  if (p < 0 || p > n) {
    return cache.emplace(key, std::move(out)).first->second;
  }
  int idx[kMaxDim];
  for (int k = 0; k < p; ++k) idx[k] = k + 1;
  while (true) {
    out.push_back(MultiIndex::from_sorted(idx, p));
    if (p == 0) break;
    int k = p - 1;
    while (k >= 0 && idx[k] == n - (p - 1 - k)) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return cache.emplace(key, std::move(out)).first->second;
}

int component_rank(const MultiIndex& I, int n) {
  const auto& comps = components(n, I.degree());
  for (size_t k = 0; k < comps.size(); ++k)
    if (comps[k] == I) return static_cast<int>(k);
  return -1;
}

int insert_sign(int j, const MultiIndex& I, MultiIndex& out) {
  if (I.contains(j)) return 0;
  int idx[kMaxDim];
  int p = I.degree();
  int pos = 0;
  while (pos < p && I[pos] < j) ++pos;
  for (int k = 0; k < pos; ++k) idx[k] = I[k];
  idx[pos] = j;
  for (int k = pos; k < p; ++k) idx[k + 1] = I[k];
  out = MultiIndex::from_sorted(idx, p + 1);
  return (pos % 2 == 0) ? 1 : -1;
}

int merge_sign(const MultiIndex& I, const MultiIndex& J, MultiIndex& out) {
  // Append J's entries in order; each dx^j moves left past the acc entries
  // greater than j.
  int sign = 1;
  MultiIndex acc = I;
  for (int k = 0; k < J.degree(); ++k) {
    int j = J[k];
    if (acc.contains(j)) return 0;
    int below = 0;
    for (int m = 0; m < acc.degree(); ++m)
      if (acc[m] < j) ++below;
    if ((acc.degree() - below) % 2 != 0) sign = -sign;
    MultiIndex next;
    insert_sign(j, acc, next);
    acc = next;
  }
  out = acc;
  return sign;
}

MultiIndex remove_at(const MultiIndex& J, int pos) {
  int idx[kMaxDim];
  int p = J.degree();
  int m = 0;
  for (int k = 0; k < p; ++k)
    if (k != pos) idx[m++] = J[k];
  return MultiIndex::from_sorted(idx, p - 1);
}

}  // namespace gauge
