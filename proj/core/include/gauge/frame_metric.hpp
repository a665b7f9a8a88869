#pragma once

#include "gauge/multi_index.hpp"

namespace gauge {

// Orthonormal-frame metric data: n frame directions, the last `neg` of them
// carrying eta_i = -1. Frame order fixes the volume form e^1 ^ ... ^ e^n
// (x,y,z,t for the Minkowski charts).
class FrameMetric {
 public:
  FrameMetric() = default;
  FrameMetric(int dim, int neg) : dim_(dim), neg_(neg) {
    if (dim < 1 || dim > kMaxDim || neg < 0 || neg > dim)
      throw InvalidIndexError("bad frame metric signature");
  }

  static FrameMetric euclidean(int dim) { return FrameMetric(dim, 0); }
  static FrameMetric minkowski() { return FrameMetric(4, 1); }

  int dim() const { return dim_; }
  int neg_count() const { return neg_; }

  // eta_i for frame index i in 1..n.
  int eta(int i) const { return i > dim_ - neg_ ? -1 : 1; }

  // sigma(I) = prod_{i in I} eta_i.
  int sigma(const MultiIndex& I) const {
    int s = 1;
    for (int k = 0; k < I.degree(); ++k) s *= eta(I[k]);
    return s;
  }

  // <mu, mu> = (-1)^s.
  int volume_sign() const { return neg_ % 2 == 0 ? 1 : -1; }

  bool operator==(const FrameMetric& o) const {
    return dim_ == o.dim_ && neg_ == o.neg_;
  }

 private:
  int dim_ = 0;
  int neg_ = 0;
};

// Sign in ** = (-1)^{p(n-p)+s}.
inline int double_star_sign(int p, int n, int s) {
  int e = p * (n - p) + s;
  return e % 2 == 0 ? 1 : -1;
}

// Codifferential sign (-1)^{n(p+1)+1} acting on p-forms.
inline int codifferential_sign(int p, int n) {
  int e = n * (p + 1) + 1;
  return e % 2 == 0 ? 1 : -1;
}

}  // namespace gauge
