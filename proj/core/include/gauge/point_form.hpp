#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "gauge/frame_metric.hpp"
#include "gauge/lie_value.hpp"
#include "gauge/multi_index.hpp"

namespace gauge {

enum class WedgeMode { scalar, matrix_contract, commutator };

// A p-form at one point of an orthonormal frame: sparse map multi-index ->
// coefficient value. Zero coefficients are elided.
template <class V>
class PointFormT {
 public:
  using value_type = V;

  PointFormT(int degree, FrameMetric metric)
      : degree_(degree), metric_(metric) {
    if (degree < 0 || degree > metric.dim())
      throw DegreeError("form degree outside 0..n");
  }

  int degree() const { return degree_; }
  int dim() const { return metric_.dim(); }
  const FrameMetric& metric() const { return metric_; }

  const std::vector<std::pair<MultiIndex, V>>& terms() const { return terms_; }

  void set(const MultiIndex& I, const V& v) {
    if (I.degree() != degree_) throw DegreeError("coefficient degree mismatch");
    I.validate(metric_.dim());
    for (auto& t : terms_)
      if (t.first == I) {
        t.second = v;
        return;
      }
    terms_.emplace_back(I, v);
  }

  void add(const MultiIndex& I, const V& v) {
    for (auto& t : terms_)
      if (t.first == I) {
        t.second += v;
        return;
      }
    if (I.degree() != degree_) throw DegreeError("coefficient degree mismatch");
    terms_.emplace_back(I, v);
  }

  V coeff(const MultiIndex& I) const {
    for (auto& t : terms_)
      if (t.first == I) return t.second;
    return value_ops<V>::zero();
  }

  void prune(double tol = 0.0) {
    std::erase_if(terms_, [tol](const auto& t) {
      return value_ops<V>::abs_max(t.second) <= tol;
    });
  }

  PointFormT operator+(const PointFormT& o) const {
    check_compatible(o);
    PointFormT r = *this;
    for (auto& t : o.terms_) r.add(t.first, t.second);
    return r;
  }

  PointFormT operator-(const PointFormT& o) const {
    check_compatible(o);
    PointFormT r = *this;
    for (auto& t : o.terms_) r.add(t.first, V(-t.second));
    return r;
  }

  PointFormT operator*(double s) const {
    PointFormT r = *this;
    for (auto& t : r.terms_) t.second = V(t.second * s);
    return r;
  }

  double abs_max() const {
    double m = 0;
    for (auto& t : terms_) m = std::max(m, value_ops<V>::abs_max(t.second));
    return m;
  }

  void check_compatible(const PointFormT& o) const {
    if (!(metric_ == o.metric_)) throw ShapeError("metric mismatch");
    if (degree_ != o.degree_) throw DegreeError("degree mismatch");
  }

 private:
  int degree_;
  FrameMetric metric_;
  std::vector<std::pair<MultiIndex, V>> terms_;
};

template <class V>
PointFormT<V> wedge(const PointFormT<V>& a, const PointFormT<V>& b,
                    WedgeMode mode = WedgeMode::scalar) {
  if (!(a.metric() == b.metric())) throw ShapeError("metric mismatch");
  int p = a.degree() + b.degree();
  if (p > a.dim()) throw DegreeError("wedge degree exceeds dimension");
  PointFormT<V> r(p, a.metric());
  for (auto& ta : a.terms())
    for (auto& tb : b.terms()) {
      MultiIndex K;
      int s = merge_sign(ta.first, tb.first, K);
      if (s == 0) continue;
      V v;
      switch (mode) {
        case WedgeMode::scalar:
        case WedgeMode::matrix_contract:
          v = value_ops<V>::mult(ta.second, tb.second);
          break;
        case WedgeMode::commutator:
          // Bracket once per unordered pair: (a^b)(X,Y) = sum_{i,j}
          // a^i(X) b^j(Y) [e_i, e_j], i.e. half the ordered-pair sum.
          v = V(value_ops<V>::commutator(ta.second, tb.second) * 0.5);
          break;
      }
      r.add(K, V(v * double(s)));
    }
  r.prune();
  return r;
}

// *(e_I (x) v) = sigma(I) tau(I) (e_{I^C} (x) v).
template <class V>
PointFormT<V> hodge_star(const PointFormT<V>& a) {
  int n = a.dim();
  PointFormT<V> r(n - a.degree(), a.metric());
  for (auto& t : a.terms()) {
    int s = parity(t.first, n) * a.metric().sigma(t.first);
    r.add(t.first.complement(n), V(t.second * double(s)));
  }
  return r;
}

// Pointwise inner product; fiber values paired with the tag's convention
// (-tr(AB) for algebra-valued, plain product for real coefficients).
template <class V>
double form_inner(const PointFormT<V>& a, const PointFormT<V>& b) {
  a.check_compatible(b);
  double acc = 0;
  for (auto& ta : a.terms()) {
    int sig = a.metric().sigma(ta.first);
    for (auto& tb : b.terms())
      if (ta.first == tb.first)
        acc += sig * value_ops<V>::inner(ta.second, tb.second);
  }
  return acc;
}

// tr(lambda (x) T) = tr(T) lambda; only meaningful for matrix values.
template <class V>
PointFormT<std::complex<double>> trace_form(const PointFormT<V>& a) {
  if constexpr (!value_ops<V>::is_matrix) {
    throw TypeError("trace_form needs a matrix-valued form");
  } else {
    PointFormT<std::complex<double>> r(a.degree(), a.metric());
    for (auto& t : a.terms()) r.add(t.first, value_ops<V>::trace(t.second));
    r.prune();
    return r;
  }
}

}  // namespace gauge
