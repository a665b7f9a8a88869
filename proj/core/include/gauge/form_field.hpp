#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "gauge/chart.hpp"
#include "gauge/lie_value.hpp"
#include "gauge/multi_index.hpp"
#include "gauge/point_form.hpp"

namespace gauge {

// Sampled p-form over a chart, stored component-major: one contiguous value
// array per coordinate-basis multi-index.
template <class V>
class FormField {
 public:
  using value_type = V;

  FormField() = default;
  FormField(std::shared_ptr<const Chart> chart, int degree)
      : chart_(std::move(chart)), degree_(degree) {
    if (degree < 0 || degree > chart_->dim())
      throw DegreeError("field degree outside 0..n");
    comp_.assign(components(chart_->dim(), degree).size(),
                 std::vector<V>(chart_->total(), value_ops<V>::zero()));
  }

  // Sample coordinate-basis coefficients from a function (x, I) -> value.
  static FormField sample(
      std::shared_ptr<const Chart> chart, int degree,
      const std::function<V(const double* x, const MultiIndex& I)>& f) {
    FormField out(chart, degree);
    const auto& comps = components(chart->dim(), degree);
    double x[kMaxDim];
    for (long p = 0; p < chart->total(); ++p) {
      chart->point(p, x);
      for (size_t ci = 0; ci < comps.size(); ++ci)
        out.comp_[ci][p] = f(x, comps[ci]);
    }
    return out;
  }

  const Chart& chart() const { return *chart_; }
  std::shared_ptr<const Chart> chart_ptr() const { return chart_; }
  int degree() const { return degree_; }
  int dim() const { return chart_->dim(); }
  int n_components() const { return static_cast<int>(comp_.size()); }
  const std::vector<MultiIndex>& component_index() const {
    return components(chart_->dim(), degree_);
  }

  std::vector<V>& component(int ci) { return comp_[ci]; }
  const std::vector<V>& component(int ci) const { return comp_[ci]; }

  V& at(int ci, long p) { return comp_[ci][p]; }
  const V& at(int ci, long p) const { return comp_[ci][p]; }

  PointFormT<V> point_form(long p) const {
    PointFormT<V> pf(degree_, chart_->metric());
    const auto& comps = component_index();
    for (size_t ci = 0; ci < comps.size(); ++ci)
      pf.add(comps[ci], comp_[ci][p]);
    pf.prune();
    return pf;
  }

  FormField& operator+=(const FormField& o) {
    check_compatible(o);
    for (size_t ci = 0; ci < comp_.size(); ++ci)
      for (long p = 0; p < chart_->total(); ++p) comp_[ci][p] += o.comp_[ci][p];
    return *this;
  }
  FormField& operator-=(const FormField& o) {
    check_compatible(o);
    for (size_t ci = 0; ci < comp_.size(); ++ci)
      for (long p = 0; p < chart_->total(); ++p) comp_[ci][p] -= o.comp_[ci][p];
    return *this;
  }
  FormField& operator*=(double s) {
    for (auto& c : comp_)
      for (auto& v : c) v = V(v * s);
    return *this;
  }
  friend FormField operator+(FormField a, const FormField& b) { return a += b; }
  friend FormField operator-(FormField a, const FormField& b) { return a -= b; }
  friend FormField operator*(FormField a, double s) { return a *= s; }

  double sup_norm(int boundary_margin = 0) const {
    double m = 0;
    for (auto& c : comp_)
      for (long p = 0; p < chart_->total(); ++p) {
        if (boundary_margin && !chart_->interior(p, boundary_margin)) continue;
        m = std::max(m, value_ops<V>::abs_max(c[p]));
      }
    return m;
  }

  void check_compatible(const FormField& o) const {
    if (chart_.get() != o.chart_.get()) throw ShapeError("chart mismatch");
    if (degree_ != o.degree_) throw DegreeError("degree mismatch");
  }

 private:
  std::shared_ptr<const Chart> chart_;
  int degree_ = 0;
  std::vector<std::vector<V>> comp_;
};

// Compensated (Kahan) accumulator: grid reductions stay deterministic under
// a fixed traversal order.
struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

}  // namespace gauge
