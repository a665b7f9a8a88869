#pragma once

#include <random>
#include <vector>

#include "gauge/form_field.hpp"

namespace gauge {

// Band-limited trigonometric polynomial on a torus: analytic, so finite
// difference convergence orders are measurable, and free of Nyquist content
// at every acceptance resolution. White noise would break both.
class TrigPoly {
 public:
  TrigPoly() = default;

  static TrigPoly make(std::uint64_t seed, int dim,
                       const std::vector<double>& lengths, int terms = 6,
                       int kmax = 2, double amplitude = 1.0) {
    TrigPoly f;
    f.dim_ = dim;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> ki(-kmax, kmax);
    for (int t = 0; t < terms; ++t) {
      Term term;
      bool nonzero = false;
      for (int a = 0; a < dim; ++a) {
        int k = ki(rng);
        term.freq[a] = 2.0 * 3.14159265358979323846 * k / lengths[a];
        if (k != 0) nonzero = true;
      }
      term.amp = amplitude * u(rng);
      term.phase = 3.14159265358979323846 * u(rng);
      if (!nonzero) term.amp *= 0.25;  // keep the mean component tame
      f.terms_.push_back(term);
    }
    return f;
  }

  double operator()(const double* x) const {
    double s = 0;
    for (const auto& t : terms_) {
      double arg = t.phase;
      for (int a = 0; a < dim_; ++a) arg += t.freq[a] * x[a];
      s += t.amp * std::cos(arg);
    }
    return s;
  }

  double partial(const double* x, int axis) const {
    double s = 0;
    for (const auto& t : terms_) {
      double arg = t.phase;
      for (int a = 0; a < dim_; ++a) arg += t.freq[a] * x[a];
      s -= t.amp * t.freq[axis] * std::sin(arg);
    }
    return s;
  }

 private:
  struct Term {
    double freq[kMaxDim] = {0, 0, 0, 0, 0, 0};
    double amp = 0, phase = 0;
  };
  int dim_ = 0;
  std::vector<Term> terms_;
};

// One seeded TrigPoly per (component, algebra direction), sampled onto the
// chart. `basis` supplies the algebra directions (for scalars: {1.0}).
template <class V>
FormField<V> random_form_field(std::shared_ptr<const Chart> chart, int degree,
                               std::uint64_t seed, const std::vector<V>& basis,
                               double amplitude = 1.0, int kmax = 2) {
  std::vector<double> lengths(chart->dim());
  for (int a = 0; a < chart->dim(); ++a)
    lengths[a] = chart->window_hi(a) - chart->window_lo(a);
  FormField<V> out(chart, degree);
  const auto& comps = components(chart->dim(), degree);
  double x[kMaxDim];
  for (size_t ci = 0; ci < comps.size(); ++ci)
    for (size_t b = 0; b < basis.size(); ++b) {
      auto f = TrigPoly::make(seed + 977 * ci + 131 * b, chart->dim(), lengths,
                              6, kmax, amplitude);
      for (long p = 0; p < chart->total(); ++p) {
        chart->point(p, x);
        out.at(static_cast<int>(ci), p) += V(basis[b] * f(x));
      }
    }
  return out;
}

}  // namespace gauge
