#pragma once

#include "gauge/form_field.hpp"

namespace gauge {

// Central difference of one component array along `axis`; second-order
// one-sided stencils at the edges of non-periodic windows.
template <class V>
V fd_derivative(const Chart& ch, const std::vector<V>& f, int axis, long p) {
  const double h = ch.spacing(axis);
  long fw = ch.shift(p, axis, 1);
  long bw = ch.shift(p, axis, -1);
  if (fw >= 0 && bw >= 0) return V((f[fw] - f[bw]) * (0.5 / h));
  if (bw < 0) {
    long f1 = ch.shift(p, axis, 1), f2 = ch.shift(p, axis, 2);
    return V((f[f1] * 4.0 - f[f2] - f[p] * 3.0) * (0.5 / h));
  }
  long b1 = ch.shift(p, axis, -1), b2 = ch.shift(p, axis, -2);
  return V((f[p] * 3.0 - f[b1] * 4.0 + f[b2]) * (0.5 / h));
}

// Exterior derivative: (d lambda)_J = sum_{j in J} (-1)^{pos(j)} D_j
// lambda_{J \ j}. Coordinate-basis coefficients, so no metric enters.
template <class V>
FormField<V> ext_d(const FormField<V>& a) {
  const Chart& ch = a.chart();
  int n = ch.dim(), p = a.degree();
  if (p >= n) throw DegreeError("ext_d on a top form");
  FormField<V> out(a.chart_ptr(), p + 1);
  const auto& out_comps = components(n, p + 1);
  for (size_t cj = 0; cj < out_comps.size(); ++cj) {
    const MultiIndex& J = out_comps[cj];
    for (int pos = 0; pos < J.degree(); ++pos) {
      int axis = J[pos] - 1;
      MultiIndex I = remove_at(J, pos);
      int ci = component_rank(I, n);
      double sign = (pos % 2 == 0) ? 1.0 : -1.0;
      const auto& src = a.component(ci);
      auto& dst = out.component(cj);
      for (long pt = 0; pt < ch.total(); ++pt)
        dst[pt] += V(fd_derivative(ch, src, axis, pt) * sign);
    }
  }
  return out;
}

// Pointwise Hodge star via *e_I = sigma(I) tau(I) e_{I^C} plus the diagonal
// coordinate->orthonormal scale ratio.
template <class V>
FormField<V> hodge_star(const FormField<V>& a) {
  const Chart& ch = a.chart();
  int n = ch.dim(), p = a.degree();
  FormField<V> out(a.chart_ptr(), n - p);
  const auto& comps = components(n, p);
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    const MultiIndex& I = comps[ci];
    MultiIndex Ic = I.complement(n);
    int co = component_rank(Ic, n);
    double sgn = parity(I, n) * ch.metric().sigma(I);
    const auto& src = a.component(ci);
    auto& dst = out.component(co);
    if (ch.flat()) {
      for (long pt = 0; pt < ch.total(); ++pt) dst[pt] = V(src[pt] * sgn);
    } else {
      for (long pt = 0; pt < ch.total(); ++pt) {
        double r = sgn;
        for (int k = 0; k < Ic.degree(); ++k) r *= ch.scale(Ic[k] - 1, pt);
        for (int k = 0; k < I.degree(); ++k) r /= ch.scale(I[k] - 1, pt);
        dst[pt] = V(src[pt] * r);
      }
    }
  }
  return out;
}

// delta_p = (-1)^{n(p+1)+1} * d *.
template <class V>
FormField<V> codifferential(const FormField<V>& a) {
  int n = a.dim(), p = a.degree();
  if (p < 1) throw DegreeError("codifferential on a 0-form");
  double sgn = codifferential_sign(p, n);
  FormField<V> r = hodge_star(ext_d(hodge_star(a)));
  return r *= sgn;
}

// Laplacian d delta + delta d (degree-aware at the ends of the complex).
template <class V>
FormField<V> laplacian(const FormField<V>& a) {
  int n = a.dim(), p = a.degree();
  if (p == 0) return codifferential(ext_d(a));
  if (p == n) return ext_d(codifferential(a));
  FormField<V> r = ext_d(codifferential(a));
  r += codifferential(ext_d(a));
  return r;
}

template <class V, class Combine>
FormField<V> wedge_impl(const FormField<V>& a, const FormField<V>& b,
                        Combine&& cmb) {
  if (a.chart_ptr().get() != b.chart_ptr().get())
    throw ShapeError("wedge across different charts");
  const Chart& ch = a.chart();
  int n = ch.dim();
  int p = a.degree() + b.degree();
  if (p > n) throw DegreeError("wedge degree exceeds dimension");
  FormField<V> out(a.chart_ptr(), p);
  const auto& ca = components(n, a.degree());
  const auto& cb = components(n, b.degree());
  for (size_t i = 0; i < ca.size(); ++i)
    for (size_t j = 0; j < cb.size(); ++j) {
      MultiIndex K;
      int s = merge_sign(ca[i], cb[j], K);
      if (s == 0) continue;
      int ck = component_rank(K, n);
      const auto& fa = a.component(i);
      const auto& fb = b.component(j);
      auto& dst = out.component(ck);
      double sd = s;
      for (long pt = 0; pt < ch.total(); ++pt)
        dst[pt] += V(cmb(fa[pt], fb[pt]) * sd);
    }
  return out;
}

template <class V>
FormField<V> wedge(const FormField<V>& a, const FormField<V>& b,
                   WedgeMode mode = WedgeMode::scalar) {
  switch (mode) {
    case WedgeMode::commutator:
      // Same normalization as the pointwise algebra: one bracket per
      // unordered component pair.
      return wedge_impl(a, b, [](const V& x, const V& y) {
        return V(value_ops<V>::commutator(x, y) * 0.5);
      });
    default:
      return wedge_impl(a, b, [](const V& x, const V& y) {
        return value_ops<V>::mult(x, y);
      });
  }
}

template <class V>
FormField<std::complex<double>> trace_field(const FormField<V>& a) {
  if constexpr (!value_ops<V>::is_matrix) {
    throw TypeError("trace_field needs a matrix-valued field");
  } else {
    FormField<std::complex<double>> out(a.chart_ptr(), a.degree());
    for (int ci = 0; ci < a.n_components(); ++ci)
      for (long pt = 0; pt < a.chart().total(); ++pt)
        out.at(ci, pt) = value_ops<V>::trace(a.at(ci, pt));
    return out;
  }
}

// Riemann quadrature of a top form: coordinate coefficient times cell volume
// and partition-of-unity weight. Exact for band-limited data on periodic
// axes, midpoint rule on cell-centered windows.
template <class V>
V integrate_top(const FormField<V>& a) {
  const Chart& ch = a.chart();
  if (a.degree() != ch.dim()) throw DegreeError("integrate_top needs degree n");
  if constexpr (std::is_same_v<V, double>) {
    KahanSum acc;
    const auto& f = a.component(0);
    for (long pt = 0; pt < ch.total(); ++pt)
      acc.add(f[pt] * ch.pou_weight(pt));
    return acc.value() * ch.cell_volume();
  } else {
    V acc = value_ops<V>::zero();
    const auto& f = a.component(0);
    for (long pt = 0; pt < ch.total(); ++pt)
      acc += V(f[pt] * ch.pou_weight(pt));
    return V(acc * ch.cell_volume());
  }
}

// Discrete L2 pairing <<a,b>> = sum <a,b>_x mu-weight. The pointwise inner
// product converts to orthonormal components (scale factors) and applies
// sigma(I); fiber values pair with the tag convention.
template <class V>
double l2_inner(const FormField<V>& a, const FormField<V>& b) {
  a.check_compatible(b);
  const Chart& ch = a.chart();
  const auto& comps = components(ch.dim(), a.degree());
  KahanSum acc;
  for (long pt = 0; pt < ch.total(); ++pt) {
    double w = ch.pou_weight(pt);
    if (!ch.flat()) {
      double vol = 1.0;
      for (int ax = 0; ax < ch.dim(); ++ax) vol *= ch.scale(ax, pt);
      w *= vol;
    }
    double s = 0;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
      double cw = ch.metric().sigma(comps[ci]);
      if (!ch.flat())
        for (int k = 0; k < comps[ci].degree(); ++k) {
          double sc = ch.scale(comps[ci][k] - 1, pt);
          cw /= sc * sc;
        }
      s += cw * value_ops<V>::inner(a.at(ci, pt), b.at(ci, pt));
    }
    acc.add(s * w);
  }
  return acc.value() * ch.cell_volume();
}

template <class V>
double l2_norm(const FormField<V>& a) {
  return std::sqrt(std::max(0.0, l2_inner(a, a)));
}

// Multilinear interpolation of one component at chart coordinates x.
template <class V>
V interpolate(const FormField<V>& a, int ci, const double* x) {
  const Chart& ch = a.chart();
  int n = ch.dim();
  int base[kMaxDim];
  double frac[kMaxDim];
  for (int ax = 0; ax < n; ++ax) {
    double u = (x[ax] - ch.origin(ax)) / ch.spacing(ax);
    double fl = std::floor(u);
    base[ax] = static_cast<int>(fl);
    frac[ax] = u - fl;
    if (!ch.is_periodic(ax)) {
      if (base[ax] < 0 || base[ax] >= ch.extent(ax) - 1) {
        if (u < -0.5 || u > ch.extent(ax) - 0.5)
          throw DomainError("interpolation point outside chart");
        base[ax] = std::min(std::max(base[ax], 0), ch.extent(ax) - 2);
        frac[ax] = u - base[ax];
      }
    }
  }
  V acc = value_ops<V>::zero();
  const auto& f = a.component(ci);
  for (int corner = 0; corner < (1 << n); ++corner) {
    double w = 1.0;
    int c[kMaxDim];
    for (int ax = 0; ax < n; ++ax) {
      int bit = (corner >> ax) & 1;
      w *= bit ? frac[ax] : 1.0 - frac[ax];
      int k = base[ax] + bit;
      if (ch.is_periodic(ax)) {
        k %= ch.extent(ax);
        if (k < 0) k += ch.extent(ax);
      }
      c[ax] = k;
    }
    acc += V(f[ch.compose(c)] * w);
  }
  return acc;
}

}  // namespace gauge
