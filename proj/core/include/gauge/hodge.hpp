#pragma once

#include <cmath>

#include "gauge/exterior.hpp"

namespace gauge {

template <class V>
struct DecompositionResult {
  FormField<V> exact;     // d nu
  FormField<V> coexact;   // delta eta
  FormField<V> harmonic;  // resolvable kernel part
  double residual_norm = 0;
  int harmonic_dimension = 0;  // dim of the resolvable kernel (Betti number)
  int alias_dimension = 0;     // deflated Nyquist grid modes (even extents)
  int iterations = 0;
};

namespace detail {

// Kernel basis of the central-difference Laplacian on a flat torus: per
// component the constant mode plus, for every nonempty axis subset with all
// extents even, the Nyquist checkerboard. Skew-symmetric stencils annihilate
// the checkerboards exactly; they are grid artifacts, kept separate from the
// resolvable (constant) kernel.
template <class V>
std::vector<FormField<V>> torus_kernel_modes(std::shared_ptr<const Chart> ch,
                                             int degree, bool aliases) {
  std::vector<FormField<V>> out;
  int n = ch->dim();
  const auto& comps = components(n, degree);
  std::vector<int> evens;
  for (int a = 0; a < n; ++a)
    if (ch->extent(a) % 2 == 0) evens.push_back(a);
  int nsub = 1 << evens.size();
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    for (int mask = 0; mask < (aliases ? nsub : 1); ++mask) {
      if (aliases == (mask == 0)) continue;
      FormField<V> f(ch, degree);
      int c[kMaxDim];
      for (long p = 0; p < ch->total(); ++p) {
        ch->decompose(p, c);
        int flips = 0;
        for (size_t b = 0; b < evens.size(); ++b)
          if ((mask >> b) & 1) flips += c[evens[b]];
        f.at(static_cast<int>(ci), p) =
            V(value_identity<V>() * (flips % 2 == 0 ? 1.0 : -1.0));
      }
      double nrm = l2_norm(f);
      f *= 1.0 / nrm;
      out.push_back(std::move(f));
    }
  }
  return out;
}

template <class V>
void project_out(FormField<V>& f, const std::vector<FormField<V>>& basis) {
  for (const auto& b : basis) {
    double c = l2_inner(f, b);
    FormField<V> t = b;
    t *= c;
    f -= t;
  }
}

}  // namespace detail

// Numerical Hodge decomposition on a periodic chart: deflate the verified
// Laplacian kernel, solve Delta nu = a - h(a) by conjugate gradients, return
// (d delta nu, delta d nu, h(a)).
template <class V>
DecompositionResult<V> hodge_decompose(const FormField<V>& a, double tol = 1e-10,
                                       long max_iter = -1) {
  static_assert(std::is_same_v<V, double>,
                "decomposition implemented for real-valued forms");
  auto ch = a.chart_ptr();
  for (int ax = 0; ax < ch->dim(); ++ax)
    if (!ch->is_periodic(ax))
      throw DomainError("hodge_decompose needs a closed (periodic) chart");

  auto harm_basis = detail::torus_kernel_modes<V>(ch, a.degree(), false);
  auto alias_basis = detail::torus_kernel_modes<V>(ch, a.degree(), true);
  // The deflation set must consist of exact kernel vectors.
  for (auto* basis : {&harm_basis, &alias_basis})
    for (const auto& b : *basis)
      if (laplacian(b).sup_norm() > 1e-10)
        throw Error("deflation vector is not in the Laplacian kernel");

  DecompositionResult<V> res{FormField<V>(ch, a.degree()),
                             FormField<V>(ch, a.degree()),
                             FormField<V>(ch, a.degree())};
  res.harmonic_dimension = static_cast<int>(harm_basis.size());
  res.alias_dimension = static_cast<int>(alias_basis.size());

  for (const auto& b : harm_basis) {
    double c = l2_inner(a, b);
    FormField<V> t = b;
    t *= c;
    res.harmonic += t;
  }

  FormField<V> rhs = a;
  rhs -= res.harmonic;
  detail::project_out(rhs, alias_basis);

  long N = ch->total() * static_cast<long>(a.n_components());
  if (max_iter < 0) max_iter = 10 * N;

  // CG on the deflated complement, where Delta is positive definite.
  FormField<V> nu(ch, a.degree());
  FormField<V> r = rhs;
  FormField<V> p = r;
  double rr = l2_inner(r, r);
  double rhs_norm = std::sqrt(std::max(0.0, rr));
  double stop = tol * std::max(1.0, rhs_norm);
  long it = 0;
  while (std::sqrt(std::max(0.0, rr)) > stop) {
    if (it >= max_iter)
      throw ConvergenceError("hodge_decompose: CG stalled", std::sqrt(rr));
    FormField<V> Ap = laplacian(p);
    double pAp = l2_inner(p, Ap);
    if (pAp <= 0)
      throw ConvergenceError("hodge_decompose: operator not SPD on complement",
                             std::sqrt(rr));
    double alpha = rr / pAp;
    FormField<V> t = p;
    t *= alpha;
    nu += t;
    t = Ap;
    t *= alpha;
    r -= t;
    if (it % 32 == 31) {
      detail::project_out(r, harm_basis);
      detail::project_out(r, alias_basis);
    }
    double rr_new = l2_inner(r, r);
    double beta = rr_new / rr;
    rr = rr_new;
    p *= beta;
    p += r;
    ++it;
  }
  res.iterations = static_cast<int>(it);

  if (a.degree() > 0) res.exact = ext_d(codifferential(nu));
  if (a.degree() < ch->dim()) res.coexact = codifferential(ext_d(nu));

  FormField<V> recon = res.exact;
  recon += res.coexact;
  recon += res.harmonic;
  recon -= a;
  res.residual_norm = l2_norm(recon);
  return res;
}

}  // namespace gauge
