#pragma once

#include "gauge/connection.hpp"

namespace gauge {

struct YMConfig {
  double step_size = 0.05;
  double tol = 1e-10;
  long max_iter = 500;
  int record_every = 1;
};

struct FlowTrace {
  struct Sample {
    long iteration;
    double action;
    double residual;
  };
  std::vector<Sample> samples;
};

struct FlowStallError : ConvergenceError {
  FlowTrace trace;
  FlowStallError(const std::string& msg, double r, FlowTrace t)
      : ConvergenceError(msg, r), trace(std::move(t)) {}
};

// S = <<Omega, Omega>> with the fixed fiber pairing <A,B> = -tr(AB);
// non-negative for compact tags on Euclidean charts.
template <class V>
double ym_action(const ConnectionState<V>& c) {
  FormField<V> F = curvature(c);
  return l2_inner(F, F);
}

// L2 norm of D(*Omega); the Bianchi half of the equations is measured by
// bianchi_residual.
template <class V>
double ym_residual(const ConnectionState<V>& c) {
  FormField<V> F = curvature(c);
  return l2_norm(cov_ext_derivative(c, hodge_star(F), true));
}

// Formal adjoint D* Omega = (-1)^{n(p+1)+1} * D * Omega, the action gradient
// under the fixed pairing (constant factors absorbed into the step size).
template <class V>
FormField<V> ym_gradient(const ConnectionState<V>& c) {
  FormField<V> F = curvature(c);
  double sgn = codifferential_sign(F.degree(), c.chart().dim());
  FormField<V> g = hodge_star(cov_ext_derivative(c, hodge_star(F), true));
  g *= sgn;
  return g;
}

// Steepest descent omega <- omega - step D*(Omega), accepting a step only
// when the action does not increase; rejected steps halve the step size.
// The curvature is shared between the action, residual and gradient of the
// current iterate.
template <class V>
std::pair<ConnectionState<V>, FlowTrace> ym_flow(const ConnectionState<V>& c0,
                                                 const YMConfig& cfg) {
  if (cfg.step_size <= 0 || cfg.tol <= 0)
    throw ConfigError("flow needs positive step and tolerance");
  ConnectionState<V> c = c0;
  c.omega_fn = nullptr;
  FlowTrace trace;

  FormField<V> F = curvature(c);
  double action = l2_inner(F, F);
  FormField<V> dstar = cov_ext_derivative(c, hodge_star(F), true);
  double residual = l2_norm(dstar);
  double step = cfg.step_size;
  trace.samples.push_back({0, action, residual});
  long it = 0;
  double sgn = codifferential_sign(2, c.chart().dim());
  while (residual >= cfg.tol && it < cfg.max_iter) {
    FormField<V> g = hodge_star(dstar);
    g *= sgn;
    bool accepted = false;
    while (!accepted) {
      ConnectionState<V> trial = c;
      FormField<V> delta = g;
      delta *= -step;
      trial.omega += delta;
      FormField<V> Ft = curvature(trial);
      double trial_action = l2_inner(Ft, Ft);
      if (trial_action <= action * (1.0 + 1e-14) + 1e-300) {
        c = std::move(trial);
        F = std::move(Ft);
        action = trial_action;
        accepted = true;
      } else {
        step *= 0.5;
        if (step < 1e-14 * cfg.step_size)
          throw FlowStallError("flow step underflow", residual, trace);
      }
    }
    dstar = cov_ext_derivative(c, hodge_star(F), true);
    residual = l2_norm(dstar);
    ++it;
    if (it % cfg.record_every == 0 || residual < cfg.tol)
      trace.samples.push_back({it, action, residual});
    // Cautious step growth once a step has been accepted.
    step = std::min(step * 1.25, cfg.step_size);
  }
  return {std::move(c), std::move(trace)};
}

// F = F+ + F- with *F+- = +-F+-; needs the middle degree of a Euclidean
// 4-chart, where ** = +1.
template <class V>
std::pair<FormField<V>, FormField<V>> sd_asd_split(const FormField<V>& F) {
  if (F.degree() != 2 || F.dim() != 4 || F.chart().metric().neg_count() != 0)
    throw DegreeError("self-dual split needs 2-forms on Euclidean 4-charts");
  FormField<V> sF = hodge_star(F);
  FormField<V> plus = F;
  plus += sF;
  plus *= 0.5;
  FormField<V> minus = F;
  minus -= sF;
  minus *= 0.5;
  return {std::move(plus), std::move(minus)};
}

namespace detail {
// Quaternions as 2x2 complex matrices: 1 -> Id, e_k -> -i sigma_k.
inline Eigen::Matrix2cd quat(double r, double v1, double v2, double v3) {
  Eigen::Matrix2cd m = r * Eigen::Matrix2cd::Identity();
  m += 2.0 * (v1 * su2_basis(0) + v2 * su2_basis(1) + v3 * su2_basis(2));
  return m;
}
}  // namespace detail

// The quaternionic instanton omega = im(conj(x) dx / (1 + |x|^2)) on a
// Euclidean 4-window, su(2)-valued; its curvature is self-dual with the
// chart's (1,2,3,4) orientation.
inline ConnectionState<Eigen::Matrix2cd> bpst_sample(
    std::shared_ptr<const Chart> chart) {
  if (chart->dim() != 4 || chart->metric().neg_count() != 0)
    throw ShapeError("instanton sample needs a Euclidean 4-window");
  ConnectionState<Eigen::Matrix2cd> c;
  c.group = Algebra::su2;
  auto coeff = [](const double* x, int axis) {
    // x = x4 + x1 i + x2 j + x3 k; axes 0..2 are the imaginary directions,
    // axis 3 the real one.
    Eigen::Matrix2cd xbar = detail::quat(x[3], -x[0], -x[1], -x[2]);
    Eigen::Matrix2cd dx_axis =
        axis == 3 ? detail::quat(1, 0, 0, 0)
                  : detail::quat(0, axis == 0, axis == 1, axis == 2);
    double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    Eigen::Matrix2cd prod = xbar * dx_axis;
    return Eigen::Matrix2cd(0.5 * (prod - prod.adjoint()) / (1.0 + r2));
  };
  c.omega = FormField<Eigen::Matrix2cd>::sample(
      chart, 1, [&](const double* x, const MultiIndex& I) {
        return coeff(x, I[0] - 1);
      });
  c.omega_fn = coeff;
  return c;
}

// Residual of *_tilde F = f^{n-2p} * F under the conformal rescale
// g -> f^2 g; identically zero at p = n/2.
template <class V>
double conformal_star_check(const FormField<V>& F,
                            const std::vector<double>& f) {
  const Chart& ch = F.chart();
  if (static_cast<long>(f.size()) != ch.total())
    throw ShapeError("conformal factor grid mismatch");
  for (double v : f)
    if (!(v > 0)) throw DomainError("conformal factor must be positive");
  int n = ch.dim(), p = F.degree();
  // Star of the rescaled metric computed the general way: every axis scale
  // picks up the factor f, one power per coframe leg.
  FormField<V> star_t(F.chart_ptr(), n - p);
  const auto& comps = components(n, p);
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    const MultiIndex& I = comps[ci];
    MultiIndex Ic = I.complement(n);
    int co = component_rank(Ic, n);
    double sgn = parity(I, n) * ch.metric().sigma(I);
    for (long pt = 0; pt < ch.total(); ++pt) {
      double r = sgn;
      for (int k = 0; k < Ic.degree(); ++k)
        r *= f[pt] * ch.scale(Ic[k] - 1, pt);
      for (int k = 0; k < I.degree(); ++k)
        r /= f[pt] * ch.scale(I[k] - 1, pt);
      star_t.at(co, pt) = V(F.at(static_cast<int>(ci), pt) * r);
    }
  }
  FormField<V> ref = hodge_star(F);
  for (int ci = 0; ci < ref.n_components(); ++ci)
    for (long pt = 0; pt < ch.total(); ++pt)
      ref.at(ci, pt) = V(ref.at(ci, pt) * std::pow(f[pt], n - 2 * p));
  star_t -= ref;
  return star_t.sup_norm();
}

}  // namespace gauge
