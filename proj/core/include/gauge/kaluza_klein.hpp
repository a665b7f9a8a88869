#pragma once

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "gauge/lie_value.hpp"
#include "gauge/multi_index.hpp"

namespace gauge {

// Trivialized bundle P = M x G over a flat Euclidean window, orthonormal
// global frame {e_A}: horizontal lifts e_i (A = 0..m-1) and orbit fields
// e_sigma of an orthonormal algebra basis (A = m..m+k-1). The geometry is
// specified by the field-strength table F^sigma_ij on the base and the
// structure constants C^gamma_{sigma beta} of the orthonormal (-tr) basis.
struct BundleSpec {
  int base_dim = 0;
  int fiber_dim = 0;
  std::vector<double> C;  // [gamma][sigma][beta], fiber_dim^3
  std::function<double(const double*, int, int, int)> F;    // (x, sigma, i, j)
  std::function<double(const double*, int, int, int, int)> dF;  // (x, axis, ...)
  std::vector<double> lo, hi;  // base window for trajectories
  Algebra group_tag = Algebra::u1;
  std::vector<Eigen::Matrix2cd> basis2;  // matrix rep of e_sigma (su(2))

  int total_dim() const { return base_dim + fiber_dim; }

  double structure(int gamma, int sigma, int beta) const {
    return C[(gamma * fiber_dim + sigma) * fiber_dim + beta];
  }

  static BundleSpec constant_field(int m, int k, std::vector<double> C,
                                   std::vector<double> Ftab,
                                   std::vector<double> lo,
                                   std::vector<double> hi) {
    BundleSpec b;
    b.base_dim = m;
    b.fiber_dim = k;
    b.C = std::move(C);
    auto tab = std::make_shared<std::vector<double>>(std::move(Ftab));
    b.F = [tab, m](const double*, int s, int i, int j) {
      return (*tab)[(s * m + i) * m + j];
    };
    b.dF = [](const double*, int, int, int, int) { return 0.0; };
    b.lo = std::move(lo);
    b.hi = std::move(hi);
    b.validate();
    return b;
  }

  void validate() const {
    if (static_cast<int>(C.size()) != fiber_dim * fiber_dim * fiber_dim)
      throw ShapeError("structure constant table size mismatch");
    for (int g = 0; g < fiber_dim; ++g)
      for (int s = 0; s < fiber_dim; ++s)
        for (int be = 0; be < fiber_dim; ++be) {
          if (structure(g, s, be) != -structure(g, be, s))
            throw ShapeError("C must be antisymmetric in the lower pair");
          if (structure(g, s, be) != -structure(be, s, g))
            throw ShapeError("C must be ad-antisymmetric (orthonormal basis)");
        }
  }
};

// Velocity in the orthonormal frame: u over the base legs, q (the specific
// charge) over the fiber legs.
struct BundleState {
  std::vector<double> base;  // m coordinates
  std::vector<double> u;     // m horizontal components
  std::vector<double> q;     // k vertical components
  Eigen::Matrix2cd g2 = Eigen::Matrix2cd::Identity();  // fiber position, su(2)
  std::complex<double> g1{1.0, 0.0};                   // fiber position, u(1)
};

// Levi-Civita coefficients w^A_B(e_C) of the bundle metric at a base point,
// flat base (Gamma-bar = 0):
//   w^i_j   = -1/2 F^s_ij e^s
//   w^s_i   = +1/2 F^s_ij e^j
//   w^s_b   = -1/2 C^s_{nu b} e^nu
// stored as w[A][B][C], antisymmetric in (A, B).
struct KKCoeffs {
  int n = 0;
  std::vector<double> w;
  double& at(int A, int B, int C) { return w[(A * n + B) * n + C]; }
  double at(int A, int B, int C) const { return w[(A * n + B) * n + C]; }
};

inline KKCoeffs kk_coeffs(const BundleSpec& b, const double* x) {
  int m = b.base_dim, k = b.fiber_dim, n = m + k;
  KKCoeffs w;
  w.n = n;
  w.w.assign(static_cast<size_t>(n) * n * n, 0.0);
  // Antisymmetry in the upper pair follows from the antisymmetries of F and
  // C as the ordered loops fill both partners.
  for (int s = 0; s < k; ++s)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double f = 0.5 * b.F(x, s, i, j);
        w.at(i, j, m + s) = -f;  // w^i_j(e_s)
        w.at(m + s, i, j) = f;   // w^s_i(e_j)
        w.at(i, m + s, j) = -f;  // w^i_s(e_j)
      }
  for (int s = 0; s < k; ++s)
    for (int be = 0; be < k; ++be)
      for (int nu = 0; nu < k; ++nu)
        w.at(m + s, m + be, m + nu) = -0.5 * b.structure(s, nu, be);
  return w;
}

// Frame structure coefficients [e_A, e_B] = c^C_{AB} e_C on the flat-base
// trivial bundle with the left group action:
//   [e_i, e_j] = -F^s_ij e_s ,  [e_s, e_b] = -C^g_{s b} e_g ,  [e_i, e_s] = 0.
inline double kk_frame_bracket(const BundleSpec& b, const double* x, int Cc,
                               int A, int B) {
  int m = b.base_dim;
  if (A < m && B < m && Cc >= m) return -b.F(x, Cc - m, A, B);
  if (A >= m && B >= m && Cc >= m)
    return -b.structure(Cc - m, A - m, B - m);
  return 0.0;
}

struct ScalarCurvatureParts {
  double PR = 0;      // total-space scalar curvature from the frame sums
  double MR = 0;      // base contribution (zero for the flat base)
  double Fterm = 0;   // 1/2 sum_{s, i<j} F^2
  double GR = 0;      // 1/4 sum C^2
  double residual = 0;
};

// PR assembled from the Levi-Civita frame coefficients:
// R^A_{B,CD} = e_C[w^A_B(e_D)] - e_D[w^A_B(e_C)]
//            + w^A_E(e_C) w^E_B(e_D) - w^A_E(e_D) w^E_B(e_C)
//            - c^E_{CD} w^A_B(e_E),    PR = sum_{A,B} R^A_{B,AB}.
inline ScalarCurvatureParts scalar_curvature_decomposition(const BundleSpec& b,
                                                           const double* x) {
  int m = b.base_dim, k = b.fiber_dim, n = m + k;
  KKCoeffs w = kk_coeffs(b, x);

  // e_C[w^A_B(e_D)]: only horizontal directions differentiate, and only the
  // F-carrying entries depend on the base point.
  auto dw = [&](int C, int A, int B, int D) -> double {
    if (C >= m) return 0.0;
    if (A < m && B < m && D >= m) return -0.5 * b.dF(x, C, D - m, A, B);
    if (A >= m && B < m && D < m) return 0.5 * b.dF(x, C, A - m, B, D);
    if (A < m && B >= m && D < m) return -0.5 * b.dF(x, C, B - m, A, D);
    return 0.0;
  };

  ScalarCurvatureParts out;
  double pr = 0;
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B) {
      double r = dw(A, A, B, B) - dw(B, A, B, A);
      for (int E = 0; E < n; ++E) {
        r += w.at(A, E, A) * w.at(E, B, B) - w.at(A, E, B) * w.at(E, B, A);
        r -= kk_frame_bracket(b, x, E, A, B) * w.at(A, B, E);
      }
      pr += r;
    }
  out.PR = pr;
  out.MR = 0.0;
  double f2 = 0;
  for (int s = 0; s < k; ++s)
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        double f = b.F(x, s, i, j);
        f2 += f * f;
      }
  out.Fterm = 0.5 * f2;
  double c2 = 0;
  for (int g = 0; g < k; ++g)
    for (int s = 0; s < k; ++s)
      for (int be = 0; be < k; ++be) {
        double c = b.structure(g, s, be);
        c2 += c * c;
      }
  out.GR = 0.25 * c2;
  out.residual = std::abs(out.PR - (out.MR - out.Fterm + out.GR));
  return out;
}

struct KKTrajectory {
  std::vector<double> t;
  std::vector<std::vector<double>> base;  // m per sample
  std::vector<std::vector<double>> u;
  std::vector<std::vector<double>> q;
  double charge_drift = 0;  // max per-component |q(t) - q(0)|
  double energy_drift = 0;  // max |sum u^2 + q^2 - initial|
  std::complex<double> fiber1{1.0, 0.0};     // final fiber element, u(1)
  Eigen::Matrix2cd fiber2 = Eigen::Matrix2cd::Identity();  // su(2)
  double fiber_group_residual = 0;
};

// Frame geodesic du^A/dt = -w^A_{BC} u^B u^C integrated with the classical
// fourth-order scheme; base position advances as dx = u dt, the fiber
// element by dg/dt = Q g with Q = q^s E_s (reported only, re-projected).
inline KKTrajectory kk_geodesic(const BundleSpec& b, const BundleState& s0,
                                double T, double step, int record_every = 10) {
  int m = b.base_dim, k = b.fiber_dim, n = m + k;
  if (T <= 0 || step <= 0) throw ConfigError("need positive horizon and step");
  std::vector<double> y(m + n);  // x (m) then u^A (n)
  for (int i = 0; i < m; ++i) y[i] = s0.base[i];
  for (int i = 0; i < m; ++i) y[m + i] = s0.u[i];
  for (int s = 0; s < k; ++s) y[m + m + s] = s0.q[s];

  auto deriv = [&](const std::vector<double>& st, std::vector<double>& d) {
    const double* x = st.data();
    const double* u = st.data() + m;
    for (int i = 0; i < m; ++i) {
      if (x[i] < b.lo[i] || x[i] > b.hi[i])
        throw DomainError("trajectory left the base window");
      d[i] = u[i];
    }
    KKCoeffs w = kk_coeffs(b, x);
    for (int A = 0; A < n; ++A) {
      double acc = 0;
      for (int B = 0; B < n; ++B)
        for (int Cc = 0; Cc < n; ++Cc) acc += w.at(A, B, Cc) * u[B] * u[Cc];
      d[m + A] = -acc;
    }
  };

  long nsteps = std::lround(T / step);
  KKTrajectory out;
  double e0 = 0;
  for (int A = 0; A < n; ++A) e0 += y[m + A] * y[m + A];
  std::vector<double> k1(m + n), k2(m + n), k3(m + n), k4(m + n), tmp(m + n);
  auto record = [&](double t) {
    out.t.push_back(t);
    out.base.emplace_back(y.begin(), y.begin() + m);
    out.u.emplace_back(y.begin() + m, y.begin() + m + m);
    out.q.emplace_back(y.begin() + m + m, y.end());
    double e = 0;
    for (int A = 0; A < n; ++A) e += y[m + A] * y[m + A];
    out.energy_drift = std::max(out.energy_drift, std::abs(e - e0));
    for (int s = 0; s < k; ++s)
      out.charge_drift =
          std::max(out.charge_drift, std::abs(y[m + m + s] - s0.q[s]));
  };
  record(0.0);
  std::complex<double> g1 = s0.g1;
  Eigen::Matrix2cd g2 = s0.g2;
  const bool track_su2 =
      b.group_tag == Algebra::su2 && static_cast<int>(b.basis2.size()) == k;
  for (long kk = 0; kk < nsteps; ++kk) {
    deriv(y, k1);
    for (size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * step * k1[i];
    deriv(tmp, k2);
    for (size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * step * k2[i];
    deriv(tmp, k3);
    for (size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + step * k3[i];
    deriv(tmp, k4);
    for (size_t i = 0; i < y.size(); ++i)
      y[i] += step / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    // Fiber position relative to the flat reference trivialization:
    // dg/dt = Q g with Q = q^s E_s, stepped by the exponential.
    if (b.group_tag == Algebra::u1 && k == 1) {
      g1 *= std::exp(std::complex<double>(0.0, step * y[m + m]));
    } else if (track_su2) {
      Eigen::Matrix2cd Q = Eigen::Matrix2cd::Zero();
      for (int s = 0; s < k; ++s) Q += y[m + m + s] * b.basis2[s];
      // exp(t Q) = cos(t th) Id + sin(t th)/th Q for Q^2 = -th^2 Id.
      double th = std::sqrt(std::abs((Q * Q).trace().real() / 2.0));
      Eigen::Matrix2cd e = std::cos(step * th) * Eigen::Matrix2cd::Identity();
      e += (th > 1e-12 ? std::sin(step * th) / th : step) * Q;
      g2 = e * g2;
    }
    if ((kk + 1) % record_every == 0 || kk + 1 == nsteps)
      record((kk + 1) * step);
  }
  out.fiber1 = g1 / std::abs(g1);
  out.fiber_group_residual = std::abs(std::abs(g1) - 1.0);
  if (track_su2) {
    Eigen::Matrix2cd proj = value_ops<Eigen::Matrix2cd>::group_project(g2);
    out.fiber_group_residual = std::max(
        out.fiber_group_residual, (g2 - proj).cwiseAbs().maxCoeff());
    out.fiber2 = proj;
  }
  return out;
}

// Independent oracle: the base trajectory under the explicit force
// du^i/dt = sum_{s,j} F^s_ij u^j q^s with the charge frozen at q(0).
// (The co-force table enters with coefficient one: both slots of the
// Levi-Civita table feed the horizontal equation, doubling the 1/2.)
inline std::vector<std::vector<double>> lorentz_base_trajectory(
    const BundleSpec& b, const BundleState& s0, double T, double step,
    int record_every = 10) {
  int m = b.base_dim, k = b.fiber_dim;
  std::vector<double> y(2 * m);
  for (int i = 0; i < m; ++i) {
    y[i] = s0.base[i];
    y[m + i] = s0.u[i];
  }
  auto deriv = [&](const std::vector<double>& st, std::vector<double>& d) {
    const double* x = st.data();
    const double* u = st.data() + m;
    for (int i = 0; i < m; ++i) {
      d[i] = u[i];
      double f = 0;
      for (int s = 0; s < k; ++s)
        for (int j = 0; j < m; ++j) f += b.F(x, s, i, j) * u[j] * s0.q[s];
      d[m + i] = f;
    }
  };
  long nsteps = std::lround(T / step);
  std::vector<std::vector<double>> out;
  out.emplace_back(y.begin(), y.begin() + m);
  std::vector<double> k1(2 * m), k2(2 * m), k3(2 * m), k4(2 * m), tmp(2 * m);
  for (long kk = 0; kk < nsteps; ++kk) {
    deriv(y, k1);
    for (size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * step * k1[i];
    deriv(tmp, k2);
    for (size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * step * k2[i];
    deriv(tmp, k3);
    for (size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + step * k3[i];
    deriv(tmp, k4);
    for (size_t i = 0; i < y.size(); ++i)
      y[i] += step / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    if ((kk + 1) % record_every == 0 || kk + 1 == nsteps)
      out.emplace_back(y.begin(), y.begin() + m);
  }
  return out;
}

// Sup distance between the projected bundle geodesic and the independent
// Lorentz integration at the shared sample times.
inline double lorentz_compare(const BundleSpec& b, const BundleState& s0,
                              double T, double step, int record_every = 10) {
  auto traj = kk_geodesic(b, s0, T, step, record_every);
  auto base = lorentz_base_trajectory(b, s0, T, step, record_every);
  size_t nn = std::min(traj.base.size(), base.size());
  double d = 0;
  for (size_t t = 0; t < nn; ++t)
    for (int i = 0; i < b.base_dim; ++i)
      d = std::max(d, std::abs(traj.base[t][i] - base[t][i]));
  return d;
}

}  // namespace gauge
