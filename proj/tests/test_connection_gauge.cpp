#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "gauge/connection.hpp"
#include "gauge/random_fields.hpp"
#include "gauge/transport.hpp"

using namespace gauge;
using C = std::complex<double>;
using M2 = Eigen::Matrix2cd;

namespace {
constexpr double kTau = 6.283185307179586476925287;

std::shared_ptr<Chart> t2(int n) {
  return Chart::torus("t2", {n, n}, {kTau, kTau}, FrameMetric::euclidean(2));
}

// Seeded smooth SU(2) gauge map g = exp(sum_k f_k(x) s_k).
GaugeMap<M2> random_su2_gauge(std::shared_ptr<const Chart> ch,
                              std::uint64_t seed, double amp = 0.7) {
  std::vector<double> lengths(ch->dim());
  for (int a = 0; a < ch->dim(); ++a)
    lengths[a] = ch->window_hi(a) - ch->window_lo(a);
  std::array<TrigPoly, 3> f;
  for (int k = 0; k < 3; ++k)
    f[k] = TrigPoly::make(seed + k, ch->dim(), lengths, 4, 1, amp);
  GaugeMap<M2> gm{Algebra::su2, ch, {}, {}};
  gm.g.resize(ch->total());
  double x[kMaxDim];
  for (long p = 0; p < ch->total(); ++p) {
    ch->point(p, x);
    M2 a = f[0](x) * su2_basis(0) + f[1](x) * su2_basis(1) +
           f[2](x) * su2_basis(2);
    gm.g[p] = a.exp();
  }
  return gm;
}

ConnectionState<M2> random_su2_connection(std::shared_ptr<const Chart> ch,
                                          std::uint64_t seed,
                                          double amp = 0.5) {
  ConnectionState<M2> c;
  c.group = Algebra::su2;
  c.omega = random_form_field<M2>(
      ch, 1, seed, {su2_basis(0), su2_basis(1), su2_basis(2)}, amp);
  return c;
}

double sup_diff(const FormField<M2>& a, const FormField<M2>& b) {
  FormField<M2> d = a;
  d -= b;
  return d.sup_norm();
}
}  // namespace

TEST_CASE("curvature: zero, abelian analytic, pure gauge") {
  auto ch = t2(32);
  auto z = ConnectionState<C>::zero(ch, Algebra::u1);
  CHECK(curvature(z).sup_norm() == 0.0);

  // omega = i sin(x) dy: Omega = i cos(x) dx^dy, smooth and periodic.
  auto err_at = [](int n) {
    auto ch = t2(n);
    ConnectionState<C> c;
    c.group = Algebra::u1;
    c.omega = FormField<C>::sample(ch, 1, [](const double* x, const MultiIndex& I) {
      return I[0] == 2 ? C(0, std::sin(x[0])) : C(0, 0);
    });
    auto F = curvature(c);
    double e = 0;
    double x[kMaxDim];
    for (long p = 0; p < ch->total(); ++p) {
      ch->point(p, x);
      e = std::max(e, std::abs(F.at(0, p) - C(0, std::cos(x[0]))));
    }
    return e;
  };
  double e16 = err_at(16), e32 = err_at(32);
  CHECK(std::log2(e16 / e32) > 1.9);

  // Pure gauge: continuum curvature vanishes, discrete is O(h^2).
  auto score_at = [](int n) {
    auto ch = t2(n);
    auto gm = random_su2_gauge(ch, 33);
    auto c = gauge_transform(ConnectionState<M2>::zero(ch, Algebra::su2), gm);
    return curvature(c).sup_norm();
  };
  double s32 = score_at(32), s64 = score_at(64);
  CHECK(std::log2(s32 / s64) > 1.8);
}

TEST_CASE("sawtooth-periodic uniform field is clean away from the seam") {
  // B quantized to the torus: the potential jump at the wrap is a gauge
  // jump, so the curvature is uniform except on the two seam columns.
  auto ch = t2(32);
  double B = 2.0 * kTau / (kTau * kTau);  // two flux quanta
  ConnectionState<C> c;
  c.group = Algebra::u1;
  c.omega = FormField<C>::sample(ch, 1, [&](const double* x, const MultiIndex& I) {
    return I[0] == 2 ? C(0, B * x[0]) : C(0, 0);
  });
  auto F = curvature(c);
  double x[kMaxDim];
  double h = ch->spacing(0);
  double emax = 0;
  for (long p = 0; p < ch->total(); ++p) {
    ch->point(p, x);
    if (x[0] < 2 * h || x[0] > kTau - 2 * h) continue;
    emax = std::max(emax, std::abs(F.at(0, p) - C(0, B)));
  }
  CHECK(emax < 1e-12);
}

TEST_CASE("gauge transform: identity, zero connection, covariance order") {
  auto ch = t2(16);
  auto c = random_su2_connection(ch, 41);
  auto id = GaugeMap<M2>::identity(ch, Algebra::su2);
  CHECK(sup_diff(gauge_transform(c, id).omega, c.omega) == 0.0);

  auto gm = random_su2_gauge(ch, 42);
  auto z = ConnectionState<M2>::zero(ch, Algebra::su2);
  CHECK(sup_diff(gauge_transform(z, gm).omega, pure_gauge_form(gm)) == 0.0);

  CHECK(gauge_transform(c, gm).algebra_residual() < 1e-12);

  GaugeMap<M2> wrong = gm;
  wrong.group = Algebra::so3;
  CHECK_THROWS_AS(gauge_transform(c, wrong), GroupError);

  // |Omega~ - g Omega g^{-1}| converges at order >= 1.8.
  auto cov_err = [](int n) {
    auto ch = t2(n);
    auto c = random_su2_connection(ch, 43);
    auto gm = random_su2_gauge(ch, 44);
    auto lhs = curvature(gauge_transform(c, gm));
    auto rhs = gauge_conjugate(curvature(c), gm);
    lhs -= rhs;
    return lhs.sup_norm();
  };
  double e32 = cov_err(32), e64 = cov_err(64);
  CHECK(std::log2(e32 / e64) > 1.8);
}

TEST_CASE("trace of curvature is pointwise gauge invariant") {
  auto ch = t2(24);
  auto c = random_su2_connection(ch, 45);
  auto gm = random_su2_gauge(ch, 46);
  auto t0 = trace_field(curvature(c));
  auto t1 = trace_field(gauge_conjugate(curvature(c), gm));
  t1 -= t0;
  CHECK(t1.sup_norm() < 1e-12);
}

TEST_CASE("covariant exterior derivative") {
  auto ch = t2(16);
  auto z = ConnectionState<M2>::zero(ch, Algebra::su2);
  auto a = random_form_field<M2>(ch, 1, 51,
                                 {su2_basis(0), su2_basis(1), su2_basis(2)});
  CHECK(sup_diff(cov_ext_derivative(z, a, true), ext_d(a)) == 0.0);

  // D omega in the fundamental formula recovers the curvature exactly.
  auto c = random_su2_connection(ch, 52);
  CHECK(sup_diff(cov_ext_derivative(c, c.omega, false), curvature(c)) < 1e-14);

  // D(D(s)) = Omega ^ s for a 0-form section (fundamental rep).
  auto s = random_form_field<M2>(ch, 0, 53,
                                 {su2_basis(0), su2_basis(1), su2_basis(2)});
  auto dds = cov_ext_derivative(c, cov_ext_derivative(c, s, false), false);
  auto rhs = wedge(curvature(c), s, WedgeMode::matrix_contract);
  // d_h obeys no exact Leibniz rule, so this identity carries an O(h^2)
  // truncation term; verify the convergence order instead of a fixed bound.
  auto dd_err = [](int n) {
    auto ch = t2(n);
    auto c = random_su2_connection(ch, 52);
    auto s = random_form_field<M2>(ch, 0, 53,
                                   {su2_basis(0), su2_basis(1), su2_basis(2)});
    auto dds = cov_ext_derivative(c, cov_ext_derivative(c, s, false), false);
    auto rhs = wedge(curvature(c), s, WedgeMode::matrix_contract);
    return sup_diff(dds, rhs);
  };
  CHECK(std::log2(dd_err(32) / dd_err(64)) > 1.8);
  (void)dds;
  (void)rhs;

  // Adjoint-rep version: D(D(a)) = Omega ^ a - (-1)^p a ^ Omega.
  auto dd_adj_err = [](int n) {
    auto ch = t2(n);
    auto c = random_su2_connection(ch, 54);
    auto a = random_form_field<M2>(ch, 0, 55,
                                   {su2_basis(0), su2_basis(1), su2_basis(2)});
    auto dd = cov_ext_derivative(c, cov_ext_derivative(c, a, true), true);
    auto F = curvature(c);
    auto rhs = wedge(F, a, WedgeMode::matrix_contract);
    auto tail = wedge(a, F, WedgeMode::matrix_contract);
    tail *= -1.0;  // -(-1)^0
    rhs += tail;
    return sup_diff(dd, rhs);
  };
  CHECK(std::log2(dd_adj_err(32) / dd_adj_err(64)) > 1.8);
}

TEST_CASE("bianchi residual") {
  auto t3 = [](int n) {
    return Chart::torus("t3", {n, n, n}, {kTau, kTau, kTau},
                        FrameMetric::euclidean(3));
  };
  auto z = ConnectionState<M2>::zero(t3(8), Algebra::su2);
  CHECK(bianchi_residual(z) == 0.0);

  // Uniform abelian field on a window chart: constant curvature
  // differentiates to zero even with one-sided stencils.
  auto win = Chart::window("w3", {8, 8, 8}, {-1, -1, -1}, {1, 1, 1},
                           FrameMetric::euclidean(3));
  ConnectionState<C> u;
  u.group = Algebra::u1;
  u.omega = FormField<C>::sample(win, 1, [](const double* x, const MultiIndex& I) {
    return I[0] == 2 ? C(0, 0.7 * x[0]) : C(0, 0);
  });
  CHECK(bianchi_residual(u) < 1e-13);

  // Random smooth SU(2): the residual order in h is the oracle.
  auto res_at = [&](int n) {
    ConnectionState<M2> c;
    c.group = Algebra::su2;
    c.omega = random_form_field<M2>(
        t3(n), 1, 61, {su2_basis(0), su2_basis(1), su2_basis(2)}, 0.5, 1);
    return bianchi_residual(c);
  };
  CHECK(std::log2(res_at(16) / res_at(32)) > 1.8);
}

TEST_CASE("curvature shift identity is exact in the discrete algebra") {
  auto ch = t2(16);
  auto c = random_su2_connection(ch, 71);
  FormField<M2> zero_kappa(ch, 1);
  CHECK(sup_diff(curvature_shift(c, zero_kappa), curvature(c)) == 0.0);

  auto kappa = random_form_field<M2>(ch, 1, 72,
                                     {su2_basis(0), su2_basis(1), su2_basis(2)});
  auto lhs = curvature_shift(c, kappa);
  auto rhs = curvature(c);
  rhs += cov_ext_derivative(c, kappa, true);
  rhs += wedge(kappa, kappa, WedgeMode::matrix_contract);
  CHECK(sup_diff(lhs, rhs) < 1e-13);

  // Abelian case: Omega^kappa = Omega + d kappa, the contraction self-wedge
  // of a 1-form vanishing only for commuting values.
  ConnectionState<C> cu;
  cu.group = Algebra::u1;
  cu.omega = random_form_field<C>(ch, 1, 73, {C(0, 1)});
  auto ku = random_form_field<C>(ch, 1, 74, {C(0, 1)});
  auto lhs_u = curvature_shift(cu, ku);
  auto rhs_u = curvature(cu);
  rhs_u += ext_d(ku);
  FormField<C> du = lhs_u;
  du -= rhs_u;
  CHECK(du.sup_norm() < 1e-13);
}

TEST_CASE("plaquette estimator cross-checks the curvature formula") {
  // Abelian uniform field.
  auto win = Chart::window("w", {16, 16}, {-1, -1}, {1, 1},
                           FrameMetric::euclidean(2));
  double F0 = 0.7;
  ConnectionState<C> cu;
  cu.group = Algebra::u1;
  cu.omega = FormField<C>(win, 1);
  cu.omega_fn = [F0](const double* x, int axis) {
    return axis == 0 ? C(0, -0.5 * F0 * x[1]) : C(0, 0.5 * F0 * x[0]);
  };
  double x0[2] = {-0.2, 0.1};
  C est = plaquette_curvature(cu, x0, 0, 1, 0.05);
  CHECK(std::abs(est - C(0, F0)) < 5e-3);

  // Smooth SU(2) connection vs the pointwise formula, interior point.
  auto ch = t2(48);
  auto cs = random_su2_connection(ch, 91, 0.3);
  auto F = curvature(cs);
  double xs[2] = {2.8, 3.9};
  M2 est2 = plaquette_curvature(cs, xs, 0, 1, 0.04, 1e-3);
  M2 ref = M2::Zero();
  // Interpolate the computed curvature at the plaquette corner.
  ref = interpolate(F, 0, xs);
  CHECK((est2 - ref).cwiseAbs().maxCoeff() < 0.05);
}

TEST_CASE("cocycle check") {
  using TS = TransitionSet<C>;
  TS ts;
  int npts = 8;
  std::vector<C> ones(npts, C(1, 0));
  ts.pairs[{"a", "b"}] = {ones};
  ts.pairs[{"b", "a"}] = {ones};
  ts.pairs[{"b", "c"}] = {ones};
  ts.pairs[{"c", "b"}] = {ones};
  ts.pairs[{"c", "a"}] = {ones};
  ts.pairs[{"a", "c"}] = {ones};
  auto rep = cocycle_check(ts);
  CHECK(rep.pair_residual == 0.0);
  CHECK(rep.triple_residual == 0.0);
  CHECK(rep.triples_checked > 0);

  // Corrupt one transition: the triple defect is flagged.
  TS bad = ts;
  std::vector<C> off(npts, std::exp(C(0, 0.5)));
  bad.pairs[{"b", "c"}] = {off};
  bad.pairs[{"c", "b"}] = {std::vector<C>(npts, std::exp(C(0, -0.5)))};
  auto rep2 = cocycle_check(bad);
  CHECK(rep2.pair_residual < 1e-15);
  CHECK(rep2.triple_residual > 0.1);

  // Three charts without complete triple data.
  TS missing;
  missing.pairs[{"a", "b"}] = {ones};
  missing.pairs[{"b", "c"}] = {ones};
  CHECK_THROWS_AS(cocycle_check(missing), TopologyError);
}
