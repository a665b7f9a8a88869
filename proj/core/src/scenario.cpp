#include "gauge/scenario.hpp"

#include <Eigen/Eigenvalues>
#include <chrono>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "gauge/chern.hpp"
#include "gauge/hodge.hpp"
#include "gauge/kaluza_klein.hpp"
#include "gauge/maxwell.hpp"
#include "gauge/random_fields.hpp"
#include "gauge/transport.hpp"
#include "gauge/yang_mills.hpp"

namespace gauge {

namespace {

using C = std::complex<double>;
using M2 = Eigen::Matrix2cd;

constexpr double kPi = 3.14159265358979323846;
const double kTau = 2.0 * kPi;

std::vector<M2> su2_dirs() {
  return {su2_basis(0), su2_basis(1), su2_basis(2)};
}

std::shared_ptr<Chart> torus(int dim, int n, FrameMetric m) {
  return Chart::torus("t" + std::to_string(dim),
                      std::vector<int>(dim, n),
                      std::vector<double>(dim, kTau), m);
}

GaugeMap<M2> seeded_su2_gauge(std::shared_ptr<const Chart> ch,
                              std::uint64_t seed, double amp) {
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

ConnectionState<M2> seeded_su2_connection(std::shared_ptr<const Chart> ch,
                                          std::uint64_t seed, double amp) {
  ConnectionState<M2> c;
  c.group = Algebra::su2;
  c.omega = random_form_field<M2>(ch, 1, seed, su2_dirs(), amp, 1);
  return c;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

// ---------------------------------------------------------------- hodge --

Report scenario_hodge(const ScenarioParams& p) {
  Timer timer;
  Report rep;
  rep.scenario = "hodge";
  long res = p.resolution > 0 ? p.resolution : 64;
  rep.parameters = {{"resolution", std::to_string(res)},
                    {"seed", std::to_string(p.seed)}};

  // Star kernel: ** sign law over every basis form, n <= 6, s in {0, 1}.
  int sign_misses = 0;
  for (int n = 1; n <= 6; ++n)
    for (int s = 0; s <= std::min(1, n); ++s) {
      FrameMetric m(n, s);
      for (int deg = 0; deg <= n; ++deg)
        for (const auto& I : components(n, deg)) {
          PointFormT<double> f(deg, m);
          f.set(I, 1.0);
          auto ss = hodge_star(hodge_star(f));
          if (std::abs(ss.coeff(I) - double_star_sign(deg, n, s)) != 0.0)
            ++sign_misses;
        }
    }
  rep.add("double-star-signs", "**e_I = (-1)^{p(n-p)+s} e_I, exact",
          sign_misses, 0, 0);

  // Defining identity on random pairs, both signatures.
  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> u(-1, 1);
  double worst = 0;
  for (int rep_k = 0; rep_k < 10000; ++rep_k) {
    int n = 1 + int(rng() % 6);
    int s = int(rng() % 2) % (n + 1);
    int deg = int(rng() % (n + 1));
    FrameMetric m(n, s);
    PointFormT<double> a(deg, m), b(deg, m);
    for (const auto& I : components(n, deg)) {
      a.set(I, u(rng));
      b.set(I, u(rng));
    }
    MultiIndex top;
    {
      int idx[kMaxDim];
      for (int k = 0; k < n; ++k) idx[k] = k + 1;
      top = MultiIndex::from_sorted(idx, n);
    }
    double lhs = wedge(a, hodge_star(b)).coeff(top);
    worst = std::max(worst, std::abs(lhs - form_inner(a, b)));
  }
  rep.add_bound("star-defining-identity",
                "a ^ *b = <a,b> mu on 10^4 random pairs", worst, 1e-12);
  rep.add_timing("star-runtime", "pointwise kernel checks below 5 s",
                 timer.seconds(), 5.0);

  // Decomposition on the flat torus.
  auto ch = Chart::torus("t2", {int(res), int(res)}, {kTau, kTau},
                         FrameMetric::euclidean(2));
  auto a = random_form_field<double>(ch, 1, p.seed + 1, {1.0});
  auto dec = hodge_decompose(a, 1e-11);
  rep.add_bound("orthogonality-h-exact", "<<h, d nu>> = 0",
                std::abs(l2_inner(dec.harmonic, dec.exact)), 1e-9);
  rep.add_bound("orthogonality-h-coexact", "<<h, delta eta>> = 0",
                std::abs(l2_inner(dec.harmonic, dec.coexact)), 1e-9);
  rep.add_bound("orthogonality-exact-coexact", "<<d nu, delta eta>> = 0",
                std::abs(l2_inner(dec.exact, dec.coexact)), 1e-9);
  rep.add_bound("reconstruction", "a = d nu + delta eta + h", dec.residual_norm,
                1e-9);
  rep.add("harmonic-dimension", "dim ker Delta (resolvable) = b_1(T^2)",
          dec.harmonic_dimension, 2, 0);

  // Independent oracle: assemble the 1-form Laplacian on a coarser torus,
  // eigen-decompose, and count near-kernel directions that are not Nyquist
  // aliases of the even grid.
  {
    int on = 32;
    auto och = Chart::torus("t2o", {on, on}, {kTau, kTau},
                            FrameMetric::euclidean(2));
    long N = och->total() * 2;
    Eigen::MatrixXd A(N, N);
    for (long col = 0; col < N; ++col) {
      FormField<double> e(och, 1);
      e.at(int(col / och->total()), col % och->total()) = 1.0;
      auto le = laplacian(e);
      for (int ci = 0; ci < 2; ++ci)
        for (long q = 0; q < och->total(); ++q)
          A(ci * och->total() + q, col) = le.at(ci, q);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
        0.5 * (A + A.transpose()));
    double lmax = eig.eigenvalues().maxCoeff();
    std::vector<long> zid;
    for (long k = 0; k < N; ++k)
      if (eig.eigenvalues()(k) < 1e-10 * lmax) zid.push_back(k);
    auto aliases = detail::torus_kernel_modes<double>(och, 1, true);
    Eigen::MatrixXd Z(N, zid.size());
    for (size_t j = 0; j < zid.size(); ++j)
      Z.col(j) = eig.eigenvectors().col(zid[j]);
    for (const auto& al : aliases) {
      Eigen::VectorXd v(N);
      for (int ci = 0; ci < 2; ++ci)
        for (long q = 0; q < och->total(); ++q)
          v(ci * och->total() + q) = al.at(ci, q);
      v.normalize();
      Z -= v * (v.transpose() * Z);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Z);
    int rank = 0;
    for (int k = 0; k < svd.singularValues().size(); ++k)
      if (svd.singularValues()(k) > 0.5) ++rank;
    rep.add("harmonic-dimension-eig-oracle",
            "non-alias near-kernel of the assembled Laplacian", rank, 2, 0);
  }

  rep.runtime_seconds = timer.seconds();
  rep.add_timing("runtime-budget", "wall clock below 60 s",
                 rep.runtime_seconds, 60.0);
  return rep;
}

// ------------------------------------------------------------- holonomy --

Report scenario_holonomy(const ScenarioParams& p) {
  Timer timer;
  Report rep;
  rep.scenario = "holonomy";
  double step = p.step > 0 ? p.step : 1e-4;
  rep.parameters = {{"step", std::to_string(step)},
                    {"seed", std::to_string(p.seed)}};

  // Rotated octant on the round sphere against the Gauss-Bonnet oracle.
  {
    auto ch = Chart::sphere_band(0.35, kPi - 0.35, 128, 256);
    auto lc = sphere_lc_connection(ch);
    Eigen::Vector3d centroid = Eigen::Vector3d(1, 1, 1).normalized();
    Eigen::Quaterniond R = Eigen::Quaterniond::FromTwoVectors(
        centroid, Eigen::Vector3d(-1, 0, 0));
    std::array<Eigen::Vector3d, 3> v = {R * Eigen::Vector3d(1, 0, 0),
                                        R * Eigen::Vector3d(0, 1, 0),
                                        R * Eigen::Vector3d(0, 0, 1)};
    auto slerp = [](const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                    double t) {
      double ang = std::acos(std::min(1.0, std::max(-1.0, a.dot(b))));
      return Eigen::Vector3d(
          (std::sin((1 - t) * ang) * a + std::sin(t * ang) * b) /
          std::sin(ang));
    };
    Curve loop;
    loop.dim = 2;
    loop.closed = true;
    loop.position = [=](double t, double* x) {
      double s3 = 3.0 * t;
      int leg = std::min(2, int(s3));
      Eigen::Vector3d q = slerp(v[leg], v[(leg + 1) % 3], s3 - leg);
      x[0] = std::acos(std::min(1.0, std::max(-1.0, q.z())));
      double phi = std::atan2(q.y(), q.x());
      if (phi < 0) phi += kTau;
      x[1] = phi;
    };
    double omega_solid = 0;
    {
      int N = 60000;
      double a[2], b[2];
      for (int k = 0; k < N; ++k) {
        loop.position(double(k) / N, a);
        loop.position(double(k + 1) / N, b);
        double dphi = b[1] - a[1];
        if (dphi > kPi) dphi -= kTau;
        if (dphi < -kPi) dphi += kTau;
        omega_solid += (1.0 - std::cos(0.5 * (a[0] + b[0]))) * dphi;
      }
    }
    auto hol = holonomy(lc, loop, step);
    double angle = std::atan2(hol.value(1, 0), hol.value(0, 0));
    rep.add("octant-angle", "holonomy angle = pi/2 (octant area)",
            std::abs(angle), 0.5 * kPi, 1e-4);
    rep.add("octant-vs-quadrature", "holonomy angle = enclosed solid angle",
            std::abs(angle), std::abs(omega_solid), 1e-4);
  }

  // Abelian Stokes: uniform F, circular loop.
  {
    auto ch = Chart::window("w", {24, 24}, {-1, -1}, {1, 1},
                            FrameMetric::euclidean(2));
    double F0 = 0.9, r = 0.55;
    ConnectionState<C> cu;
    cu.group = Algebra::u1;
    cu.omega = FormField<C>(ch, 1);
    cu.omega_fn = [F0](const double* x, int axis) {
      return axis == 0 ? C(0, -0.5 * F0 * x[1]) : C(0, 0.5 * F0 * x[0]);
    };
    Curve loop;
    loop.dim = 2;
    loop.closed = true;
    loop.position = [r](double t, double* x) {
      x[0] = 0.1 + r * std::cos(kTau * t);
      x[1] = -0.05 + r * std::sin(kTau * t);
    };
    double area = 0;
    {
      int N = 20000;
      double a[2], b[2];
      for (int k = 0; k < N; ++k) {
        loop.position(double(k) / N, a);
        loop.position(double(k + 1) / N, b);
        area += 0.5 * (a[0] * b[1] - b[0] * a[1]);
      }
    }
    auto hol = holonomy(cu, loop, step);
    rep.add_bound("abelian-stokes", "loop phase = exp(-i F A), A by shoelace",
                  std::abs(hol.value - std::exp(C(0, -F0 * area))), 1e-6);
  }

  // Flatness of a pure gauge: score O(h^2) (order between two grids) and a
  // contractible loop returning to the identity.
  {
    auto score_at = [&](int n) {
      auto ch = Chart::torus("t2", {n, n}, {kTau, kTau},
                             FrameMetric::euclidean(2));
      auto gm = seeded_su2_gauge(ch, p.seed + 11, 0.5);
      auto c = gauge_transform(ConnectionState<M2>::zero(ch, Algebra::su2), gm);
      std::vector<Curve> loops;
      std::vector<double> areas;
      for (double cx : {1.5, 3.5})
        for (double cy : {2.0, 4.5}) {
          double x0[2] = {cx, cy};
          loops.push_back(square_loop(2, x0, 0, 1, 0.4));
          areas.push_back(0.16);
        }
      return flatness_score(c, loops, areas, 1e-3);
    };
    double s32 = score_at(32), s64 = score_at(64);
    rep.add_floor("pure-gauge-flatness-order",
                  "flatness score of g d(g^-1) shrinks at O(h^2)",
                  std::log2(s32 / s64), 1.8);
    rep.add_bound("pure-gauge-flatness-small", "score well below field scale",
                  s64, 0.05);

    // Analytic flat connection: the loop defect is integrator-only.
    ConnectionState<C> flat;
    flat.group = Algebra::u1;
    auto ch = Chart::window("w", {8, 8}, {-1, -1}, {1, 1},
                            FrameMetric::euclidean(2));
    flat.omega = FormField<C>(ch, 1);
    flat.omega_fn = [](const double* x, int axis) {
      double ca = std::cos(x[0]) * std::sin(1.3 * x[1]);
      double cb = 1.3 * std::sin(x[0]) * std::cos(1.3 * x[1]);
      return C(0, axis == 0 ? ca : cb);
    };
    Curve loop;
    loop.dim = 2;
    loop.closed = true;
    loop.position = [](double t, double* x) {
      x[0] = 0.4 * std::cos(kTau * t);
      x[1] = 0.4 * std::sin(kTau * t);
    };
    auto hol = holonomy(flat, loop, 1e-3);
    rep.add_bound("flat-loop-identity", "contractible holonomy returns to Id",
                  std::abs(hol.value - C(1, 0)), 1e-9);
  }

  rep.runtime_seconds = timer.seconds();
  return rep;
}

// -------------------------------------------------------------- ym-flow --

Report scenario_ym_flow(const ScenarioParams& p) {
  Timer timer;
  Report rep;
  rep.scenario = "ym-flow";
  long res = p.resolution > 0 ? p.resolution : 16;
  rep.parameters = {{"resolution", std::to_string(res)},
                    {"seed", std::to_string(p.seed)}};

  // Gauge covariance order on seeded SU(2) data.
  {
    auto cov_err = [&](int n) {
      auto ch = torus(2, n, FrameMetric::euclidean(2));
      auto c = seeded_su2_connection(ch, p.seed + 21, 0.4);
      auto gm = seeded_su2_gauge(ch, p.seed + 22, 0.5);
      auto lhs = curvature(gauge_transform(c, gm));
      auto rhs = gauge_conjugate(curvature(c), gm);
      lhs -= rhs;
      return lhs.sup_norm();
    };
    rep.add_floor("gauge-covariance-order",
                  "|curv(g.w) - g curv(w) g^-1| = O(h^2), 32 vs 64",
                  std::log2(cov_err(32) / cov_err(64)), 1.8);
  }

  // Action invariance along the exact discrete abelian orbit.
  {
    auto ch = torus(4, int(res), FrameMetric::euclidean(4));
    ConnectionState<C> c;
    c.group = Algebra::u1;
    c.omega = random_form_field<C>(ch, 1, p.seed + 23, {C(0, 1)}, 0.3, 1);
    std::vector<double> lengths(4, kTau);
    auto f = TrigPoly::make(p.seed + 24, 4, lengths, 5, 1, 0.8);
    std::vector<double> phase(ch->total());
    double x[kMaxDim];
    for (long q = 0; q < ch->total(); ++q) {
      ch->point(q, x);
      phase[q] = f(x);
    }
    auto gm = GaugeMap<C>::from_phase(ch, phase);
    double S0 = ym_action(c);
    double S1 = ym_action(gauge_transform(c, gm));
    rep.add_bound("action-gauge-invariance",
                  "|S(g.w) - S(w)| <= 1e-8 (1 + S)",
                  std::abs(S1 - S0) / (1.0 + S0), 1e-8);
  }

  // Bianchi and D(D(.)) = curvature action: orders on T^4, 16 vs 32.
  {
    Timer section;
    auto pair_at = [&](int n) {
      auto ch = torus(4, n, FrameMetric::euclidean(4));
      auto c = seeded_su2_connection(ch, p.seed + 25, 0.4);
      double bianchi = bianchi_residual(c);
      auto s = random_form_field<M2>(ch, 0, p.seed + 26, su2_dirs(), 0.5, 1);
      auto dd = cov_ext_derivative(c, cov_ext_derivative(c, s, true), true);
      auto F = curvature(c);
      auto rhs = wedge(F, s, WedgeMode::matrix_contract);
      auto tail = wedge(s, F, WedgeMode::matrix_contract);
      tail *= -1.0;
      rhs += tail;
      dd -= rhs;
      return std::pair(bianchi, dd.sup_norm());
    };
    auto [b16, d16] = pair_at(16);
    auto [b32, d32] = pair_at(32);
    rep.add_floor("bianchi-order", "|D curv| = O(h^2), 16^4 vs 32^4",
                  std::log2(b16 / b32), 1.8);
    rep.add_floor("dd-curvature-order",
                  "D(D(s)) = curv ^ s - s ^ curv + O(h^2), 16^4 vs 32^4",
                  std::log2(d16 / d32), 1.8);
    rep.add_timing("bianchi-runtime", "identity order study below 120 s",
                   section.seconds(), 120.0);
  }

  // Relaxation from a seeded abelian perturbation.
  {
    auto ch = torus(4, int(res), FrameMetric::euclidean(4));
    ConnectionState<C> c;
    c.group = Algebra::u1;
    c.omega = random_form_field<C>(ch, 1, p.seed + 27, {C(0, 1)}, 0.2, 1);
    double r0 = ym_residual(c);
    YMConfig cfg;
    cfg.step_size = 0.04;
    cfg.tol = 1e-8 * r0;
    cfg.max_iter = 500;
    auto [cf, trace] = ym_flow(c, cfg);
    bool monotone = true;
    for (size_t k = 1; k < trace.samples.size(); ++k)
      if (trace.samples[k].action >
          trace.samples[k - 1].action * (1 + 1e-12))
        monotone = false;
    rep.add("flow-monotone", "action never increases on accepted steps",
            monotone ? 1 : 0, 1, 0);
    rep.add_bound("flow-residual-drop",
                  "final residual < 1e-8 initial within 500 iterations",
                  trace.samples.back().residual / r0, 1e-8);
    rep.add_bound("flow-iterations", "iteration budget",
                  double(trace.samples.back().iteration), 500.0);
  }

  rep.runtime_seconds = timer.seconds();
  rep.add_timing("runtime-budget", "wall clock below 120 s",
                 rep.runtime_seconds, 120.0);
  return rep;
}

// ------------------------------------------------------------ instanton --

Report scenario_instanton(const ScenarioParams& p) {
  Timer timer;
  Report rep;
  rep.scenario = "instanton";
  long res = p.resolution > 0 ? p.resolution : 32;
  rep.parameters = {{"resolution", std::to_string(res)}};

  auto window = [&](int n) {
    return Chart::window("b4", {n, n, n, n}, {-2, -2, -2, -2}, {2, 2, 2, 2},
                         FrameMetric::euclidean(4));
  };

  auto probe = bpst_sample(window(4));
  double x0[4] = {0, 0, 0, 0};
  double at0 = 0;
  for (int axis = 0; axis < 4; ++axis)
    at0 = std::max(at0, value_ops<M2>::abs_max(probe.omega_fn(x0, axis)));
  rep.add_bound("origin-value", "potential vanishes at the origin", at0, 1e-14);

  auto sd_pair = [&](int n) {
    auto c = bpst_sample(window(n));
    auto F = curvature(c);
    auto sF = hodge_star(F);
    sF -= F;
    int margin = std::max(2, n / 8);
    double resid = ym_residual(c);
    return std::tuple(sF.sup_norm(margin), F.sup_norm(margin), resid);
  };
  auto [dev16, nrm16, res16] = sd_pair(int(res) / 2);
  auto [dev32, nrm32, res32] = sd_pair(int(res));
  double h32 = 4.0 / res;
  rep.add_bound("self-duality", "|curv - *curv| / |curv| < 10 h^2 (interior)",
                dev32 / nrm32, 10 * h32 * h32);
  rep.add_floor("ym-residual-order", "|D * curv| = O(h^2), 16^4 vs 32^4",
                std::log2(res16 / res32), 1.8);

  // Split the sampled curvature and check the energy decomposition.
  {
    auto c = bpst_sample(window(int(res) / 2));
    auto F = curvature(c);
    auto [plus, minus] = sd_asd_split(F);
    double S = l2_inner(F, F);
    double Sp = l2_inner(plus, plus), Sm = l2_inner(minus, minus);
    rep.add("sd-pythagoras", "S = |F+|^2 + |F-|^2", (Sp + Sm - S) / S, 0,
            1e-10);
    auto [pp, pm] = sd_asd_split(plus);
    pp -= plus;
    rep.add_bound("sd-idempotent", "splitting F+ returns (F+, 0)",
                  pp.sup_norm() + pm.sup_norm(), 1e-12);
  }

  rep.runtime_seconds = timer.seconds();
  return rep;
}

// ---------------------------------------------------------------- chern --

Report scenario_chern(const ScenarioParams& p) {
  Timer timer;
  Report rep;
  rep.scenario = "chern";
  long res = p.resolution > 0 ? p.resolution : 128;
  rep.parameters = {{"resolution", std::to_string(res)},
                    {"seed", std::to_string(p.seed)}};

  // Canonical single-bundle record: charge, computed, nearest integer,
  // deviation (configurable via [chern] charge = N).
  {
    long charge = p.config.get_int("chern", "charge", 1);
    auto b = make_monopole(int(charge), int(res), int(2 * res));
    auto r = chern_number(b);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", r.value);
    rep.parameters.push_back({"charge", std::to_string(charge)});
    rep.parameters.push_back({"computed", buf});
    rep.parameters.push_back({"nearest_integer", std::to_string(r.nearest_integer)});
    std::snprintf(buf, sizeof buf, "%.17g", r.deviation);
    rep.parameters.push_back({"deviation", buf});
  }

  for (int n : {-2, -1, 0, 1, 2}) {
    auto b = make_monopole(n, int(res), int(2 * res));
    auto r = chern_number(b);
    rep.add("charge-" + std::to_string(n),
            "first Chern number = s n, s = -1 frozen by the flux oracle",
            r.value, double(kMonopoleOrientationSign * n), 1e-3);
    if (n == 1)
      rep.add_bound("imaginary-defect", "normalized integral is real",
                    r.imaginary_defect, 1e-10);
  }

  // Invariance under a compactly supported single-patch perturbation.
  {
    auto b = make_monopole(1, int(res), int(2 * res));
    double c0 = chern_number(b).value;
    auto pert = b;
    const Chart& ch = b.north.chart();
    double x[kMaxDim];
    for (long q = 0; q < ch.total(); ++q) {
      ch.point(q, x);
      double s = (x[0] - 0.15) / (0.9 - 0.15);
      double w = (s <= 0 || s >= 1) ? 0.0 : std::sin(kPi * s) * std::sin(kPi * s);
      pert.north.omega.at(0, q) += C(0, 0.3 * w * std::sin(x[1]));
      pert.north.omega.at(1, q) += C(0, 0.2 * w * std::cos(2 * x[1]));
    }
    double c1 = chern_number(pert).value;
    rep.add_bound("perturbation-invariance",
                  "smooth single-patch shift keeps the number", std::abs(c1 - c0),
                  1e-5);

    // Contractible gauge change along the discrete orbit.
    std::vector<double> phase(ch.total());
    for (long q = 0; q < ch.total(); ++q) {
      ch.point(q, x);
      phase[q] = 0.4 * std::cos(x[0]) * std::sin(x[1]);
    }
    auto gm = GaugeMap<C>::from_phase(b.north.chart_ptr(), phase);
    auto gauged = b;
    gauged.north = gauge_transform(b.north, gm);
    double c2 = chern_number(gauged, 1.0).value;
    rep.add_bound("gauge-invariance", "contractible patch gauge change",
                  std::abs(c2 - c0), 1e-6);
  }

  // Overlap identity at second order.
  {
    double r1 = monopole_overlap_residual(make_monopole(2, int(res) / 2, int(res)));
    double r2 = monopole_overlap_residual(make_monopole(2, int(res), int(2 * res)));
    rep.add_floor("overlap-order", "patch gluing defect = O(h^2)",
                  std::log2(r1 / r2), 1.8);
  }

  rep.runtime_seconds = timer.seconds();
  rep.add_timing("runtime-budget", "wall clock below 60 s",
                 rep.runtime_seconds, 60.0);
  return rep;
}

// -------------------------------------------------------------- maxwell --

Report scenario_maxwell(const ScenarioParams& p) {
  Timer timer;
  Report rep;
  rep.scenario = "maxwell";
  long res = p.resolution > 0 ? p.resolution : 12;
  rep.parameters = {{"resolution", std::to_string(res)}};

  auto mink = [&](int n, int nt) {
    return Chart::torus("m4", {n, n, n, nt}, {kTau, kTau, kTau, kTau},
                        FrameMetric::minkowski());
  };
  auto zeros3 = [](long n) {
    return std::array<std::vector<double>, 3>{std::vector<double>(n, 0.0),
                                              std::vector<double>(n, 0.0),
                                              std::vector<double>(n, 0.0)};
  };

  // Uniform fields: constant coefficients solve the discrete equations
  // exactly, at every resolution.
  for (int which = 0; which < 2; ++which) {
    auto ch = mink(int(res), int(res));
    long N = ch->total();
    auto E = zeros3(N);
    auto B = zeros3(N);
    if (which == 0)
      for (long q = 0; q < N; ++q) B[2][q] = 1.0;
    else
      for (long q = 0; q < N; ++q) E[0][q] = 1.0;
    auto F = assemble_F(ch, E, B);
    FormField<double> J(ch, 1);
    auto [r1, r2] = maxwell_residuals(F, J);
    rep.add_bound(which == 0 ? "uniform-B" : "uniform-E",
                  "dF = 0 and *d*F = J, exact for constants",
                  std::max(r1, r2), 1e-12);
  }

  // Plane wave: exact on the isotropic grid, O(h^2) on an anisotropic one.
  {
    auto wave_res = [&](int n, int nt) {
      auto ch = mink(n, nt);
      long N = ch->total();
      auto E = zeros3(N);
      auto B = zeros3(N);
      double x[kMaxDim];
      for (long q = 0; q < N; ++q) {
        ch->point(q, x);
        E[0][q] = std::cos(x[2] - x[3]);
        B[1][q] = std::cos(x[2] - x[3]);
      }
      auto F = assemble_F(ch, E, B);
      FormField<double> J(ch, 1);
      auto [r1, r2] = maxwell_residuals(F, J);
      return std::max(r1, r2);
    };
    rep.add_bound("plane-wave-isotropic",
                  "light-like mode is exact on equal spacings",
                  wave_res(int(res), int(res)), 1e-12);
    double e1 = wave_res(int(res), int(3 * res / 2));
    double e2 = wave_res(int(2 * res), int(3 * res));
    rep.add_floor("plane-wave-order", "residuals = O(h^2) on unequal spacings",
                  std::log2(e1 / e2), 1.8);
  }

  // Continuity of the induced current.
  {
    auto ch = mink(int(res), int(res));
    auto A = random_form_field<double>(ch, 1, p.seed + 31, {1.0}, 0.5, 1);
    auto F = potential_to_F(A);
    FormField<double> induced = hodge_star(ext_d(hodge_star(F)));
    rep.add_bound("induced-continuity", "d*(*d*F) = 0 via d_h d_h = 0",
                  continuity_residual(induced), 1e-12);
  }

  // Lorentz coforce: frozen signs and the no-work property.
  {
    auto ch = mink(4, 4);
    long N = ch->total();
    auto E = zeros3(N);
    auto B = zeros3(N);
    for (long q = 0; q < N; ++q) B[2][q] = 1.5;
    auto F = assemble_F(ch, E, B);
    double x0[4] = {0.5, 0.5, 0.5, 0.5};
    auto l = lorentz_coforce(F, x0, {0.3, 0, 0, 1}, 2.0);
    rep.add("magnetic-force-sign", "force = q v x B", l.force[1],
            -2.0 * 0.3 * 1.5, 1e-12);
    std::mt19937_64 rng(p.seed + 32);
    std::uniform_real_distribution<double> u(-1, 1);
    double worst = 0;
    for (int k = 0; k < 200; ++k) {
      for (long q = 0; q < N; ++q)
        for (int d = 0; d < 3; ++d) B[d][q] = u(rng);
      auto Fb = assemble_F(ch, zeros3(N), B);
      std::array<double, 4> vel = {u(rng), u(rng), u(rng), 1.0};
      auto lf = lorentz_coforce(Fb, x0, vel, 1.3);
      worst = std::max(worst, std::abs(lf.force[0] * vel[0] +
                                       lf.force[1] * vel[1] +
                                       lf.force[2] * vel[2]));
    }
    rep.add_bound("magnetic-no-work", "<force, v> = 0 for pure B", worst,
                  1e-10);
  }

  rep.runtime_seconds = timer.seconds();
  return rep;
}

// ---------------------------------------------------------- kk-geodesic --

std::vector<double> su2_structure_table() {
  std::vector<double> Cs(27, 0.0);
  auto set = [&](int g, int s, int b, double v) {
    Cs[(g * 3 + s) * 3 + b] = v;
  };
  const double r2 = std::sqrt(2.0);
  // [E_a, E_b] = sqrt2 eps_{abc} E_c.
  set(2, 0, 1, r2);
  set(2, 1, 0, -r2);
  set(0, 1, 2, r2);
  set(0, 2, 1, -r2);
  set(1, 2, 0, r2);
  set(1, 0, 2, -r2);
  return Cs;
}

Report scenario_kk(const ScenarioParams& p) {
  Timer timer;
  Report rep;
  rep.scenario = "kk-geodesic";
  double step = p.step > 0 ? p.step : 1e-3;
  double T = 10.0;
  rep.parameters = {{"step", std::to_string(step)}, {"horizon", "10"}};

  double F0 = 0.9, q0 = 0.8;
  std::vector<double> Ftab = {0.0, F0, -F0, 0.0};
  auto bu = BundleSpec::constant_field(2, 1, {0.0}, Ftab, {-50, -50}, {50, 50});
  BundleState s0;
  s0.base = {0.0, 0.0};
  s0.u = {1.0, 0.0};
  s0.q = {q0};
  auto traj = kk_geodesic(bu, s0, T, step);
  rep.add_bound("charge-drift", "specific charge constant along geodesics",
                traj.charge_drift, 1e-8);
  rep.add_bound("energy-drift", "frame speed constant along geodesics",
                traj.energy_drift, 1e-8);
  rep.add_bound("lorentz-match",
                "projected geodesic = independent force integration",
                lorentz_compare(bu, s0, T, step), 1e-5);

  // su(2) fiber with one commuting field block.
  {
    int m = 2, k = 3;
    std::vector<double> Fs(k * m * m, 0.0);
    Fs[(2 * m + 0) * m + 1] = F0;
    Fs[(2 * m + 1) * m + 0] = -F0;
    auto bs = BundleSpec::constant_field(m, k, su2_structure_table(), Fs,
                                         {-50, -50}, {50, 50});
    bs.group_tag = Algebra::su2;
    bs.basis2 = {std::sqrt(2.0) * su2_basis(0), std::sqrt(2.0) * su2_basis(1),
                 std::sqrt(2.0) * su2_basis(2)};
    BundleState s2;
    s2.base = {0.0, 0.0};
    s2.u = {0.8, 0.1};
    s2.q = {0.05, -0.1, 0.6};
    auto tr2 = kk_geodesic(bs, s2, T, step);
    rep.add_bound("su2-charge-drift", "charge components conserved",
                  tr2.charge_drift, 1e-8);
    rep.add_bound("su2-lorentz-match", "two independent integrations agree",
                  lorentz_compare(bs, s2, T, step), 1e-4);
  }

  // Scalar curvature identity.
  {
    double x0[4] = {0, 0, 0, 0};
    std::vector<double> F4(1 * 4 * 4, 0.0);
    F4[0 * 4 + 1] = F0;
    F4[1 * 4 + 0] = -F0;
    auto b4 = BundleSpec::constant_field(4, 1, {0.0}, F4,
                                         std::vector<double>(4, -1.0),
                                         std::vector<double>(4, 1.0));
    auto parts = scalar_curvature_decomposition(b4, x0);
    rep.add_bound("curvature-identity-abelian",
                  "PR = MR - 1/2 |F|^2 + GR, constant field", parts.residual,
                  1e-8);
    rep.add("heisenberg-value", "PR = -F0^2/2 for a single field pair",
            parts.PR, -0.5 * F0 * F0, 1e-12);

    auto bg = BundleSpec::constant_field(2, 3, su2_structure_table(),
                                         std::vector<double>(12, 0.0),
                                         {-1, -1}, {1, 1});
    auto pg = scalar_curvature_decomposition(bg, x0);
    rep.add_bound("curvature-identity-su2", "PR = GR for the zero field",
                  pg.residual, 1e-10);
    rep.add("group-curvature", "GR = 1/4 sum C^2 = 3 (radius sqrt2 sphere)",
            pg.GR, 3.0, 1e-12);
  }

  rep.runtime_seconds = timer.seconds();
  return rep;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {
      "hodge", "holonomy", "ym-flow", "instanton",
      "chern", "maxwell",  "kk-geodesic"};
  return names;
}

Report run_scenario(const std::string& name, const ScenarioParams& p) {
  if (name == "hodge") return scenario_hodge(p);
  if (name == "holonomy") return scenario_holonomy(p);
  if (name == "ym-flow") return scenario_ym_flow(p);
  if (name == "instanton") return scenario_instanton(p);
  if (name == "chern") return scenario_chern(p);
  if (name == "maxwell") return scenario_maxwell(p);
  if (name == "kk-geodesic") return scenario_kk(p);
  throw ConfigError("unknown scenario: " + name);
}

std::vector<Report> run_suite(const ScenarioParams& p) {
  std::vector<Report> out;
  for (const auto& n : scenario_names()) {
    try {
      out.push_back(run_scenario(n, p));
    } catch (const Error& e) {
      // Surface the failure as a failing check instead of aborting the rest.
      Report rep;
      rep.scenario = n;
      rep.add("scenario-error", e.what(), 0, 1, 0);
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace gauge
