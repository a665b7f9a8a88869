#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gauge/maxwell.hpp"
#include "gauge/random_fields.hpp"

using namespace gauge;

namespace {
const double kTau = 6.283185307179586476925287;

std::shared_ptr<Chart> mink_t4(int n) {
  return Chart::torus("m4", {n, n, n, n}, {kTau, kTau, kTau, kTau},
                      FrameMetric::minkowski());
}

std::array<std::vector<double>, 3> zeros3(long n) {
  return {std::vector<double>(n, 0.0), std::vector<double>(n, 0.0),
          std::vector<double>(n, 0.0)};
}
}  // namespace

TEST_CASE("assemble_F: canonical slots and exact round trip") {
  auto ch = mink_t4(4);
  long N = ch->total();
  auto E = zeros3(N);
  auto B = zeros3(N);
  CHECK(assemble_F(ch, E, B).sup_norm() == 0.0);

  for (long p = 0; p < N; ++p) B[2][p] = 2.5;
  auto Fb = assemble_F(ch, E, B);
  CHECK(Fb.at(component_rank(MultiIndex{1, 2}, 4), 0) == 2.5);
  CHECK(Fb.sup_norm() == 2.5);

  B = zeros3(N);
  for (long p = 0; p < N; ++p) E[0][p] = -1.25;
  auto Fe = assemble_F(ch, E, B);
  CHECK(Fe.at(component_rank(MultiIndex{1, 4}, 4), 0) == -1.25);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k < 3; ++k)
    for (long p = 0; p < N; ++p) {
      E[k][p] = u(rng);
      B[k][p] = u(rng);
    }
  auto F = assemble_F(ch, E, B);
  std::array<std::vector<double>, 3> E2, B2;
  extract_EB(F, E2, B2);
  for (int k = 0; k < 3; ++k)
    for (long p = 0; p < N; ++p) {
      CHECK(E2[k][p] == E[k][p]);
      CHECK(B2[k][p] == B[k][p]);
    }
}

TEST_CASE("static uniform B solves the vacuum equations exactly") {
  auto ch = mink_t4(6);
  long N = ch->total();
  auto E = zeros3(N);
  auto B = zeros3(N);
  for (long p = 0; p < N; ++p) B[2][p] = 1.0;
  auto F = assemble_F(ch, E, B);
  FormField<double> J(ch, 1);
  auto [r1, r2] = maxwell_residuals(F, J);
  CHECK(r1 < 1e-15);
  CHECK(r2 < 1e-15);
}

TEST_CASE("plane wave residuals") {
  auto wave_res = [](int n, int nt) {
    auto ch = Chart::torus("m4", {n, n, n, nt}, {kTau, kTau, kTau, kTau},
                           FrameMetric::minkowski());
    long N = ch->total();
    auto E = zeros3(N);
    auto B = zeros3(N);
    double x[kMaxDim];
    for (long p = 0; p < N; ++p) {
      ch->point(p, x);
      E[0][p] = std::cos(x[2] - x[3]);
      B[1][p] = std::cos(x[2] - x[3]);
    }
    auto F = assemble_F(ch, E, B);
    FormField<double> J(ch, 1);
    auto [r1, r2] = maxwell_residuals(F, J);
    return std::max(r1, r2);
  };
  // Equal spacings: the single light-like mode picks the same sinc factor
  // on the z and t stencils and both residuals cancel to rounding.
  CHECK(wave_res(12, 12) < 1e-12);
  // Distinct spacings break the cancellation and expose the O(h^2) law.
  double e12 = wave_res(12, 18), e24 = wave_res(24, 36);
  CHECK(std::log2(e12 / e24) > 1.8);
}

TEST_CASE("constructed violation is flagged at order one") {
  // E = (sin x, 0, 0) with no charge: *d*F - J keeps an O(1) residual.
  auto res_at = [](int n) {
    auto ch = mink_t4(n);
    long N = ch->total();
    auto E = zeros3(N);
    auto B = zeros3(N);
    double x[kMaxDim];
    for (long p = 0; p < N; ++p) {
      ch->point(p, x);
      E[0][p] = std::sin(x[0]);
    }
    auto F = assemble_F(ch, E, B);
    FormField<double> J(ch, 1);
    return maxwell_residuals(F, J).second;
  };
  CHECK(res_at(8) > 0.9);
  CHECK(res_at(16) > 0.9);
}

TEST_CASE("gauss law fixes the *d*F sign against the charge") {
  // E = (sin x, 0, 0) sourced by rho = cos x: residual drops to O(h^2).
  auto res_at = [](int n) {
    auto ch = mink_t4(n);
    long N = ch->total();
    auto E = zeros3(N);
    auto B = zeros3(N);
    std::vector<double> rho(N);
    auto j = zeros3(N);
    double x[kMaxDim];
    for (long p = 0; p < N; ++p) {
      ch->point(p, x);
      E[0][p] = std::sin(x[0]);
      rho[p] = std::cos(x[0]);
    }
    auto F = assemble_F(ch, E, B);
    auto J = assemble_J(ch, rho, j);
    return maxwell_residuals(F, J).second;
  };
  CHECK(std::log2(res_at(12) / res_at(24)) > 1.8);
}

TEST_CASE("potential route and the discrete gauge orbit") {
  auto ch = mink_t4(8);
  FormField<double> A0(ch, 1);
  CHECK(potential_to_F(A0).sup_norm() == 0.0);

  auto A = random_form_field<double>(ch, 1, 9, {1.0}, 0.5, 1);
  auto F = potential_to_F(A);
  CHECK(ext_d(F).sup_norm() < 1e-13);

  // A -> A + d_h f leaves F unchanged to rounding.
  auto f = random_form_field<double>(ch, 0, 10, {1.0});
  FormField<double> A2 = A;
  A2 += ext_d(f);
  FormField<double> dF = potential_to_F(A2);
  dF -= F;
  CHECK(dF.sup_norm() < 1e-13);

  FormField<double> J(ch, 1);
  auto [a1, a2] = maxwell_residuals(F, J);
  auto [b1, b2] = maxwell_residuals(potential_to_F(A2), J);
  CHECK(std::abs(a1 - b1) < 1e-12);
  CHECK(std::abs(a2 - b2) < 1e-12);
}

TEST_CASE("continuity residual") {
  auto ch = mink_t4(6);
  FormField<double> J0(ch, 1);
  CHECK(continuity_residual(J0) == 0.0);

  long N = ch->total();
  std::vector<double> rho(N, 3.0);
  auto j = zeros3(N);
  CHECK(continuity_residual(assemble_J(ch, rho, j)) < 1e-15);

  // rho(t) = t on a window chart: the linear ramp differentiates exactly
  // and the violation measures |d rho / dt| = 1.
  auto win = Chart::window("win4", {6, 6, 6, 6}, {0, 0, 0, 0}, {1, 1, 1, 1},
                           FrameMetric::minkowski());
  long M = win->total();
  std::vector<double> rho_t(M);
  auto jw = zeros3(M);
  double x[kMaxDim];
  for (long p = 0; p < M; ++p) {
    win->point(p, x);
    rho_t[p] = x[3];
  }
  CHECK(continuity_residual(assemble_J(win, rho_t, jw)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // d* applied to *d*F: closed for any smooth F by d_h d_h = 0.
  auto A = random_form_field<double>(ch, 1, 12, {1.0});
  auto F = potential_to_F(A);
  FormField<double> induced = hodge_star(ext_d(hodge_star(F)));
  CHECK(continuity_residual(induced) < 1e-12);
}

TEST_CASE("lorentz coforce: frozen sign oracle and no magnetic work") {
  auto ch = mink_t4(4);
  long N = ch->total();
  double q = 1.7;

  // Pure E, static charge: force q(E, 0, 0), power 0.
  auto E = zeros3(N);
  auto B = zeros3(N);
  for (long p = 0; p < N; ++p) E[0][p] = 2.0;
  auto Fe = assemble_F(ch, E, B);
  double x0[4] = {0.5, 0.5, 0.5, 0.5};
  auto le = lorentz_coforce(Fe, x0, {0, 0, 0, 1}, q);
  CHECK(le.force[0] == doctest::Approx(q * 2.0));
  CHECK(std::abs(le.force[1]) + std::abs(le.force[2]) < 1e-14);
  CHECK(std::abs(le.power) < 1e-14);

  // Pure B, motion along x: force (0, -q v B, 0) and zero time part.
  E = zeros3(N);
  B = zeros3(N);
  for (long p = 0; p < N; ++p) B[2][p] = 1.5;
  auto Fb = assemble_F(ch, E, B);
  double v = 0.3;
  auto lb = lorentz_coforce(Fb, x0, {v, 0, 0, 1}, q);
  CHECK(lb.force[1] == doctest::Approx(-q * v * 1.5));
  CHECK(std::abs(lb.force[0]) + std::abs(lb.force[2]) < 1e-14);
  CHECK(std::abs(lb.power) < 1e-14);

  // Static charge in pure B feels nothing.
  auto ls = lorentz_coforce(Fb, x0, {0, 0, 0, 1}, q);
  CHECK(std::abs(ls.force[0]) + std::abs(ls.force[1]) + std::abs(ls.force[2]) <
        1e-14);

  // Magnetic force does no work on any spatial velocity.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int rep = 0; rep < 50; ++rep) {
    for (long p = 0; p < N; ++p)
      for (int k = 0; k < 3; ++k) B[k][p] = u(rng);
    auto F = assemble_F(ch, zeros3(N), B);
    std::array<double, 4> vel = {u(rng), u(rng), u(rng), 1.0};
    auto l = lorentz_coforce(F, x0, vel, q);
    double work =
        l.force[0] * vel[0] + l.force[1] * vel[1] + l.force[2] * vel[2];
    CHECK(std::abs(work) < 1e-10);
    // E . v power with E = 0.
    CHECK(std::abs(l.power) < 1e-10);
  }
}

TEST_CASE("power term matches q E . v") {
  auto ch = mink_t4(4);
  long N = ch->total();
  auto E = zeros3(N);
  auto B = zeros3(N);
  for (long p = 0; p < N; ++p) {
    E[0][p] = 1.1;
    E[1][p] = -0.4;
    E[2][p] = 0.25;
  }
  auto F = assemble_F(ch, E, B);
  double x0[4] = {0.5, 0.5, 0.5, 0.5};
  std::array<double, 4> v = {0.2, 0.5, -0.1, 1.0};
  auto l = lorentz_coforce(F, x0, v, 2.0);
  double expect = 2.0 * (1.1 * 0.2 - 0.4 * 0.5 + 0.25 * -0.1);
  CHECK(l.power == doctest::Approx(expect).epsilon(1e-12));
}
