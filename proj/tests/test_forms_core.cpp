#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gauge/point_form.hpp"

using namespace gauge;
using C = std::complex<double>;
using M2 = Eigen::Matrix2cd;

namespace {

PointFormT<double> basis1(int i, const FrameMetric& m) {
  PointFormT<double> f(1, m);
  f.set(MultiIndex{i}, 1.0);
  return f;
}

// Independent permutation-sign oracle: explicit selection-sort swap count.
int sign_by_sorting(std::vector<int> seq) {
  int swaps = 0;
  for (size_t i = 0; i < seq.size(); ++i) {
    size_t mn = i;
    for (size_t j = i + 1; j < seq.size(); ++j)
      if (seq[j] < seq[mn]) mn = j;
    if (mn != i) {
      std::swap(seq[i], seq[mn]);
      ++swaps;
    }
  }
  return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("parity: spec examples and exhaustive oracle") {
  CHECK(parity(MultiIndex{1}, 3) == 1);
  // (2,1,3): one transposition away from identity.
  CHECK(parity(MultiIndex{2}, 3) == -1);
  CHECK(parity(MultiIndex{1, 2}, 4) == 1);
  CHECK_THROWS_AS(parity(MultiIndex{4}, 3), InvalidIndexError);

  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p)
      for (const auto& I : components(n, p)) {
        std::vector<int> seq;
        for (int k = 0; k < I.degree(); ++k) seq.push_back(I[k]);
        MultiIndex c = I.complement(n);
        for (int k = 0; k < c.degree(); ++k) seq.push_back(c[k]);
        CHECK(parity(I, n) == sign_by_sorting(seq));
      }
}

TEST_CASE("parity pair product reproduces (-1)^{p(n-p)} for n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p)
      for (const auto& I : components(n, p)) {
        int lhs = parity(I, n) * parity(I.complement(n), n);
        int rhs = (p * (n - p)) % 2 == 0 ? 1 : -1;
        CHECK(lhs == rhs);
      }
}

TEST_CASE("wedge: basis products and graded anticommutativity") {
  auto m = FrameMetric::euclidean(3);
  auto dx = basis1(1, m), dy = basis1(2, m);

  auto dxdy = wedge(dx, dy);
  CHECK(dxdy.coeff(MultiIndex{1, 2}) == doctest::Approx(1.0));
  CHECK(wedge(dx, dx).abs_max() == 0.0);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  auto m4 = FrameMetric::euclidean(4);
  for (int rep = 0; rep < 50; ++rep)
    for (int pa = 0; pa <= 2; ++pa)
      for (int pb = 0; pa + pb <= 4 && pb <= 2; ++pb) {
        PointFormT<double> a(pa, m4), b(pb, m4);
        for (const auto& I : components(4, pa)) a.set(I, u(rng));
        for (const auto& J : components(4, pb)) b.set(J, u(rng));
        auto ab = wedge(a, b);
        auto ba = wedge(b, a) * ((pa * pb) % 2 == 0 ? 1.0 : -1.0);
        CHECK((ab - ba).abs_max() < 1e-14);
      }
}

TEST_CASE("commutator wedge of su(2)-valued 1-form with itself") {
  // lambda = e^1 (x) s1 + e^2 (x) s2; on (e_1, e_2) the commutator wedge
  // gives [s1, s2], expanded by hand over the two-element basis.
  auto m = FrameMetric::euclidean(2);
  PointFormT<M2> lam(1, m);
  lam.set(MultiIndex{1}, su2_basis(0));
  lam.set(MultiIndex{2}, su2_basis(1));
  auto ww = wedge(lam, lam, WedgeMode::commutator);
  M2 expect = value_ops<M2>::commutator(su2_basis(0), su2_basis(1));
  CHECK((ww.coeff(MultiIndex{1, 2}) - expect).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("self commutator wedge of a 1-form matches the contraction wedge") {
  // For a 1-form the product wedge already antisymmetrizes the values, so
  // the bracket-per-pair wedge coincides with it.
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  auto m = FrameMetric::euclidean(4);
  auto rand_su2 = [&] {
    return M2(u(rng) * su2_basis(0) + u(rng) * su2_basis(1) +
              u(rng) * su2_basis(2));
  };
  for (int rep = 0; rep < 20; ++rep) {
    PointFormT<M2> a(1, m);
    for (const auto& I : components(4, 1)) a.set(I, rand_su2());
    auto comm = wedge(a, a, WedgeMode::commutator);
    auto contract = wedge(a, a, WedgeMode::matrix_contract);
    for (const auto& K : components(4, 2))
      CHECK((comm.coeff(K) - contract.coeff(K)).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("hodge star: R^3 Euclidean examples") {
  auto m = FrameMetric::euclidean(3);
  auto sdx = hodge_star(basis1(1, m));
  CHECK(sdx.coeff(MultiIndex{2, 3}) == doctest::Approx(1.0));
  auto sdy = hodge_star(basis1(2, m));
  CHECK(sdy.coeff(MultiIndex{1, 3}) == doctest::Approx(-1.0));  // dz^dx
  auto sdz = hodge_star(basis1(3, m));
  CHECK(sdz.coeff(MultiIndex{1, 2}) == doctest::Approx(1.0));
}

TEST_CASE("double star sign over all bases, n <= 6, s in {0,1,2}") {
  for (int n = 1; n <= 6; ++n)
    for (int s = 0; s <= std::min(n, 2); ++s) {
      FrameMetric m(n, s);
      for (int p = 0; p <= n; ++p)
        for (const auto& I : components(n, p)) {
          PointFormT<double> f(p, m);
          f.set(I, 1.0);
          auto ss = hodge_star(hodge_star(f));
          CHECK(ss.coeff(I) == doctest::Approx(double_star_sign(p, n, s)));
        }
    }
}

TEST_CASE("wedge with star reproduces the inner product times mu") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int s : {0, 1}) {
    FrameMetric m(4, s);
    MultiIndex top{1, 2, 3, 4};
    for (int p = 0; p <= 4; ++p)
      for (int rep = 0; rep < 100; ++rep) {
        PointFormT<double> a(p, m), b(p, m);
        for (const auto& I : components(4, p)) {
          a.set(I, u(rng));
          b.set(I, u(rng));
        }
        auto lhs = wedge(a, hodge_star(b));
        CHECK(lhs.coeff(top) ==
              doctest::Approx(form_inner(a, b)).epsilon(1e-12));
      }
  }
}

TEST_CASE("form_inner: orthonormal basis and u(1) values") {
  auto m = FrameMetric::euclidean(3);
  PointFormT<double> dxdy(2, m), dydz(2, m);
  dxdy.set(MultiIndex{1, 2}, 1.0);
  dydz.set(MultiIndex{2, 3}, 1.0);
  CHECK(form_inner(dxdy, dxdy) == doctest::Approx(1.0));
  CHECK(form_inner(dxdy, dydz) == doctest::Approx(0.0));

  PointFormT<C> ia(1, m), ib(1, m);
  ia.set(MultiIndex{1}, C(0, 2.5));
  ib.set(MultiIndex{1}, C(0, -1.5));
  CHECK(form_inner(ia, ib) == doctest::Approx(2.5 * -1.5));

  PointFormT<double> d1(1, m);
  d1.set(MultiIndex{1}, 1.0);
  CHECK_THROWS_AS(form_inner(dxdy, d1), DegreeError);
}

TEST_CASE("minkowski: ** = (-1)^{p(4-p)+1} on 2-forms") {
  auto m = FrameMetric::minkowski();
  for (const auto& I : components(4, 2)) {
    PointFormT<double> f(2, m);
    f.set(I, 1.0);
    auto ss = hodge_star(hodge_star(f));
    CHECK(ss.coeff(I) == doctest::Approx(-1.0));  // p(4-p)+1 = 5, odd
  }
}

TEST_CASE("trace_form") {
  auto m = FrameMetric::euclidean(3);
  PointFormT<M2> f(1, m);
  f.set(MultiIndex{1}, M2::Identity());
  auto tr = trace_form(f);
  CHECK(std::abs(tr.coeff(MultiIndex{1}) - C(2, 0)) < 1e-15);

  PointFormT<M2> g(1, m);
  g.set(MultiIndex{1}, su2_basis(2));  // traceless
  CHECK(trace_form(g).terms().empty());

  PointFormT<double> s(1, m);
  s.set(MultiIndex{1}, 1.0);
  CHECK_THROWS_AS(trace_form(s), TypeError);
}

TEST_CASE("trace cyclicity through the contraction wedge") {
  // tr(A^B) vs tr(B^A) on matrix-valued 1-forms: graded sign -1 on values,
  // trace cyclic, so tr(wedge(a,b)) = -tr(wedge(b,a)) in degree 1+1.
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(-1, 1);
  auto m = FrameMetric::euclidean(3);
  auto rand_m2 = [&] {
    M2 r;
    r << C(u(rng), u(rng)), C(u(rng), u(rng)), C(u(rng), u(rng)),
        C(u(rng), u(rng));
    return r;
  };
  for (int rep = 0; rep < 20; ++rep) {
    PointFormT<M2> a(1, m), b(1, m);
    for (const auto& I : components(3, 1)) {
      a.set(I, rand_m2());
      b.set(I, rand_m2());
    }
    auto tab = trace_form(wedge(a, b, WedgeMode::matrix_contract));
    auto tba = trace_form(wedge(b, a, WedgeMode::matrix_contract));
    for (const auto& K : components(3, 2))
      CHECK(std::abs(tab.coeff(K) + tba.coeff(K)) < 1e-13);
  }
}

TEST_CASE("degree overflow and value tag checks") {
  auto m = FrameMetric::euclidean(2);
  PointFormT<double> a(2, m), b(1, m);
  a.set(MultiIndex{1, 2}, 1.0);
  b.set(MultiIndex{1}, 1.0);
  CHECK_THROWS_AS(wedge(a, b), DegreeError);
  CHECK_THROWS_AS(PointFormT<double>(3, m), DegreeError);
}
