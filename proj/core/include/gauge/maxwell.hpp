#pragma once

#include <array>

#include "gauge/exterior.hpp"

namespace gauge {

// Electromagnetism on a 4-chart with eta = diag(+,+,+,-), frame order
// (x, y, z, t): F = *_S(B-flat) + E-flat ^ dt, J = -rho dt + j_i dx^i.
struct EMField {
  std::shared_ptr<const Chart> chart;
  std::array<std::vector<double>, 3> E;
  std::array<std::vector<double>, 3> B;
  FormField<double> F;  // assembled
  FormField<double> J;

  static void check_chart(const Chart& ch) {
    if (ch.dim() != 4 || ch.metric().neg_count() != 1)
      throw ShapeError("electromagnetism needs a (+,+,+,-) 4-chart");
  }
};

namespace em_detail {
// Component ranks of the six 2-form slots.
struct Slots {
  int xy, xz, xt, yz, yt, zt;
  explicit Slots(int n) {
    xy = component_rank(MultiIndex{1, 2}, n);
    xz = component_rank(MultiIndex{1, 3}, n);
    xt = component_rank(MultiIndex{1, 4}, n);
    yz = component_rank(MultiIndex{2, 3}, n);
    yt = component_rank(MultiIndex{2, 4}, n);
    zt = component_rank(MultiIndex{3, 4}, n);
  }
};
}  // namespace em_detail

// F = B_x dy^dz - B_y dx^dz + B_z dx^dy + E_i dx^i ^ dt.
inline FormField<double> assemble_F(std::shared_ptr<const Chart> chart,
                                    const std::array<std::vector<double>, 3>& E,
                                    const std::array<std::vector<double>, 3>& B) {
  EMField::check_chart(*chart);
  for (auto* f : {&E, &B})
    for (const auto& c : *f)
      if (static_cast<long>(c.size()) != chart->total())
        throw ShapeError("field component grid mismatch");
  FormField<double> F(chart, 2);
  em_detail::Slots s(4);
  for (long p = 0; p < chart->total(); ++p) {
    F.at(s.yz, p) = B[0][p];
    F.at(s.xz, p) = -B[1][p];
    F.at(s.xy, p) = B[2][p];
    F.at(s.xt, p) = E[0][p];
    F.at(s.yt, p) = E[1][p];
    F.at(s.zt, p) = E[2][p];
  }
  return F;
}

// Inverse of assemble_F; exact by construction.
inline void extract_EB(const FormField<double>& F,
                       std::array<std::vector<double>, 3>& E,
                       std::array<std::vector<double>, 3>& B) {
  EMField::check_chart(F.chart());
  em_detail::Slots s(4);
  long n = F.chart().total();
  for (auto* f : {&E, &B})
    for (auto& c : *f) c.assign(n, 0.0);
  for (long p = 0; p < n; ++p) {
    B[0][p] = F.at(s.yz, p);
    B[1][p] = -F.at(s.xz, p);
    B[2][p] = F.at(s.xy, p);
    E[0][p] = F.at(s.xt, p);
    E[1][p] = F.at(s.yt, p);
    E[2][p] = F.at(s.zt, p);
  }
}

inline FormField<double> assemble_J(std::shared_ptr<const Chart> chart,
                                    const std::vector<double>& rho,
                                    const std::array<std::vector<double>, 3>& j) {
  EMField::check_chart(*chart);
  FormField<double> J(chart, 1);
  for (long p = 0; p < chart->total(); ++p) {
    J.at(0, p) = j[0][p];
    J.at(1, p) = j[1][p];
    J.at(2, p) = j[2][p];
    J.at(3, p) = -rho[p];
  }
  return J;
}

// (|dF|_sup, |*d*F - J|_sup).
inline std::pair<double, double> maxwell_residuals(const FormField<double>& F,
                                                   const FormField<double>& J,
                                                   int boundary_margin = 0) {
  EMField::check_chart(F.chart());
  double r1 = ext_d(F).sup_norm(boundary_margin);
  FormField<double> lhs = hodge_star(ext_d(hodge_star(F)));
  lhs -= J;
  return {r1, lhs.sup_norm(boundary_margin)};
}

inline FormField<double> potential_to_F(const FormField<double>& A) {
  if (A.degree() != 1) throw DegreeError("potential must be a 1-form");
  return ext_d(A);
}

// |d * J|_sup: the continuity equation in form language.
inline double continuity_residual(const FormField<double>& J,
                                  int boundary_margin = 0) {
  if (J.degree() != 1) throw DegreeError("current must be a 1-form");
  return ext_d(hodge_star(J)).sup_norm(boundary_margin);
}

struct LorentzCoforce {
  std::array<double, 4> covector;  // q F(., v), coordinate components
  std::array<double, 3> force;     // flat-raised spatial part
  double power;                    // raised time component, q E . v
};

// Componentwise q F^sigma_beta v^beta with the velocity inserted in the
// second slot; the sign assignments follow the one-time component expansion
// against q(E + v x B) frozen in the tests.
inline LorentzCoforce lorentz_coforce(const FormField<double>& F,
                                      const double* x,
                                      const std::array<double, 4>& v, double q) {
  EMField::check_chart(F.chart());
  const auto& comps = components(4, 2);
  double Fab[4][4] = {};
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    int a = comps[ci][0] - 1, b = comps[ci][1] - 1;
    double val = interpolate(F, static_cast<int>(ci), x);
    Fab[a][b] = val;
    Fab[b][a] = -val;
  }
  LorentzCoforce out{};
  for (int a = 0; a < 4; ++a) {
    double s = 0;
    for (int b = 0; b < 4; ++b) s += Fab[a][b] * v[b];
    out.covector[a] = q * s;
  }
  for (int i = 0; i < 3; ++i) out.force[i] = out.covector[i];
  out.power = -out.covector[3];  // eta_tt = -1 raise
  return out;
}

}  // namespace gauge
