#pragma once

#include <Eigen/Dense>
#include <complex>

namespace gauge {

// Lie algebra / group tags carried by matrix-valued forms and connections.
enum class Algebra { real, u1, su2, so3, gl };

inline const char* algebra_name(Algebra a) {
  switch (a) {
    case Algebra::real: return "real";
    case Algebra::u1: return "u1";
    case Algebra::su2: return "su2";
    case Algebra::so3: return "so3";
    case Algebra::gl: return "gl";
  }
  return "?";
}

// Uniform operations over the value types used for form coefficients:
//   double            - plain real forms
//   std::complex      - u(1) (imaginary values) / U(1) elements
//   Eigen::Matrix2cd  - su(2) / SU(2), gl(2)
//   Eigen::Matrix3d   - so(3) / SO(3) (so(2) sits in the upper-left block)
template <class V>
struct value_ops;

template <>
struct value_ops<double> {
  static constexpr bool is_matrix = false;
  static double zero() { return 0.0; }
  static double mult(double a, double b) { return a * b; }
  static double commutator(double, double) { return 0.0; }
  static std::complex<double> trace(double a) { return {a, 0.0}; }
  // For scalar forms the fiber pairing is the plain product.
  static double inner(double a, double b) { return a * b; }
  static double abs_max(double a) { return std::abs(a); }
  static double anti_project(double a) { return a; }
  static double group_project(double a) { return a; }
};

template <>
struct value_ops<std::complex<double>> {
  using C = std::complex<double>;
  static constexpr bool is_matrix = true;
  static C zero() { return {0.0, 0.0}; }
  static C mult(C a, C b) { return a * b; }
  static C commutator(C, C) { return {0.0, 0.0}; }
  static std::complex<double> trace(C a) { return a; }
  // <A,B> = -tr(AB); real for u(1) values (which are imaginary).
  static double inner(C a, C b) { return -(a * b).real(); }
  static double abs_max(C a) { return std::abs(a); }
  static C anti_project(C a) { return {0.0, a.imag()}; }
  static C group_project(C a) {
    double m = std::abs(a);
    return m > 0 ? a / m : C{1.0, 0.0};
  }
};

template <>
struct value_ops<Eigen::Matrix2cd> {
  using M = Eigen::Matrix2cd;
  static constexpr bool is_matrix = true;
  static M zero() { return M::Zero(); }
  static M mult(const M& a, const M& b) { return a * b; }
  static M commutator(const M& a, const M& b) { return a * b - b * a; }
  static std::complex<double> trace(const M& a) { return a.trace(); }
  static double inner(const M& a, const M& b) { return -(a * b).trace().real(); }
  static double abs_max(const M& a) { return a.cwiseAbs().maxCoeff(); }
  static M anti_project(const M& a) { return 0.5 * (a - a.adjoint()); }
  // Nearest unitary via polar decomposition, then det-normalized into SU(2).
  static M group_project(const M& a) {
    Eigen::JacobiSVD<M> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    M u = svd.matrixU() * svd.matrixV().adjoint();
    std::complex<double> d = u.determinant();
    // det = e^{i phi}: divide by the square root phase.
    return u / std::sqrt(d);
  }
};

template <>
struct value_ops<Eigen::Matrix3d> {
  using M = Eigen::Matrix3d;
  static constexpr bool is_matrix = true;
  static M zero() { return M::Zero(); }
  static M mult(const M& a, const M& b) { return a * b; }
  static M commutator(const M& a, const M& b) { return a * b - b * a; }
  static std::complex<double> trace(const M& a) { return {a.trace(), 0.0}; }
  static double inner(const M& a, const M& b) { return -(a * b).trace(); }
  static double abs_max(const M& a) { return a.cwiseAbs().maxCoeff(); }
  static M anti_project(const M& a) { return 0.5 * (a - a.transpose()); }
  static M group_project(const M& a) {
    Eigen::JacobiSVD<M> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    M u = svd.matrixU() * svd.matrixV().transpose();
    if (u.determinant() < 0) {
      Eigen::Matrix3d flip = Eigen::Matrix3d::Identity();
      flip(2, 2) = -1;
      u = svd.matrixU() * flip * svd.matrixV().transpose();
    }
    return u;
  }
};

// Inverse of a group element (unitary/orthogonal, so the adjoint).
inline double group_inverse(double g) { return 1.0 / g; }
inline std::complex<double> group_inverse(std::complex<double> g) {
  return std::conj(g);
}
inline Eigen::Matrix2cd group_inverse(const Eigen::Matrix2cd& g) {
  return g.adjoint();
}
inline Eigen::Matrix3d group_inverse(const Eigen::Matrix3d& g) {
  return g.transpose();
}

template <class V>
V value_identity();

template <>
inline double value_identity<double>() { return 1.0; }
template <>
inline std::complex<double> value_identity<std::complex<double>>() { return {1.0, 0.0}; }
template <>
inline Eigen::Matrix2cd value_identity<Eigen::Matrix2cd>() { return Eigen::Matrix2cd::Identity(); }
template <>
inline Eigen::Matrix3d value_identity<Eigen::Matrix3d>() { return Eigen::Matrix3d::Identity(); }

// Anti-hermitian su(2) basis used throughout: s_k = -i/2 * (Pauli sigma_k).
// [s_a, s_b] = eps_abc s_c and -tr(s_a s_b) = delta_ab / 2.
inline Eigen::Matrix2cd su2_basis(int k) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  const C i{0.0, 1.0};
  switch (k) {
    case 0: m << 0, -0.5 * i, -0.5 * i, 0; break;
    case 1: m << 0, -0.5, 0.5, 0; break;
    default: m << -0.5 * i, 0, 0, 0.5 * i; break;
  }
  return m;
}

// Generator of rotations in the (1,2) tangent plane, embedded in so(3).
inline Eigen::Matrix3d so2_generator() {
  Eigen::Matrix3d g = Eigen::Matrix3d::Zero();
  g(1, 0) = 1.0;
  g(0, 1) = -1.0;
  return g;
}

}  // namespace gauge
