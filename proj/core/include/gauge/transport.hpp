#pragma once

#include <cmath>
#include <functional>

#include "gauge/connection.hpp"

namespace gauge {

// Parametrized curve in chart coordinates. Analytic position/velocity
// callables; file-loaded curves wrap sampled data (see SampledCurve).
struct Curve {
  int dim = 0;
  double t0 = 0.0, t1 = 1.0;
  bool closed = false;
  std::function<void(double, double*)> position;
  std::function<void(double, double*)> velocity;

  void eval(double t, double* x, double* v) const {
    position(t, x);
    if (velocity) {
      velocity(t, v);
    } else {
      // Fourth-order central difference of the position map.
      double h = 1e-5 * (t1 - t0);
      double xp[kMaxDim], xm[kMaxDim], xp2[kMaxDim], xm2[kMaxDim];
      position(t + h, xp);
      position(t - h, xm);
      position(t + 2 * h, xp2);
      position(t - 2 * h, xm2);
      for (int a = 0; a < dim; ++a)
        v[a] = (8.0 * (xp[a] - xm[a]) - (xp2[a] - xm2[a])) / (12.0 * h);
    }
  }
};

// Sampled curve: strictly increasing parameter column plus coordinates.
// Interpolated with a Catmull-Rom segment through the four nearest samples.
class SampledCurve {
 public:
  SampledCurve(std::vector<double> t, std::vector<std::vector<double>> x,
               bool closed)
      : t_(std::move(t)), x_(std::move(x)), closed_(closed) {
    if (t_.size() < 4 || x_.size() != t_.size())
      throw CurveError("need at least four samples");
    dim_ = static_cast<int>(x_[0].size());
    for (size_t k = 1; k < t_.size(); ++k)
      if (t_[k] <= t_[k - 1]) throw CurveError("parameter not increasing");
    if (closed_) {
      for (int a = 0; a < dim_; ++a)
        if (std::abs(x_.front()[a] - x_.back()[a]) > 1e-12)
          throw CurveError("closed curve endpoints differ");
    }
  }

  bool closed() const { return closed_; }
  int dim() const { return dim_; }

  Curve view() const {
    Curve c;
    c.dim = dim_;
    c.t0 = t_.front();
    c.t1 = t_.back();
    c.closed = closed_;
    c.position = [this](double t, double* x) { interp(t, x, nullptr); };
    c.velocity = [this](double t, double* v) {
      double x[kMaxDim];
      interp(t, x, v);
    };
    return c;
  }

 private:
  void interp(double t, double* x, double* v) const {
    size_t hi = 1;
    while (hi < t_.size() - 1 && t_[hi] < t) ++hi;
    size_t i1 = hi - 1, i2 = hi;
    size_t i0 = i1 == 0 ? i1 : i1 - 1;
    size_t i3 = i2 + 1 >= t_.size() ? i2 : i2 + 1;
    double h = t_[i2] - t_[i1];
    double s = (t - t_[i1]) / h;
    for (int a = 0; a < dim_; ++a) {
      double p0 = x_[i0][a], p1 = x_[i1][a], p2 = x_[i2][a], p3 = x_[i3][a];
      double m1 = (i0 == i1) ? (p2 - p1) : 0.5 * (p2 - p0);
      double m2 = (i3 == i2) ? (p2 - p1) : 0.5 * (p3 - p1);
      double s2 = s * s, s3 = s2 * s;
      x[a] = (2 * s3 - 3 * s2 + 1) * p1 + (s3 - 2 * s2 + s) * m1 +
             (-2 * s3 + 3 * s2) * p2 + (s3 - s2) * m2;
      if (v)
        v[a] = ((6 * s2 - 6 * s) * p1 + (3 * s2 - 4 * s + 1) * m1 +
                (-6 * s2 + 6 * s) * p2 + (3 * s2 - 2 * s) * m2) /
               h;
    }
  }

  std::vector<double> t_;
  std::vector<std::vector<double>> x_;
  bool closed_;
  int dim_;
};

// Group element produced by parallel transport.
template <class V>
struct TransportOp {
  Algebra group;
  V value;
  double projection_drift = 0;  // accumulated pre-projection defect

  static TransportOp identity(Algebra tag) {
    return {tag, value_identity<V>(), 0.0};
  }
};

template <class V>
TransportOp<V> compose(const TransportOp<V>& a, const TransportOp<V>& b) {
  if (a.group != b.group) throw GroupError("composing different groups");
  return {a.group, value_ops<V>::mult(a.value, b.value),
          a.projection_drift + b.projection_drift};
}

template <class V>
TransportOp<V> inverse(const TransportOp<V>& a) {
  return {a.group, group_inverse(a.value), a.projection_drift};
}

namespace detail {
// omega(sigma'(t)) at a point: analytic coefficients when available,
// multilinear interpolation of the sampled field otherwise.
template <class V>
V omega_along(const ConnectionState<V>& c, const double* x, const double* v) {
  V acc = value_ops<V>::zero();
  int n = c.chart().dim();
  if (c.omega_fn) {
    for (int a = 0; a < n; ++a) acc += V(c.omega_fn(x, a) * v[a]);
  } else {
    for (int a = 0; a < n; ++a) acc += V(interpolate(c.omega, a, x) * v[a]);
  }
  return acc;
}
}  // namespace detail

// Integrates dP/dt = -omega(sigma'(t)) P, P(t0) = Id, by the classical
// fourth-order one-step scheme, re-projecting onto the group every step.
template <class V>
TransportOp<V> transport(const ConnectionState<V>& c, const Curve& curve,
                         double step) {
  if (step <= 0) throw CurveError("step must be positive");
  long nsteps = std::max(1L, std::lround((curve.t1 - curve.t0) / step));
  double h = (curve.t1 - curve.t0) / nsteps;
  V P = value_identity<V>();
  double drift = 0;
  double x[kMaxDim], v[kMaxDim];
  auto rhs = [&](double t, const V& p) {
    curve.eval(t, x, v);
    return V(detail::omega_along(c, x, v) * -1.0 * p);
  };
  for (long k = 0; k < nsteps; ++k) {
    double t = curve.t0 + k * h;
    V k1 = rhs(t, P);
    V k2 = rhs(t + 0.5 * h, V(P + k1 * (0.5 * h)));
    V k3 = rhs(t + 0.5 * h, V(P + k2 * (0.5 * h)));
    V k4 = rhs(t + h, V(P + k3 * h));
    P += V((k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0));
    V proj = value_ops<V>::group_project(P);
    drift = std::max(drift, value_ops<V>::abs_max(V(P - proj)));
    P = proj;
  }
  return {c.group, P, drift};
}

template <class V>
TransportOp<V> holonomy(const ConnectionState<V>& c, const Curve& loop,
                        double step) {
  if (!loop.closed) throw CurveError("holonomy needs a closed curve");
  return transport(c, loop, step);
}

// Square loop in the (axis_a, axis_b) coordinate plane, centered at x0.
inline Curve square_loop(int dim, const double* x0, int axis_a, int axis_b,
                         double side) {
  Curve c;
  c.dim = dim;
  c.closed = true;
  std::vector<double> base(x0, x0 + dim);
  c.position = [=](double t, double* x) {
    for (int a = 0; a < dim; ++a) x[a] = base[a];
    double u = 4.0 * t;  // four unit-time edges
    double half = 0.5 * side;
    double da, db;
    if (u < 1) {
      da = -half + side * u;
      db = -half;
    } else if (u < 2) {
      da = half;
      db = -half + side * (u - 1);
    } else if (u < 3) {
      da = half - side * (u - 2);
      db = half;
    } else {
      da = -half;
      db = half - side * (u - 3);
    }
    x[axis_a] += da;
    x[axis_b] += db;
  };
  return c;
}

// max over loops of |holonomy - Id| / loop area; estimates the pointwise
// curvature norm, near zero iff the connection is flat.
template <class V>
double flatness_score(const ConnectionState<V>& c,
                      const std::vector<Curve>& loops,
                      const std::vector<double>& areas, double step) {
  double score = 0;
  for (size_t k = 0; k < loops.size(); ++k) {
    auto hol = holonomy(c, loops[k], step);
    double dev =
        value_ops<V>::abs_max(V(hol.value - value_identity<V>()));
    score = std::max(score, dev / areas[k]);
  }
  return score;
}

// Plaquette estimate of one curvature component: holonomy around a small
// coordinate square based at x0 in the (axis_a, axis_b) plane; for side -> 0
// the deviation from the identity over the area recovers the Omega_{ab}
// coefficient. A cross-check utility for the pointwise curvature formula,
// not used by the verification scenarios.
template <class V>
V plaquette_curvature(const ConnectionState<V>& c, const double* x0,
                      int axis_a, int axis_b, double side,
                      double step = 1e-3) {
  int n = c.chart().dim();
  auto edge = [&](std::vector<double> a, std::vector<double> b) {
    Curve seg;
    seg.dim = n;
    seg.position = [a, b, n](double t, double* x) {
      for (int k = 0; k < n; ++k) x[k] = a[k] + t * (b[k] - a[k]);
    };
    seg.velocity = [a, b, n](double, double* v) {
      for (int k = 0; k < n; ++k) v[k] = b[k] - a[k];
    };
    return transport(c, seg, step);
  };
  std::vector<double> p0(x0, x0 + n), p1 = p0, p2 = p0, p3 = p0;
  p1[axis_a] += side;
  p2[axis_a] += side;
  p2[axis_b] += side;
  p3[axis_b] += side;
  auto hol = compose(edge(p3, p0),
                     compose(edge(p2, p3), compose(edge(p1, p2), edge(p0, p1))));
  // First-order logarithm: (Id - P)/area approximates Omega_ab at x0.
  V dev = V(value_identity<V>() - hol.value);
  return V(dev * (1.0 / (side * side)));
}

// Levi-Civita connection of the round sphere in the (theta, phi) chart,
// orthonormal frame (e_theta, e_phi): omega^2_1 = cos(theta) d phi, embedded
// in so(3) as a rotation about the frame normal.
inline ConnectionState<Eigen::Matrix3d> sphere_lc_connection(
    std::shared_ptr<const Chart> ch, bool analytic = true) {
  ConnectionState<Eigen::Matrix3d> c;
  c.group = Algebra::so3;
  c.omega = FormField<Eigen::Matrix3d>::sample(
      ch, 1, [](const double* x, const MultiIndex& I) {
        return I[0] == 2 ? Eigen::Matrix3d(std::cos(x[0]) * so2_generator())
                         : Eigen::Matrix3d(Eigen::Matrix3d::Zero());
      });
  if (analytic)
    c.omega_fn = [](const double* x, int axis) {
      return axis == 1 ? Eigen::Matrix3d(std::cos(x[0]) * so2_generator())
                       : Eigen::Matrix3d(Eigen::Matrix3d::Zero());
    };
  return c;
}

}  // namespace gauge
