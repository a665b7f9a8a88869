#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "gauge/frame_metric.hpp"

namespace gauge {

// Sampled coordinate chart. Periodic axes carry nodes at k*h covering [0,L);
// non-periodic axes are cell-centered over their window (midpoint quadrature,
// one-sided difference stencils at the first/last node).
//
// Coefficients of forms are stored in the coordinate basis dx^I. The
// orthonormal coframe is e^i = s_i dx^i with per-axis diagonal scales s_i
// (identically 1 on flat charts, sin(theta) for the phi axis of a sphere
// patch), so the frame formulas for *, <,> and mu apply pointwise.
class Chart {
 public:
  static std::shared_ptr<Chart> torus(std::string id, std::vector<int> dims,
                                      std::vector<double> lengths,
                                      FrameMetric metric);
  static std::shared_ptr<Chart> window(std::string id, std::vector<int> dims,
                                       std::vector<double> lo,
                                       std::vector<double> hi,
                                       FrameMetric metric);
  enum class Hemisphere { north, south };
  // Two-patch round sphere; patches share global (theta, phi) coordinates.
  // north: theta in (0, 2pi/3), south: theta in (pi/3, pi); overlap band
  // (pi/3, 2pi/3) carries the cos^2 partition of unity.
  static std::shared_ptr<Chart> sphere_patch(Hemisphere which, int n_theta,
                                             int n_phi);
  // Single (theta, phi) window on the round sphere, no partition of unity;
  // hosts curves that outgrow either standard patch.
  static std::shared_ptr<Chart> sphere_band(double theta_lo, double theta_hi,
                                            int n_theta, int n_phi);

  const std::string& id() const { return id_; }
  int dim() const { return n_; }
  const FrameMetric& metric() const { return metric_; }
  int extent(int axis) const { return dims_[axis]; }
  double spacing(int axis) const { return spacing_[axis]; }
  double origin(int axis) const { return origin_[axis]; }
  bool is_periodic(int axis) const { return periodic_[axis]; }
  bool flat() const { return flat_scales_; }

  long total() const { return total_; }
  long stride(int axis) const { return stride_[axis]; }

  void decompose(long p, int* coords) const {
    for (int a = n_ - 1; a >= 0; --a) {
      coords[a] = static_cast<int>(p % dims_[a]);
      p /= dims_[a];
    }
  }
  long compose(const int* coords) const {
    long p = 0;
    for (int a = 0; a < n_; ++a) p = p * dims_[a] + coords[a];
    return p;
  }

  double coordinate(int axis, int k) const {
    return origin_[axis] + k * spacing_[axis];
  }
  void point(long p, double* x) const {
    int c[kMaxDim];
    decompose(p, c);
    for (int a = 0; a < n_; ++a) x[a] = coordinate(a, c[a]);
  }

  // Shift along one axis with periodic wrap; returns -1 when the shifted
  // node falls outside a non-periodic window.
  long shift(long p, int axis, int delta) const {
    int c[kMaxDim];
    decompose(p, c);
    int k = c[axis] + delta;
    if (periodic_[axis]) {
      k %= dims_[axis];
      if (k < 0) k += dims_[axis];
    } else if (k < 0 || k >= dims_[axis]) {
      return -1;
    }
    c[axis] = k;
    return compose(c);
  }

  double scale(int axis, long p) const {
    return scale_[axis].empty() ? 1.0 : scale_[axis][p];
  }
  double pou_weight(long p) const { return pou_.empty() ? 1.0 : pou_[p]; }
  double cell_volume() const { return cell_vol_; }

  // Interior = at least `margin` nodes away from every non-periodic edge.
  bool interior(long p, int margin) const;

  // theta window of a sphere patch (used by the monopole construction).
  double window_lo(int axis) const { return win_lo_[axis]; }
  double window_hi(int axis) const { return win_hi_[axis]; }

 private:
  std::string id_;
  int n_ = 0;
  FrameMetric metric_;
  std::array<int, kMaxDim> dims_{};
  std::array<double, kMaxDim> spacing_{};
  std::array<double, kMaxDim> origin_{};
  std::array<double, kMaxDim> win_lo_{};
  std::array<double, kMaxDim> win_hi_{};
  std::array<bool, kMaxDim> periodic_{};
  std::array<long, kMaxDim> stride_{};
  long total_ = 0;
  double cell_vol_ = 1.0;
  bool flat_scales_ = true;
  std::array<std::vector<double>, kMaxDim> scale_;
  std::vector<double> pou_;

  void finish();
};

// Smooth partition-of-unity profile: 1 below lo, 0 above hi, cos^2 ramp
// between (C^1 at both ends).
double pou_profile(double t, double lo, double hi);

}  // namespace gauge
