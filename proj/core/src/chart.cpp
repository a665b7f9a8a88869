#include "gauge/chart.hpp"

#include <cmath>

namespace gauge {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void Chart::finish() {
  total_ = 1;
  for (int a = 0; a < n_; ++a) total_ *= dims_[a];
  long s = 1;
  for (int a = n_ - 1; a >= 0; --a) {
    stride_[a] = s;
    s *= dims_[a];
  }
  cell_vol_ = 1.0;
  for (int a = 0; a < n_; ++a) cell_vol_ *= spacing_[a];
  flat_scales_ = true;
  for (int a = 0; a < n_; ++a)
    if (!scale_[a].empty()) flat_scales_ = false;
}

std::shared_ptr<Chart> Chart::torus(std::string id, std::vector<int> dims,
                                    std::vector<double> lengths,
                                    FrameMetric metric) {
  auto c = std::make_shared<Chart>();
  c->id_ = std::move(id);
  c->n_ = static_cast<int>(dims.size());
  c->metric_ = metric;
  if (c->n_ != metric.dim() || lengths.size() != dims.size())
    throw ShapeError("chart dimension mismatch");
  for (int a = 0; a < c->n_; ++a) {
    if (dims[a] < 4) throw ShapeError("resolution below 4");
    c->dims_[a] = dims[a];
    c->spacing_[a] = lengths[a] / dims[a];
    c->origin_[a] = 0.0;
    c->win_lo_[a] = 0.0;
    c->win_hi_[a] = lengths[a];
    c->periodic_[a] = true;
  }
  c->finish();
  return c;
}

std::shared_ptr<Chart> Chart::window(std::string id, std::vector<int> dims,
                                     std::vector<double> lo,
                                     std::vector<double> hi,
                                     FrameMetric metric) {
  auto c = std::make_shared<Chart>();
  c->id_ = std::move(id);
  c->n_ = static_cast<int>(dims.size());
  c->metric_ = metric;
  if (c->n_ != metric.dim()) throw ShapeError("chart dimension mismatch");
  for (int a = 0; a < c->n_; ++a) {
    if (dims[a] < 4) throw ShapeError("resolution below 4");
    c->dims_[a] = dims[a];
    c->spacing_[a] = (hi[a] - lo[a]) / dims[a];
    c->origin_[a] = lo[a] + 0.5 * c->spacing_[a];
    c->win_lo_[a] = lo[a];
    c->win_hi_[a] = hi[a];
    c->periodic_[a] = false;
  }
  c->finish();
  return c;
}

double pou_profile(double t, double lo, double hi) {
  if (t <= lo) return 1.0;
  if (t >= hi) return 0.0;
  double s = (t - lo) / (hi - lo);
  double cs = std::cos(0.5 * kPi * s);
  return cs * cs;
}

std::shared_ptr<Chart> Chart::sphere_patch(Hemisphere which, int n_theta,
                                           int n_phi) {
  auto c = std::make_shared<Chart>();
  const double band_lo = kPi / 3.0, band_hi = 2.0 * kPi / 3.0;
  double t_lo = (which == Hemisphere::north) ? 0.0 : band_lo;
  double t_hi = (which == Hemisphere::north) ? band_hi : kPi;
  c->id_ = (which == Hemisphere::north) ? "s2-north" : "s2-south";
  c->n_ = 2;
  c->metric_ = FrameMetric::euclidean(2);
  c->dims_[0] = n_theta;
  c->dims_[1] = n_phi;
  c->spacing_[0] = (t_hi - t_lo) / n_theta;
  c->spacing_[1] = 2.0 * kPi / n_phi;
  c->origin_[0] = t_lo + 0.5 * c->spacing_[0];
  c->origin_[1] = 0.0;
  c->win_lo_[0] = t_lo;
  c->win_hi_[0] = t_hi;
  c->win_lo_[1] = 0.0;
  c->win_hi_[1] = 2.0 * kPi;
  c->periodic_[0] = false;
  c->periodic_[1] = true;
  c->finish();

  c->scale_[1].resize(c->total_);
  c->pou_.resize(c->total_);
  for (long p = 0; p < c->total_; ++p) {
    int coords[kMaxDim];
    c->decompose(p, coords);
    double theta = c->coordinate(0, coords[0]);
    c->scale_[1][p] = std::sin(theta);
    c->pou_[p] = (which == Hemisphere::north)
                     ? pou_profile(theta, band_lo, band_hi)
                     : 1.0 - pou_profile(theta, band_lo, band_hi);
  }
  c->flat_scales_ = false;
  return c;
}

std::shared_ptr<Chart> Chart::sphere_band(double theta_lo, double theta_hi,
                                          int n_theta, int n_phi) {
  auto c = std::make_shared<Chart>();
  c->id_ = "s2-band";
  c->n_ = 2;
  c->metric_ = FrameMetric::euclidean(2);
  c->dims_[0] = n_theta;
  c->dims_[1] = n_phi;
  c->spacing_[0] = (theta_hi - theta_lo) / n_theta;
  c->spacing_[1] = 2.0 * kPi / n_phi;
  c->origin_[0] = theta_lo + 0.5 * c->spacing_[0];
  c->origin_[1] = 0.0;
  c->win_lo_[0] = theta_lo;
  c->win_hi_[0] = theta_hi;
  c->win_lo_[1] = 0.0;
  c->win_hi_[1] = 2.0 * kPi;
  c->periodic_[0] = false;
  c->periodic_[1] = true;
  c->finish();
  c->scale_[1].resize(c->total_);
  for (long p = 0; p < c->total_; ++p) {
    int coords[kMaxDim];
    c->decompose(p, coords);
    c->scale_[1][p] = std::sin(c->coordinate(0, coords[0]));
  }
  c->flat_scales_ = false;
  return c;
}

bool Chart::interior(long p, int margin) const {
  int coords[kMaxDim];
  decompose(p, coords);
  for (int a = 0; a < n_; ++a) {
    if (periodic_[a]) continue;
    if (coords[a] < margin || coords[a] >= dims_[a] - margin) return false;
  }
  return true;
}

}  // namespace gauge
