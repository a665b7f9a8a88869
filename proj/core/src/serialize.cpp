#include "gauge/serialize.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <vector>

namespace gauge {

namespace detail {
void write_pairs(std::ostream& os, const double* re_im, int pairs) {
  char buf[32];
  for (int k = 0; k < 2 * pairs; ++k) {
    std::snprintf(buf, sizeof buf, " %.17g", re_im[k]);
    os << buf;
  }
}
}  // namespace detail

void write_chart_header(std::ostream& os, const Chart& ch) {
  os << "gaugekit-field 1\n";
  os << "chart " << ch.id() << "\n";
  // Geometry is reconstructed from the generator kind.
  std::string kind = "torus";
  if (ch.id() == "s2-north") kind = "sphere_north";
  else if (ch.id() == "s2-south") kind = "sphere_south";
  else {
    for (int a = 0; a < ch.dim(); ++a)
      if (!ch.is_periodic(a)) kind = "window";
  }
  os << "kind " << kind << "\n";
  os << "dim " << ch.dim() << "\n";
  os << "dims";
  for (int a = 0; a < ch.dim(); ++a) os << ' ' << ch.extent(a);
  os << "\nspacing";
  char buf[64];
  for (int a = 0; a < ch.dim(); ++a) {
    std::snprintf(buf, sizeof buf, " %.17g", ch.spacing(a));
    os << buf;
  }
  os << "\nwindow";
  for (int a = 0; a < ch.dim(); ++a) {
    std::snprintf(buf, sizeof buf, " %.17g %.17g", ch.window_lo(a),
                  ch.window_hi(a));
    os << buf;
  }
  os << "\nsignature " << ch.metric().dim() << ' ' << ch.metric().neg_count()
     << "\n";
}

std::shared_ptr<Chart> read_chart_header(std::istream& is) {
  std::string magic;
  int version = 0;
  is >> magic >> version;
  if (magic != "gaugekit-field" || version != 1)
    throw ConfigError("not a gaugekit field file");
  std::string key, id, kind;
  int dim = 0, sig_n = 0, sig_s = 0;
  std::vector<int> dims;
  std::vector<double> spacing, wlo, whi;
  // Header stops at the first key the caller understands ("degree" etc.), so
  // only consume what belongs to the chart.
  while (is >> key) {
    if (key == "chart") is >> id;
    else if (key == "kind") is >> kind;
    else if (key == "dim") is >> dim;
    else if (key == "dims") {
      dims.resize(dim);
      for (auto& d : dims) is >> d;
    } else if (key == "spacing") {
      spacing.resize(dim);
      for (auto& s : spacing) is >> s;
    } else if (key == "window") {
      wlo.resize(dim);
      whi.resize(dim);
      for (int a = 0; a < dim; ++a) is >> wlo[a] >> whi[a];
    } else if (key == "signature") {
      is >> sig_n >> sig_s;
      break;
    } else {
      throw ConfigError("unknown chart header key: " + key);
    }
  }
  FrameMetric metric(sig_n, sig_s);
  if (kind == "torus") {
    std::vector<double> lengths(dim);
    for (int a = 0; a < dim; ++a) lengths[a] = whi[a] - wlo[a];
    return Chart::torus(id, dims, lengths, metric);
  }
  if (kind == "window") return Chart::window(id, dims, wlo, whi, metric);
  if (kind == "sphere_north")
    return Chart::sphere_patch(Chart::Hemisphere::north, dims[0], dims[1]);
  if (kind == "sphere_south")
    return Chart::sphere_patch(Chart::Hemisphere::south, dims[0], dims[1]);
  throw ConfigError("unknown chart kind: " + kind);
}

}  // namespace gauge
