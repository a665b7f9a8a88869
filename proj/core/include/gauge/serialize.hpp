#pragma once

#include <iosfwd>
#include <string>

#include "gauge/form_field.hpp"

namespace gauge {

// Self-describing column text format, exact decimal round trip via 17
// significant digits. Header lines carry the chart geometry so load()
// reconstructs the grid; each data row is
//   <point index> <multi-index> <re> <im> [<re> <im> ...]
// with one complex pair per matrix entry (imaginary part 0 for real values).

void write_chart_header(std::ostream& os, const Chart& ch);
std::shared_ptr<Chart> read_chart_header(std::istream& is);

namespace detail {
void write_pairs(std::ostream& os, const double* re_im, int pairs);

template <class V>
struct value_io;

template <>
struct value_io<double> {
  static constexpr const char* kind = "real";
  static constexpr int pairs = 1;
  static void pack(const double& v, double* out) { out[0] = v; out[1] = 0; }
  static double unpack(const double* in) { return in[0]; }
};

template <>
struct value_io<std::complex<double>> {
  static constexpr const char* kind = "complex";
  static constexpr int pairs = 1;
  static void pack(const std::complex<double>& v, double* out) {
    out[0] = v.real();
    out[1] = v.imag();
  }
  static std::complex<double> unpack(const double* in) { return {in[0], in[1]}; }
};

template <>
struct value_io<Eigen::Matrix2cd> {
  static constexpr const char* kind = "matrix2c";
  static constexpr int pairs = 4;
  static void pack(const Eigen::Matrix2cd& v, double* out) {
    for (int r = 0, k = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c, k += 2) {
        out[k] = v(r, c).real();
        out[k + 1] = v(r, c).imag();
      }
  }
  static Eigen::Matrix2cd unpack(const double* in) {
    Eigen::Matrix2cd m;
    for (int r = 0, k = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c, k += 2) m(r, c) = {in[k], in[k + 1]};
    return m;
  }
};

template <>
struct value_io<Eigen::Matrix3d> {
  static constexpr const char* kind = "matrix3r";
  static constexpr int pairs = 9;
  static void pack(const Eigen::Matrix3d& v, double* out) {
    for (int r = 0, k = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c, k += 2) {
        out[k] = v(r, c);
        out[k + 1] = 0;
      }
  }
  static Eigen::Matrix3d unpack(const double* in) {
    Eigen::Matrix3d m;
    for (int r = 0, k = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c, k += 2) m(r, c) = in[k];
    return m;
  }
};
}  // namespace detail

template <class V>
void save_field(std::ostream& os, const FormField<V>& f,
                const std::string& group_tag = "") {
  using io = detail::value_io<V>;
  write_chart_header(os, f.chart());
  os << "degree " << f.degree() << "\n";
  os << "values " << io::kind << "\n";
  if (!group_tag.empty()) os << "group " << group_tag << "\n";
  os << "data\n";
  const auto& comps = f.component_index();
  double buf[2 * 9];
  for (long p = 0; p < f.chart().total(); ++p)
    for (size_t ci = 0; ci < comps.size(); ++ci) {
      os << p << ' ' << comps[ci].str();
      io::pack(f.at(static_cast<int>(ci), p), buf);
      detail::write_pairs(os, buf, io::pairs);
      os << "\n";
    }
  os << "end\n";
}

template <class V>
FormField<V> load_field(std::istream& is, std::string* group_tag = nullptr) {
  using io = detail::value_io<V>;
  auto ch = read_chart_header(is);
  std::string key;
  int degree = -1;
  std::string kind, group;
  while (is >> key) {
    if (key == "degree") is >> degree;
    else if (key == "values") is >> kind;
    else if (key == "group") is >> group;
    else if (key == "data") break;
    else throw ConfigError("unknown field header key: " + key);
  }
  if (degree < 0) throw ConfigError("field file missing degree");
  if (kind != io::kind)
    throw TypeError("field file holds '" + kind + "' values");
  if (group_tag) *group_tag = group;
  FormField<V> f(ch, degree);
  const auto& comps = f.component_index();
  std::string tok;
  double buf[2 * 9];
  while (is >> tok) {
    if (tok == "end") break;
    long p = std::stol(tok);
    std::string mi;
    is >> mi;
    int ci = -1;
    for (size_t k = 0; k < comps.size(); ++k)
      if (comps[k].str() == mi) ci = static_cast<int>(k);
    if (ci < 0) throw ConfigError("bad multi-index in field file: " + mi);
    for (int k = 0; k < 2 * io::pairs; ++k) is >> buf[k];
    f.at(ci, p) = io::unpack(buf);
  }
  return f;
}

}  // namespace gauge
