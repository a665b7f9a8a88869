// Command line front end: scenario verification runs with machine-readable
// reports, plus file import/export for curves, flow traces and trajectories.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "gauge/kaluza_klein.hpp"
#include "gauge/maxwell.hpp"
#include "gauge/random_fields.hpp"
#include "gauge/scenario.hpp"
#include "gauge/serialize.hpp"
#include "gauge/transport.hpp"
#include "gauge/yang_mills.hpp"

using namespace gauge;

namespace {

constexpr double kTau = 6.283185307179586476925287;

struct CliOptions {
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 7;
  long resolution = 0;
  double step = 0;
};

void write_output(const CliOptions& opt, const std::string& body) {
  if (opt.out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(opt.out_path);
  if (!f) throw ConfigError("cannot open output file: " + opt.out_path);
  f << body;
}

ScenarioParams make_params(const CliOptions& opt) {
  ScenarioParams p;
  p.seed = opt.seed;
  p.resolution = opt.resolution;
  p.step = opt.step;
  if (!opt.config_path.empty()) p.config = Config::parse_file(opt.config_path);
  return p;
}

int finish(const CliOptions& opt, const std::vector<Report>& reports) {
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.overall_pass();
  write_output(opt, opt.format == "text" ? to_text(reports) : to_json(reports));
  return pass ? 0 : 1;
}

int finish(const CliOptions& opt, const Report& report) {
  write_output(opt, opt.format == "text" ? to_text(report) : to_json(report));
  return report.overall_pass() ? 0 : 1;
}

// Transport along a curve loaded from a column file (t, coordinates) under
// a configured abelian uniform field; the resulting group element lands in
// the report parameters.
Report run_curve_transport(const ScenarioParams& p,
                           const std::string& curve_path) {
  std::ifstream f(curve_path);
  if (!f) throw ConfigError("cannot open curve file: " + curve_path);
  std::vector<double> ts;
  std::vector<std::vector<double>> pts;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double t;
    if (!(ls >> t)) throw ConfigError("bad curve row: " + line);
    std::vector<double> x;
    double v;
    while (ls >> v) x.push_back(v);
    if (x.empty()) throw ConfigError("curve row without coordinates");
    ts.push_back(t);
    pts.push_back(x);
  }
  bool closed = p.config.get_int("holonomy", "closed", 0) != 0;
  SampledCurve sc(ts, pts, closed);
  if (sc.dim() != 2)
    throw ConfigError("curve transport expects 2d chart coordinates");

  double F0 = p.config.get_real("holonomy", "field", 0.9);
  double extent = p.config.get_real("holonomy", "extent", 2.0);
  auto ch = Chart::window("w", {32, 32}, {-extent, -extent}, {extent, extent},
                          FrameMetric::euclidean(2));
  ConnectionState<std::complex<double>> c;
  c.group = Algebra::u1;
  c.omega = FormField<std::complex<double>>(ch, 1);
  c.omega_fn = [F0](const double* x, int axis) {
    return axis == 0 ? std::complex<double>(0, -0.5 * F0 * x[1])
                     : std::complex<double>(0, 0.5 * F0 * x[0]);
  };
  double step = p.step > 0 ? p.step : 1e-3;
  auto op = transport(c, sc.view(), step);

  Report rep;
  rep.scenario = "holonomy";
  rep.parameters = {{"curve", curve_path},
                    {"field", std::to_string(F0)},
                    {"transport_re", std::to_string(op.value.real())},
                    {"transport_im", std::to_string(op.value.imag())}};
  rep.add_bound("group-closure", "transport lands in U(1)",
                std::abs(std::abs(op.value) - 1.0), 1e-10);
  return rep;
}

void export_flow_trace(const ScenarioParams& p, const std::string& trace_path,
                       const std::string& state_path) {
  long res = p.resolution > 0 ? p.resolution : 16;
  auto ch = Chart::torus("t4", std::vector<int>(4, int(res)),
                         std::vector<double>(4, kTau),
                         FrameMetric::euclidean(4));
  ConnectionState<std::complex<double>> c;
  c.group = Algebra::u1;
  c.omega = random_form_field<std::complex<double>>(
      ch, 1, p.seed + 27, {std::complex<double>(0, 1)}, 0.2, 1);
  double r0 = ym_residual(c);
  YMConfig cfg;
  cfg.step_size = 0.04;
  cfg.tol = 1e-8 * r0;
  cfg.max_iter = 500;
  auto [cf, trace] = ym_flow(c, cfg);
  if (!trace_path.empty()) {
    std::ofstream f(trace_path);
    if (!f) throw ConfigError("cannot open trace file: " + trace_path);
    f << "iteration,action,residual\n";
    char buf[96];
    for (const auto& s : trace.samples) {
      std::snprintf(buf, sizeof buf, "%ld,%.17g,%.17g\n", s.iteration, s.action,
                    s.residual);
      f << buf;
    }
  }
  if (!state_path.empty()) {
    std::ofstream f(state_path);
    if (!f) throw ConfigError("cannot open state file: " + state_path);
    save_field(f, cf.omega, algebra_name(cf.group));
  }
}

void export_kk_trajectory(const ScenarioParams& p, const std::string& path) {
  double step = p.step > 0 ? p.step : 1e-3;
  double F0 = p.config.get_real("kk-geodesic", "field", 0.9);
  double T = p.config.get_real("kk-geodesic", "horizon", 10.0);
  std::string group = p.config.get("kk-geodesic", "group", "u1");
  BundleState s0;
  s0.base = {p.config.get_real("kk-geodesic", "x0", 0.0),
             p.config.get_real("kk-geodesic", "x1", 0.0)};
  s0.u = {p.config.get_real("kk-geodesic", "u0", 1.0),
          p.config.get_real("kk-geodesic", "u1", 0.0)};
  BundleSpec b;
  if (group == "u1") {
    std::vector<double> Ftab = {0.0, F0, -F0, 0.0};
    b = BundleSpec::constant_field(2, 1, {0.0}, Ftab, {-50, -50}, {50, 50});
    s0.q = {p.config.get_real("kk-geodesic", "charge", 0.8)};
  } else if (group == "su2") {
    std::vector<double> Cs(27, 0.0);
    const double r2 = std::sqrt(2.0);
    auto set = [&](int g, int si, int be, double v) {
      Cs[(g * 3 + si) * 3 + be] = v;
    };
    set(2, 0, 1, r2); set(2, 1, 0, -r2);
    set(0, 1, 2, r2); set(0, 2, 1, -r2);
    set(1, 2, 0, r2); set(1, 0, 2, -r2);
    std::vector<double> Ftab(3 * 4, 0.0);
    Ftab[(2 * 2 + 0) * 2 + 1] = F0;
    Ftab[(2 * 2 + 1) * 2 + 0] = -F0;
    b = BundleSpec::constant_field(2, 3, Cs, Ftab, {-50, -50}, {50, 50});
    b.group_tag = Algebra::su2;
    b.basis2 = {std::sqrt(2.0) * su2_basis(0), std::sqrt(2.0) * su2_basis(1),
                std::sqrt(2.0) * su2_basis(2)};
    s0.q = {p.config.get_real("kk-geodesic", "charge0", 0.05),
            p.config.get_real("kk-geodesic", "charge1", -0.1),
            p.config.get_real("kk-geodesic", "charge2", 0.6)};
  } else {
    throw ConfigError("unknown kk-geodesic group: " + group);
  }
  auto traj = kk_geodesic(b, s0, T, step);
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot open trajectory file: " + path);
  f << "t";
  for (int i = 0; i < b.base_dim; ++i) f << ",x" << i;
  for (int i = 0; i < b.base_dim; ++i) f << ",u" << i;
  for (int sdx = 0; sdx < b.fiber_dim; ++sdx) f << ",q" << sdx;
  f << "\n";
  char buf[64];
  for (size_t k = 0; k < traj.t.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", traj.t[k]);
    f << buf;
    for (int i = 0; i < b.base_dim; ++i) {
      std::snprintf(buf, sizeof buf, ",%.17g", traj.base[k][i]);
      f << buf;
    }
    for (int i = 0; i < b.base_dim; ++i) {
      std::snprintf(buf, sizeof buf, ",%.17g", traj.u[k][i]);
      f << buf;
    }
    for (int sdx = 0; sdx < b.fiber_dim; ++sdx) {
      std::snprintf(buf, sizeof buf, ",%.17g", traj.q[k][sdx]);
      f << buf;
    }
    f << "\n";
  }
}

// Residual report for a named symbolic preset.
Report run_maxwell_preset(const ScenarioParams& p) {
  std::string preset = p.config.get("maxwell", "preset", "");
  long res = p.resolution > 0 ? p.resolution : 12;
  auto ch = Chart::torus("m4", std::vector<int>(4, int(res)),
                         std::vector<double>(4, kTau),
                         FrameMetric::minkowski());
  long N = ch->total();
  std::array<std::vector<double>, 3> E{std::vector<double>(N, 0.0),
                                       std::vector<double>(N, 0.0),
                                       std::vector<double>(N, 0.0)};
  auto B = E;
  std::vector<double> rho(N, 0.0);
  auto j = E;
  double x[kMaxDim];
  if (preset == "uniform-b") {
    for (long q = 0; q < N; ++q) B[2][q] = 1.0;
  } else if (preset == "uniform-e") {
    for (long q = 0; q < N; ++q) E[0][q] = 1.0;
  } else if (preset == "plane-wave") {
    for (long q = 0; q < N; ++q) {
      ch->point(q, x);
      E[0][q] = std::cos(x[2] - x[3]);
      B[1][q] = std::cos(x[2] - x[3]);
    }
  } else if (preset == "gauss") {
    for (long q = 0; q < N; ++q) {
      ch->point(q, x);
      E[0][q] = std::sin(x[0]);
      rho[q] = std::cos(x[0]);
    }
  } else {
    throw ConfigError("unknown maxwell preset: " + preset);
  }
  auto F = assemble_F(ch, E, B);
  auto J = assemble_J(ch, rho, j);
  auto [r1, r2] = maxwell_residuals(F, J);
  double tol = p.config.get_real("maxwell", "tolerance", 1e-2);
  Report rep;
  rep.scenario = "maxwell";
  rep.parameters = {{"preset", preset}, {"resolution", std::to_string(res)}};
  rep.add_bound("dF", "dF = 0", r1, tol);
  rep.add_bound("codF", "*d*F = J", r2, tol);
  rep.add_bound("continuity", "d*J = 0", continuity_residual(J), tol);
  return rep;
}

// Residual report for field data loaded from files.
Report run_maxwell_files(const ScenarioParams& p) {
  Report rep;
  rep.scenario = "maxwell";
  std::string f_file = p.config.get("maxwell", "f_file", "");
  std::string j_file = p.config.get("maxwell", "j_file", "");
  std::ifstream ff(f_file);
  if (!ff) throw ConfigError("cannot open field file: " + f_file);
  auto F = load_field<double>(ff);
  FormField<double> J(F.chart_ptr(), 1);
  if (!j_file.empty()) {
    std::ifstream jf(j_file);
    if (!jf) throw ConfigError("cannot open current file: " + j_file);
    J = load_field<double>(jf);
  }
  auto [r1, r2] = maxwell_residuals(F, J);
  double tol = p.config.get_real("maxwell", "tolerance", 1e-6);
  rep.parameters = {{"f_file", f_file}, {"j_file", j_file}};
  rep.add_bound("dF", "dF = 0", r1, tol);
  rep.add_bound("codF", "*d*F = J", r2, tol);
  rep.add_bound("continuity", "d*J = 0", continuity_residual(J), tol);
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gauge field verification scenarios"};
  app.require_subcommand(1);

  CliOptions opt;
  app.add_option("--config", opt.config_path, "key=value config file");
  app.add_option("--out", opt.out_path, "write the report here");
  app.add_option("--format", opt.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opt.seed, "seed for randomized fields");
  app.add_option("--resolution", opt.resolution, "grid resolution override");
  app.add_option("--step", opt.step, "integrator step override");

  std::string curve_path, trace_path, state_path, trajectory_path;
  for (const auto& name : scenario_names())
    app.add_subcommand(name, "run the " + name + " checks")->fallthrough();
  app.get_subcommand("holonomy")
      ->add_option("--curve", curve_path, "column file: t, coordinates");
  app.get_subcommand("ym-flow")
      ->add_option("--trace-out", trace_path, "write the flow trace CSV");
  app.get_subcommand("ym-flow")
      ->add_option("--state-out", state_path, "write the relaxed state");
  app.get_subcommand("kk-geodesic")
      ->add_option("--trajectory-out", trajectory_path,
                   "write the sampled trajectory CSV");
  CLI::App* suite = app.add_subcommand("suite", "run every scenario");
  suite->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ScenarioParams params = make_params(opt);
    if (suite->parsed()) return finish(opt, run_suite(params));
    for (const auto& name : scenario_names()) {
      if (!app.get_subcommand(name)->parsed()) continue;
      if (name == "holonomy" && !curve_path.empty())
        return finish(opt, run_curve_transport(params, curve_path));
      if (name == "maxwell" && params.config.has("maxwell", "f_file"))
        return finish(opt, run_maxwell_files(params));
      if (name == "maxwell" && params.config.has("maxwell", "preset"))
        return finish(opt, run_maxwell_preset(params));
      Report rep = run_scenario(name, params);
      if (name == "ym-flow" && (!trace_path.empty() || !state_path.empty()))
        export_flow_trace(params, trace_path, state_path);
      if (name == "kk-geodesic" && !trajectory_path.empty())
        export_kk_trajectory(params, trajectory_path);
      return finish(opt, rep);
    }
    throw ConfigError("no subcommand selected");
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
