// cutdg: run, converge, eigen and tv experiments; every command writes CSV.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "config.hpp"
#include "cutdg/analysis.hpp"
#include "cutdg/csv.hpp"
#include "cutdg/limiter.hpp"
#include "cutdg/scenario.hpp"

using namespace cutdg;
using cli::Options;

namespace {

// Command line values override the config file only when given.
struct Overrides {
  std::string config;
  std::optional<std::string> problem, cut_mode, flux, limiter, scheme, weights, out, tv_out;
  std::optional<int> degree;
  std::optional<std::size_t> cells;
  std::optional<double> alpha, cfl, t_final, tvb_m, gamma_m, gamma_a;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> snapshots, elements, region, converge_cells;
  std::optional<std::string> degrees, alphas, stabilized, eigenvalues_out;
  std::optional<std::size_t> steps, trials;
  std::optional<std::uint64_t> tv_seed;
  std::optional<std::string> init;
  bool no_stabilization = false;
};

void add_common(CLI::App* sub, Overrides& o) {
  sub->add_option("-c,--config", o.config, "INI configuration file");
  sub->add_option("--problem", o.problem,
                  "linear_advection | linear_nonsmooth_initial | linear_nonsmooth_bc | "
                  "burgers_smooth | burgers_riemann_rarefaction | burgers_riemann_shock");
  sub->add_option("--degree", o.degree, "polynomial degree r (0..4)");
  sub->add_option("--cells", o.cells, "number of background elements N");
  sub->add_option("--alpha", o.alpha, "cut fraction (base fraction for random cuts)");
  sub->add_option("--cut-mode", o.cut_mode, "default | none | boundary | interior | random");
  sub->add_option("--elements", o.elements, "interior cut elements, comma separated, 0-based");
  sub->add_option("--region", o.region, "random cut region 'a,b'");
  sub->add_option("--seed", o.seed, "random cut seed");
  sub->add_option("--cfl", o.cfl, "Courant number; <= 0 picks the problem default");
  sub->add_option("--t-final", o.t_final, "final time");
  sub->add_option("--flux", o.flux, "upwind | godunov | lax_friedrichs");
  sub->add_option("--scheme", o.scheme, "euler | ssprk3 | ssprk54");
  sub->add_option("--limiter", o.limiter, "none | tvb | modified");
  sub->add_option("--tvb-m", o.tvb_m, "TVB constant M");
  sub->add_option("--gamma-m", o.gamma_m, "mass penalty gamma_M");
  sub->add_option("--gamma-a", o.gamma_a, "stiffness penalty gamma_A");
  sub->add_option("--penalty-weights", o.weights, "factorial | legendre");
  sub->add_flag("--no-stabilization", o.no_stabilization, "turn the ghost penalty off");
  sub->add_option("-o,--out", o.out, "output CSV path ('-' for stdout)");
}

Options resolve(const Overrides& o) {
  Options opt = o.config.empty() ? Options{} : cli::load_config(o.config);
  RunConfig& c = opt.run;
  if (o.problem) c.problem = parse_problem(*o.problem);
  if (o.degree) c.degree = *o.degree;
  if (o.cells) c.cells = *o.cells;
  if (o.alpha) c.cut.alpha = *o.alpha;
  if (o.cut_mode) c.cut.mode = parse_cut_mode(*o.cut_mode);
  if (o.elements) c.cut.elements = cli::parse_sizes(*o.elements);
  if (o.region) {
    const auto r = cli::parse_doubles(*o.region);
    if (r.size() != 2) throw std::invalid_argument("--region: expected two numbers a,b");
    c.cut.region = Interval{r[0], r[1]};
  }
  if (o.seed) c.cut.seed = *o.seed;
  if (o.cfl) c.cfl = *o.cfl;
  if (o.t_final) c.t_final = *o.t_final;
  if (o.flux) c.flux = parse_numerical_flux(*o.flux);
  if (o.scheme) c.scheme = parse_time_scheme(*o.scheme);
  if (o.limiter || o.tvb_m) {
    c.limiter = cli::make_limiter(o.limiter.value_or(cli::limiter_name(c.limiter)),
                                  o.tvb_m.value_or(cli::limiter_m(c.limiter)));
  }
  if (o.gamma_m) c.stabilization.gamma_m = *o.gamma_m;
  if (o.gamma_a) c.stabilization.gamma_a = *o.gamma_a;
  if (o.weights) c.stabilization.weights = parse_penalty_weights(*o.weights);
  if (o.no_stabilization) {
    c.stabilization.enabled = false;
    c.stabilization.gamma_m = 0.0;
    c.stabilization.gamma_a = 0.0;
  }
  if (o.out) c.out = *o.out;
  if (o.tv_out) opt.tv_out = *o.tv_out;
  if (o.snapshots) c.snapshot_times = cli::parse_doubles(*o.snapshots);
  if (o.converge_cells) c.converge_cells = cli::parse_sizes(*o.converge_cells);

  if (o.degrees) opt.eigen.degrees = cli::parse_ints(*o.degrees);
  if (o.alphas) opt.eigen.alphas = cli::parse_doubles(*o.alphas);
  if (o.alpha && !o.alphas) opt.eigen.alphas = {*o.alpha};
  if (o.stabilized) opt.eigen.stabilized = cli::parse_stabilized(*o.stabilized);
  if (o.cells) opt.eigen.cells = *o.cells;
  if (o.cut_mode) opt.eigen.cut = parse_cut_mode(*o.cut_mode);
  if (o.eigenvalues_out) opt.eigen.eigenvalues_out = *o.eigenvalues_out;

  if (o.steps) opt.tv.steps = *o.steps;
  if (o.trials) opt.tv.trials = *o.trials;
  if (o.tv_seed) opt.tv.seed = *o.tv_seed;
  if (o.init) {
    if (*o.init != "problem" && *o.init != "random") {
      throw std::invalid_argument("--init: expected problem or random");
    }
    opt.tv.random_init = *o.init == "random";
  }
  return opt;
}

// Owns a file stream unless the path is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_snapshot(CsvWriter& csv, const ProblemSetup& s, double t, const Vector& u) {
  const CellTraces tr = cell_traces(u, s.mesh, s.degree);
  const int r = s.degree;
  for (std::size_t j = 0; j < s.mesh.num_cells(); ++j) {
    const Interval& p = s.mesh.cell(j).physical;
    csv << t << static_cast<std::uint64_t>(j) << p.a << p.b << tr.average[j] << tr.left[j]
        << tr.right[j];
    for (int k = 0; k <= r; ++k) csv << u[static_cast<Eigen::Index>(j) * (r + 1) + k];
    csv.end_row();
  }
}

int cmd_run(const Options& opt) {
  const ProblemSetup s = make_setup(opt.run);
  const RunResult res = run(s, opt.run.snapshot_times);
  Output out(opt.run.out);
  std::vector<std::string> header = {"t", "cell", "x_left", "x_right", "mean", "left", "right"};
  for (int k = 0; k <= s.degree; ++k) header.push_back("c" + std::to_string(k));
  CsvWriter csv(out.stream(), header);
  for (const Snapshot& snap : res.snapshots) write_snapshot(csv, s, snap.t, snap.u);
  if (!opt.tv_out.empty()) {
    Output tv(opt.tv_out);
    CsvWriter series(tv.stream(), {"step", "t", "tv", "integral"});
    for (std::size_t i = 0; i < res.times.size(); ++i) {
      series << static_cast<std::uint64_t>(i) << res.times[i] << res.tv[i] << res.integral[i];
      series.end_row();
    }
  }
  std::cerr << "steps " << res.steps << ", dt " << format_double(s.dt);
  if (res.fallbacks > 0) std::cerr << ", P0 fallbacks " << res.fallbacks;
  std::cerr << '\n';
  return 0;
}

int cmd_converge(const Options& opt) {
  const ConvergenceTable table = converge(opt.run);
  Output out(opt.run.out);
  CsvWriter csv(out.stream(), {"N", "h", "l2", "linf", "l2_rate", "linf_rate"});
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const ConvergenceRow& row = table.rows[i];
    csv << static_cast<std::uint64_t>(row.cells) << row.h << row.error.l2 << row.error.linf;
    if (i == 0) {
      csv << std::string_view{} << std::string_view{};
    } else {
      csv << table.l2.rates[i - 1] << table.linf.rates[i - 1];
    }
    csv.end_row();
  }
  std::cerr << "average rates: L2 " << format_double(table.l2.average) << ", Linf "
            << format_double(table.linf.average) << '\n';
  return 0;
}

CutMesh eigen_mesh(const cli::EigenSweep& e, double alpha) {
  const Interval domain{0.0, 2.0};
  switch (e.cut) {
    case CutMode::None:
      return build_mesh(domain, e.cells, NoCut{});
    case CutMode::Boundary:
    case CutMode::Default:
      return build_mesh(domain, e.cells, BoundaryCut{alpha});
    case CutMode::Interior:
      return build_mesh(domain, e.cells, InteriorCuts{{{e.cells / 2, alpha}}});
    case CutMode::Random:
      break;
  }
  throw std::invalid_argument("eigen: cut must be none, boundary or interior");
}

int cmd_eigen(const Options& opt) {
  const cli::EigenSweep& e = opt.eigen;
  Output out(opt.run.out);
  CsvWriter csv(out.stream(), {"r", "alpha", "stabilized", "cells", "kappa", "max_abs",
                               "max_real", "courant", "inside_rk4"});
  std::unique_ptr<Output> values_out;
  std::unique_ptr<CsvWriter> values;
  if (!e.eigenvalues_out.empty()) {
    values_out = std::make_unique<Output>(e.eigenvalues_out);
    values = std::make_unique<CsvWriter>(
        values_out->stream(), std::vector<std::string>{"r", "alpha", "stabilized", "index", "re",
                                                       "im", "dt_re", "dt_im", "inside_rk4"});
  }
  opt.run.stabilization.validate();
  for (int r : e.degrees) {
    if (r < 0 || r > 4) throw std::invalid_argument("eigen: degrees must lie in 0..4");
    for (double alpha : e.alphas) {
      const CutMesh mesh = eigen_mesh(e, alpha);
      for (bool stabilized : e.stabilized) {
        StabilizationParams p = opt.run.stabilization;
        if (!stabilized) p = StabilizationParams::disabled();
        // P0 has no RK4 Courant number of its own; use its TVD bound.
        const double courant = opt.run.cfl > 0.0 ? opt.run.cfl
                               : r > 0 ? eigen_courant(r)
                                       : tvd_timestep_bound(mesh.min_fraction(), p.gamma_m);
        const SpectrumReport rep = spectrum_report(mesh, r, 1.0, p, courant);
        csv << r << alpha << std::string_view(stabilized ? "true" : "false")
            << static_cast<std::uint64_t>(mesh.num_cells()) << rep.condition << rep.max_abs
            << rep.max_real << courant
            << std::string_view(rep.all_inside_rk4() ? "true" : "false");
        csv.end_row();
        if (!values) continue;
        for (Eigen::Index i = 0; i < rep.eigenvalues.size(); ++i) {
          *values << r << alpha << std::string_view(stabilized ? "true" : "false")
                  << static_cast<std::uint64_t>(i) << rep.eigenvalues[i].real()
                  << rep.eigenvalues[i].imag() << rep.scaled[i].real() << rep.scaled[i].imag()
                  << std::string_view(rep.inside_rk4[i] ? "true" : "false");
          values->end_row();
        }
      }
    }
  }
  return 0;
}

int cmd_tv(const Options& opt) {
  ProblemSetup s = make_setup(opt.run);
  if (opt.tv.steps > 0) s.t_final = static_cast<double>(opt.tv.steps) * s.dt;
  if (opt.tv.trials == 0) throw std::invalid_argument("tv: trials must be positive");
  Output out(opt.run.out);
  CsvWriter csv(out.stream(), {"trial", "step", "t", "tv", "integral"});
  SplitMix64 rng(opt.tv.seed);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t trial = 0; trial < opt.tv.trials; ++trial) {
    Vector u0 = initial_state(s);
    if (opt.tv.random_init) {
      // Random cell averages in [-1, 1], higher modes zero.
      u0.setZero();
      for (std::size_t j = 0; j < s.mesh.num_cells(); ++j) {
        u0[static_cast<Eigen::Index>(j) * (s.degree + 1)] = rng.uniform(-1.0, 1.0);
      }
    }
    const RunResult res = run_from(s, std::move(u0));
    for (std::size_t i = 0; i < res.times.size(); ++i) {
      csv << static_cast<std::uint64_t>(trial) << static_cast<std::uint64_t>(i) << res.times[i]
          << res.tv[i] << res.integral[i];
      csv.end_row();
      if (i > 0) worst = std::max(worst, res.tv[i] - res.tv[i - 1]);
    }
  }
  std::cerr << "max TV increase per step " << format_double(worst) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ghost-penalty stabilized cut DG for 1D scalar conservation laws"};
  app.require_subcommand(1);
  Overrides o;

  auto* run_cmd = app.add_subcommand("run", "solve one problem and write solution snapshots");
  add_common(run_cmd, o);
  run_cmd->add_option("--snapshots", o.snapshots, "extra output times, comma separated");
  run_cmd->add_option("--tv-out", o.tv_out, "also write the TV and integral time series here");

  auto* conv_cmd = app.add_subcommand("converge", "error table over a sequence of meshes");
  add_common(conv_cmd, o);
  conv_cmd->add_option("--converge-cells", o.converge_cells, "N list, comma separated");

  auto* eig_cmd = app.add_subcommand("eigen", "conditioning and spectra of the linear operator");
  add_common(eig_cmd, o);
  eig_cmd->add_option("--degrees", o.degrees, "degrees, comma separated");
  eig_cmd->add_option("--alphas", o.alphas, "cut fractions, comma separated");
  eig_cmd->add_option("--stabilized", o.stabilized, "on | off | both");
  eig_cmd->add_option("--eigenvalues-out", o.eigenvalues_out, "write every eigenvalue here");

  auto* tv_cmd = app.add_subcommand("tv", "total variation time series");
  add_common(tv_cmd, o);
  tv_cmd->add_option("--steps", o.steps, "number of steps (default: run to t_final)");
  tv_cmd->add_option("--trials", o.trials, "number of trials");
  tv_cmd->add_option("--tv-seed", o.tv_seed, "seed of the random initial states");
  tv_cmd->add_option("--init", o.init, "problem | random");

  CLI11_PARSE(app, argc, argv);

  try {
    const Options opt = resolve(o);
    if (*run_cmd) return cmd_run(opt);
    if (*conv_cmd) return cmd_converge(opt);
    if (*eig_cmd) return cmd_eigen(opt);
    return cmd_tv(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
