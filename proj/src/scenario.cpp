#include "cutdg/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cutdg/system.hpp"

namespace cutdg {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct ProblemInfo {
  const char* name;
  Problem problem;
};

constexpr ProblemInfo kProblems[] = {
    {"linear_advection", Problem::LinearAdvection},
    {"linear_nonsmooth_initial", Problem::LinearNonsmoothInitial},
    {"linear_nonsmooth_bc", Problem::LinearNonsmoothBc},
    {"burgers_smooth", Problem::BurgersSmooth},
    {"burgers_riemann_rarefaction", Problem::BurgersRiemannRarefaction},
    {"burgers_riemann_shock", Problem::BurgersRiemannShock},
};

bool is_burgers(Problem p) {
  return p == Problem::BurgersSmooth ||
         p == Problem::BurgersRiemannRarefaction ||
         p == Problem::BurgersRiemannShock;
}

bool is_riemann(Problem p) {
  return p == Problem::BurgersRiemannRarefaction ||
         p == Problem::BurgersRiemannShock;
}

Interval problem_domain(Problem p) {
  switch (p) {
    case Problem::LinearNonsmoothInitial:
      return {0.0, 1.0};
    case Problem::BurgersRiemannRarefaction:
    case Problem::BurgersRiemannShock:
      return {-2.0, 2.0};
    default:
      return {0.0, 2.0};
  }
}

double default_t_final(Problem p) {
  switch (p) {
    case Problem::LinearAdvection:
      return 1.0;
    case Problem::LinearNonsmoothInitial:
      return 0.3;
    case Problem::LinearNonsmoothBc:
      return 1.5;
    case Problem::BurgersSmooth:
      return 0.2;
    case Problem::BurgersRiemannRarefaction:
    case Problem::BurgersRiemannShock:
      return 0.5;
  }
  return 1.0;
}

CutMode default_cut_mode(Problem p) {
  switch (p) {
    case Problem::LinearAdvection:
    case Problem::LinearNonsmoothBc:
      return CutMode::Boundary;
    case Problem::LinearNonsmoothInitial:
      return CutMode::Interior;
    default:
      return CutMode::Random;
  }
}

double default_alpha(Problem p) {
  return p == Problem::LinearNonsmoothBc ? 1e-2 : 1e-4;
}

Interval default_region(Problem p, Interval domain) {
  if (p == Problem::BurgersSmooth) return {0.75, 1.25};
  if (is_riemann(p)) return {-0.5, 0.5};
  return domain;
}

double square_pulse(double x) { return (x > 0.1 && x < 0.5) ? 1.0 : 0.0; }

std::pair<double, double> riemann_states(Problem p) {
  return p == Problem::BurgersRiemannShock ? std::pair{1.0, -0.5}
                                           : std::pair{-1.0, 1.0};
}

double default_courant(const RunConfig& c, const CutMesh& mesh) {
  const int r = c.degree;
  switch (c.problem) {
    case Problem::LinearAdvection:
      return r <= 3 ? convergence_courant(r) : 0.1;
    case Problem::LinearNonsmoothInitial:
      if (r == 0) return 0.2;
      if (r == 1) return 0.3;
      return r <= 3 ? convergence_courant(r) : 0.1;
    case Problem::LinearNonsmoothBc:
      return 0.2;
    default:
      return r <= 3 ? burgers_courant(r, mesh.min_fraction(),
                                      c.stabilization.gamma_m)
                    : 0.1;
  }
}

CutMesh make_mesh(const RunConfig& c, Interval domain) {
  const CutMode mode = c.cut.mode == CutMode::Default
                           ? default_cut_mode(c.problem)
                           : c.cut.mode;
  const double alpha = c.cut.alpha.value_or(default_alpha(c.problem));
  switch (mode) {
    case CutMode::None:
      return build_mesh(domain, c.cells, NoCut{});
    case CutMode::Boundary:
      return build_mesh(domain, c.cells, BoundaryCut{alpha});
    case CutMode::Interior: {
      InteriorCuts cuts;
      if (c.cut.elements.empty()) {
        // The element whose left end is the domain midpoint.
        cuts.cuts.push_back({c.cells / 2, alpha});
      } else {
        for (std::size_t e : c.cut.elements) cuts.cuts.push_back({e, alpha});
      }
      return build_mesh(domain, c.cells, cuts);
    }
    case CutMode::Random:
    case CutMode::Default:
      break;
  }
  const Interval region =
      c.cut.region.value_or(default_region(c.problem, domain));
  const std::uint64_t seed = c.cut.seed.value_or(kDefaultSeed);
  return build_mesh(domain, c.cells,
                    random_interior_cuts(domain, c.cells, region, alpha, seed));
}

}  // namespace

Problem parse_problem(std::string_view name) {
  for (const auto& p : kProblems) {
    if (name == p.name) return p.problem;
  }
  std::string msg = "unknown problem '" + std::string(name) + "' (expected";
  for (const auto& p : kProblems) msg += std::string(" ") + p.name;
  throw std::invalid_argument(msg + ")");
}

std::string to_string(Problem p) {
  for (const auto& info : kProblems) {
    if (info.problem == p) return info.name;
  }
  return "unknown";
}

CutMode parse_cut_mode(std::string_view name) {
  if (name == "default") return CutMode::Default;
  if (name == "none") return CutMode::None;
  if (name == "boundary") return CutMode::Boundary;
  if (name == "interior") return CutMode::Interior;
  if (name == "random") return CutMode::Random;
  throw std::invalid_argument(
      "unknown cut mode '" + std::string(name) +
      "' (expected default, none, boundary, interior or random)");
}

std::string to_string(CutMode m) {
  switch (m) {
    case CutMode::Default:
      return "default";
    case CutMode::None:
      return "none";
    case CutMode::Boundary:
      return "boundary";
    case CutMode::Interior:
      return "interior";
    case CutMode::Random:
      return "random";
  }
  return "unknown";
}

void validate(const RunConfig& c) {
  if (c.degree < 0 || c.degree > 4) {
    throw std::invalid_argument("degree must be in 0..4");
  }
  if (c.cells < 3) throw std::invalid_argument("cells must be >= 3");
  if (c.t_final && !(*c.t_final >= 0.0)) {
    throw std::invalid_argument("t_final must be >= 0");
  }
  if (!std::isfinite(c.cfl)) throw std::invalid_argument("cfl must be finite");
  if (c.cut.alpha && !(*c.cut.alpha > 0.0 && *c.cut.alpha <= 1.0)) {
    throw std::invalid_argument("cut alpha must lie in (0, 1]");
  }
  if (c.cut.mode == CutMode::Random && !c.cut.seed) {
    throw std::invalid_argument("random cuts need an explicit seed");
  }
  if (c.problem == Problem::LinearNonsmoothInitial &&
      (c.cut.mode == CutMode::Default || c.cut.mode == CutMode::Interior) &&
      c.cut.elements.empty() && c.cells % 2 != 0) {
    throw std::invalid_argument(
        "linear_nonsmooth_initial cuts the element starting at x = 0.5, "
        "which needs an even number of cells");
  }
  if (c.flux) {
    const bool burgers = is_burgers(c.problem);
    if (*c.flux == NumericalFlux::Upwind && burgers) {
      throw std::invalid_argument("upwind flux needs a linear problem");
    }
    if (*c.flux == NumericalFlux::Godunov && !burgers) {
      throw std::invalid_argument("Godunov flux is available for Burgers only");
    }
  }
  c.stabilization.validate();
  validate(c.limiter);
  for (double t : c.snapshot_times) {
    if (!(t >= 0.0)) throw std::invalid_argument("snapshot times must be >= 0");
  }
}

ProblemSetup make_setup(const RunConfig& c) {
  validate(c);
  const Interval domain = problem_domain(c.problem);
  CutMesh mesh = make_mesh(c, domain);
  const double courant = c.cfl > 0.0 ? c.cfl : default_courant(c, mesh);
  const double t_final = c.t_final.value_or(default_t_final(c.problem));
  constexpr double pi = std::numbers::pi;

  FluxFunction flux = is_burgers(c.problem) ? FluxFunction::burgers()
                                            : FluxFunction::linear(1.0);
  NumericalFlux nflux = c.flux.value_or(
      is_burgers(c.problem) ? NumericalFlux::Godunov : NumericalFlux::Upwind);
  BoundaryCondition bc = Periodic{};
  ScalarFunction u0;
  SpaceTimeFunction exact;

  switch (c.problem) {
    case Problem::LinearAdvection:
      u0 = [](double x) { return 1.0 + 0.5 * std::sin(pi * x); };
      exact = [](double x, double t) {
        return 1.0 + 0.5 * std::sin(pi * (x - t));
      };
      break;
    case Problem::LinearNonsmoothInitial:
      u0 = square_pulse;
      exact = [](double x, double t) {
        double s = std::fmod(x - t, 1.0);
        if (s < 0.0) s += 1.0;
        return square_pulse(s);
      };
      break;
    case Problem::LinearNonsmoothBc: {
      auto g = [](double t) { return t <= 1.0 ? 0.0 : -1.0; };
      bc = Inflow{g};
      u0 = [](double) { return 0.0; };
      exact = [g, a = domain.a](double x, double t) {
        const double tau = t - (x - a);
        return tau > 0.0 ? g(tau) : 0.0;
      };
      break;
    }
    case Problem::BurgersSmooth:
      u0 = [](double x) { return std::sin(pi * x); };
      if (t_final < 1.0 / pi) exact = burgers_presock_exact;
      break;
    case Problem::BurgersRiemannRarefaction:
    case Problem::BurgersRiemannShock: {
      const auto [ul, ur] = riemann_states(c.problem);
      bc = Inflow{[ul = ul](double) { return ul; }};
      u0 = [ul = ul, ur = ur](double x) { return x <= 0.0 ? ul : ur; };
      exact = [ul = ul, ur = ur](double x, double t) {
        return burgers_riemann_exact(ul, ur, x, t);
      };
      break;
    }
  }

  const double h = mesh.h();
  const int r = c.degree;
  return ProblemSetup{domain,
                      std::move(mesh),
                      r,
                      flux,
                      nflux,
                      std::move(bc),
                      std::move(u0),
                      std::move(exact),
                      courant,
                      courant * h,
                      t_final,
                      c.scheme.value_or(default_time_scheme(r)),
                      c.limiter,
                      c.stabilization};
}

Vector initial_state(const ProblemSetup& s) {
  const auto& p = s.stabilization;
  if (p.enabled && p.gamma_m > 0.0) {
    return stabilized_l2_project(s.u0, s.mesh, s.degree, p).values();
  }
  return l2_project(s.u0, s.mesh, s.degree).values();
}

RunResult run(const ProblemSetup& s, const std::vector<double>& snapshot_times) {
  return run_from(s, initial_state(s), snapshot_times);
}

RunResult run_from(const ProblemSetup& s, Vector u,
                   const std::vector<double>& snapshot_times) {
  const SpatialOperator op(s.mesh, s.degree, s.flux, s.numerical_flux,
                           s.stabilization, s.bc);
  if (u.size() != op.num_dofs()) {
    throw std::invalid_argument("initial state has the wrong number of coefficients");
  }
  CutDGSystem system(op, s.limiter);
  const bool periodic = is_periodic(s.bc);

  RunResult res;
  auto record = [&](std::size_t, double t, const Vector& u) {
    res.times.push_back(t);
    res.tv.push_back(total_variation(op.cell_averages(u), periodic));
    res.integral.push_back(op.integral(u));
  };

  std::vector<double> stops;
  for (double t : snapshot_times) {
    if (t < s.t_final) stops.push_back(t);
  }
  std::sort(stops.begin(), stops.end());
  stops.push_back(s.t_final);

  double t = 0.0;
  bool first = true;
  for (double stop : stops) {
    TimeControl control{s.scheme, s.dt, stop, t};
    std::size_t base = res.steps;
    u = advance(control, system, std::move(u),
                [&](std::size_t n, double tn, const Vector& un) {
                  if (n == 0 && !first) return;
                  record(base + n, tn, un);
                  if (n > 0) ++res.steps;
                });
    first = false;
    t = stop;
    if (stop < s.t_final) res.snapshots.push_back({stop, u});
  }
  res.snapshots.push_back({s.t_final, u});
  res.u = std::move(u);
  res.t = s.t_final;
  res.fallbacks = system.fallback_count();
  return res;
}

ConvergenceTable converge(const RunConfig& config) {
  ConvergenceTable table;
  std::vector<double> l2, linf, hs;
  for (std::size_t n : config.converge_cells) {
    RunConfig c = config;
    c.cells = n;
    const ProblemSetup s = make_setup(c);
    if (!s.exact) {
      throw std::invalid_argument("problem has no closed-form solution at t_final");
    }
    const RunResult res = run(s);
    const double tf = s.t_final;
    const ErrorNorms e = error_norms(res.u, s.mesh, s.degree,
                                     [&](double x) { return s.exact(x, tf); });
    table.rows.push_back({n, s.mesh.h(), e});
    l2.push_back(e.l2);
    linf.push_back(e.linf);
    hs.push_back(s.mesh.h());
  }
  table.l2 = convergence_rates(l2, hs);
  table.linf = convergence_rates(linf, hs);
  return table;
}

}  // namespace cutdg
