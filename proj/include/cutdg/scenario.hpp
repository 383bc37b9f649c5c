#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cutdg/analysis.hpp"
#include "cutdg/flux.hpp"
#include "cutdg/limiter.hpp"
#include "cutdg/mesh.hpp"
#include "cutdg/operator.hpp"
#include "cutdg/projection.hpp"
#include "cutdg/stabilization.hpp"
#include "cutdg/timestep.hpp"

namespace cutdg {

enum class Problem {
  LinearAdvection,
  LinearNonsmoothInitial,
  LinearNonsmoothBc,
  BurgersSmooth,
  BurgersRiemannRarefaction,
  BurgersRiemannShock,
};

Problem parse_problem(std::string_view name);
std::string to_string(Problem p);

/// `Default` picks the cut layout each problem is defined with.
enum class CutMode { Default, None, Boundary, Interior, Random };

CutMode parse_cut_mode(std::string_view name);
std::string to_string(CutMode m);

struct CutConfig {
  CutMode mode = CutMode::Default;
  std::optional<double> alpha;            // cut fraction, or base fraction
  std::vector<std::size_t> elements;      // interior mode, 0-based
  std::optional<Interval> region;         // random mode
  std::optional<std::uint64_t> seed;      // random mode
};

struct RunConfig {
  Problem problem = Problem::LinearAdvection;
  int degree = 1;
  std::size_t cells = 40;
  CutConfig cut;
  std::optional<NumericalFlux> flux;
  double cfl = 0.0;  // <= 0 selects the problem's Courant number
  std::optional<double> t_final;
  std::optional<TimeScheme> scheme;
  LimiterConfig limiter = NoLimiter{};
  StabilizationParams stabilization;
  std::string out;
  std::vector<double> snapshot_times;
  std::vector<std::size_t> converge_cells = {40, 80, 160, 320, 640};
};

/// Throws std::invalid_argument with a message naming the offending field.
void validate(const RunConfig& config);

using SpaceTimeFunction = std::function<double(double, double)>;

/// Everything needed to run one configured problem.
struct ProblemSetup {
  Interval domain;
  CutMesh mesh;
  int degree;
  FluxFunction flux;
  NumericalFlux numerical_flux;
  BoundaryCondition bc;
  ScalarFunction u0;
  SpaceTimeFunction exact;  // empty if no closed form is available
  double courant;
  double dt;
  double t_final;
  TimeScheme scheme;
  LimiterConfig limiter;
  StabilizationParams stabilization;
};

ProblemSetup make_setup(const RunConfig& config);

struct Snapshot {
  double t;
  Vector u;
};

struct RunResult {
  Vector u;
  double t = 0.0;
  std::size_t steps = 0;
  std::vector<double> times;      // per step, starting with t = 0
  std::vector<double> tv;         // TV of cell averages at `times`
  std::vector<double> integral;   // ∫ u_h at `times`
  std::vector<Snapshot> snapshots;
  std::size_t fallbacks = 0;      // limit calls that restricted a pair to P0
};

/// Stabilized projection of u0 (plain projection when gamma_m = 0).
Vector initial_state(const ProblemSetup& setup);

RunResult run(const ProblemSetup& setup,
              const std::vector<double>& snapshot_times = {});

/// Same as run() but starting from the given coefficient vector.
RunResult run_from(const ProblemSetup& setup, Vector u0,
                   const std::vector<double>& snapshot_times = {});

struct ConvergenceRow {
  std::size_t cells;
  double h;
  ErrorNorms error;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  RateReport l2;
  RateReport linf;
};

/// Runs the problem on every N of config.converge_cells and measures the
/// error against the closed-form solution at t_final.
ConvergenceTable converge(const RunConfig& config);

}  // namespace cutdg
