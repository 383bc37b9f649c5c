#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cutdg/analysis.hpp"
#include "cutdg/limiter.hpp"
#include "cutdg/operator.hpp"
#include "cutdg/scenario.hpp"

namespace py = pybind11;
using namespace cutdg;

namespace {

LimiterConfig make_limiter(const std::string& mode, double m) {
  if (mode == "none") return NoLimiter{};
  if (mode == "tvb") return TvbLimiter{m};
  if (mode == "modified") return ModifiedCutLimiter{m};
  throw std::invalid_argument("limiter: expected none, tvb or modified, got '" + mode + "'");
}

RunConfig make_config(const std::string& problem, int degree, std::size_t cells,
                      const std::string& cut_mode, std::optional<double> alpha,
                      std::vector<std::size_t> elements, std::optional<std::pair<double, double>> region,
                      std::optional<std::uint64_t> seed, double cfl, std::optional<double> t_final,
                      std::optional<std::string> flux, std::optional<std::string> scheme,
                      const std::string& limiter, double tvb_m, double gamma_m, double gamma_a,
                      bool stabilization, const std::string& penalty_weights) {
  RunConfig c;
  c.problem = parse_problem(problem);
  c.degree = degree;
  c.cells = cells;
  c.cut.mode = parse_cut_mode(cut_mode);
  c.cut.alpha = alpha;
  c.cut.elements = std::move(elements);
  if (region) c.cut.region = Interval{region->first, region->second};
  c.cut.seed = seed;
  c.cfl = cfl;
  c.t_final = t_final;
  if (flux) c.flux = parse_numerical_flux(*flux);
  if (scheme) c.scheme = parse_time_scheme(*scheme);
  c.limiter = make_limiter(limiter, tvb_m);
  c.stabilization = stabilization
                        ? StabilizationParams{gamma_m, gamma_a, true,
                                              parse_penalty_weights(penalty_weights)}
                        : StabilizationParams::disabled();
  return c;
}

// Keyword arguments shared by run() and converge().
#define CUTDG_CONFIG_ARGS                                                              \
  py::arg("problem") = "linear_advection", py::arg("degree") = 1, py::arg("cells") = 40, \
  py::arg("cut_mode") = "default", py::arg("alpha") = py::none(),                      \
  py::arg("elements") = std::vector<std::size_t>{}, py::arg("region") = py::none(),    \
  py::arg("seed") = py::none(), py::arg("cfl") = 0.0, py::arg("t_final") = py::none(), \
  py::arg("flux") = py::none(), py::arg("scheme") = py::none(),                        \
  py::arg("limiter") = "none", py::arg("tvb_m") = 0.0, py::arg("gamma_m") = 0.25,      \
  py::arg("gamma_a") = 0.75, py::arg("stabilization") = true,                          \
  py::arg("penalty_weights") = "factorial"

py::dict profile(const ProblemSetup& s, const Vector& u) {
  const CellTraces tr = cell_traces(u, s.mesh, s.degree);
  const std::size_t n = s.mesh.num_cells();
  Vector xl(n), xr(n);
  for (std::size_t j = 0; j < n; ++j) {
    xl[j] = s.mesh.cell(j).physical.a;
    xr[j] = s.mesh.cell(j).physical.b;
  }
  py::dict d;
  d["x_left"] = xl;
  d["x_right"] = xr;
  d["mean"] = tr.average;
  d["left"] = tr.left;
  d["right"] = tr.right;
  d["coefficients"] = Matrix(u.reshaped(s.degree + 1, n).transpose());
  return d;
}

}  // namespace

PYBIND11_MODULE(_cutdg, m) {
  m.doc() = "Ghost-penalty stabilized cut DG for 1D scalar conservation laws";

  py::class_<StabilizationParams>(m, "StabilizationParams")
      .def(py::init([](double gamma_m, double gamma_a, bool enabled, const std::string& w) {
             return StabilizationParams{gamma_m, gamma_a, enabled, parse_penalty_weights(w)};
           }),
           py::arg("gamma_m") = 0.25, py::arg("gamma_a") = 0.75, py::arg("enabled") = true,
           py::arg("weights") = "factorial")
      .def_readwrite("gamma_m", &StabilizationParams::gamma_m)
      .def_readwrite("gamma_a", &StabilizationParams::gamma_a)
      .def_readwrite("enabled", &StabilizationParams::enabled)
      .def_property(
          "weights", [](const StabilizationParams& p) { return to_string(p.weights); },
          [](StabilizationParams& p, const std::string& w) { p.weights = parse_penalty_weights(w); })
      .def_static("disabled", &StabilizationParams::disabled);

  py::class_<CutMesh>(m, "CutMesh")
      .def_property_readonly("h", &CutMesh::h)
      .def_property_readonly("num_cells", &CutMesh::num_cells)
      .def_property_readonly("domain", [](const CutMesh& mesh) {
        return std::pair{mesh.domain().a, mesh.domain().b};
      })
      .def_property_readonly("min_fraction", &CutMesh::min_fraction)
      .def_property_readonly("cells", [](const CutMesh& mesh) {
        py::list out;
        for (const Cell& c : mesh.cells()) {
          py::dict d;
          d["physical"] = std::pair{c.physical.a, c.physical.b};
          d["background"] = std::pair{c.background.a, c.background.b};
          d["cut"] = c.cut;
          d["fraction"] = c.fraction;
          out.append(d);
        }
        return out;
      })
      .def_property_readonly("stabilized_faces", [](const CutMesh& mesh) {
        std::vector<std::tuple<double, std::size_t, std::size_t>> out;
        for (const auto& f : mesh.stabilized_faces()) out.emplace_back(f.x, f.left, f.right);
        return out;
      });

  m.def("uniform_mesh", [](double a, double b, std::size_t n) {
    return build_mesh({a, b}, n, NoCut{});
  }, py::arg("a"), py::arg("b"), py::arg("n"));
  m.def("boundary_cut_mesh", [](double a, double b, std::size_t n, double alpha) {
    return build_mesh({a, b}, n, BoundaryCut{alpha});
  }, py::arg("a"), py::arg("b"), py::arg("n"), py::arg("alpha"));
  m.def("interior_cut_mesh",
        [](double a, double b, std::size_t n, const std::vector<std::pair<std::size_t, double>>& cuts) {
          InteriorCuts spec;
          for (const auto& [e, alpha] : cuts) spec.cuts.push_back({e, alpha});
          return build_mesh({a, b}, n, spec);
        },
        py::arg("a"), py::arg("b"), py::arg("n"), py::arg("cuts"),
        "cuts: list of (element, alpha), elements 0-based");
  m.def("random_cut_mesh",
        [](double a, double b, std::size_t n, std::pair<double, double> region, double alpha,
           std::uint64_t seed) {
          return build_mesh({a, b}, n,
                            random_interior_cuts({a, b}, n, {region.first, region.second}, alpha, seed));
        },
        py::arg("a"), py::arg("b"), py::arg("n"), py::arg("region"), py::arg("alpha"),
        py::arg("seed"));

  m.def("assemble_mass", &assemble_mass, py::arg("mesh"), py::arg("degree"),
        py::arg("stabilization") = StabilizationParams{});

  py::class_<SpectrumReport>(m, "SpectrumReport")
      .def_readonly("condition", &SpectrumReport::condition)
      .def_readonly("max_abs", &SpectrumReport::max_abs)
      .def_readonly("max_real", &SpectrumReport::max_real)
      .def_readonly("dt", &SpectrumReport::dt)
      .def_readonly("eigenvalues", &SpectrumReport::eigenvalues)
      .def_readonly("scaled", &SpectrumReport::scaled)
      .def_property_readonly("all_inside_rk4", &SpectrumReport::all_inside_rk4);

  m.def("spectrum_report", &spectrum_report, py::arg("mesh"), py::arg("degree"),
        py::arg("beta") = 1.0, py::arg("stabilization") = StabilizationParams{},
        py::arg("courant") = 0.1, py::arg("rk4_tol") = 1e-8);

  m.def("run",
        [](const std::string& problem, int degree, std::size_t cells, const std::string& cut_mode,
           std::optional<double> alpha, std::vector<std::size_t> elements,
           std::optional<std::pair<double, double>> region, std::optional<std::uint64_t> seed,
           double cfl, std::optional<double> t_final, std::optional<std::string> flux,
           std::optional<std::string> scheme, const std::string& limiter, double tvb_m,
           double gamma_m, double gamma_a, bool stabilization, const std::string& weights,
           const std::vector<double>& snapshots) {
          const RunConfig c = make_config(problem, degree, cells, cut_mode, alpha,
                                          std::move(elements), region, seed, cfl, t_final, flux,
                                          scheme, limiter, tvb_m, gamma_m, gamma_a, stabilization,
                                          weights);
          const ProblemSetup s = make_setup(c);
          RunResult res;
          {
            py::gil_scoped_release release;
            res = run(s, snapshots);
          }
          py::dict out = profile(s, res.u);
          out["t"] = res.t;
          out["steps"] = res.steps;
          out["dt"] = s.dt;
          out["times"] = res.times;
          out["tv"] = res.tv;
          out["integral"] = res.integral;
          out["fallbacks"] = res.fallbacks;
          py::list snaps;
          for (const Snapshot& snap : res.snapshots) {
            py::dict d = profile(s, snap.u);
            d["t"] = snap.t;
            snaps.append(d);
          }
          out["snapshots"] = snaps;
          if (s.exact) {
            const ErrorNorms e = error_norms(res.u, s.mesh, s.degree,
                                             [&](double x) { return s.exact(x, s.t_final); });
            out["error"] = py::make_tuple(e.l2, e.linf);
          }
          return out;
        },
        CUTDG_CONFIG_ARGS, py::arg("snapshots") = std::vector<double>{},
        "Run one configured problem. Returns a dict with the final profile, the TV and "
        "integral series and the requested snapshots.");

  m.def("converge",
        [](const std::string& problem, int degree, std::size_t cells, const std::string& cut_mode,
           std::optional<double> alpha, std::vector<std::size_t> elements,
           std::optional<std::pair<double, double>> region, std::optional<std::uint64_t> seed,
           double cfl, std::optional<double> t_final, std::optional<std::string> flux,
           std::optional<std::string> scheme, const std::string& limiter, double tvb_m,
           double gamma_m, double gamma_a, bool stabilization, const std::string& weights,
           const std::vector<std::size_t>& levels) {
          RunConfig c = make_config(problem, degree, cells, cut_mode, alpha, std::move(elements),
                                    region, seed, cfl, t_final, flux, scheme, limiter, tvb_m,
                                    gamma_m, gamma_a, stabilization, weights);
          c.converge_cells = levels;
          ConvergenceTable t;
          {
            py::gil_scoped_release release;
            t = converge(c);
          }
          std::vector<std::size_t> n;
          std::vector<double> h, l2, linf;
          for (const auto& row : t.rows) {
            n.push_back(row.cells);
            h.push_back(row.h);
            l2.push_back(row.error.l2);
            linf.push_back(row.error.linf);
          }
          py::dict out;
          out["N"] = n;
          out["h"] = h;
          out["l2"] = l2;
          out["linf"] = linf;
          out["l2_rates"] = t.l2.rates;
          out["linf_rates"] = t.linf.rates;
          out["l2_rate"] = t.l2.average;
          out["linf_rate"] = t.linf.average;
          return out;
        },
        CUTDG_CONFIG_ARGS,
        py::arg("levels") = std::vector<std::size_t>{40, 80, 160, 320, 640});

  m.def("total_variation", &total_variation, py::arg("averages"), py::arg("periodic"));
  m.def("burgers_presock_exact", &burgers_presock_exact, py::arg("x"), py::arg("t"));
  m.def("burgers_riemann_exact", &burgers_riemann_exact, py::arg("ul"), py::arg("ur"),
        py::arg("x"), py::arg("t"));
  m.def("convergence_rates", [](const std::vector<double>& e, const std::vector<double>& h) {
    const RateReport r = convergence_rates(e, h);
    return py::make_tuple(r.rates, r.average);
  }, py::arg("errors"), py::arg("hs"));
  m.def("tvd_timestep_bound", &tvd_timestep_bound, py::arg("alpha"), py::arg("gamma_m"));
}
