#include "cutdg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cutdg/basis.hpp"
#include "cutdg/limiter.hpp"
#include "cutdg/operator.hpp"
#include "cutdg/timestep.hpp"

namespace cutdg {

ErrorNorms error_norms(const Vector& u, const CutMesh& mesh, int r,
                       const std::function<double(double)>& exact) {
  const int n = r + 1;
  if (u.size() != static_cast<Eigen::Index>(mesh.num_cells()) * n) {
    throw std::invalid_argument("coefficient vector does not match the mesh");
  }
  const QuadRule& q = gauss_legendre(r + 3);
  std::vector<double> vals(n);
  auto value = [&](std::size_t j, double x) {
    eval_basis_all(r, 0, x, mesh.cell(j), vals);
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += u[j * n + k] * vals[k];
    return s;
  };
  double sum = 0.0;
  double linf = 0.0;
  for (std::size_t j = 0; j < mesh.num_cells(); ++j) {
    const Interval& iv = mesh.cell(j).physical;
    const double half = 0.5 * iv.length();
    for (std::size_t i = 0; i < q.size(); ++i) {
      const double x = iv.center() + half * q.nodes[i];
      const double e = value(j, x) - exact(x);
      sum += half * q.weights[i] * e * e;
      linf = std::max(linf, std::abs(e));
    }
    linf = std::max(linf, std::abs(value(j, iv.a) - exact(iv.a)));
    linf = std::max(linf, std::abs(value(j, iv.b) - exact(iv.b)));
  }
  return {std::sqrt(sum), linf};
}

double total_variation(const Vector& averages, bool periodic) {
  const Eigen::Index n = averages.size();
  double tv = 0.0;
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    tv += std::abs(averages[j + 1] - averages[j]);
  }
  if (periodic && n > 1) tv += std::abs(averages[0] - averages[n - 1]);
  return tv;
}

double total_variation_means(const Vector& u, const CutMesh& mesh, int r,
                             bool periodic) {
  return total_variation(cell_traces(u, mesh, r).average, periodic);
}

bool SpectrumReport::all_inside_rk4() const {
  return std::all_of(inside_rk4.begin(), inside_rk4.end(),
                     [](char c) { return c; });
}

SpectrumReport spectrum_report(const CutMesh& mesh, int r, double beta,
                               const StabilizationParams& params,
                               double courant, double rk4_tol) {
  const Matrix mass = assemble_mass(mesh, r, params);
  const Matrix stiff =
      assemble_linear_stiffness(mesh, r, beta, params, Periodic{});
  SpectrumReport rep;
  rep.condition = spd_condition_number(mass);
  rep.eigenvalues = eigenvalues(LuFactorization(mass).solve(stiff));
  rep.dt = courant * mesh.h();
  rep.scaled = rep.dt * rep.eigenvalues;
  rep.max_real = -std::numeric_limits<double>::infinity();
  rep.inside_rk4.resize(rep.eigenvalues.size());
  for (Eigen::Index i = 0; i < rep.eigenvalues.size(); ++i) {
    rep.max_abs = std::max(rep.max_abs, std::abs(rep.eigenvalues[i]));
    rep.max_real = std::max(rep.max_real, rep.eigenvalues[i].real());
    rep.inside_rk4[i] = inside_rk4_region(rep.scaled[i], rk4_tol);
  }
  return rep;
}

double burgers_presock_exact(double x, double t) {
  constexpr double pi = std::numbers::pi;
  if (!(t < 1.0 / pi)) {
    throw std::domain_error("sine data for Burgers has shocked for t >= 1/pi");
  }
  if (t <= 0.0) return std::sin(pi * x);
  // F(u) = u - sin(pi (x - u t)) is increasing with a root in [-1, 1].
  auto f = [&](double u) { return u - std::sin(pi * (x - u * t)); };
  auto df = [&](double u) { return 1.0 + pi * t * std::cos(pi * (x - u * t)); };
  double lo = -1.0;
  double hi = 1.0;
  double u = std::sin(pi * x);
  for (int it = 0; it < 200; ++it) {
    const double fu = f(u);
    if (fu == 0.0) return u;
    if (fu < 0.0) lo = u; else hi = u;
    double next = u - fu / df(u);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - u) <= 1e-15 * std::max(1.0, std::abs(u))) return next;
    u = next;
    if (hi - lo < 1e-16) break;
  }
  return u;
}

double burgers_riemann_exact(double ul, double ur, double x, double t) {
  if (t <= 0.0) return x <= 0.0 ? ul : ur;
  if (ul > ur) {
    const double s = 0.5 * (ul + ur);
    return x < s * t ? ul : ur;
  }
  const double xi = x / t;
  if (xi <= ul) return ul;
  if (xi >= ur) return ur;
  return xi;
}

RateReport convergence_rates(const std::vector<double>& errors,
                             const std::vector<double>& hs) {
  if (errors.size() != hs.size()) {
    throw std::invalid_argument("errors and mesh sizes differ in length");
  }
  RateReport rep;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
    if (errors[i + 1] == 0.0 || errors[i] == 0.0) {
      rep.rates.push_back(kRateUndefined);
    } else {
      rep.rates.push_back(std::log(errors[i] / errors[i + 1]) /
                          std::log(hs[i] / hs[i + 1]));
    }
  }
  const std::size_t n = errors.size();
  if (n < 2) return rep;
  if (std::any_of(errors.begin(), errors.end(), [](double e) { return e <= 0.0; })) {
    rep.average = kRateUndefined;
    return rep;
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(hs[i]);
    const double ly = std::log(errors[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double dn = static_cast<double>(n);
  rep.average = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
  return rep;
}

}  // namespace cutdg
