#include "cutdg/timestep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cutdg {

TimeScheme parse_time_scheme(std::string_view name) {
  if (name == "euler") return TimeScheme::Euler;
  if (name == "ssprk3") return TimeScheme::SSPRK3;
  if (name == "ssprk54" || name == "rk4") return TimeScheme::SSPRK54;
  throw std::invalid_argument("unknown time scheme '" + std::string(name) +
                              "' (expected euler, ssprk3 or ssprk54)");
}

std::string to_string(TimeScheme s) {
  switch (s) {
    case TimeScheme::Euler:
      return "euler";
    case TimeScheme::SSPRK3:
      return "ssprk3";
    case TimeScheme::SSPRK54:
      return "ssprk54";
  }
  return "unknown";
}

std::vector<double> ShuOsherTableau::abscissae() const {
  std::vector<double> c(stages(), 0.0);
  for (std::size_t i = 1; i < stages(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      c[i] += alpha[i][k] * c[k] + beta[i][k];
    }
  }
  return c;
}

namespace {

// Row i (1-based stage) lists coefficients for u_0 .. u_{i-1}; the last row
// produces u^{n+1}. Stored with a leading empty row for u_0.
ShuOsherTableau make_euler() { return {{{}, {1.0}}, {{}, {1.0}}}; }

ShuOsherTableau make_ssprk3() {
  return {{{}, {1.0}, {0.75, 0.25}, {1.0 / 3.0, 0.0, 2.0 / 3.0}},
          {{}, {1.0}, {0.0, 0.25}, {0.0, 0.0, 2.0 / 3.0}}};
}

// Spiteri & Ruuth SSPRK(5,4).
ShuOsherTableau make_ssprk54() {
  ShuOsherTableau t;
  t.alpha = {{},
             {1.0},
             {0.444370493651235, 0.555629506348765},
             {0.620101851488403, 0.0, 0.379898148511597},
             {0.178079954393132, 0.0, 0.0, 0.821920045606868},
             {0.0, 0.0, 0.517231671970585, 0.096059710526147,
              0.386708617503269}};
  t.beta = {{},
            {0.391752226571890},
            {0.0, 0.368410593050371},
            {0.0, 0.0, 0.251891774271694},
            {0.0, 0.0, 0.0, 0.544974750228521},
            {0.0, 0.0, 0.0, 0.063692468666290, 0.226007483236906}};
  // The published digits leave row sums about 1e-15 away from one, which
  // shows up as a steady drift of the mean. Close each row on its largest
  // entry.
  for (auto& row : t.alpha) {
    if (row.empty()) continue;
    const auto big = std::max_element(row.begin(), row.end());
    double rest = 0.0;
    for (auto it = row.begin(); it != row.end(); ++it)
      if (it != big) rest += *it;
    *big = 1.0 - rest;
  }
  return t;
}

}  // namespace

const ShuOsherTableau& tableau(TimeScheme s) {
  static const ShuOsherTableau euler = make_euler();
  static const ShuOsherTableau rk3 = make_ssprk3();
  static const ShuOsherTableau rk54 = make_ssprk54();
  switch (s) {
    case TimeScheme::Euler:
      return euler;
    case TimeScheme::SSPRK3:
      return rk3;
    case TimeScheme::SSPRK54:
      return rk54;
  }
  throw std::invalid_argument("unknown time scheme");
}

Vector step(TimeScheme scheme, SemiDiscreteSystem& system, const Vector& u,
            double t, double dt) {
  const ShuOsherTableau& tab = tableau(scheme);
  const std::size_t s = tab.stages();  // includes the empty row of u_0
  const std::vector<double> c = tab.abscissae();

  std::vector<Vector> values;
  std::vector<Vector> rates;
  values.reserve(s);
  rates.reserve(s);
  values.push_back(u);
  rates.push_back(system.rate(u, t));
  for (std::size_t i = 1; i < s; ++i) {
    Vector next = Vector::Zero(u.size());
    for (std::size_t k = 0; k < i; ++k) {
      if (tab.alpha[i][k] != 0.0) next += tab.alpha[i][k] * values[k];
      if (tab.beta[i][k] != 0.0) next += (tab.beta[i][k] * dt) * rates[k];
    }
    system.limit(next, t + c[i] * dt);
    if (i + 1 < s) rates.push_back(system.rate(next, t + c[i] * dt));
    values.push_back(std::move(next));
  }
  return std::move(values.back());
}

Vector advance(const TimeControl& control, SemiDiscreteSystem& system,
               Vector u0, const Observer& observer) {
  if (!(control.dt > 0.0)) throw std::invalid_argument("time step must be > 0");
  const double span = control.t_final - control.t_start;
  if (span < 0.0) throw std::invalid_argument("t_final precedes t_start");

  Vector u = std::move(u0);
  system.limit(u, control.t_start);
  if (observer) observer(0, control.t_start, u);

  const auto full = static_cast<std::size_t>(std::floor(span / control.dt));
  const double remainder = span - static_cast<double>(full) * control.dt;
  // A remainder at roundoff level is folded into the last full step.
  const bool tail = remainder > 1e-10 * control.dt;
  const std::size_t steps = full + (tail ? 1 : 0);

  double t = control.t_start;
  for (std::size_t n = 1; n <= steps; ++n) {
    const double t_next = (n == steps)
                              ? control.t_final
                              : control.t_start + static_cast<double>(n) * control.dt;
    u = step(control.scheme, system, u, t, t_next - t);
    if (!u.allFinite()) {
      std::ostringstream msg;
      msg << "solution became non-finite at step " << n << " (t = " << t_next
          << ")";
      throw std::runtime_error(msg.str());
    }
    t = t_next;
    if (observer) observer(n, t, u);
  }
  return u;
}

std::vector<Vector> trajectory(const TimeControl& control,
                               SemiDiscreteSystem& system, Vector u0) {
  std::vector<Vector> out;
  advance(control, system, std::move(u0),
          [&](std::size_t, double, const Vector& u) { out.push_back(u); });
  return out;
}

double tvd_timestep_bound(double alpha, double gamma_m) {
  return alpha + gamma_m / (gamma_m + 1.0);
}

double convergence_courant(int r) {
  static constexpr double table[] = {0.5, 0.3, 0.2, 0.14};
  if (r < 0 || r > 3) throw std::out_of_range("convergence Courant: r in 0..3");
  return table[r];
}

double eigen_courant(int r) {
  static constexpr double table[] = {0.3, 0.2, 0.1, 0.1};
  if (r < 1 || r > 4) throw std::out_of_range("eigen Courant: r in 1..4");
  return table[r - 1];
}

double burgers_courant(int r, double alpha, double gamma_m) {
  static constexpr double table[] = {0.0, 0.3, 0.2, 0.1};
  if (r < 0 || r > 3) throw std::out_of_range("Burgers Courant: r in 0..3");
  // The TVD bound exceeds 1 for near-uncut meshes; the uncut CFL limit wins.
  return r == 0 ? std::min(1.0, tvd_timestep_bound(alpha, gamma_m)) : table[r];
}

bool inside_rk4_region(std::complex<double> z, double tol) {
  const std::complex<double> p =
      1.0 + z * (1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0)));
  return std::abs(p) <= 1.0 + tol;
}

}  // namespace cutdg
