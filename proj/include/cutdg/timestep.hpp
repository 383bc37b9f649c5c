#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cutdg/linalg.hpp"

namespace cutdg {

enum class TimeScheme { Euler, SSPRK3, SSPRK54 };

TimeScheme parse_time_scheme(std::string_view name);
std::string to_string(TimeScheme s);

/// Third order SSP for r <= 2, five-stage fourth order SSP beyond.
inline TimeScheme default_time_scheme(int r) {
  return r <= 2 ? TimeScheme::SSPRK3 : TimeScheme::SSPRK54;
}

/// Shu-Osher form: u_i = sum_{k<i} alpha[i][k] u_k + beta[i][k] dt F(u_k)
/// for i = 1..s-1, with u_0 = u^n and u^{n+1} = u_{s-1}. Row 0 is empty.
struct ShuOsherTableau {
  std::vector<std::vector<double>> alpha;
  std::vector<std::vector<double>> beta;

  std::size_t stages() const { return alpha.size(); }
  /// Time offsets c_i (in units of dt) of every row.
  std::vector<double> abscissae() const;
};

const ShuOsherTableau& tableau(TimeScheme s);

/// Semi-discrete system U_t = F(U, t) with an optional post-stage limiter.
/// The integrator always calls limit(u) on a stage value right before
/// rate(u) on the same value, so implementations may carry state from one
/// call to the other.
class SemiDiscreteSystem {
 public:
  virtual ~SemiDiscreteSystem() = default;
  virtual Vector rate(const Vector& u, double t) = 0;
  virtual void limit(Vector& /*u*/, double /*t*/) {}
};

/// U_t = A U, used for verification.
class LinearSystem final : public SemiDiscreteSystem {
 public:
  explicit LinearSystem(Matrix a) : a_(std::move(a)) {}
  Vector rate(const Vector& u, double) override { return a_ * u; }

 private:
  Matrix a_;
};

struct TimeControl {
  TimeScheme scheme = TimeScheme::SSPRK3;
  double dt = 0.0;
  double t_final = 0.0;
  double t_start = 0.0;
};

/// Called with (step index, time, state); step 0 is the limited initial
/// state.
using Observer = std::function<void(std::size_t, double, const Vector&)>;

/// One step of size dt from time t. The input must already be limited.
Vector step(TimeScheme scheme, SemiDiscreteSystem& system, const Vector& u,
            double t, double dt);

/// Integrate to t_final with constant dt, shortening the last step to land
/// on t_final exactly. Throws std::runtime_error naming the step index if
/// the state becomes non-finite.
Vector advance(const TimeControl& control, SemiDiscreteSystem& system,
               Vector u0, const Observer& observer = {});

/// Every stored state; memory grows with the step count.
std::vector<Vector> trajectory(const TimeControl& control,
                               SemiDiscreteSystem& system, Vector u0);

/// Largest Courant number for which the P0 stabilized scheme is TVD:
/// alpha + gamma_m / (gamma_m + 1).
double tvd_timestep_bound(double alpha, double gamma_m);

/// Courant numbers used for smooth convergence runs, r = 0..3.
double convergence_courant(int r);
/// Courant numbers used for the eigenvalue study, r = 1..4.
double eigen_courant(int r);
/// Courant numbers used for Burgers runs, r = 0..3. For r = 0 this is the
/// TVD bound capped at 1.
double burgers_courant(int r, double alpha, double gamma_m);

/// |1 + z + z^2/2 + z^3/6 + z^4/24| <= 1 + tol.
bool inside_rk4_region(std::complex<double> z, double tol = 0.0);

}  // namespace cutdg
