#pragma once

#include <string>
#include <string_view>

namespace cutdg {

/// Physical flux f(u): either beta*u or u^2/2.
class FluxFunction {
 public:
  enum class Kind { Linear, Burgers };

  static FluxFunction linear(double beta) { return {Kind::Linear, beta}; }
  static FluxFunction burgers() { return {Kind::Burgers, 0.0}; }

  Kind kind() const { return kind_; }
  double beta() const { return beta_; }

  double operator()(double u) const {
    return kind_ == Kind::Linear ? beta_ * u : 0.5 * u * u;
  }
  double derivative(double u) const {
    return kind_ == Kind::Linear ? beta_ : u;
  }
  /// sup |f'| over [lo, hi].
  double max_wavespeed_on(double lo, double hi) const;

 private:
  FluxFunction(Kind k, double beta) : kind_(k), beta_(beta) {}

  Kind kind_;
  double beta_;
};

enum class NumericalFlux { Upwind, Godunov, LaxFriedrichs };

/// Accepts "upwind" | "godunov" | "lax_friedrichs".
NumericalFlux parse_numerical_flux(std::string_view name);
std::string to_string(NumericalFlux f);

inline double upwind(double u_minus, double /*u_plus*/, double beta) {
  return beta * u_minus;
}

/// Exact Riemann flux for f = u^2/2.
double godunov_burgers(double u_minus, double u_plus);

inline double lax_friedrichs(double u_minus, double u_plus, double a,
                             const FluxFunction& f) {
  return 0.5 * (f(u_minus) + f(u_plus)) - 0.5 * a * (u_plus - u_minus);
}

}  // namespace cutdg
