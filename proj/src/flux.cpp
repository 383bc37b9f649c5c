#include "cutdg/flux.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cutdg {

double FluxFunction::max_wavespeed_on(double lo, double hi) const {
  if (kind_ == Kind::Linear) return std::abs(beta_);
  return std::max(std::abs(lo), std::abs(hi));
}

NumericalFlux parse_numerical_flux(std::string_view name) {
  if (name == "upwind") return NumericalFlux::Upwind;
  if (name == "godunov") return NumericalFlux::Godunov;
  if (name == "lax_friedrichs") return NumericalFlux::LaxFriedrichs;
  throw std::invalid_argument("unknown numerical flux '" + std::string(name) +
                              "' (expected upwind, godunov or lax_friedrichs)");
}

std::string to_string(NumericalFlux f) {
  switch (f) {
    case NumericalFlux::Upwind:
      return "upwind";
    case NumericalFlux::Godunov:
      return "godunov";
    case NumericalFlux::LaxFriedrichs:
      return "lax_friedrichs";
  }
  return "unknown";
}

double godunov_burgers(double u_minus, double u_plus) {
  const double fm = 0.5 * u_minus * u_minus;
  const double fp = 0.5 * u_plus * u_plus;
  if (u_minus <= u_plus) {
    if (u_minus <= 0.0 && 0.0 <= u_plus) return 0.0;
    return std::min(fm, fp);
  }
  return std::max(fm, fp);
}

}  // namespace cutdg
