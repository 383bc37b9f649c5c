#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include "cutdg/linalg.hpp"
#include "cutdg/mesh.hpp"
#include "cutdg/stabilization.hpp"

namespace cutdg {

struct ErrorNorms {
  double l2 = 0.0;
  double linf = 0.0;
};

/// L2 by (r+3)-point Gauss quadrature on every physical cell; L∞ as the
/// maximum over the same points and the physical endpoints.
ErrorNorms error_norms(const Vector& u, const CutMesh& mesh, int r,
                       const std::function<double(double)>& exact);

/// Σ |ū_{j+1} - ū_j|, closing the loop when periodic.
double total_variation(const Vector& averages, bool periodic);
double total_variation_means(const Vector& u, const CutMesh& mesh, int r,
                             bool periodic);

struct SpectrumReport {
  double condition = 0.0;  // κ(M̃)
  double max_abs = 0.0;
  double max_real = 0.0;
  double dt = 0.0;
  ComplexVector eigenvalues;  // of M̃^{-1} S̃
  ComplexVector scaled;       // dt * v
  std::vector<char> inside_rk4;

  bool all_inside_rk4() const;
};

/// Spectrum of the linear periodic upwind operator with f = beta*u and
/// dt = courant * h.
SpectrumReport spectrum_report(const CutMesh& mesh, int r, double beta,
                               const StabilizationParams& params,
                               double courant, double rk4_tol = 1e-8);

/// Solution of u_t + (u^2/2)_x = 0, u(x,0) = sin(pi x), before the shock.
/// Throws std::domain_error for t >= 1/pi.
double burgers_presock_exact(double x, double t);

/// Entropy solution of the Burgers Riemann problem with the jump at x = 0.
double burgers_riemann_exact(double ul, double ur, double x, double t);

struct RateReport {
  std::vector<double> rates;  // +inf where the finer error is zero
  double average = 0.0;       // least-squares slope of log e against log h
};

RateReport convergence_rates(const std::vector<double>& errors,
                             const std::vector<double>& hs);

inline constexpr double kRateUndefined = std::numeric_limits<double>::infinity();

}  // namespace cutdg
