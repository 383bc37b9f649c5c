#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "cutdg/coefficients.hpp"
#include "cutdg/flux.hpp"
#include "cutdg/linalg.hpp"
#include "cutdg/mesh.hpp"
#include "cutdg/stabilization.hpp"

namespace cutdg {

struct Periodic {};

/// Exterior state g(t) at x_l; at x_r the exterior state is the interior
/// trace, which makes the numerical flux there an outflow flux.
struct Inflow {
  std::function<double(double)> g;
};

using BoundaryCondition = std::variant<Periodic, Inflow>;

inline bool is_periodic(const BoundaryCondition& bc) {
  return std::holds_alternative<Periodic>(bc);
}

/// ∫_{I_j ∩ Ω} phi_k phi_m on one cell.
Matrix cell_mass_matrix(const Cell& cell, int r);

/// Dense stabilized mass matrix: per-cell ∫_{I_j ∩ Ω} phi_k phi_m plus
/// gamma_m J_1. Throws std::invalid_argument on a zero-length cell.
Matrix assemble_mass(const CutMesh& mesh, int r,
                     const StabilizationParams& params);

/// Dense S̃ for f = beta*u with the upwind flux, S̃U = -a(u,v) - gamma_a J_0.
/// Only periodic boundaries are supported.
Matrix assemble_linear_stiffness(const CutMesh& mesh, int r, double beta,
                                 const StabilizationParams& params,
                                 const BoundaryCondition& bc);

/// Factored M̃ stored as one dense LU per group of cells coupled through
/// stabilized faces. M̃ does not depend on the solution, so it is factored
/// once and reused for every stage.
class MassSolver {
 public:
  MassSolver(const CutMesh& mesh, int r, const StabilizationParams& params);

  Vector solve(const Vector& rhs) const;

  /// Solve with the flagged cells restricted to constants: their k >= 1
  /// test and trial functions are dropped and the corresponding entries of
  /// the result are zero.
  Vector solve_restricted(const Vector& rhs,
                          const std::vector<char>& p0_cells) const;

  Vector apply(const Vector& u) const;

  /// Cell groups; every group is a connected set of cells under the
  /// stabilized-face relation.
  std::size_t num_groups() const { return groups_.size(); }
  const std::vector<std::size_t>& group_cells(std::size_t g) const {
    return groups_[g].cells;
  }

 private:
  struct Group {
    std::vector<std::size_t> cells;
    Matrix block;
    LuFactorization lu;
  };

  int n_;
  std::vector<Group> groups_;
};

/// Stabilized cut DG spatial discretization M̃ U_t = R(U).
class SpatialOperator {
 public:
  SpatialOperator(CutMesh mesh, int r, FluxFunction flux,
                  NumericalFlux numerical_flux, StabilizationParams params,
                  BoundaryCondition bc);

  const CutMesh& mesh() const { return mesh_; }
  int degree() const { return r_; }
  int block_size() const { return r_ + 1; }
  Eigen::Index num_dofs() const {
    return static_cast<Eigen::Index>(mesh_.num_cells()) * (r_ + 1);
  }
  const FluxFunction& flux() const { return flux_; }
  NumericalFlux numerical_flux() const { return numerical_flux_; }
  const StabilizationParams& params() const { return params_; }
  const BoundaryCondition& boundary() const { return bc_; }
  const MassSolver& mass() const { return mass_; }

  /// R(U) = -[f̂_r v(x_r^-) - f̂_l v(x_l^+) - (f(u_h), v_x)] - gamma_a J_0,
  /// with traces at physical cell endpoints. Throws std::domain_error on
  /// non-finite input.
  Vector residual(const Vector& u, double t) const;

  /// U_t = M̃^{-1} R(U).
  Vector rate(const Vector& u, double t) const;
  Vector rate(const Vector& u, double t,
              const std::vector<char>& p0_cells) const;

  /// Value of u_h on cell j at x (polynomial extension outside the cell).
  double evaluate(const Vector& u, std::size_t j, double x) const;

  /// ∫_Ω u_h dx.
  double integral(const Vector& u) const { return integral_weights_.dot(u); }
  const Vector& integral_weights() const { return integral_weights_; }

  /// Physical-cell averages ū_j.
  Vector cell_averages(const Vector& u) const;

  static int volume_quadrature_points(const FluxFunction& flux, int r) {
    return flux.kind() == FluxFunction::Kind::Linear ? r + 2 : 2 * r + 2;
  }

 private:
  struct CellTable {
    std::vector<double> weights;  // physical quadrature weights
    Matrix phi;                   // nq x (r+1)
    Matrix dphi;                  // nq x (r+1), x-derivatives
    Vector left;                  // phi_k(a_ph)
    Vector right;                 // phi_k(b_ph)
  };

  double numerical(double um, double up, double a) const;

  CutMesh mesh_;
  int r_;
  FluxFunction flux_;
  NumericalFlux numerical_flux_;
  StabilizationParams params_;
  BoundaryCondition bc_;
  MassSolver mass_;
  std::vector<CellTable> tables_;
  std::vector<Matrix> penalty0_;  // J_0 face blocks, unscaled
  Vector integral_weights_;
};

/// Free-function form of SpatialOperator::residual.
Vector residual(const CutMesh& mesh, int r, const FluxFunction& flux,
                NumericalFlux numerical_flux, const StabilizationParams& params,
                const BoundaryCondition& bc, const Vector& u, double t);

inline Vector solve_mass(const MassSolver& mass, const Vector& rhs) {
  return mass.solve(rhs);
}

}  // namespace cutdg
