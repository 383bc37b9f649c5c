#include "cutdg/projection.hpp"

#include <iostream>
#include <stdexcept>
#include <vector>

#include "cutdg/basis.hpp"
#include "cutdg/operator.hpp"

namespace cutdg {

namespace {

Vector load_vector(const ScalarFunction& u0, const CutMesh& mesh, int r) {
  const int n = r + 1;
  const QuadRule& q = gauss_legendre(projection_quadrature_points(r));
  Vector b = Vector::Zero(static_cast<Eigen::Index>(mesh.num_cells()) * n);
  std::vector<double> vals(n);
  for (std::size_t j = 0; j < mesh.num_cells(); ++j) {
    const Cell& c = mesh.cell(j);
    const double half = 0.5 * c.physical.length();
    for (std::size_t i = 0; i < q.size(); ++i) {
      const double x = c.physical.center() + half * q.nodes[i];
      eval_basis_all(r, 0, x, c, vals);
      const double w = half * q.weights[i] * u0(x);
      for (int k = 0; k < n; ++k) b[j * n + k] += w * vals[k];
    }
  }
  return b;
}

}  // namespace

Coefficients l2_project(const ScalarFunction& u0, const CutMesh& mesh, int r) {
  const int n = r + 1;
  const Vector b = load_vector(u0, mesh, r);
  Coefficients out(mesh.num_cells(), r);
  for (std::size_t j = 0; j < mesh.num_cells(); ++j) {
    if (!(mesh.cell(j).physical.length() > 0.0)) {
      throw std::invalid_argument("mesh contains a zero-length cell");
    }
    const Matrix block = cell_mass_matrix(mesh.cell(j), r);
    if (n > 1) {
      const double kappa = spd_condition_number(block);
      if (kappa > 1e12) {
        std::clog << "warning: local mass block of cell " << j
                  << " has condition number " << kappa << "\n";
      }
    }
    out.cell(j) = LuFactorization(block).solve(Vector(b.segment(j * n, n)));
  }
  return out;
}

Coefficients stabilized_l2_project(const ScalarFunction& u0,
                                   const CutMesh& mesh, int r,
                                   const StabilizationParams& params) {
  if (!params.enabled || !(params.gamma_m > 0.0)) {
    throw std::invalid_argument("stabilized projection needs gamma_m > 0");
  }
  const MassSolver mass(mesh, r, params);
  return Coefficients(r, mass.solve(load_vector(u0, mesh, r)));
}

}  // namespace cutdg
