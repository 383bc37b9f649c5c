#pragma once

#include <functional>

#include "cutdg/coefficients.hpp"
#include "cutdg/mesh.hpp"
#include "cutdg/stabilization.hpp"

namespace cutdg {

using ScalarFunction = std::function<double(double)>;

/// Local L2 projection on each physical cell. Writes a warning to std::clog
/// when a local mass block has condition number above 1e12; throws
/// SingularMatrixError on a singular block.
Coefficients l2_project(const ScalarFunction& u0, const CutMesh& mesh, int r);

/// Solves M̃ U = b with b_i = (u0, phi_i) on the physical cells. Requires
/// gamma_m > 0 with stabilization enabled.
Coefficients stabilized_l2_project(const ScalarFunction& u0,
                                   const CutMesh& mesh, int r,
                                   const StabilizationParams& params);

/// Number of quadrature points used for projection right-hand sides.
inline int projection_quadrature_points(int r) {
  return 2 * r + 8 < 20 ? 2 * r + 8 : 20;
}

}  // namespace cutdg
