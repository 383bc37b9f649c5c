#pragma once

#include <variant>
#include <vector>

#include "cutdg/linalg.hpp"
#include "cutdg/mesh.hpp"

namespace cutdg {

class SpatialOperator;

struct NoLimiter {};

/// TVB minmod limiting of every cell.
struct TvbLimiter {
  double m = 0.0;
};

/// TVB limiting away from cut cells; a stabilized pair (cut cell and its
/// stabilized neighbour) flagged by the TVB indicator drops to P0 and is
/// advanced with the stabilized P0 scheme.
struct ModifiedCutLimiter {
  double m = 0.0;
};

using LimiterConfig = std::variant<NoLimiter, TvbLimiter, ModifiedCutLimiter>;

/// Throws std::invalid_argument when M < 0.
void validate(const LimiterConfig& config);

double minmod(double a1, double a2, double a3);

struct TvbValue {
  double value;
  bool activated;
};

/// Returns a1 untouched when |a1| <= M h^2, minmod(a1, a2, a3) otherwise.
TvbValue tvb_minmod(double a1, double a2, double a3, double m, double h);

/// Physical cell averages and endpoint traces of a discrete solution.
struct CellTraces {
  Vector average;
  Vector left;   // u(x_{j-1/2}^+)
  Vector right;  // u(x_{j+1/2}^-)
};

CellTraces cell_traces(const Vector& u, const CutMesh& mesh, int r);

struct LimitResult {
  Vector u;
  std::vector<char> troubled;
};

/// TVB minmod limiter with average-preserving recovery. At a non-periodic
/// end the one available average difference is used for both arguments.
/// Cells that are not troubled are copied unchanged. No-op for r = 0.
LimitResult apply_tvb(const Vector& u, const CutMesh& mesh, int r, double m,
                      bool periodic);

/// Result of the modified limiter: the limited state and the cells that are
/// restricted to constants for the following update.
struct ModifiedLimitResult {
  Vector u;
  std::vector<char> troubled;
  std::vector<char> p0_cells;
};

/// TVB limiting of all cells outside flagged stabilized pairs. A pair is
/// flagged when the TVB indicator flags either of its cells; both cells are
/// then replaced by their physical averages.
ModifiedLimitResult apply_modified_cut_limiting(const Vector& u,
                                                const CutMesh& mesh, int r,
                                                double m, bool periodic);

/// One forward Euler step of the modified scheme: limit, then update with
/// flagged pairs restricted to P0.
Vector modified_cut_euler_step(const SpatialOperator& op, const Vector& u,
                               double t, double dt, double m);

}  // namespace cutdg
