#include "cutdg/limiter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cutdg/basis.hpp"
#include "cutdg/operator.hpp"

namespace cutdg {

void validate(const LimiterConfig& config) {
  const double m = std::visit(
      [](const auto& c) {
        if constexpr (requires { c.m; }) {
          return c.m;
        } else {
          return 0.0;
        }
      },
      config);
  if (!(m >= 0.0)) throw std::invalid_argument("TVB constant M must be >= 0");
}

double minmod(double a1, double a2, double a3) {
  if (a1 > 0.0 && a2 > 0.0 && a3 > 0.0) return std::min({a1, a2, a3});
  if (a1 < 0.0 && a2 < 0.0 && a3 < 0.0) return std::max({a1, a2, a3});
  return 0.0;
}

TvbValue tvb_minmod(double a1, double a2, double a3, double m, double h) {
  if (std::abs(a1) <= m * h * h) return {a1, false};
  const double v = minmod(a1, a2, a3);
  return {v, v != a1};
}

CellTraces cell_traces(const Vector& u, const CutMesh& mesh, int r) {
  const int n = r + 1;
  const std::size_t cells = mesh.num_cells();
  if (u.size() != static_cast<Eigen::Index>(cells) * n) {
    throw std::invalid_argument("coefficient vector does not match the mesh");
  }
  CellTraces out{Vector(cells), Vector(cells), Vector(cells)};
  const QuadRule& q = gauss_legendre(r + 1);
  std::vector<double> vals(n);
  for (std::size_t j = 0; j < cells; ++j) {
    const Cell& c = mesh.cell(j);
    const auto uj = u.segment(j * n, n);
    const double half = 0.5 * c.physical.length();
    double sum = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      eval_basis_all(r, 0, c.physical.center() + half * q.nodes[i], c, vals);
      double v = 0.0;
      for (int k = 0; k < n; ++k) v += uj[k] * vals[k];
      sum += q.weights[i] * v;
    }
    out.average[j] = 0.5 * sum;
    eval_basis_all(r, 0, c.physical.a, c, vals);
    double left = 0.0;
    for (int k = 0; k < n; ++k) left += uj[k] * vals[k];
    eval_basis_all(r, 0, c.physical.b, c, vals);
    double right = 0.0;
    for (int k = 0; k < n; ++k) right += uj[k] * vals[k];
    out.left[j] = left;
    out.right[j] = right;
  }
  return out;
}

namespace {

// Coefficients of the polynomial of degree <= 2 with average `avg` on the
// physical cell and endpoint offsets u(b) - avg = du_r, avg - u(a) = du_l,
// written in the background basis of the cell.
void recover(const Cell& cell, int r, double avg, double du_r, double du_l,
             Eigen::Ref<Vector> coeffs) {
  const double len = cell.physical.length();
  const double h = cell.background.length();
  const double s = (du_r + du_l) / len;
  const double qq = r >= 2 ? 3.0 * (du_r - du_l) / (len * len) : 0.0;
  // x - c_phys = (h/2) xi + d
  const double d = cell.background.center() - cell.physical.center();
  const double a0 = avg + s * d + qq * (d * d - len * len / 12.0);
  const double a1 = 0.5 * h * (s + 2.0 * qq * d);
  const double a2 = 0.25 * h * h * qq;
  coeffs.setZero();
  coeffs[0] = a0 + (r >= 2 ? a2 / 3.0 : 0.0);
  coeffs[1] = a1;
  if (r >= 2) coeffs[2] = a2;
}

}  // namespace

LimitResult apply_tvb(const Vector& u, const CutMesh& mesh, int r, double m,
                      bool periodic) {
  if (!(m >= 0.0)) throw std::invalid_argument("TVB constant M must be >= 0");
  const std::size_t cells = mesh.num_cells();
  LimitResult out{u, std::vector<char>(cells, 0)};
  if (r == 0) return out;

  const int n = r + 1;
  const CellTraces tr = cell_traces(u, mesh, r);
  const double h = mesh.h();
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t j = 0; j < cells; ++j) {
    const bool first = j == 0;
    const bool last = j + 1 == cells;
    double dp = 0.0;
    double dm = 0.0;
    if (!first || periodic) {
      dm = tr.average[j] - tr.average[first ? cells - 1 : j - 1];
    }
    if (!last || periodic) {
      dp = tr.average[last ? 0 : j + 1] - tr.average[j];
    }
    if (!periodic && first) dm = dp;
    if (!periodic && last) dp = dm;

    const double ur = tr.right[j] - tr.average[j];
    const double ul = tr.average[j] - tr.left[j];
    const TvbValue lr = tvb_minmod(ur, dp, dm, m, h);
    const TvbValue ll = tvb_minmod(ul, dp, dm, m, h);
    // Offsets come from quadrature, so a change at roundoff level of the
    // cell values does not count as limiting.
    const double noise =
        64.0 * eps * std::max({std::abs(tr.average[j]), std::abs(tr.left[j]),
                               std::abs(tr.right[j])});
    const bool changed = (lr.activated && std::abs(lr.value - ur) > noise) ||
                         (ll.activated && std::abs(ll.value - ul) > noise);
    if (!changed) continue;
    out.troubled[j] = 1;
    recover(mesh.cell(j), r, tr.average[j], lr.value, ll.value,
            out.u.segment(j * n, n));
  }
  return out;
}

ModifiedLimitResult apply_modified_cut_limiting(const Vector& u,
                                                const CutMesh& mesh, int r,
                                                double m, bool periodic) {
  LimitResult tvb = apply_tvb(u, mesh, r, m, periodic);
  ModifiedLimitResult out{std::move(tvb.u), std::move(tvb.troubled),
                          std::vector<char>(mesh.num_cells(), 0)};
  if (r == 0) return out;

  const int n = r + 1;
  std::vector<char> flagged(mesh.num_cells(), 0);
  for (const auto& face : mesh.stabilized_faces()) {
    if (out.troubled[face.left] || out.troubled[face.right]) {
      flagged[face.left] = flagged[face.right] = 1;
    }
  }
  if (std::none_of(flagged.begin(), flagged.end(), [](char c) { return c; })) {
    return out;
  }
  const Vector avg = cell_traces(u, mesh, r).average;
  for (std::size_t j = 0; j < mesh.num_cells(); ++j) {
    if (!flagged[j]) continue;
    // phi_0 = 1, so the constant is its own coefficient.
    out.u.segment(j * n, n).setZero();
    out.u[j * n] = avg[j];
    out.p0_cells[j] = 1;
  }
  return out;
}

Vector modified_cut_euler_step(const SpatialOperator& op, const Vector& u,
                               double t, double dt, double m) {
  const ModifiedLimitResult lim =
      apply_modified_cut_limiting(u, op.mesh(), op.degree(), m,
                                  is_periodic(op.boundary()));
  return lim.u + dt * op.rate(lim.u, t, lim.p0_cells);
}

}  // namespace cutdg
