#include "cutdg/operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "cutdg/basis.hpp"

namespace cutdg {

namespace {

void check_cell_lengths(const CutMesh& mesh) {
  for (std::size_t j = 0; j < mesh.num_cells(); ++j) {
    if (!(mesh.cell(j).physical.length() > 0.0)) {
      throw std::invalid_argument("mesh contains a zero-length cell");
    }
  }
}

void add_face_block(Matrix& target, const Matrix& block, Eigen::Index l,
                    Eigen::Index r, int n, double scale) {
  target.block(l, l, n, n) += scale * block.topLeftCorner(n, n);
  target.block(l, r, n, n) += scale * block.topRightCorner(n, n);
  target.block(r, l, n, n) += scale * block.bottomLeftCorner(n, n);
  target.block(r, r, n, n) += scale * block.bottomRightCorner(n, n);
}

}  // namespace

Matrix assemble_mass(const CutMesh& mesh, int r,
                     const StabilizationParams& params) {
  params.validate();
  check_cell_lengths(mesh);
  const int n = r + 1;
  const auto dofs = static_cast<Eigen::Index>(mesh.num_cells()) * n;
  Matrix m = Matrix::Zero(dofs, dofs);
  for (std::size_t j = 0; j < mesh.num_cells(); ++j) {
    m.block(j * n, j * n, n, n) = cell_mass_matrix(mesh.cell(j), r);
  }
  if (params.enabled && params.gamma_m > 0.0) {
    for (const auto& face : mesh.stabilized_faces()) {
      add_face_block(m, penalty_face_block(mesh, face, r, 1, params.weights),
                     face.left * n, face.right * n, n, params.gamma_m);
    }
  }
  return m;
}

Matrix assemble_linear_stiffness(const CutMesh& mesh, int r, double beta,
                                 const StabilizationParams& params,
                                 const BoundaryCondition& bc) {
  if (!is_periodic(bc)) {
    throw std::invalid_argument(
        "explicit stiffness matrix requires periodic boundaries");
  }
  if (!(beta > 0.0)) throw std::invalid_argument("upwind needs beta > 0");
  params.validate();
  check_cell_lengths(mesh);
  const int n = r + 1;
  const std::size_t cells = mesh.num_cells();
  const auto dofs = static_cast<Eigen::Index>(cells) * n;
  Matrix s = Matrix::Zero(dofs, dofs);

  // Volume: +beta ∫ phi_m phi_k'
  std::vector<double> vals(n), ders(n);
  const QuadRule& q = gauss_legendre(r + 2);
  for (std::size_t j = 0; j < cells; ++j) {
    const Cell& c = mesh.cell(j);
    const double half = 0.5 * c.physical.length();
    for (std::size_t i = 0; i < q.size(); ++i) {
      const double x = c.physical.center() + half * q.nodes[i];
      eval_basis_all(r, 0, x, c, vals);
      eval_basis_all(r, 1, x, c, ders);
      const double w = beta * half * q.weights[i];
      for (int k = 0; k < n; ++k) {
        for (int m = 0; m < n; ++m) s(j * n + k, j * n + m) += w * ders[k] * vals[m];
      }
    }
  }

  // Upwind face flux beta*u^- from cell `up` into cell `down`; the seam
  // x_r | x_l closes the loop.
  std::vector<double> up_vals(n), down_vals(n);
  for (std::size_t f = 0; f < cells; ++f) {
    const std::size_t up = (f + cells - 1) % cells;
    const std::size_t down = f;
    const Cell& cu = mesh.cell(up);
    const Cell& cd = mesh.cell(down);
    eval_basis_all(r, 0, cu.physical.b, cu, up_vals);
    eval_basis_all(r, 0, cd.physical.a, cd, down_vals);
    for (int k = 0; k < n; ++k) {
      for (int m = 0; m < n; ++m) {
        s(up * n + k, up * n + m) -= beta * up_vals[k] * up_vals[m];
        s(down * n + k, up * n + m) += beta * down_vals[k] * up_vals[m];
      }
    }
  }

  if (params.enabled && params.gamma_a > 0.0) {
    for (const auto& face : mesh.stabilized_faces()) {
      add_face_block(s, penalty_face_block(mesh, face, r, 0, params.weights),
                     face.left * n, face.right * n, n, -params.gamma_a);
    }
  }
  return s;
}

Matrix cell_mass_matrix(const Cell& cell, int r) {
  const int n = r + 1;
  const QuadRule& q = gauss_legendre(r + 2);
  const double half = 0.5 * cell.physical.length();
  const double mid = cell.physical.center();
  Matrix block = Matrix::Zero(n, n);
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < q.size(); ++i) {
    eval_basis_all(r, 0, mid + half * q.nodes[i], cell, vals);
    const double w = half * q.weights[i];
    for (int k = 0; k < n; ++k) {
      for (int m = 0; m < n; ++m) block(k, m) += w * vals[k] * vals[m];
    }
  }
  return block;
}

// ---------------------------------------------------------------------------

MassSolver::MassSolver(const CutMesh& mesh, int r,
                       const StabilizationParams& params)
    : n_(r + 1) {
  params.validate();
  check_cell_lengths(mesh);
  const std::size_t cells = mesh.num_cells();
  const bool coupled = params.enabled && params.gamma_m > 0.0;

  std::vector<std::size_t> parent(cells);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  if (coupled) {
    for (const auto& f : mesh.stabilized_faces()) {
      parent[find(f.right)] = find(f.left);
    }
  }

  std::vector<std::size_t> group_of(cells, cells);
  for (std::size_t j = 0; j < cells; ++j) {
    const std::size_t root = find(j);
    if (group_of[root] == cells) {
      group_of[root] = groups_.size();
      groups_.push_back({});
    }
    groups_[group_of[root]].cells.push_back(j);
  }

  std::vector<std::size_t> local(cells);
  for (auto& g : groups_) {
    for (std::size_t i = 0; i < g.cells.size(); ++i) local[g.cells[i]] = i;
    const auto size = static_cast<Eigen::Index>(g.cells.size()) * n_;
    g.block = Matrix::Zero(size, size);
    for (std::size_t i = 0; i < g.cells.size(); ++i) {
      g.block.block(i * n_, i * n_, n_, n_) =
          cell_mass_matrix(mesh.cell(g.cells[i]), r);
    }
  }
  if (coupled) {
    for (const auto& f : mesh.stabilized_faces()) {
      auto& g = groups_[group_of[find(f.left)]];
      add_face_block(g.block, penalty_face_block(mesh, f, r, 1, params.weights),
                     local[f.left] * n_, local[f.right] * n_, n_,
                     params.gamma_m);
    }
  }
  for (auto& g : groups_) g.lu = LuFactorization(g.block);
}

Vector MassSolver::solve(const Vector& rhs) const {
  Vector out(rhs.size());
  Vector local;
  for (const auto& g : groups_) {
    local.resize(g.block.rows());
    for (std::size_t i = 0; i < g.cells.size(); ++i) {
      local.segment(i * n_, n_) = rhs.segment(g.cells[i] * n_, n_);
    }
    const Vector x = g.lu.solve(local);
    for (std::size_t i = 0; i < g.cells.size(); ++i) {
      out.segment(g.cells[i] * n_, n_) = x.segment(i * n_, n_);
    }
  }
  return out;
}

Vector MassSolver::solve_restricted(const Vector& rhs,
                                    const std::vector<char>& p0_cells) const {
  Vector out = Vector::Zero(rhs.size());
  Vector local;
  for (const auto& g : groups_) {
    const bool touched = std::any_of(g.cells.begin(), g.cells.end(),
                                     [&](std::size_t c) { return p0_cells[c]; });
    if (!touched) {
      local.resize(g.block.rows());
      for (std::size_t i = 0; i < g.cells.size(); ++i) {
        local.segment(i * n_, n_) = rhs.segment(g.cells[i] * n_, n_);
      }
      const Vector x = g.lu.solve(local);
      for (std::size_t i = 0; i < g.cells.size(); ++i) {
        out.segment(g.cells[i] * n_, n_) = x.segment(i * n_, n_);
      }
      continue;
    }
    std::vector<Eigen::Index> keep_local;  // index into the group block
    std::vector<Eigen::Index> keep_global;
    for (std::size_t i = 0; i < g.cells.size(); ++i) {
      const int modes = p0_cells[g.cells[i]] ? 1 : n_;
      for (int k = 0; k < modes; ++k) {
        keep_local.push_back(static_cast<Eigen::Index>(i) * n_ + k);
        keep_global.push_back(static_cast<Eigen::Index>(g.cells[i]) * n_ + k);
      }
    }
    const auto size = static_cast<Eigen::Index>(keep_local.size());
    Matrix sub(size, size);
    Vector b(size);
    for (Eigen::Index a = 0; a < size; ++a) {
      b[a] = rhs[keep_global[a]];
      for (Eigen::Index c = 0; c < size; ++c) {
        sub(a, c) = g.block(keep_local[a], keep_local[c]);
      }
    }
    const Vector x = LuFactorization(sub).solve(b);
    for (Eigen::Index a = 0; a < size; ++a) out[keep_global[a]] = x[a];
  }
  return out;
}

Vector MassSolver::apply(const Vector& u) const {
  Vector out(u.size());
  Vector local;
  for (const auto& g : groups_) {
    local.resize(g.block.rows());
    for (std::size_t i = 0; i < g.cells.size(); ++i) {
      local.segment(i * n_, n_) = u.segment(g.cells[i] * n_, n_);
    }
    const Vector y = g.block * local;
    for (std::size_t i = 0; i < g.cells.size(); ++i) {
      out.segment(g.cells[i] * n_, n_) = y.segment(i * n_, n_);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

SpatialOperator::SpatialOperator(CutMesh mesh, int r, FluxFunction flux,
                                 NumericalFlux numerical_flux,
                                 StabilizationParams params,
                                 BoundaryCondition bc)
    : mesh_(std::move(mesh)),
      r_(r),
      flux_(flux),
      numerical_flux_(numerical_flux),
      params_(params),
      bc_(std::move(bc)),
      mass_(mesh_, r, params) {
  if (r < 0 || r > kMaxDegree) throw std::invalid_argument("degree out of range");
  if (numerical_flux_ == NumericalFlux::Upwind &&
      !(flux_.kind() == FluxFunction::Kind::Linear && flux_.beta() > 0.0)) {
    throw std::invalid_argument("upwind flux needs f = beta*u with beta > 0");
  }
  if (numerical_flux_ == NumericalFlux::Godunov &&
      flux_.kind() != FluxFunction::Kind::Burgers) {
    throw std::invalid_argument("Godunov flux is implemented for f = u^2/2");
  }
  if (const auto* in = std::get_if<Inflow>(&bc_); in && !in->g) {
    throw std::invalid_argument("inflow boundary needs a boundary function");
  }

  const int n = r + 1;
  const QuadRule& q = gauss_legendre(volume_quadrature_points(flux_, r));
  const auto nq = static_cast<Eigen::Index>(q.size());
  tables_.reserve(mesh_.num_cells());
  integral_weights_ = Vector::Zero(num_dofs());
  std::vector<double> vals(n), ders(n);
  for (std::size_t j = 0; j < mesh_.num_cells(); ++j) {
    const Cell& c = mesh_.cell(j);
    CellTable t;
    const double half = 0.5 * c.physical.length();
    t.weights.resize(q.size());
    t.phi.resize(nq, n);
    t.dphi.resize(nq, n);
    for (Eigen::Index i = 0; i < nq; ++i) {
      const double x = c.physical.center() + half * q.nodes[i];
      t.weights[i] = half * q.weights[i];
      eval_basis_all(r, 0, x, c, vals);
      eval_basis_all(r, 1, x, c, ders);
      for (int k = 0; k < n; ++k) {
        t.phi(i, k) = vals[k];
        t.dphi(i, k) = ders[k];
      }
    }
    t.left.resize(n);
    t.right.resize(n);
    eval_basis_all(r, 0, c.physical.a, c, vals);
    for (int k = 0; k < n; ++k) t.left[k] = vals[k];
    eval_basis_all(r, 0, c.physical.b, c, vals);
    for (int k = 0; k < n; ++k) t.right[k] = vals[k];

    // ∫ phi_k over the physical part; r+2 points are exact for degree r.
    const QuadRule& qm = gauss_legendre(r + 2);
    for (std::size_t i = 0; i < qm.size(); ++i) {
      eval_basis_all(r, 0, c.physical.center() + half * qm.nodes[i], c, vals);
      for (int k = 0; k < n; ++k) {
        integral_weights_[j * n + k] += half * qm.weights[i] * vals[k];
      }
    }
    tables_.push_back(std::move(t));
  }
  if (params_.enabled && params_.gamma_a > 0.0) {
    for (const auto& face : mesh_.stabilized_faces()) {
      penalty0_.push_back(
          penalty_face_block(mesh_, face, r, 0, params_.weights));
    }
  }
}

double SpatialOperator::numerical(double um, double up, double a) const {
  switch (numerical_flux_) {
    case NumericalFlux::Upwind:
      return upwind(um, up, flux_.beta());
    case NumericalFlux::Godunov:
      return godunov_burgers(um, up);
    case NumericalFlux::LaxFriedrichs:
      return lax_friedrichs(um, up, a, flux_);
  }
  return 0.0;
}

Vector SpatialOperator::residual(const Vector& u, double t) const {
  if (u.size() != num_dofs()) {
    throw std::invalid_argument("coefficient vector has the wrong length");
  }
  if (!u.allFinite()) {
    throw std::domain_error("non-finite coefficient in residual evaluation");
  }
  const int n = r_ + 1;
  const std::size_t cells = mesh_.num_cells();

  std::vector<double> left(cells), right(cells);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t j = 0; j < cells; ++j) {
    const auto uj = u.segment(j * n, n);
    left[j] = tables_[j].left.dot(uj);
    right[j] = tables_[j].right.dot(uj);
    lo = std::min({lo, left[j], right[j]});
    hi = std::max({hi, left[j], right[j]});
  }

  // fluxes[f] sits at the left end of cell f; fluxes[cells] at x_r.
  std::vector<double> fluxes(cells + 1);
  double inflow = 0.0;
  const bool periodic = is_periodic(bc_);
  if (!periodic) {
    inflow = std::get<Inflow>(bc_).g(t);
    lo = std::min(lo, inflow);
    hi = std::max(hi, inflow);
  }
  const double a = numerical_flux_ == NumericalFlux::LaxFriedrichs
                       ? flux_.max_wavespeed_on(lo, hi)
                       : 0.0;
  for (std::size_t f = 1; f < cells; ++f) {
    fluxes[f] = numerical(right[f - 1], left[f], a);
  }
  if (periodic) {
    fluxes[0] = fluxes[cells] = numerical(right[cells - 1], left[0], a);
  } else {
    fluxes[0] = numerical(inflow, left[0], a);
    fluxes[cells] = numerical(right[cells - 1], right[cells - 1], a);
  }

  Vector out(u.size());
  Vector fq;
  for (std::size_t j = 0; j < cells; ++j) {
    const CellTable& tj = tables_[j];
    const auto uj = u.segment(j * n, n);
    const Vector uq = tj.phi * uj;
    fq.resize(uq.size());
    for (Eigen::Index i = 0; i < uq.size(); ++i) {
      fq[i] = tj.weights[i] * flux_(uq[i]);
    }
    out.segment(j * n, n) = tj.dphi.transpose() * fq -
                            fluxes[j + 1] * tj.right + fluxes[j] * tj.left;
  }

  for (std::size_t i = 0; i < penalty0_.size(); ++i) {
    const auto& face = mesh_.stabilized_faces()[i];
    Vector pair(2 * n);
    pair.head(n) = u.segment(face.left * n, n);
    pair.tail(n) = u.segment(face.right * n, n);
    const Vector pen = params_.gamma_a * (penalty0_[i] * pair);
    out.segment(face.left * n, n) -= pen.head(n);
    out.segment(face.right * n, n) -= pen.tail(n);
  }
  return out;
}

Vector SpatialOperator::rate(const Vector& u, double t) const {
  return mass_.solve(residual(u, t));
}

Vector SpatialOperator::rate(const Vector& u, double t,
                             const std::vector<char>& p0_cells) const {
  return mass_.solve_restricted(residual(u, t), p0_cells);
}

double SpatialOperator::evaluate(const Vector& u, std::size_t j,
                                 double x) const {
  const int n = r_ + 1;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    sum += u[j * n + k] * eval_basis(r_, k, 0, x, mesh_.cell(j));
  }
  return sum;
}

Vector SpatialOperator::cell_averages(const Vector& u) const {
  const int n = r_ + 1;
  Vector avg(mesh_.num_cells());
  for (std::size_t j = 0; j < mesh_.num_cells(); ++j) {
    avg[j] = integral_weights_.segment(j * n, n).dot(u.segment(j * n, n)) /
             mesh_.cell(j).physical.length();
  }
  return avg;
}

Vector residual(const CutMesh& mesh, int r, const FluxFunction& flux,
                NumericalFlux numerical_flux, const StabilizationParams& params,
                const BoundaryCondition& bc, const Vector& u, double t) {
  return SpatialOperator(mesh, r, flux, numerical_flux, params, bc)
      .residual(u, t);
}

}  // namespace cutdg
