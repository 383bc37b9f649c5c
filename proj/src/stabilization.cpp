#include "cutdg/stabilization.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutdg/basis.hpp"

namespace cutdg {

PenaltyWeights parse_penalty_weights(std::string_view name) {
  if (name == "factorial") return PenaltyWeights::Factorial;
  if (name == "legendre") return PenaltyWeights::Legendre;
  throw std::invalid_argument("unknown penalty weights '" + std::string(name) +
                              "' (expected factorial or legendre)");
}

std::string to_string(PenaltyWeights w) {
  return w == PenaltyWeights::Factorial ? "factorial" : "legendre";
}

double penalty_weight(PenaltyWeights family, int k) {
  if (k < 0) throw std::invalid_argument("penalty weight index must be >= 0");
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  const double w = 1.0 / (fact * fact);
  return family == PenaltyWeights::Legendre ? w / (2.0 * k + 1.0) : w;
}

void StabilizationParams::validate() const {
  if (!(gamma_m >= 0.0) || !(gamma_a >= 0.0)) {
    throw std::invalid_argument("ghost penalty coefficients must be >= 0");
  }
}

Matrix penalty_face_block(const CutMesh& mesh, const StabilizedFace& face,
                          int r, int s, PenaltyWeights w) {
  if (s != 0 && s != 1) {
    throw std::invalid_argument("ghost penalty exponent must be 0 or 1");
  }
  if (!mesh.is_stabilized(face)) {
    throw std::invalid_argument("face is not a stabilized face of the mesh");
  }
  const int n = r + 1;
  const Cell& left = mesh.cell(face.left);
  const Cell& right = mesh.cell(face.right);
  const double h = mesh.h();

  Matrix block = Matrix::Zero(2 * n, 2 * n);
  Vector jump(2 * n);
  std::vector<double> vals(n);
  for (int m = 0; m <= r; ++m) {
    // [v] = v+ - v-: right side enters with +, left side with -.
    eval_basis_all(r, m, face.x, left, vals);
    for (int k = 0; k < n; ++k) jump[k] = -vals[k];
    eval_basis_all(r, m, face.x, right, vals);
    for (int k = 0; k < n; ++k) jump[n + k] = vals[k];
    const double scale =
        penalty_weight(w, m) * std::pow(h, 2 * m + s);
    block.noalias() += scale * jump * jump.transpose();
  }
  return block;
}

Matrix penalty_matrix(const CutMesh& mesh, int r, int s, PenaltyWeights w) {
  const int n = r + 1;
  const auto dofs = static_cast<Eigen::Index>(mesh.num_cells()) * n;
  Matrix j = Matrix::Zero(dofs, dofs);
  for (const auto& face : mesh.stabilized_faces()) {
    const Matrix b = penalty_face_block(mesh, face, r, s, w);
    const Eigen::Index l = face.left * n;
    const Eigen::Index rr = face.right * n;
    j.block(l, l, n, n) += b.topLeftCorner(n, n);
    j.block(l, rr, n, n) += b.topRightCorner(n, n);
    j.block(rr, l, n, n) += b.bottomLeftCorner(n, n);
    j.block(rr, rr, n, n) += b.bottomRightCorner(n, n);
  }
  return j;
}

double penalty_quadratic(const Coefficients& u, int s, const CutMesh& mesh,
                         PenaltyWeights w) {
  if (u.num_cells() != mesh.num_cells()) {
    throw std::invalid_argument("coefficients do not match the mesh");
  }
  const int r = u.degree();
  const int n = r + 1;
  double total = 0.0;
  Vector pair(2 * n);
  for (const auto& face : mesh.stabilized_faces()) {
    pair.head(n) = u.cell(face.left);
    pair.tail(n) = u.cell(face.right);
    total += pair.dot(penalty_face_block(mesh, face, r, s, w) * pair);
  }
  return total;
}

}  // namespace cutdg
