#include "cutdg/linalg.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace cutdg {

LuFactorization::LuFactorization(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("LU factorization needs a square matrix");
  }
  lu_.compute(a);
  const double scale = a.cwiseAbs().maxCoeff();
  const auto& packed = lu_.matrixLU();
  for (Eigen::Index i = 0; i < packed.rows(); ++i) {
    const double pivot = std::abs(packed(i, i));
    if (!(pivot > kSingularPivot * scale)) {
      std::ostringstream msg;
      msg << "singular matrix: pivot " << i << " is " << packed(i, i);
      throw SingularMatrixError(msg.str());
    }
  }
}

Vector LuFactorization::solve(const Vector& b) const { return lu_.solve(b); }

Matrix LuFactorization::solve(const Matrix& b) const { return lu_.solve(b); }

Vector lu_solve(const Matrix& a, const Vector& b) {
  return LuFactorization(a).solve(b);
}

double spd_condition_number(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolver did not converge");
  }
  const auto& ev = es.eigenvalues();
  const double lmax = ev.maxCoeff();
  const double lmin = ev.minCoeff();
  const double roundoff =
      std::numeric_limits<double>::epsilon() * a.rows() * std::abs(lmax);
  if (!(lmax > 0.0) || lmin < -roundoff) {
    throw std::domain_error("matrix is not positive definite");
  }
  if (lmin <= roundoff) return std::numeric_limits<double>::infinity();
  return lmax / lmin;
}

ComplexVector eigenvalues(const Matrix& a) {
  Eigen::EigenSolver<Matrix> es(a, false);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("QR eigenvalue iteration did not converge");
  }
  return es.eigenvalues();
}

ComplexVector generalized_eigenvalues(const Matrix& b, const Matrix& a) {
  Eigen::GeneralizedEigenSolver<Matrix> ges(b, a, false);
  if (ges.info() != Eigen::Success) {
    throw std::runtime_error("QZ iteration did not converge");
  }
  return ges.eigenvalues();
}

}  // namespace cutdg
