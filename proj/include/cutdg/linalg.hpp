#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace cutdg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

/// Thrown when a factorization meets a pivot below kSingularPivot relative
/// to the largest matrix entry.
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kSingularPivot = 1e-30;

/// LU with partial pivoting. Factor once, solve many times.
class LuFactorization {
 public:
  LuFactorization() = default;
  explicit LuFactorization(const Matrix& a);

  Vector solve(const Vector& b) const;
  Matrix solve(const Matrix& b) const;
  Eigen::Index size() const { return lu_.rows(); }

 private:
  Eigen::PartialPivLU<Matrix> lu_;
};

Vector lu_solve(const Matrix& a, const Vector& b);

/// lambda_max / lambda_min of a symmetric positive definite matrix. Throws
/// std::domain_error when an eigenvalue is negative beyond roundoff and
/// returns +inf when the smallest one is lost in roundoff.
double spd_condition_number(const Matrix& a);

/// Eigenvalues of a general real matrix (Hessenberg reduction + shifted QR).
ComplexVector eigenvalues(const Matrix& a);

/// Eigenvalues of the pencil (b, a), i.e. of a^{-1} b, by the QZ algorithm.
ComplexVector generalized_eigenvalues(const Matrix& b, const Matrix& a);

}  // namespace cutdg
