#pragma once

#include <cstddef>
#include <stdexcept>

#include "cutdg/linalg.hpp"

namespace cutdg {

/// Modal coefficients of a discrete solution, cell-major: entry
/// j*(r+1) + k multiplies phi_k on cell j.
class Coefficients {
 public:
  Coefficients() = default;
  Coefficients(std::size_t cells, int degree)
      : degree_(degree), values_(Vector::Zero(cells * (degree + 1))) {}
  Coefficients(int degree, Vector values)
      : degree_(degree), values_(std::move(values)) {
    if (values_.size() % (degree + 1) != 0) {
      throw std::invalid_argument("coefficient length not a multiple of r+1");
    }
  }

  int degree() const { return degree_; }
  int block_size() const { return degree_ + 1; }
  std::size_t num_cells() const {
    return static_cast<std::size_t>(values_.size()) / (degree_ + 1);
  }

  auto cell(std::size_t j) { return values_.segment(j * block_size(), block_size()); }
  auto cell(std::size_t j) const {
    return values_.segment(j * block_size(), block_size());
  }
  double& operator()(std::size_t j, int k) { return values_[j * block_size() + k]; }
  double operator()(std::size_t j, int k) const {
    return values_[j * block_size() + k];
  }

  Vector& values() { return values_; }
  const Vector& values() const { return values_; }

 private:
  int degree_ = 0;
  Vector values_;
};

}  // namespace cutdg
