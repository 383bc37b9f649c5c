#pragma once

#include <vector>

#include "cutdg/limiter.hpp"
#include "cutdg/operator.hpp"
#include "cutdg/timestep.hpp"

namespace cutdg {

/// Stabilized cut DG semi-discretization with per-stage limiting.
class CutDGSystem final : public SemiDiscreteSystem {
 public:
  CutDGSystem(const SpatialOperator& op, LimiterConfig limiter);

  Vector rate(const Vector& u, double t) override;
  void limit(Vector& u, double t) override;

  const SpatialOperator& op() const { return op_; }
  const LimiterConfig& limiter() const { return limiter_; }

  /// Cells restricted to constants by the most recent limit() call.
  const std::vector<char>& p0_cells() const { return p0_cells_; }
  /// Number of limit() calls that restricted at least one pair.
  std::size_t fallback_count() const { return fallbacks_; }

 private:
  const SpatialOperator& op_;
  LimiterConfig limiter_;
  std::vector<char> p0_cells_;
  bool restricted_ = false;
  std::size_t fallbacks_ = 0;
};

}  // namespace cutdg
