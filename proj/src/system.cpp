#include "cutdg/system.hpp"

#include <algorithm>

namespace cutdg {

CutDGSystem::CutDGSystem(const SpatialOperator& op, LimiterConfig limiter)
    : op_(op),
      limiter_(limiter),
      p0_cells_(op.mesh().num_cells(), 0) {
  validate(limiter_);
}

Vector CutDGSystem::rate(const Vector& u, double t) {
  return restricted_ ? op_.rate(u, t, p0_cells_) : op_.rate(u, t);
}

void CutDGSystem::limit(Vector& u, double /*t*/) {
  const bool periodic = is_periodic(op_.boundary());
  const int r = op_.degree();
  restricted_ = false;
  if (const auto* tvb = std::get_if<TvbLimiter>(&limiter_)) {
    u = apply_tvb(u, op_.mesh(), r, tvb->m, periodic).u;
  } else if (const auto* mod = std::get_if<ModifiedCutLimiter>(&limiter_)) {
    ModifiedLimitResult res =
        apply_modified_cut_limiting(u, op_.mesh(), r, mod->m, periodic);
    u = std::move(res.u);
    p0_cells_ = std::move(res.p0_cells);
    restricted_ = std::any_of(p0_cells_.begin(), p0_cells_.end(),
                              [](char c) { return c; });
    if (restricted_) ++fallbacks_;
  }
}

}  // namespace cutdg
