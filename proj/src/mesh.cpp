#include "cutdg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cutdg {

CutMesh::CutMesh(Interval domain, double h, std::vector<Cell> cells,
                 std::vector<StabilizedFace> stabilized)
    : domain_(domain),
      h_(h),
      cells_(std::move(cells)),
      stabilized_(std::move(stabilized)) {
  faces_.reserve(cells_.size() - 1);
  for (std::size_t i = 0; i + 1 < cells_.size(); ++i) {
    faces_.push_back(cells_[i].physical.b);
  }
}

bool CutMesh::is_stabilized(const StabilizedFace& face) const {
  return std::any_of(stabilized_.begin(), stabilized_.end(),
                     [&](const StabilizedFace& f) {
                       return f.left == face.left && f.right == face.right;
                     });
}

double CutMesh::min_fraction() const {
  double m = 1.0;
  for (const auto& c : cells_) m = std::min(m, c.fraction);
  return m;
}

namespace {

Cell full_cell(double a, double b, std::size_t index) {
  return Cell{{a, b}, {a, b}, false, 1.0, index};
}

CutMesh uniform_mesh(Interval domain, std::size_t N) {
  const double h = domain.length() / static_cast<double>(N);
  std::vector<Cell> cells;
  cells.reserve(N);
  for (std::size_t j = 0; j < N; ++j) {
    const double a = domain.a + static_cast<double>(j) * h;
    const double b = (j + 1 == N) ? domain.b
                                  : domain.a + static_cast<double>(j + 1) * h;
    cells.push_back(full_cell(a, b, j));
  }
  return CutMesh(domain, h, std::move(cells), {});
}

CutMesh boundary_cut_mesh(Interval domain, std::size_t N, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("boundary cut fraction must lie in (0, 1]");
  }
  if (alpha == 1.0) return uniform_mesh(domain, N);

  const double h = domain.length() / (static_cast<double>(N) - 1.0 + alpha);
  const double x_bg = domain.a - (1.0 - alpha) * h;
  std::vector<Cell> cells;
  cells.reserve(N);
  for (std::size_t j = 0; j < N; ++j) {
    const double a = x_bg + static_cast<double>(j) * h;
    const double b =
        (j + 1 == N) ? domain.b : x_bg + static_cast<double>(j + 1) * h;
    cells.push_back(full_cell(a, b, j));
  }
  Cell& first = cells.front();
  first.physical.a = domain.a;
  first.cut = true;
  first.fraction = first.physical.length() / h;

  std::vector<StabilizedFace> stabilized;
  if (alpha < 0.5) stabilized.push_back({first.physical.b, 0, 1});
  return CutMesh(domain, h, std::move(cells), std::move(stabilized));
}

CutMesh interior_cut_mesh(Interval domain, std::size_t N, InteriorCuts spec) {
  auto& cuts = spec.cuts;
  std::sort(cuts.begin(), cuts.end(),
            [](const InteriorCut& l, const InteriorCut& r) {
              return l.element < r.element;
            });
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const auto& c = cuts[i];
    if (c.element == 0 || c.element + 1 >= N) {
      std::ostringstream msg;
      msg << "interior cut element " << c.element
          << " must not be the first or last element";
      throw std::invalid_argument(msg.str());
    }
    if (!(c.alpha > 0.0 && c.alpha < 1.0)) {
      throw std::invalid_argument("interior cut fraction must lie in (0, 1)");
    }
    if (i > 0 && cuts[i - 1].element == c.element) {
      throw std::invalid_argument("duplicate interior cut element");
    }
  }

  const double h = domain.length() / static_cast<double>(N);
  auto node = [&](std::size_t j) {
    return j == N ? domain.b : domain.a + static_cast<double>(j) * h;
  };

  std::vector<Cell> cells;
  cells.reserve(N + cuts.size());
  std::vector<StabilizedFace> stabilized;
  auto add_face = [&](StabilizedFace f) {
    const bool seen =
        std::any_of(stabilized.begin(), stabilized.end(),
                    [&](const StabilizedFace& g) { return g.left == f.left; });
    if (!seen) stabilized.push_back(f);
  };

  std::size_t next_cut = 0;
  // Right-side stabilization needs the id of the next cell, so pending faces
  // are completed once that cell exists.
  for (std::size_t j = 0; j < N; ++j) {
    const Interval bg{node(j), node(j + 1)};
    if (next_cut < cuts.size() && cuts[next_cut].element == j) {
      const double alpha = cuts[next_cut].alpha;
      const double xp = bg.a + alpha * h;
      const std::size_t left_id = cells.size();
      cells.push_back(Cell{bg, {bg.a, xp}, true, (xp - bg.a) / h, j});
      cells.push_back(Cell{bg, {xp, bg.b}, true, (bg.b - xp) / h, j});
      if (alpha < 0.5) {
        add_face({bg.a, left_id - 1, left_id});
      } else if (alpha > 0.5) {
        add_face({bg.b, left_id + 1, left_id + 2});
      }
      ++next_cut;
    } else {
      cells.push_back(full_cell(bg.a, bg.b, j));
    }
  }
  std::sort(stabilized.begin(), stabilized.end(),
            [](const StabilizedFace& l, const StabilizedFace& r) {
              return l.left < r.left;
            });
  return CutMesh(domain, h, std::move(cells), std::move(stabilized));
}

}  // namespace

CutMesh build_mesh(Interval domain, std::size_t N, const CutSpec& spec) {
  if (N < 3) throw std::invalid_argument("mesh needs at least 3 elements");
  if (!(domain.b > domain.a)) {
    throw std::invalid_argument("domain must satisfy x_l < x_r");
  }
  return std::visit(
      [&](const auto& s) -> CutMesh {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, NoCut>) {
          return uniform_mesh(domain, N);
        } else if constexpr (std::is_same_v<T, BoundaryCut>) {
          return boundary_cut_mesh(domain, N, s.alpha);
        } else {
          return interior_cut_mesh(domain, N, s);
        }
      },
      spec);
}

InteriorCuts random_interior_cuts(Interval domain, std::size_t N,
                                  Interval region, double base_alpha,
                                  std::uint64_t seed) {
  const double h = domain.length() / static_cast<double>(N);
  const double tol = 1e-12 * h;
  SplitMix64 rng(seed);
  InteriorCuts out;
  for (std::size_t j = 1; j + 1 < N; ++j) {
    const double a = domain.a + static_cast<double>(j) * h;
    const double b = a + h;
    if (a >= region.a - tol && b <= region.b + tol) {
      out.cuts.push_back({j, base_alpha * rng.uniform(0.01, 1.0)});
    }
  }
  return out;
}

}  // namespace cutdg
