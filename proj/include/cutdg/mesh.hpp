#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace cutdg {

struct Interval {
  double a = 0.0;
  double b = 0.0;

  double length() const { return b - a; }
  double center() const { return 0.5 * (a + b); }
};

/// Uniform mesh, no cut elements.
struct NoCut {};

/// The physical left boundary x_l cuts the first background element so that
/// only a fraction alpha of it lies inside the domain.
struct BoundaryCut {
  double alpha = 1.0;
};

/// Background element `element` (0-based) is split at x_{J-1/2} + alpha*h
/// into two cut cells of lengths alpha*h and (1-alpha)*h.
struct InteriorCut {
  std::size_t element = 0;
  double alpha = 0.5;
};

struct InteriorCuts {
  std::vector<InteriorCut> cuts;
};

using CutSpec = std::variant<NoCut, BoundaryCut, InteriorCuts>;

struct Cell {
  Interval background;  // element carrying the polynomial basis
  Interval physical;    // part of the element inside the domain
  bool cut = false;
  double fraction = 1.0;  // physical length / h
  std::size_t background_index = 0;
};

/// Face across which the ghost penalty acts. `left` and `right` are cell ids.
struct StabilizedFace {
  double x = 0.0;
  std::size_t left = 0;
  std::size_t right = 0;
};

/// Cells ordered left to right. Immutable after construction.
class CutMesh {
 public:
  CutMesh(Interval domain, double h, std::vector<Cell> cells,
          std::vector<StabilizedFace> stabilized);

  const Interval& domain() const { return domain_; }
  double h() const { return h_; }
  std::size_t num_cells() const { return cells_.size(); }
  const Cell& cell(std::size_t i) const { return cells_[i]; }
  const std::vector<Cell>& cells() const { return cells_; }

  /// Interior face coordinates; face i separates cell i and cell i+1.
  const std::vector<double>& faces() const { return faces_; }
  const std::vector<StabilizedFace>& stabilized_faces() const {
    return stabilized_;
  }
  bool is_stabilized(const StabilizedFace& face) const;

  /// Smallest physical cell length over h.
  double min_fraction() const;

 private:
  Interval domain_;
  double h_;
  std::vector<Cell> cells_;
  std::vector<double> faces_;
  std::vector<StabilizedFace> stabilized_;
};

/// Throws std::invalid_argument on N < 3 or an invalid cut specification.
/// Boundary cuts use h = (x_r - x_l) / (N - 1 + alpha) so that N background
/// elements cover the domain; interior cuts use h = (x_r - x_l) / N.
CutMesh build_mesh(Interval domain, std::size_t N, const CutSpec& spec);

/// SplitMix64 generator. The sequence is part of the reproducibility
/// contract of randomly cut meshes, so it is spelled out here rather than
/// delegated to <random>, whose distributions are implementation defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

/// Cut every background element of a uniform N-element mesh on `domain` that
/// lies inside `region`. Fractions are base_alpha * s with s drawn uniformly
/// from [0.01, 1] in element order. First and last elements are never cut.
InteriorCuts random_interior_cuts(Interval domain, std::size_t N,
                                  Interval region, double base_alpha,
                                  std::uint64_t seed);

}  // namespace cutdg
