#pragma once

#include <string>
#include <string_view>

#include "cutdg/coefficients.hpp"
#include "cutdg/linalg.hpp"
#include "cutdg/mesh.hpp"

namespace cutdg {

/// Derivative-jump weight families for the ghost penalty.
///   Factorial: w_k = 1 / (k!)^2
///   Legendre:  w_k = 1 / ((2k+1) (k!)^2)
/// Factorial is the default; it reproduces the published stabilized
/// condition numbers.
enum class PenaltyWeights { Factorial, Legendre };

PenaltyWeights parse_penalty_weights(std::string_view name);
std::string to_string(PenaltyWeights w);

double penalty_weight(PenaltyWeights family, int k);

/// Ghost penalty parameters. gamma_m scales J_1 in the mass matrix, gamma_a
/// scales J_0 in the stiffness part.
struct StabilizationParams {
  double gamma_m = 0.25;
  double gamma_a = 0.75;
  bool enabled = true;
  PenaltyWeights weights = PenaltyWeights::Factorial;

  double weight(int k) const { return penalty_weight(weights, k); }

  static StabilizationParams disabled() {
    return {0.0, 0.0, false, PenaltyWeights::Factorial};
  }
  void validate() const;
};

/// Symmetric PSD block of J_s restricted to one stabilized face, ordered
/// (left cell modes, right cell modes):
///   B = sum_m w_m h^{2m+s} [d^m phi_a][d^m phi_b].
/// Each side is evaluated from its own background element. Throws
/// std::invalid_argument if the face is not stabilized or s is not 0 or 1.
Matrix penalty_face_block(const CutMesh& mesh, const StabilizedFace& face,
                          int r, int s,
                          PenaltyWeights w = PenaltyWeights::Factorial);

/// Global (unscaled) J_s matrix in the Coefficients ordering.
Matrix penalty_matrix(const CutMesh& mesh, int r, int s,
                      PenaltyWeights w = PenaltyWeights::Factorial);

/// J_s(u_h, u_h), accumulated face by face.
double penalty_quadratic(const Coefficients& u, int s, const CutMesh& mesh,
                         PenaltyWeights w = PenaltyWeights::Factorial);

}  // namespace cutdg
