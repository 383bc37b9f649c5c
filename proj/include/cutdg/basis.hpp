#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cutdg/mesh.hpp"

namespace cutdg {

inline constexpr int kMaxQuadPoints = 20;
inline constexpr int kMaxDegree = 10;

/// Gauss-Legendre rule on [-1, 1].
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// n-point rule, exact for polynomials of degree 2n-1. Throws
/// std::out_of_range unless 1 <= n <= kMaxQuadPoints. Rules are built once
/// and shared.
const QuadRule& gauss_legendre(int n);

/// m-th xi-derivative of the monic Legendre polynomial of degree k:
/// 1, xi, xi^2 - 1/3, xi^3 - 3/5 xi, ...
double legendre_monic(int k, int m, double xi);

/// ∫_{-1}^{1} phi_k^2 dxi / 2, i.e. the uncut mass diagonal divided by h.
double monic_norm2(int k);

/// d^m/dx^m phi_k((x - x_c) / (h/2)) on the cell's background element,
/// including the (2/h)^m chain-rule factor. x may lie anywhere; the
/// polynomial is simply extended outside the physical part.
double eval_basis(int r, int k, int m, double x, const Cell& cell);

/// All r+1 basis functions (m-th derivative) at x.
void eval_basis_all(int r, int m, double x, const Cell& cell,
                    std::span<double> out);

/// ∫_a^b f(x) dx with the n-point Gauss rule mapped to [a, b].
template <class F>
double integrate_on(Interval iv, F&& f, int n) {
  const QuadRule& q = gauss_legendre(n);
  const double half = 0.5 * iv.length();
  const double mid = iv.center();
  double sum = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    sum += q.weights[i] * f(mid + half * q.nodes[i]);
  }
  return half * sum;
}

}  // namespace cutdg
