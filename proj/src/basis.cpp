#include "cutdg/basis.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace cutdg {

namespace {

// (P_n(x), P_{n-1}(x)) by the three-term recurrence.
std::pair<double, double> legendre_pair(int n, double x) {
  double prev = 1.0;
  double cur = x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double next = ((2.0 * k - 1.0) * x * cur - (k - 1.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

QuadRule build_rule(int n) {
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [pn, pnm1] = legendre_pair(n, x);
      const double dp = n * (x * pn - pnm1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const auto [pn, pnm1] = legendre_pair(n, x);
    const double dp = n * (x * pn - pnm1) / (x * x - 1.0);
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

struct RuleTable {
  std::array<QuadRule, kMaxQuadPoints + 1> rules;
  RuleTable() {
    for (int n = 1; n <= kMaxQuadPoints; ++n) rules[n] = build_rule(n);
  }
};

// Monomial coefficients of the monic Legendre polynomials, from
// phi_{k+1} = xi phi_k - k^2 / (4k^2 - 1) phi_{k-1}.
struct MonicTable {
  std::array<std::array<double, kMaxDegree + 1>, kMaxDegree + 1> c{};
  MonicTable() {
    c[0][0] = 1.0;
    c[1][1] = 1.0;
    for (int k = 1; k < kMaxDegree; ++k) {
      const double beta = double(k) * k / (4.0 * k * k - 1.0);
      for (int p = 0; p <= kMaxDegree; ++p) {
        const double shifted = p > 0 ? c[k][p - 1] : 0.0;
        c[k + 1][p] = shifted - beta * c[k - 1][p];
      }
    }
  }
};

const MonicTable& monic_table() {
  static const MonicTable table;
  return table;
}

}  // namespace

const QuadRule& gauss_legendre(int n) {
  if (n < 1 || n > kMaxQuadPoints) {
    throw std::out_of_range("Gauss-Legendre point count " + std::to_string(n) +
                            " outside [1, 20]");
  }
  static const RuleTable table;
  return table.rules[n];
}

double legendre_monic(int k, int m, double xi) {
  if (k < 0 || k > kMaxDegree) throw std::out_of_range("basis index");
  if (m > k) return 0.0;
  const auto& c = monic_table().c[k];
  double sum = 0.0;
  for (int p = k; p >= m; --p) {
    double falling = 1.0;
    for (int q = 0; q < m; ++q) falling *= p - q;
    sum = sum * xi + falling * c[p];
  }
  return sum;
}

double monic_norm2(int k) {
  // phi_k = P_k * 2^k k!^2 / (2k)!, and 2^k k!^2 / (2k)! = prod 2i / (k + i)
  double ratio = 1.0;
  for (int i = 1; i <= k; ++i) ratio *= 2.0 * i / double(k + i);
  return ratio * ratio / (2.0 * k + 1.0);
}

double eval_basis(int r, int k, int m, double x, const Cell& cell) {
  if (k < 0 || k > r) throw std::out_of_range("basis index exceeds degree");
  const double half = 0.5 * cell.background.length();
  const double xi = (x - cell.background.center()) / half;
  return legendre_monic(k, m, xi) * std::pow(1.0 / half, m);
}

void eval_basis_all(int r, int m, double x, const Cell& cell,
                    std::span<double> out) {
  const double half = 0.5 * cell.background.length();
  const double xi = (x - cell.background.center()) / half;
  const double scale = std::pow(1.0 / half, m);
  for (int k = 0; k <= r; ++k) out[k] = legendre_monic(k, m, xi) * scale;
}

}  // namespace cutdg
