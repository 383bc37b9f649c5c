#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "cutdg/analysis.hpp"
#include "cutdg/projection.hpp"
#include "doctest.h"

using namespace cutdg;

namespace {

double bisect(const std::function<double(double)>& g, double lo, double hi) {
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((g(lo) < 0.0) == (g(mid) < 0.0)) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("error norms") {
  const CutMesh m = build_mesh({0.0, 2.0}, 6, BoundaryCut{0.2});
  const int r = 2;
  const Coefficients u = l2_project([](double x) { return x * x; }, m, r);
  const ErrorNorms same = error_norms(u.values(), m, r, [](double x) { return x * x; });
  CHECK(same.l2 < 1e-13);
  CHECK(same.linf < 1e-13);
  const ErrorNorms zero = error_norms(Vector::Zero(u.values().size()), m, r,
                                      [](double) { return 1.0; });
  CHECK(zero.l2 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(zero.linf == 1.0);
}

TEST_CASE("total variation of averages") {
  CHECK(total_variation(Vector::Constant(5, 3.0), true) == 0.0);
  Vector pulse(5);
  pulse << 0, 0, 1, 0, 0;
  CHECK(total_variation(pulse, false) == 2.0);
  CHECK(total_variation(pulse, true) == 2.0);
  Vector ramp(4);
  ramp << 0, 1, 2, 3;
  CHECK(total_variation(ramp, false) == 3.0);
  CHECK(total_variation(ramp, true) == 6.0);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const CutMesh m = build_mesh({0.0, 1.0}, 9, BoundaryCut{0.4});
  Vector u(9);
  for (auto& v : u) v = d(rng);
  double brute = 0.0;
  for (int j = 0; j + 1 < 9; ++j) brute += std::abs(u[j + 1] - u[j]);
  CHECK(total_variation_means(u, m, 0, false) == doctest::Approx(brute).epsilon(1e-15));
  brute += std::abs(u[0] - u[8]);
  CHECK(total_variation_means(u, m, 0, true) == doctest::Approx(brute).epsilon(1e-15));

  // Monotone profile: TV equals the spread of the averages at the ends.
  const CutMesh mm = build_mesh({0.0, 1.0}, 10, InteriorCuts{{{4, 1e-3}}});
  const Coefficients t = l2_project([](double x) { return std::tanh(5.0 * (x - 0.5)); }, mm, 2);
  const Vector avg = [&] {
    Vector a(mm.num_cells());
    for (std::size_t j = 0; j < mm.num_cells(); ++j) {
      const Interval& p = mm.cell(j).physical;
      a[j] = (std::log(std::cosh(5.0 * (p.b - 0.5))) - std::log(std::cosh(5.0 * (p.a - 0.5)))) /
             (5.0 * p.length());
    }
    return a;
  }();
  CHECK(total_variation_means(t.values(), mm, 2, false) ==
        doctest::Approx(avg[avg.size() - 1] - avg[0]).epsilon(1e-6));
}

TEST_CASE("spectrum of the uniform P1 operator") {
  const SpectrumReport rep =
      spectrum_report(build_mesh({0.0, 2.0}, 7, NoCut{}), 1, 1.0,
                      StabilizationParams::disabled(), 0.3);
  CHECK(rep.condition == doctest::Approx(3.0).epsilon(1e-3));
  CHECK(rep.max_abs == doctest::Approx(21.0).epsilon(5e-3));
  CHECK(rep.max_real < 1e-10);
  CHECK(rep.dt == doctest::Approx(0.3 * 2.0 / 7.0));
  CHECK(rep.scaled.size() == 14);
  CHECK(rep.all_inside_rk4());
}

TEST_CASE("spectrum of the stabilized P1 operator with a boundary cut") {
  const SpectrumReport rep = spectrum_report(build_mesh({0.0, 2.0}, 8, BoundaryCut{1e-2}), 1,
                                             1.0, StabilizationParams{}, 0.3);
  CHECK(rep.condition == doctest::Approx(47.9).epsilon(5e-3));
  CHECK(rep.max_abs == doctest::Approx(22.2).epsilon(5e-3));
  CHECK(rep.max_real <= 1e-10);
}

TEST_CASE("spectrum reports are deterministic") {
  const CutMesh m = build_mesh({0.0, 2.0}, 8, InteriorCuts{{{4, 1e-2}}});
  const auto a = spectrum_report(m, 2, 1.0, StabilizationParams{}, 0.2);
  const auto b = spectrum_report(m, 2, 1.0, StabilizationParams{}, 0.2);
  CHECK(a.condition == b.condition);
  CHECK(a.max_abs == b.max_abs);
  CHECK((a.eigenvalues - b.eigenvalues).norm() == 0.0);
}

TEST_CASE("pre-shock Burgers solution") {
  for (double x : {0.1, 0.7, 1.3}) {
    CHECK(burgers_presock_exact(x, 0.0) == doctest::Approx(std::sin(std::numbers::pi * x)));
  }
  CHECK(burgers_presock_exact(0.0, 0.25) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
  const double t = 0.2;
  for (double x : {0.5, 0.9, 1.1, 1.6}) {
    auto g = [&](double u) { return u - std::sin(std::numbers::pi * (x - u * t)); };
    const double ref = bisect(g, -1.0, 1.0);
    CHECK(burgers_presock_exact(x, t) == doctest::Approx(ref).epsilon(1e-12));
  }
  CHECK_THROWS_AS(burgers_presock_exact(0.5, 1.0 / std::numbers::pi), std::domain_error);
}

TEST_CASE("Riemann solutions") {
  // Shock with speed 1/4.
  CHECK(burgers_riemann_exact(1.0, -0.5, 0.24, 1.0) == 1.0);
  CHECK(burgers_riemann_exact(1.0, -0.5, 0.26, 1.0) == -0.5);
  // Rarefaction fan.
  CHECK(burgers_riemann_exact(-1.0, 1.0, -2.0, 1.0) == -1.0);
  CHECK(burgers_riemann_exact(-1.0, 1.0, 0.3, 1.0) == doctest::Approx(0.3));
  CHECK(burgers_riemann_exact(-1.0, 1.0, 1.5, 1.0) == 1.0);
}

TEST_CASE("convergence rates") {
  RateReport r = convergence_rates({1.0, 0.25}, {1.0, 0.5});
  REQUIRE(r.rates.size() == 1);
  CHECK(r.rates[0] == doctest::Approx(2.0));
  CHECK(r.average == doctest::Approx(2.0));

  std::vector<double> hs{0.1, 0.05, 0.025, 0.0125};
  std::vector<double> es;
  for (double h : hs) es.push_back(7.0 * h * h * h);
  r = convergence_rates(es, hs);
  for (double v : r.rates) CHECK(v == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(r.average == doctest::Approx(3.0).epsilon(1e-12));

  r = convergence_rates({1e-3, 0.0}, {0.1, 0.05});
  CHECK(r.rates[0] == kRateUndefined);
}
