#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gkdv/analysis.hpp"
#include "gkdv/errors.hpp"
#include "gkdv/initdata.hpp"
#include "test_helpers.hpp"

using namespace gkdv;
using testing_support::sampled;
using testing_support::simpson;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("mass: zero, soliton oracle, quadratic homogeneity") {
  auto grid = make_grid(2048, 100.0, 0.0);
  CHECK(mass(Field(grid)) == 0.0);

  const Field q = soliton_profile(2, 1.0, 0.0, grid);
  CHECK(std::abs(mass(q) - 6.0) < 1e-8);

  Field doubled = q;
  for (double& v : doubled.values) v *= 2.0;
  CHECK(mass(doubled) == doctest::Approx(4.0 * mass(q)).epsilon(1e-14));
}

TEST_CASE("energy: zero field, pinned soliton value, small-amplitude limit") {
  auto grid = make_grid(2048, 100.0, 0.0);
  CHECK(energy(Field(grid), 2) == 0.0);

  // closed-form oracle for p=2, c=1: int((1/2)Q'^2 - Q^3/3) = 3/5 - 12/5 = -9/5,
  // re-derived here by quadrature of the closed-form profile
  const double grad_part = simpson(
      [](double x) {
        const double h = 1.0 / std::pow(std::cosh(x / 2), 2);
        const double t = std::tanh(x / 2);
        const double qp = -1.5 * h * t;  // Q'(x)
        return 0.5 * qp * qp;
      },
      -60.0, 60.0, 1e-13);
  const double cubic_part = simpson(
      [](double x) { return std::pow(testing_support::soliton_value(2, 1.0, x), 3) / 3.0; },
      -60.0, 60.0, 1e-13);
  CHECK(grad_part - cubic_part == doctest::Approx(-1.8).epsilon(1e-8));

  const Field q = soliton_profile(2, 1.0, 0.0, grid);
  CHECK(energy(q, 2) == doctest::Approx(-1.8).epsilon(1e-10));

  // vanishing amplitude: energy approaches the pure gradient part
  for (double eps : {1e-2, 1e-3}) {
    const Field g = sampled(grid, [&](double x) { return eps * std::exp(-x * x); });
    const double grad_half = 0.5 * std::pow(norm_grad_l2(g), 2);
    CHECK(std::abs(energy(g, 2) / grad_half - 1.0) < 10.0 * eps);
  }
}

TEST_CASE("critical exponent") {
  CHECK(critical_exponent(5) == 0.0);
  CHECK(critical_exponent(6) == 0.1);
  CHECK(critical_exponent(9) == 0.25);
  CHECK_THROWS_AS(critical_exponent(1), std::domain_error);
}

TEST_CASE("minimal blow-up rate bound") {
  // Remark-level identity at s = 1, exact in floating point
  for (int p = 5; p <= 10; ++p)
    CHECK(blowup_rate_exponent(1.0, p) == (p + 3) / (6.0 * (p - 1)));

  CHECK(blowup_rate_exponent(1.0, 6) == doctest::Approx(0.3));
  CHECK(minimal_blowup_rate(0.0, 1e-3, 1.0, 6, 1.0) ==
        doctest::Approx(std::pow(10.0, 0.9)).epsilon(1e-12));

  // degenerate exponent at s = s_p: constant bound
  const double sp = critical_exponent(7);
  CHECK(minimal_blowup_rate(0.5, 1.0, sp, 7, 2.5) == doctest::Approx(2.5));

  CHECK_THROWS_AS(minimal_blowup_rate(1.0, 1.0, 1.0, 6, 1.0), std::domain_error);
  CHECK_THROWS_AS(minimal_blowup_rate(2.0, 1.0, 1.0, 6, 1.0), std::domain_error);
}

TEST_CASE("GN2 exponent alpha") {
  CHECK(gn_alpha(4.0, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(gn_alpha(4.0, 0.25) == doctest::Approx(1.0).epsilon(1e-15));  // boundary included
  CHECK_THROWS_AS(gn_alpha(4.0, 0.1), exponent_incompatibility_error);
  CHECK_THROWS_AS(gn_alpha(4.0, 0.0), exponent_incompatibility_error);
  CHECK_THROWS_AS(gn_alpha(2.0, 0.5), std::domain_error);
}

TEST_CASE("gaussian GN3 ratio against the closed-form integrals") {
  // for v = e^{-x^2}: sup = 1, int v^2 = sqrt(pi/2), int v'^2 = sqrt(pi/2),
  // so r3 = (pi/2)^{-1/4}
  auto grid = make_grid(2048, 80.0, 0.0);
  const Field f = sampled(grid, [](double x) { return std::exp(-x * x); });
  const GnRatios r = gn_ratios(f, 4.0, 0.5);
  CHECK(std::abs(r.r3 - std::pow(kPi / 2.0, -0.25)) < 1e-6);
}

TEST_CASE("GN ratios: sharpness, scaling and translation invariance") {
  auto grid = make_grid(256, 40.0, 0.0);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const Field f = testing_support::random_band_limited(grid, rng);
    const GnRatios base = gn_ratios(f, 4.0, 0.5);
    CHECK(base.r3 <= 1.0 + 1e-6);

    Field scaled = f;
    for (double& v : scaled.values) v *= 2.7;
    const GnRatios sc = gn_ratios(scaled, 4.0, 0.5);
    CHECK(std::abs(sc.r1 - base.r1) / base.r1 < 1e-10);
    CHECK(std::abs(sc.r2 - base.r2) / base.r2 < 1e-10);
    CHECK(std::abs(sc.r3 - base.r3) / base.r3 < 1e-10);

    Field shifted = f;
    std::rotate(shifted.values.begin(), shifted.values.begin() + 41, shifted.values.end());
    const GnRatios tr = gn_ratios(shifted, 4.0, 0.5);
    CHECK(std::abs(tr.r1 - base.r1) / base.r1 < 1e-10);
    CHECK(std::abs(tr.r2 - base.r2) / base.r2 < 1e-10);
  }

  CHECK_THROWS_AS(gn_ratios(Field(grid), 4.0, 0.5), std::domain_error);
}

TEST_CASE("conservation record fields") {
  auto grid = make_grid(1024, 100.0, 0.0);
  const Field q = soliton_profile(6, 1.0, 0.0, grid);
  const ConservationRecord rec = conservation_record(q, 6);
  CHECK(rec.mass == doctest::Approx(mass(q)));
  CHECK(rec.energy == doctest::Approx(energy(q, 6)));
  CHECK(rec.sup == doctest::Approx(norm_sup(q)));
  CHECK(rec.grad_l2 == doctest::Approx(norm_grad_l2(q)));
  CHECK(rec.hs_crit ==
        doctest::Approx(norm_l2(fractional_derivative(q, critical_exponent(6)))));
}
