#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gkdv/errors.hpp"
#include "gkdv/grid.hpp"
#include "test_helpers.hpp"

using namespace gkdv;
using testing_support::sampled;
using testing_support::simpson;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("grid geometry and wavenumber table") {
  auto grid = make_grid(64, 2.0 * kPi, kPi);
  CHECK(grid->dx() == doctest::Approx(2.0 * kPi / 64).epsilon(1e-15));
  CHECK(grid->x(0) == doctest::Approx(0.0));
  CHECK(grid->dx() * grid->n() == doctest::Approx(grid->length()).epsilon(1e-15));

  // conjugate symmetry under index negation (Nyquist self-paired)
  const auto k = grid->wavenumbers();
  for (int j = 1; j < grid->n(); ++j) {
    if (j == grid->n() / 2) continue;
    CHECK(k[grid->n() - j] == doctest::Approx(-k[j]).epsilon(1e-15));
  }
}

TEST_CASE("spectral derivative is exact on band-limited data") {
  auto grid = make_grid(64, 2.0 * kPi, kPi);
  const Field f = sampled(grid, [](double x) { return std::sin(x); });
  const Field fx = spectral_derivative(f, 1);
  for (int j = 0; j < grid->n(); ++j)
    CHECK(fx.values[j] == doctest::Approx(std::cos(grid->x(j))).epsilon(1e-12));

  const Field one = sampled(grid, [](double) { return 1.0; });
  for (int order : {1, 2, 3}) CHECK(norm_sup(spectral_derivative(one, order)) == 0.0);
}

TEST_CASE("second derivative of sech^2 matches the closed form") {
  auto grid = make_grid(1024, 80.0, 0.0);
  const Field f = sampled(grid, [](double x) { return 1.0 / std::pow(std::cosh(x / 2), 2); });
  const Field fxx = spectral_derivative(f, 2);
  // with h = sech^2(x/2), t = tanh(x/2): (h)'' = (1/4)(4 h t^2 - 2 h^2)
  double err = 0.0;
  for (int j = 0; j < grid->n(); ++j) {
    const double u = grid->x(j) / 2;
    const double h = 1.0 / std::pow(std::cosh(u), 2);
    const double t = std::tanh(u);
    const double exact = 0.25 * (4.0 * h * t * t - 2.0 * h * h);
    err = std::max(err, std::abs(fxx.values[j] - exact));
  }
  CHECK(err < 1e-8);
}

TEST_CASE("spectral derivative rejects bad input") {
  auto grid = make_grid(64, 2.0 * kPi, kPi);
  Field f(grid);
  f.values[3] = std::nan("");
  CHECK_THROWS_AS(spectral_derivative(f, 1), invalid_field_error);
  Field g(grid);
  CHECK_THROWS_AS(spectral_derivative(g, 4), std::domain_error);
  CHECK_THROWS_AS(spectral_derivative(g, 0), std::domain_error);
}

TEST_CASE("fractional derivative: single mode, identity, negative order") {
  auto grid = make_grid(64, 2.0 * kPi, kPi);
  const Field f = sampled(grid, [](double x) { return std::sin(2.0 * x); });
  const Field half = fractional_derivative(f, 0.5);
  const double factor = std::sqrt(2.0);
  for (int j = 0; j < grid->n(); ++j)
    CHECK(half.values[j] == doctest::Approx(factor * f.values[j]).epsilon(1e-12));

  const Field same = fractional_derivative(f, 0.0);
  for (int j = 0; j < grid->n(); ++j) CHECK(same.values[j] == f.values[j]);

  CHECK_THROWS_AS(fractional_derivative(f, -0.5), std::domain_error);
}

TEST_CASE("fractional derivative of a gaussian against the analytic-transform oracle") {
  // oracle: the periodized gaussian's coefficients are (1/L) ghat(k_j)
  // with ghat(k) = w sqrt(2 pi) e^{-k^2 w^2 / 2}; apply |k|^s and re-sum
  // the series directly, never touching the FFT path
  auto grid = make_grid(512, 80.0, 0.0);
  const double w = 1.0, s = 0.25;
  const Field g = sampled(grid, [&](double x) { return std::exp(-x * x / (2 * w * w)); });
  const Field ds = fractional_derivative(g, s);

  const double L = grid->length();
  double err_sq = 0.0;
  for (int j = 0; j < grid->n(); ++j) {
    const double x = grid->x(j);
    double acc = 0.0;
    for (int m = 1; m <= grid->n() / 2; ++m) {
      const double k = 2.0 * kPi * m / L;
      const double coeff = w * std::sqrt(2.0 * kPi) * std::exp(-0.5 * k * k * w * w) / L;
      acc += 2.0 * std::pow(k, s) * coeff * std::cos(k * x);
    }
    err_sq += std::pow(acc - ds.values[j], 2);
  }
  CHECK(std::sqrt(err_sq * grid->dx()) < 1e-7);
}

TEST_CASE("periodic quadrature") {
  auto grid = make_grid(64, 2.0 * kPi, kPi);
  const Field f = sampled(grid, [](double x) { return std::sin(x) * std::sin(x); });
  CHECK(integrate(f) == doctest::Approx(kPi).epsilon(1e-12));

  auto grid2 = make_grid(128, 37.5, 2.0);
  const Field one = sampled(grid2, [](double) { return 1.0; });
  CHECK(integrate(one) == doctest::Approx(37.5).epsilon(1e-14));
}

TEST_CASE("soliton mass via quadrature oracle") {
  // independent oracle: adaptive Simpson of the closed-form profile
  const double oracle = simpson(
      [](double x) { return std::pow(testing_support::soliton_value(2, 1.0, x), 2); }, -60.0,
      60.0, 1e-13);
  CHECK(oracle == doctest::Approx(6.0).epsilon(1e-10));

  auto grid = make_grid(2048, 100.0, 0.0);
  const Field qsq =
      sampled(grid, [](double x) { return std::pow(testing_support::soliton_value(2, 1.0, x), 2); });
  CHECK(std::abs(integrate(qsq) - 6.0) < 1e-8);
  const Field q = sampled(grid, [](double x) { return testing_support::soliton_value(2, 1.0, x); });
  CHECK(norm_l2(q) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-9));
}

TEST_CASE("norms: zero field, localized windows, errors") {
  auto grid = make_grid(128, 64.0, 0.0);
  const Field zero(grid);
  CHECK(norm_l2(zero) == 0.0);
  CHECK(norm_lq(zero, 3.0) == 0.0);
  CHECK(norm_sup(zero) == 0.0);
  CHECK(norm_grad_l2(zero) == 0.0);
  CHECK(norm_hs(zero, 0.5) == 0.0);

  const Field one = sampled(grid, [](double) { return 1.0; });
  // window of length 3 aligned to the grid: dx = 0.5
  CHECK(norm_l2_window(one, Interval{0.0, 3.0}) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(norm_l2_window(one, Interval{-40.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(norm_lq_window(one, 0.5, Interval{0.0, 1.0}), std::domain_error);
}

TEST_CASE("Parseval identity on random band-limited fields") {
  auto grid = make_grid(256, 40.0, 0.0);
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    const Field f = testing_support::random_band_limited(grid, rng);
    double phys = 0.0;
    for (double v : f.values) phys += v * v;
    phys *= grid->dx();
    const double spec = l2sq_from_spectrum(*grid, spectrum_of(f));
    CHECK(std::abs(phys - spec) / phys < 1e-10);
  }
}

TEST_CASE("third derivative equals three first derivatives") {
  auto grid = make_grid(256, 40.0, 0.0);
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 20; ++trial) {
    const Field f = testing_support::random_band_limited(grid, rng);
    const Field a = spectral_derivative(f, 3);
    const Field b = spectral_derivative(spectral_derivative(spectral_derivative(f, 1), 1), 1);
    for (int j = 0; j < grid->n(); ++j) CHECK(std::abs(a.values[j] - b.values[j]) < 1e-9);
  }
}

TEST_CASE("discrete sharp sup bound on sign-changing fields") {
  auto grid = make_grid(256, 40.0, 0.0);
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    const Field f = testing_support::random_band_limited(grid, rng);
    const double lhs = norm_sup(f) * norm_sup(f);
    CHECK(lhs <= norm_l2(f) * norm_grad_l2(f) * (1.0 + 1e-6));
  }
}

TEST_CASE("Hs norm composes L2 and the fractional seminorm") {
  auto grid = make_grid(256, 40.0, 0.0);
  std::mt19937_64 rng(9);
  const Field f = testing_support::random_band_limited(grid, rng);
  const double a = norm_l2(f), b = norm_l2(fractional_derivative(f, 0.7));
  CHECK(norm_hs(f, 0.7) == doctest::Approx(std::sqrt(a * a + b * b)).epsilon(1e-13));
}

TEST_CASE("fractional multiplier keeps the Nyquist mode real") {
  auto grid = make_grid(64, 2.0 * kPi, kPi);
  const Field f = sampled(grid, [](double x) { return std::cos(32.0 * x); });
  const Field half = fractional_derivative(f, 0.5);
  const double expected = std::sqrt(32.0);
  for (int j = 0; j < grid->n(); ++j)
    CHECK(half.values[j] == doctest::Approx(expected * f.values[j]).epsilon(1e-10));
}
