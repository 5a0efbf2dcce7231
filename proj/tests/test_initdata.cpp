#include <doctest.h>

#include <cmath>

#include "gkdv/analysis.hpp"
#include "gkdv/initdata.hpp"
#include "test_helpers.hpp"

using namespace gkdv;
using testing_support::sampled;

TEST_CASE("soliton peak values from the closed form") {
  auto grid = make_grid(2048, 100.0, 0.0);
  // peak sits at x0 = 0, which is a grid point
  CHECK(soliton_profile(2, 1.0, 0.0, grid).values[1024] == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(soliton_profile(5, 1.0, 0.0, grid).values[1024] ==
        doctest::Approx(std::pow(3.0, 0.25)).epsilon(1e-14));
  CHECK(soliton_profile(2, 4.0, 0.0, grid).values[1024] == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("soliton profile matches the independent closed-form sampler") {
  auto grid = make_grid(1024, 80.0, 3.0);
  const Field q = soliton_profile(6, 2.0, 1.0, grid);
  for (int j = 0; j < grid->n(); j += 17)
    CHECK(q.values[j] ==
          doctest::Approx(testing_support::soliton_value(6, 2.0, grid->x(j) - 1.0)).epsilon(1e-13));
}

TEST_CASE("soliton residual: exact profile, perturbed profile, zero field") {
  auto grid = make_grid(2048, 100.0, 0.0);
  const Field q = soliton_profile(2, 1.0, 0.0, grid);
  CHECK(soliton_residual(2, 1.0, q) < 1e-8);

  Field perturbed = q;
  for (double& v : perturbed.values) v *= 1.1;
  CHECK(soliton_residual(2, 1.0, perturbed) > 1e-2);

  const Field zero(grid);
  CHECK(soliton_residual(2, 1.0, zero) == 0.0);
}

TEST_CASE("soliton residual decreases spectrally with resolution") {
  double prev = 0.0;
  for (int n : {128, 256, 512}) {
    auto grid = make_grid(n, 100.0, 0.0);
    const double res = soliton_residual(2, 1.0, soliton_profile(2, 1.0, 0.0, grid));
    if (prev > 1e-11) CHECK(prev / res >= 10.0);  // until the round-off floor
    prev = res;
  }
}

TEST_CASE("make_initial: gaussian, scaled soliton, superposition, custom") {
  auto grid = make_grid(2048, 120.0, 0.0);

  const Field g = make_initial(GaussianInit{1.0, 1.0, 0.0}, grid);
  CHECK(g.values[1024] == doctest::Approx(1.0).epsilon(1e-15));

  const Field base = soliton_profile(6, 1.0, 0.0, grid);
  const Field scaled = make_initial(ScaledSolitonInit{6, 1.5, 1.0, 0.0}, grid);
  CHECK(mass(scaled) == doctest::Approx(2.25 * mass(base)).epsilon(1e-12));

  const Field two = make_initial(TwoSolitonInit{2, 1.0, -25.0, 1.0, 25.0}, grid);
  const double single = mass(soliton_profile(2, 1.0, 0.0, grid));
  CHECK(std::abs(mass(two) - 2.0 * single) / (2.0 * single) < 1e-8);

  std::vector<double> samples(grid->n(), 0.25);
  const Field custom = make_initial(CustomSamplesInit{samples}, grid);
  CHECK(custom.values[7] == 0.25);
  CHECK_THROWS_AS(make_initial(CustomSamplesInit{{1.0, 2.0}}, grid), std::invalid_argument);
}

TEST_CASE("soliton mass scaling across p and c") {
  auto grid = make_grid(2048, 100.0, 0.0);
  for (int p = 2; p <= 8; ++p) {
    const double m1 = mass(soliton_profile(p, 1.0, 0.0, grid));
    for (double c : {0.25, 1.0, 4.0}) {
      const double mc = mass(soliton_profile(p, c, 0.0, grid));
      const double predicted = std::pow(c, 2.0 / (p - 1) - 0.5) * m1;
      CHECK(std::abs(mc - predicted) / predicted < 1e-8);
    }
  }
}

TEST_CASE("window-edge tail ratio flags undersized domains") {
  auto wide = make_grid(1024, 100.0, 0.0);
  CHECK(edge_to_peak_ratio(soliton_profile(2, 1.0, 0.0, wide)) < 1e-12);
  auto narrow = make_grid(128, 20.0, 0.0);
  CHECK(edge_to_peak_ratio(soliton_profile(2, 1.0, 0.0, narrow)) > 1e-12);
}

TEST_CASE("input validation") {
  auto grid = make_grid(64, 20.0, 0.0);
  CHECK_THROWS_AS(soliton_profile(1, 1.0, 0.0, grid), std::domain_error);
  CHECK_THROWS_AS(soliton_profile(2, -1.0, 0.0, grid), std::domain_error);
  CHECK_THROWS_AS(make_initial(GaussianInit{1.0, 0.0, 0.0}, grid), std::domain_error);
}
