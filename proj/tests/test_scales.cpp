#include <doctest.h>

#include <cmath>

#include "gkdv/errors.hpp"
#include "gkdv/scales.hpp"
#include "test_helpers.hpp"

using namespace gkdv;

namespace {
ScaleConfig cfg_p(int p) {
  ScaleConfig sc;
  sc.p = p;
  return sc;
}
}  // namespace

TEST_CASE("history bookkeeping") {
  ScaleState st(Regime::global, cfg_p(6));
  st.push(0.0, 1.0);
  st.push(1.0, 2.0);
  CHECK_THROWS_AS(st.push(0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(st.push(1.0, 1.0), std::invalid_argument);
  CHECK(st.grad_at(0.5) == doctest::Approx(1.5));
  CHECK_THROWS_AS(st.grad_at(2.0), std::out_of_range);
  CHECK_THROWS_AS(st.beta_right(5.0), std::out_of_range);
}

TEST_CASE("beta_right: constant history, origin, linear history") {
  const double g = 2.0, C0 = 1.3;
  ScaleConfig sc = cfg_p(3);
  sc.C0 = C0;
  ScaleState st(Regime::global, sc);
  for (int i = 0; i <= 10; ++i) st.push(0.15 * i, g);
  const double t = 1.5;
  CHECK(st.beta_right(t) == doctest::Approx(C0 * t * (1.0 + g)).epsilon(1e-13));
  CHECK(st.beta_right(0.0) == 0.0);

  ScaleState lin(Regime::global, cfg_p(3));
  for (int i = 0; i <= 100; ++i) lin.push(i / 100.0, i / 100.0);
  // integrand g^{(p-1)/2} = g = s: trapezoid is exact for linear data
  CHECK(lin.beta_right(1.0) == doctest::Approx(1.5).epsilon(1e-13));
  // non-decreasing along the history
  double prev = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double b = lin.beta_right(i / 100.0);
    CHECK(b >= prev);
    prev = b;
  }
}

TEST_CASE("beta_left in both regimes") {
  const double eta = 0.1;

  SUBCASE("global: bounded gradient at t = e^2") {
    const double G = 1.7;
    ScaleConfig sc = cfg_p(6);
    sc.eta = eta;
    sc.C1 = 2.0;
    ScaleState st(Regime::global, sc);
    const double t = std::exp(2.0);
    st.push(t - 1.0, G);
    st.push(t + 1.0, G);
    const double expected = 2.0 * (1.0 + std::pow(G, 2.5)) * t * std::pow(2.0, 1.0 + eta);
    CHECK(st.beta_left(t) == doctest::Approx(expected).epsilon(1e-12));
    CHECK_THROWS_AS(st.beta_left(0.5), std::domain_error);
  }

  SUBCASE("blow-up: worked value at T*-t = 1/e") {
    ScaleConfig sc = cfg_p(6);
    sc.eta = 0.25;  // |log(1/e)|^{1+eta} = 1 for any eta
    sc.C1 = 3.0;
    ScaleState st(Regime::blowup, sc, 2.0);
    const double t = 2.0 - std::exp(-1.0);
    st.push(t - 0.5, 1.0);
    st.push(t + 1e-3, 1.0);
    CHECK(st.beta_left(t) == doctest::Approx(3.0 * std::exp(-1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(st.beta_left(2.5), std::domain_error);
  }

  SUBCASE("eta continuity") {
    for (double eta2 : {1e-3, 1e-6}) {
      ScaleConfig sc = cfg_p(6);
      sc.eta = eta2;
      ScaleState st(Regime::blowup, sc, 2.0);
      const double t = 2.0 - std::exp(-1.0);
      st.push(t - 0.5, 1.0);
      st.push(t + 1e-3, 1.0);
      CHECK(st.beta_left(t) == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
    }
  }
}

TEST_CASE("beta_floor semantics") {
  SUBCASE("odd power rejected") {
    ScaleState st(Regime::global, cfg_p(5));
    st.push(0.0, 1.0);
    CHECK_THROWS_AS(st.beta_floor(0.0), std::domain_error);
  }

  SUBCASE("running max and domination, p = 6") {
    ScaleState st(Regime::global, cfg_p(6));
    const std::vector<double> g = {1.0, 2.0, 1.5, 1.2};
    for (std::size_t i = 0; i < g.size(); ++i) st.push(static_cast<double>(i), g[i]);
    CHECK(st.beta_floor(0.0) == 1.0);
    CHECK(st.beta_floor(1.0) == 4.0);  // 2^{n-1} with n = 3
    CHECK(st.beta_floor(3.0) == 4.0);  // running max persists
    for (std::size_t i = 0; i < g.size(); ++i)
      CHECK(st.beta_floor(static_cast<double>(i)) >= std::pow(g[i], 2));
  }

  SUBCASE("monotone history is reproduced above the floor") {
    ScaleState st(Regime::global, cfg_p(6));
    for (int i = 0; i <= 20; ++i) st.push(0.1 * i, 1.0 + 0.2 * i);
    for (int i = 1; i <= 20; ++i) {
      const double g = 1.0 + 0.2 * i;
      CHECK(st.beta_floor(0.1 * i) == doctest::Approx(g * g).epsilon(1e-12));
    }
  }

  SUBCASE("constant history") {
    ScaleState st(Regime::global, cfg_p(6));
    for (int i = 0; i <= 5; ++i) st.push(0.5 * i, 1.0);
    CHECK(st.beta_floor(2.5) == 1.0);
  }
}

TEST_CASE("compact scales: regimes, identities, domain errors") {
  SUBCASE("global example at t = e^2 with beta = 1") {
    ScaleState st(Regime::global, cfg_p(6));
    const double t = std::exp(2.0);
    st.push(t - 1.0, 1.0);
    st.push(t + 1.0, 1.0);
    const CompactScales cs = st.compact_scales(t);
    CHECK(cs.theta == doctest::Approx(std::pow(t, 1.0 / 3.0) * 4.0).epsilon(1e-12));
    CHECK(cs.lambda2 == doctest::Approx(std::pow(t, 2.0 / 3.0)).epsilon(1e-12));
    CHECK(cs.lambda1 == doctest::Approx(std::pow(t, 2.0 / 3.0) / 2.0).epsilon(1e-12));
    CHECK(cs.lambda_statement == doctest::Approx(cs.lambda1).epsilon(1e-15));
    CHECK(cs.mu_prime_bound == doctest::Approx(cs.lambda2 / t).epsilon(1e-13));
    CHECK_THROWS_AS(st.compact_scales(5.0), std::domain_error);
  }

  SUBCASE("blow-up example at s = e^{-2} with beta = e^2") {
    ScaleState st(Regime::blowup, cfg_p(6), 1.0);
    const double s = std::exp(-2.0);
    st.push(0.5, std::exp(1.0));
    st.push(1.0 - s, std::exp(1.0));
    const CompactScales cs = st.compact_scales(s);
    CHECK(cs.theta == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(cs.lambda2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cs.lambda1 == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(cs.lambda_statement == doctest::Approx(0.5).epsilon(1e-12));

    // theta * lambda1 == s * beta, exact up to round-off
    CHECK(std::abs(cs.theta * cs.lambda1 - s * cs.beta) <= 1e-12 * s * cs.beta);
    // lambda1/lambda2 == 1/log^2 s
    const double al = std::abs(std::log(s));
    CHECK(std::abs(cs.lambda1 / cs.lambda2 - 1.0 / (al * al)) <= 1e-12 / (al * al));

    CHECK_THROWS_AS(st.compact_scales(0.6), std::domain_error);   // above 1/2
    CHECK_THROWS_AS(st.compact_scales(-0.1), std::domain_error);  // nonpositive
  }

  SUBCASE("scale separation lambda1 << lambda2 as s decreases") {
    ScaleState st(Regime::blowup, cfg_p(6), 1.0);
    st.push(0.5, 1.0);
    st.push(1.0 - 1e-9, 1.0);
    double prev_ratio = 1.0;
    for (double s : {0.3, 0.1, 0.03, 0.01, 1e-4}) {
      const CompactScales cs = st.compact_scales(s);
      const double ratio = cs.lambda1 / cs.lambda2;
      CHECK(ratio < prev_ratio);
      prev_ratio = ratio;
    }
  }
}

TEST_CASE("mu tracking") {
  ScaleState st(Regime::global, cfg_p(6));
  st.push(7.0, 1.0);
  st.push(12.0, 1.0);
  auto grid = make_grid(2048, 100.0, 0.0);
  const double tau = 10.0;
  const CompactScales cs = st.compact_scales(tau);

  Field f(grid);
  const double target = 0.25 * cs.lambda1;
  for (int j = 0; j < grid->n(); ++j) {
    const double z = (grid->x(j) - target) / 0.3;
    f.values[j] = std::exp(-0.5 * z * z);
  }

  CHECK(mu_track(st, f, 0.0, 1.0, tau, true) == 0.0);  // fixed mode

  const double adopted = mu_track(st, f, 0.0, 100.0, tau, false);
  CHECK(std::abs(adopted - target) < 1e-6);

  const double dt = 1e-4;
  const double clipped = mu_track(st, f, 0.0, dt, tau, false);
  CHECK(clipped == doctest::Approx(cs.mu_prime_bound * dt).epsilon(1e-12));

  // empty window keeps the previous center
  const Field zero(grid);
  CHECK(mu_track(st, zero, 1.0, 1.0, tau, false) == 1.0);
}
