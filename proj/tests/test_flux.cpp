#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "claw/fixtures.hpp"
#include "claw/flux.hpp"

using namespace claw;

TEST_CASE("quadratic model basics") {
  const FluxPair fp = burgers_flux({-1.5, 1.5});
  CHECK(fp.eta(0.7) == doctest::Approx(0.7));
  CHECK(fp.phi(0.7) == doctest::Approx(0.245));
  CHECK(fp.characteristic_speed(0.7) == doctest::Approx(0.7));
  CHECK(fp.eta_inverse(0.3) == doctest::Approx(0.3).epsilon(1e-12));
  // H(v) = v^2 / 2
  CHECK(fp.hamiltonian(0.8) == doctest::Approx(0.32).epsilon(1e-10));
  CHECK_THROWS_AS(fp.characteristic_speed(2.0), OutOfDomain);
  CHECK_THROWS_AS(fp.hamiltonian(9.0), OutOfRange);
}

TEST_CASE("strictly decreasing density transform is rejected") {
  CHECK_THROWS_AS(FluxPair([](double u) { return -u; },
                           [](double u) { return u * u / 2.0; },
                           [](double) { return -1.0; },
                           [](double u) { return u; },
                           [](double) { return 0.0; },
                           [](double) { return 1.0; }, Interval{-1.0, 1.0}),
                  NonMonotoneEta);
}

TEST_CASE("cubic-form pair on a positive domain") {
  // eta = u^2/2, phi = u^3/3 so the speed field is a(u) = u, same as the
  // quadratic model, but jump speeds differ.
  const FluxPair fp = gelfand_q_flux({0.1, 2.5});
  CHECK(fp.eta(2.0) == doctest::Approx(2.0));
  CHECK(fp.phi(2.0) == doctest::Approx(8.0 / 3.0));
  CHECK(fp.characteristic_speed(1.7) == doctest::Approx(1.7).epsilon(1e-12));
  CHECK(convexity_class(fp).tag == ConvexityTag::strictly_convex);
}

TEST_CASE("exponential pair reduces to the quadratic model in v") {
  const FluxPair fp = exp_pair_flux({-1.0, 1.0});
  CHECK(fp.eta(0.5) == doctest::Approx(std::exp(0.5)));
  CHECK(fp.phi(0.5) == doctest::Approx(std::exp(1.0) / 2.0));
  // H(v) = phi(ln v) = v^2 / 2
  CHECK(fp.hamiltonian(1.3) == doctest::Approx(0.845).epsilon(1e-10));
  CHECK(fp.characteristic_speed(0.25) ==
        doctest::Approx(std::exp(0.25)).epsilon(1e-12));
}

TEST_CASE("level-system pair has the advertised derivative structure") {
  const double phi0 = 1.0, phi1 = 1.0, mu = 0.2;
  const FluxPair fp = ph_flux(phi0, phi1, mu);
  for (double u : {0.1, 0.5, 0.9}) {
    const double Phi = phi0 + phi1 * u;
    CHECK(fp.eta_prime(u) == doctest::Approx(1.0 / (Phi + mu)).epsilon(1e-12));
    CHECK(fp.phi_prime(u) ==
          doctest::Approx((Phi - mu) / (Phi + mu)).epsilon(1e-12));
    CHECK(fp.characteristic_speed(u) ==
          doctest::Approx(Phi - mu).epsilon(1e-12));
  }
}

TEST_CASE("convexity classification") {
  CHECK(convexity_class(burgers_flux({-1.0, 1.0})).tag ==
        ConvexityTag::strictly_convex);
  // a(u) = -sin(u) changes monotonicity on (-3, 3)
  const FluxPair wavy([](double u) { return u; },
                      [](double u) { return std::cos(u); },
                      [](double) { return 1.0; },
                      [](double u) { return -std::sin(u); },
                      [](double) { return 0.0; },
                      [](double u) { return -std::cos(u); },
                      Interval{-3.0, 3.0});
  const ConvexityClass c = convexity_class(wavy);
  CHECK(c.tag == ConvexityTag::neither);
  CHECK(c.witness.has_value());
  // concave case: phi = -u^2/2
  const FluxPair cave([](double u) { return u; },
                      [](double u) { return -u * u / 2.0; },
                      [](double) { return 1.0; },
                      [](double u) { return -u; },
                      [](double) { return 0.0; },
                      [](double) { return -1.0; }, Interval{-1.0, 1.0});
  CHECK(convexity_class(cave).tag == ConvexityTag::strictly_concave);
}

TEST_CASE("discrete Legendre conjugate of a parabola") {
  SampledFunction f;
  const int n = 2001;
  for (int i = 0; i < n; ++i) {
    const double x = -2.0 + 4.0 * i / (n - 1);
    f.grid.push_back(x);
    f.values.push_back(x * x / 2.0);
  }
  const SampledFunction g = legendre_conjugate(f, {-1.0, -0.5, 0.0, 0.5, 1.0});
  for (std::size_t j = 0; j < g.grid.size(); ++j) {
    const double s = g.grid[j];
    CHECK(g.values[j] == doctest::Approx(s * s / 2.0).epsilon(1e-5));
  }
}

TEST_CASE("tabulated pair reproduces its samples") {
  FluxSpec spec;
  spec.family = "table";
  spec.domain = {0.0, 1.0};
  for (int i = 0; i <= 20; ++i) {
    const double u = i / 20.0;
    spec.table_u.push_back(u);
    spec.table_eta.push_back(u + 0.2 * u * u);
    spec.table_phi.push_back(u * u);
  }
  const FluxPair fp = make_flux_pair(spec);
  CHECK(fp.eta(0.5) == doctest::Approx(0.55).epsilon(1e-10));
  CHECK(fp.phi(0.5) == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(fp.eta_prime(0.5) > 0.0);
}

TEST_CASE("hamiltonian_table traces (eta(u), phi(u))") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const SampledFunction h = hamiltonian_table(fp, 101);
  REQUIRE(h.grid.size() == 101);
  for (std::size_t i = 0; i < h.grid.size(); ++i) {
    const double v = h.grid[i];
    CHECK(h.values[i] == doctest::Approx(v * v / 2.0).epsilon(1e-12));
  }
}
