#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "claw/fixtures.hpp"
#include "claw/riemann.hpp"
#include "claw/variational.hpp"

using namespace claw;

namespace {

GridFunction linear_data(Grid1D g) {
  // u0(x) = x clipped to [-1, 1]; solution of the quadratic model is
  // x / (1 + t) inside the untouched wedge
  return GridFunction::sample(
      g, [](double x) { return std::clamp(x, -1.0, 1.0); });
}

}  // namespace

TEST_CASE("initial potential is the anchored primitive of eta(u0)") {
  const FluxPair fp = exp_pair_flux({-1.0, 1.0});
  const Grid1D g(-1.0, 1.0, 200);
  const GridFunction u0 = GridFunction::sample(g, [](double) { return 0.5; });
  const SampledFunction U0 = potential_initial(fp, u0);
  // slope everywhere = eta(0.5) = e^{0.5}, anchored at 0
  CHECK(U0(0.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(U0(0.8) == doctest::Approx(0.8 * std::exp(0.5)).epsilon(1e-9));
  CHECK(U0(-0.6) == doctest::Approx(-0.6 * std::exp(0.5)).epsilon(1e-9));
}

TEST_CASE("minimization formula reproduces the exact fan") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const GridFunction u0 = fixtures::burgers_fan(Grid1D(-2.0, 2.0, 200));
  const VariationalSolver vs(fp, u0);
  const SelfSimilarSolution exact =
      solve_riemann_convex(RiemannProblem(fp, -1.0, 1.0));
  for (double x : {-1.5, -0.7, -0.2, 0.0, 0.3, 0.9, 1.6}) {
    const auto [u, rec] = vs.lax_oleinik(1.0, x);
    CHECK(u == doctest::Approx(exact.evaluate(1.0, x)).epsilon(0.03));
    CHECK(rec.value == doctest::Approx(vs.hopf_lax_potential(1.0, x))
                           .epsilon(1e-9));
  }
}

TEST_CASE("minimization formula reproduces the stationary shock") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const GridFunction u0 = fixtures::burgers_shock(Grid1D(-2.0, 2.0, 400));
  const VariationalSolver vs(fp, u0);
  CHECK(vs.lax_oleinik(1.0, -0.5).first == doctest::Approx(1.0).epsilon(0.02));
  CHECK(vs.lax_oleinik(1.0, 0.5).first ==
        doctest::Approx(-1.0).epsilon(0.02));
  // minimizer jumps across the shock: both sides give distinct y*
  const auto left = vs.lax_oleinik(1.0, -0.05).second;
  const auto right = vs.lax_oleinik(1.0, 0.05).second;
  CHECK(left.y_star < -0.5);
  CHECK(right.y_star > 0.5);
}

TEST_CASE("characteristic and minimization potentials agree pre-shock") {
  const FluxPair fp = burgers_flux({-1.1, 1.1});
  const GridFunction u0 = linear_data(Grid1D(-3.0, 3.0, 300));
  const VariationalSolver vs(fp, u0);
  for (double x : {-0.8, -0.3, 0.0, 0.4, 0.9}) {
    const double a = vs.hopf_lax_potential(0.7, x);
    const double b = vs.characteristics_potential(0.7, x);
    CHECK(a == doctest::Approx(b).epsilon(1e-3));
  }
}

TEST_CASE("u recovered from the potential matches the direct formula") {
  const FluxPair fp = burgers_flux({-1.1, 1.1});
  const GridFunction u0 = linear_data(Grid1D(-3.0, 3.0, 300));
  const VariationalSolver vs(fp, u0);
  for (double x : {-0.5, 0.0, 0.6}) {
    const double direct = vs.lax_oleinik(1.0, x).first;
    const double from_pot = vs.u_from_potential(
        [&vs](double t, double xx) { return vs.hopf_lax_potential(t, xx); },
        1.0, x);
    CHECK(direct == doctest::Approx(x / 2.0).epsilon(0.02));
    CHECK(from_pot == doctest::Approx(direct).epsilon(0.05));
  }
}

TEST_CASE("monotone-data formula agrees with the minimization formula") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const GridFunction u0 = fixtures::burgers_fan(Grid1D(-2.0, 2.0, 400));
  const VariationalSolver vs(fp, u0);
  for (double x : {-0.6, -0.1, 0.2, 0.7}) {
    const double a = vs.hopf_monotone(1.0, x);
    const double b = vs.lax_oleinik(1.0, x).first;
    CHECK(a == doctest::Approx(b).epsilon(0.05));
  }
  // both readings agree for the identity transform
  for (double x : {-0.4, 0.5}) {
    CHECK(vs.hopf_monotone(1.0, x, MonotoneSupVariable::u_value) ==
          doctest::Approx(
              vs.hopf_monotone(1.0, x, MonotoneSupVariable::eta_value))
              .epsilon(0.05));
  }
}

TEST_CASE("monotone formula rejects decreasing data") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const GridFunction u0 = fixtures::burgers_shock(Grid1D(-2.0, 2.0, 100));
  const VariationalSolver vs(fp, u0);
  CHECK_THROWS_AS(vs.hopf_monotone(1.0, 0.0), NotMonotoneData);
}

TEST_CASE("convex-initial-potential formula") {
  const FluxPair fp = burgers_flux({-1.1, 1.1});
  // U0(x) = x^2 / 2 (potential of u0 = x)
  SampledFunction U0;
  const int n = 801;
  for (int i = 0; i < n; ++i) {
    const double x = -2.0 + 4.0 * i / (n - 1);
    U0.grid.push_back(x);
    U0.values.push_back(x * x / 2.0);
  }
  // t = 0 reproduces U0 (sup_s [s x - U0*(s)] = U0** = U0)
  for (double x : {-0.9, -0.2, 0.5, 1.0})
    CHECK(hopf_convex_initial(fp, U0, 0.0, x) ==
          doctest::Approx(x * x / 2.0).epsilon(1e-4));
  // for t > 0, U(t,x) = x^2 / (2 (1 + t)) inside the data hull; the x
  // derivative gives u = x / (1 + t)
  const double t = 0.8;
  for (double x : {-0.5, 0.2, 0.6}) {
    const double h = 0.01;
    const double du = (hopf_convex_initial(fp, U0, t, x + h) -
                       hopf_convex_initial(fp, U0, t, x - h)) /
                      (2.0 * h);
    CHECK(du == doctest::Approx(x / (1.0 + t)).epsilon(5e-3));
  }
  // a non-convex table is rejected
  SampledFunction bad = U0;
  bad.values[n / 2] += 0.5;
  CHECK_THROWS_AS(hopf_convex_initial(fp, bad, 0.5, 0.0), NotConvexInitial);
}

TEST_CASE("non-convex composed flux is rejected by the minimization formula") {
  const FluxPair wavy([](double u) { return u; },
                      [](double u) { return std::cos(u); },
                      [](double) { return 1.0; },
                      [](double u) { return -std::sin(u); },
                      [](double) { return 0.0; },
                      [](double u) { return -std::cos(u); },
                      Interval{-3.0, 3.0});
  const GridFunction u0 =
      GridFunction::sample(Grid1D(-1.0, 1.0, 64),
                           [](double x) { return std::clamp(x, -1.0, 1.0); });
  const VariationalSolver vs(wavy, u0);
  CHECK_THROWS_AS(vs.lax_oleinik(0.5, 0.0), NotConvex);
}
