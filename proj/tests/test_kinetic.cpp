#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "claw/fixtures.hpp"
#include "claw/kinetic.hpp"
#include "claw/riemann.hpp"

using namespace claw;

TEST_CASE("indicator values") {
  CHECK(chi_indicator(0.7, 0.3) == 1.0);
  CHECK(chi_indicator(0.7, -0.2) == 0.0);
  CHECK(chi_indicator(-0.5, -0.2) == -1.0);
  CHECK(chi_indicator(0.0, 0.1) == 0.0);
}

TEST_CASE("velocity cover aligns edges with zero and the endpoints") {
  const VelocityGrid vg = make_velocity_cover({-1.0, 1.0}, 34);
  CHECK(vg.dv() == doctest::Approx(2.0 / 32.0));
  CHECK(vg.v_min == doctest::Approx(-1.0 - vg.dv()));
  CHECK(vg.v_max == doctest::Approx(1.0 + vg.dv()));
  // zero is a cell edge: some center sits at +dv/2
  bool found = false;
  for (int j = 0; j < vg.n_cells; ++j)
    if (std::abs(vg.center(j) - 0.5 * vg.dv()) < 1e-12) found = true;
  CHECK(found);
  CHECK_THROWS_AS(make_velocity_cover({-0.37, 1.0}, 33), GridMismatch);
  CHECK_THROWS_AS(make_velocity_cover({-1.0, 1.0}, 8), UnstableConfig);
}

TEST_CASE("moment of the equilibrium recovers u on an aligned grid") {
  const Grid1D g(-1.0, 1.0, 16);
  const VelocityGrid vg = make_velocity_cover({-1.0, 1.0}, 202);
  // 101 u-samples across the domain
  for (int s = 0; s <= 100; ++s) {
    const double u = -1.0 + 2.0 * s / 100.0;
    const GridFunction u0 =
        GridFunction::sample(g, [u](double) { return u; });
    const KineticDensity f = KineticDensity::equilibrium(u0, vg);
    const GridFunction m = f.moment();
    // the sample values land on cell edges, so the midpoint moment is exact
    for (double v : m.values) CHECK(std::abs(v - u) <= 1e-12);
  }
}

TEST_CASE("constant data is preserved") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const Grid1D g(-1.0, 1.0, 64);
  const GridFunction u0 = GridFunction::sample(g, [](double) { return 0.5; });
  KineticConfig cfg;
  cfg.epsilon = 1e-3;
  cfg.n_v = 34;
  cfg.t_final = 0.5;
  const KineticResult r = kinetic_solve(fp, u0, cfg);
  for (double v : r.u.values)
    CHECK(v == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("density stays within the indicator bounds") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const GridFunction u0 = fixtures::burgers_shock(Grid1D(-2.0, 2.0, 100));
  KineticConfig cfg;
  cfg.epsilon = 1e-2;
  cfg.n_v = 34;
  cfg.t_final = 0.5;
  const KineticResult r = kinetic_solve(fp, u0, cfg);
  CHECK(r.u.min_value() >= -1.0 - 1e-8);
  CHECK(r.u.max_value() <= 1.0 + 1e-8);
}

TEST_CASE("moment converges to the exact fan") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const GridFunction u0 = fixtures::burgers_fan(Grid1D(-2.0, 2.0, 400));
  const SelfSimilarSolution exact =
      solve_riemann_convex(RiemannProblem(fp, -1.0, 1.0));
  const GridFunction ref = GridFunction::sample(
      u0.grid, [&](double x) { return exact.evaluate(1.0, x); }, 1.0);
  KineticConfig cfg;
  cfg.epsilon = 1e-3;
  cfg.n_v = 66;
  cfg.t_final = 1.0;
  const KineticResult r = kinetic_solve(fp, u0, cfg);
  CHECK(l1_distance(r.u, ref) <= 0.05);
}

TEST_CASE("stationary shock stays near the origin") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const GridFunction u0 = fixtures::burgers_shock(Grid1D(-2.0, 2.0, 400));
  KineticConfig cfg;
  cfg.epsilon = 1e-3;
  cfg.n_v = 66;
  cfg.t_final = 1.0;
  const KineticResult r = kinetic_solve(fp, u0, cfg);
  double x_cross = -10.0;
  for (int i = 0; i + 1 < r.u.grid.n_nodes(); ++i)
    if (r.u.values[i] > 0.0 && r.u.values[i + 1] <= 0.0)
      x_cross = r.u.grid.node(i);
  CHECK(std::abs(x_cross) <= 2.0 * r.u.grid.dx());
}
