#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "claw/fixtures.hpp"
#include "claw/riemann.hpp"
#include "claw/schemes.hpp"

using namespace claw;

namespace {

PHConfig make_ph_config(double h, double t_final, double mu = 0.0) {
  PHConfig cfg;
  cfg.efficiency = [](double u) { return 1.0 + u; };
  cfg.mu = mu;
  cfg.h = h;
  cfg.n_min = 0;
  cfg.n_max = static_cast<int>(std::lround(1.0 / h));
  cfg.t_final = t_final;
  return cfg;
}

LevelState sample_levels(const PHConfig& cfg,
                         const std::function<double(double)>& u0) {
  LevelState s;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n)
    s.values.push_back(u0(n * cfg.h));
  return s;
}

FluxPair linear_advection() {
  return FluxPair([](double u) { return u; }, [](double u) { return u; },
                  [](double) { return 1.0; }, [](double) { return 1.0; },
                  [](double) { return 0.0; }, [](double) { return 0.0; },
                  Interval{-2.0, 2.0}, "advection");
}

}  // namespace

TEST_CASE("level-system right-hand side") {
  PHConfig cfg = make_ph_config(1.0, 1.0);
  cfg.n_min = 0;
  cfg.n_max = 1;

  SUBCASE("state matching the left exterior value is stationary") {
    // interior differences vanish and the boundary coupling to the frozen
    // left exterior (u = 0) also vanishes
    LevelState s;
    s.values = {0.0, 0.0};
    const auto d = ph_rhs(cfg, s);
    CHECK(d[0] == doctest::Approx(0.0));
    CHECK(d[1] == doctest::Approx(0.0));
  }
  SUBCASE("single off-equilibrium level") {
    cfg.n_max = 0;  // one level, neighbors 0 and 1
    LevelState s;
    s.values = {0.5};
    const auto d = ph_rhs(cfg, s);
    // -Phi(0.5)(0.5 - 0) + 0 = -1.5 * 0.5 = -0.75, h = 1
    CHECK(d[0] == doctest::Approx(-0.75));
  }
  SUBCASE("attrition pulls toward the right neighbor") {
    cfg.n_max = 0;
    cfg.mu = 0.4;
    LevelState s;
    s.values = {0.5};
    const auto d = ph_rhs(cfg, s);
    CHECK(d[0] == doctest::Approx(-0.75 + 0.4 * 0.5));
  }
}

TEST_CASE("level system: zero data stays zero, range is preserved") {
  const PHConfig cfg = make_ph_config(0.05, 1.0);
  LevelState s0 = sample_levels(cfg, [](double) { return 0.0; });
  const LevelState s = ph_solve(cfg, s0);
  for (double v : s.values) CHECK(std::abs(v) <= 1e-12);
}

TEST_CASE("level system preserves monotonicity of distribution data") {
  const PHConfig cfg = make_ph_config(0.02, 1.0);
  LevelState s0 =
      sample_levels(cfg, [](double x) { return fixtures::logistic_cdf(x); });
  const LevelState s = ph_solve(cfg, s0);
  for (std::size_t i = 1; i < s.values.size(); ++i)
    CHECK(s.values[i] >= s.values[i - 1] - 1e-10);
  for (double v : s.values) {
    CHECK(v >= -1e-10);
    CHECK(v <= 1.0 + 1e-10);
  }
}

TEST_CASE("upwind scheme: unit CFL linear advection is an exact shift") {
  const FluxPair fp = linear_advection();
  const Grid1D g(0.0, 1.0, 50);
  const GridFunction u0 =
      GridFunction::sample(g, [](double x) { return std::sin(6.0 * x); });
  SchemeConfig cfg;
  cfg.tau = g.dx();  // CFL exactly 1
  const GridFunction u = upwind_solve(fp, u0, cfg, 10.0 * g.dx());
  for (int i = 10; i < g.n_nodes(); ++i)
    CHECK(u.values[i] == doctest::Approx(u0.values[i - 10]).epsilon(1e-12));
}

TEST_CASE("upwind scheme rejects leftward wind and broken CFL") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const GridFunction u0 = fixtures::burgers_fan(Grid1D(-2.0, 2.0, 64));
  SchemeConfig cfg;
  CHECK_THROWS_AS(upwind_solve(fp, u0, cfg, 0.5), WrongWindDirection);

  const GridFunction pos = GridFunction::sample(
      Grid1D(-2.0, 2.0, 64), [](double x) { return x < 0.0 ? 0.2 : 0.9; });
  SchemeConfig bad;
  bad.tau = 1.0;  // far beyond the stable step
  CHECK_THROWS_AS(upwind_solve(fp, pos, bad, 0.5), CflViolated);
}

TEST_CASE("upwind error on the fan decreases under refinement") {
  const FluxPair fp = burgers_flux({-0.1, 1.1});
  const SelfSimilarSolution exact =
      solve_riemann_convex(RiemannProblem(fp, 0.0, 1.0));
  double prev = HUGE_VAL;
  for (int n : {100, 200, 400}) {
    const Grid1D g(-1.0, 2.0, n);
    const GridFunction u0 = fixtures::riemann_data(0.0, 1.0, g);
    SchemeConfig cfg;
    const GridFunction u = upwind_solve(fp, u0, cfg, 1.0);
    const GridFunction ref = GridFunction::sample(
        g, [&](double x) { return exact.evaluate(1.0, x); }, 1.0);
    const double err = l1_distance(u, ref);
    CHECK(err < prev);
    CHECK(err <= 0.6 * std::sqrt(g.dx()));
    prev = err;
  }
}

TEST_CASE("upwind scheme conserves the density up to boundary fluxes") {
  const FluxPair fp = burgers_flux({-0.1, 1.1});
  const Grid1D g(-1.0, 2.0, 200);
  const GridFunction u0 = fixtures::riemann_data(0.2, 0.8, g);
  SchemeConfig cfg;
  cfg.tau = 0.9 * g.dx() / 1.1;
  const double t_final = 60.0 * cfg.tau;
  const GridFunction u = upwind_solve(fp, u0, cfg, t_final);
  double mass0 = 0.0, mass1 = 0.0;
  for (int i = 0; i < g.n_nodes(); ++i) {
    mass0 += fp.eta(u0.values[i]) * g.dx();
    mass1 += fp.eta(u.values[i]) * g.dx();
  }
  // boundary flux difference over the run (left inflow phi(0.2), right
  // outflow phi(0.8); each step moves tau * (phi_right - phi_left))
  const double boundary =
      t_final * (fp.phi(u0.values.back()) - fp.phi(u0.values.front()));
  CHECK(mass1 - mass0 == doctest::Approx(-boundary).epsilon(1e-10));
}

TEST_CASE("finite-volume scheme captures the stationary shock") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const Grid1D g(-2.0, 2.0, 200);
  const GridFunction u0 = fixtures::burgers_shock(g);
  SchemeConfig cfg;
  cfg.scheme = SchemeKind::godunov;
  const GridFunction u = godunov_solve(fp, u0, cfg, 1.0);
  double x_cross = -10.0;
  for (int i = 0; i + 1 < g.n_nodes(); ++i)
    if (u.values[i] > 0.0 && u.values[i + 1] <= 0.0) x_cross = g.node(i);
  CHECK(std::abs(x_cross) <= g.dx() + 1e-12);
  // constant data fixed point
  const GridFunction c = GridFunction::sample(g, [](double) { return 0.3; });
  const GridFunction uc = godunov_solve(fp, c, cfg, 0.5);
  for (double v : uc.values) CHECK(v == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("finite-volume fan error decreases under refinement") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const SelfSimilarSolution exact =
      solve_riemann_convex(RiemannProblem(fp, -1.0, 1.0));
  double prev = HUGE_VAL;
  for (int n : {100, 200, 400}) {
    const Grid1D g(-2.0, 2.0, n);
    SchemeConfig cfg;
    cfg.scheme = SchemeKind::godunov;
    const GridFunction u =
        godunov_solve(fp, fixtures::burgers_fan(g), cfg, 1.0);
    const GridFunction ref = GridFunction::sample(
        g, [&](double x) { return exact.evaluate(1.0, x); }, 1.0);
    const double err = l1_distance(u, ref);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("the two schemes coincide for the level-system pair") {
  const FluxPair fp = ph_flux(1.0, 1.0, 0.0);
  const Grid1D g(-0.5, 1.5, 200);
  const GridFunction u0 = GridFunction::sample(
      g, [](double x) { return fixtures::logistic_cdf(x, 0.5, 12.0); });
  SchemeConfig cfg;
  const GridFunction a = upwind_solve(fp, u0, cfg, 1.0);
  cfg.scheme = SchemeKind::godunov;
  const GridFunction b = godunov_solve(fp, u0, cfg, 1.0);
  for (int i = 0; i < g.n_nodes(); ++i)
    CHECK(std::abs(a.values[i] - b.values[i]) <= 1e-12);
}

TEST_CASE("convergence report") {
  SUBCASE("synthetic first-order table") {
    std::vector<std::pair<double, GridFunction>> runs;
    for (double h : {0.1, 0.05, 0.025}) {
      const Grid1D g(0.0, 1.0, 10);
      runs.emplace_back(
          h, GridFunction::sample(g, [h](double) { return 2.0 * h; }));
    }
    const ConvergenceReport rep = convergence_report(
        [](double) { return 0.0; }, runs);
    CHECK(rep.order_sup == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.order_l1 == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("too few or non-refining runs are rejected") {
    const Grid1D g(0.0, 1.0, 10);
    const GridFunction f = GridFunction::sample(g, [](double) { return 0.0; });
    CHECK_THROWS_AS(
        convergence_report([](double) { return 0.0; }, {{0.1, f}, {0.05, f}}),
        InsufficientRuns);
    CHECK_THROWS_AS(convergence_report([](double) { return 0.0; },
                                       {{0.1, f}, {0.1, f}, {0.05, f}}),
                    InsufficientRuns);
  }
  SUBCASE("shock exclusion removes the jump from the sup norm") {
    const Grid1D g(-1.0, 1.0, 100);
    std::vector<std::pair<double, GridFunction>> runs;
    for (double h : {0.1, 0.05, 0.025}) {
      GridFunction f = GridFunction::sample(
          g, [h](double x) { return (std::abs(x) < 0.01 ? 1.0 : h); });
      runs.emplace_back(h, f);
    }
    const ConvergenceReport rep = convergence_report(
        [](double) { return 0.0; }, runs, {0.0});
    CHECK(rep.rows[0].sup_err == doctest::Approx(0.1));
    CHECK(rep.order_sup == doctest::Approx(1.0).epsilon(1e-10));
  }
}
