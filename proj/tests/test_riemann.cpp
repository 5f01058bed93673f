#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "claw/fixtures.hpp"
#include "claw/riemann.hpp"

using namespace claw;

TEST_CASE("jump speeds of the two divergent forms differ") {
  const FluxPair burgers = burgers_flux({-1.5, 2.5});
  CHECK(std::abs(rh_speed(RiemannProblem(burgers, 1.0, -1.0))) <= 1e-14);
  CHECK(rh_speed(RiemannProblem(burgers, 2.0, 0.0)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  const FluxPair qform = gelfand_q_flux({1e-3, 2.5});
  CHECK(rh_speed(RiemannProblem(qform, 2.0, 1e-3)) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-3));
  CHECK_THROWS_AS(rh_speed(RiemannProblem(burgers, 0.5, 0.5)),
                  DegenerateStates);
}

TEST_CASE("admissibility of the stationary jumps") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const RiemannProblem good(fp, 1.0, -1.0);
  const RiemannProblem bad(fp, -1.0, 1.0);
  CHECK(check_lax(good));
  CHECK_FALSE(check_lax(bad));
  CHECK(check_e_condition(good).satisfied);
  const EConditionResult r = check_e_condition(bad);
  CHECK_FALSE(r.satisfied);
  CHECK(r.witness.has_value());
}

TEST_CASE("four-state family: every jump balances, one is inadmissible") {
  const double q = 2.0;
  const FluxPair fp = burgers_flux({-q, q});
  // outer jumps (1, -q) and (q, -1) and the middle jump (-q, q)
  const double s_left = rh_speed(RiemannProblem(fp, 1.0, -q));
  CHECK(s_left == doctest::Approx(0.5 * (1.0 - q)).epsilon(1e-14));
  const double s_right = rh_speed(RiemannProblem(fp, q, -1.0));
  CHECK(s_right == doctest::Approx(0.5 * (q - 1.0)).epsilon(1e-14));
  CHECK(std::abs(rh_speed(RiemannProblem(fp, -q, q))) <= 1e-14);
  // the middle jump fails the chord condition
  CHECK(check_e_condition(RiemannProblem(fp, 1.0, -q)).satisfied);
  CHECK(check_e_condition(RiemannProblem(fp, q, -1.0)).satisfied);
  CHECK_FALSE(check_e_condition(RiemannProblem(fp, -q, q)).satisfied);
  // q = 1 collapses to the single admissible stationary shock
  CHECK(check_e_condition(RiemannProblem(fp, 1.0, -1.0)).satisfied);
}

TEST_CASE("admissible speed interval and weighted-form speeds") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const RiemannProblem rp(fp, 1.0, -1.0);
  const Interval band = admissible_speed_interval(rp);
  CHECK(band.lo == doctest::Approx(-1.0));
  CHECK(band.hi == doctest::Approx(1.0));

  // unit weight reproduces the plain jump speed
  CHECK(weighted_form_speed(rp, [](double) { return 1.0; }) ==
        doctest::Approx(0.0).epsilon(1e-9));
  // exponential weight: speed = (int u e^u du) / (e^{1} - e^{-1}), an
  // independent closed form
  const double expect = (2.0 / std::exp(1.0)) /
                        (std::exp(1.0) - std::exp(-1.0));
  CHECK(weighted_form_speed(rp, [](double u) { return std::exp(u); }) ==
        doctest::Approx(expect).epsilon(1e-8));
  CHECK(band.contains(expect));
  CHECK_THROWS_AS(weighted_form_speed(rp, [](double u) { return u; }),
                  NonPositiveWeight);
}

TEST_CASE("exact self-similar solution: shock") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const SelfSimilarSolution s =
      solve_riemann_convex(RiemannProblem(fp, 1.0, -1.0));
  REQUIRE(s.waves.size() == 1);
  CHECK(s.waves[0].kind == Wave::shock);
  CHECK(s.waves[0].speed_lo == doctest::Approx(0.0));
  CHECK(s.evaluate(1.0, -0.5) == doctest::Approx(1.0));
  CHECK(s.evaluate(1.0, 0.5) == doctest::Approx(-1.0));
}

TEST_CASE("exact self-similar solution: fan") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const SelfSimilarSolution s =
      solve_riemann_convex(RiemannProblem(fp, -1.0, 1.0));
  REQUIRE(s.waves.size() == 1);
  CHECK(s.waves[0].kind == Wave::rarefaction);
  CHECK(s.evaluate(1.0, -2.0) == doctest::Approx(-1.0));
  CHECK(s.evaluate(1.0, 2.0) == doctest::Approx(1.0));
  CHECK(s.evaluate(1.0, 0.4) == doctest::Approx(0.4).epsilon(1e-9));
  CHECK(s.evaluate(2.0, 0.4) == doctest::Approx(0.2).epsilon(1e-9));
}

TEST_CASE("discontinuity report for the CLI") {
  const FluxPair fp = burgers_flux({-1.0, 1.0});
  const DiscontinuityReport rep =
      analyze_discontinuity(RiemannProblem(fp, -1.0, 1.0));
  CHECK(rep.satisfies_rh);
  CHECK_FALSE(rep.satisfies_e);
  CHECK_FALSE(rep.satisfies_lax);
}
