#include "dlc/pipeline.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"

using namespace dlc;

namespace {

ScenarioConfig scenario(double wavelength_nm, double t_cell_c,
                        AtmosphereCondition cond, double p_s_w, double d_km,
                        EvalPath path = EvalPath::ClosedForm) {
  ScenarioConfig cfg;
  if (wavelength_nm == 810.0) {
    cfg.diode = laser_810();
    cfg.panel = pv_810();
  } else {
    cfg.diode = laser_1550();
    cfg.panel = pv_1550();
  }
  cfg.condition = cond;
  cfg.mpp_line = mpp_line_for(wavelength_nm, t_cell_c);
  cfg.p_s_w = p_s_w;
  cfg.d_km = d_km;
  cfg.t_cell_c = t_cell_c;
  cfg.path = path;
  return cfg;
}

}  // namespace

TEST_CASE("run_scenario, closed form at d = 0") {
  SUBCASE("810 nm golden point") {
    const StageReport r =
        run_scenario(scenario(810.0, 25.0, clear_air(), 40.0, 0.0));
    CHECK(r.eta_o == doctest::Approx(0.22482625).epsilon(1e-9));
    CHECK(r.p_r_w == r.p_l_w);  // eta_lt(0) = 1 exactly
    CHECK(r.eta_lt == 1.0);
    CHECK_FALSE(r.below_threshold);
  }
  SUBCASE("1550 nm golden point") {
    const StageReport r =
        run_scenario(scenario(1550.0, 25.0, clear_air(), 40.0, 0.0));
    CHECK(r.eta_o == doctest::Approx(0.14815).epsilon(1e-9));
  }
}

TEST_CASE("run_scenario energy ordering and efficiency ledger") {
  for (double wl : {810.0, 1550.0}) {
    for (double d : {0.0, 1.0, 3.0}) {
      for (double p_s : {10.0, 40.0, 100.0}) {
        const StageReport r =
            run_scenario(scenario(wl, 25.0, clear_air(), p_s, d));
        CHECK(r.p_l_w <= r.p_s_w);
        CHECK(r.p_r_w <= r.p_l_w + 1e-12);
        CHECK(r.p_m_w <= r.p_r_w + 1e-12);
        CHECK(r.eta_o ==
              doctest::Approx(r.eta_el * r.eta_lt * r.eta_le).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("run_scenario reports below-threshold supply") {
  const StageReport r =
      run_scenario(scenario(810.0, 25.0, clear_air(), 1.0, 0.0));
  CHECK(r.below_threshold);
  CHECK(r.p_l_w == 0.0);
  CHECK(r.p_r_w == 0.0);
  CHECK(r.p_m_w == 0.0);
}

TEST_CASE("run_scenario physical path tracks the closed form") {
  const StageReport closed =
      run_scenario(scenario(1550.0, 25.0, clear_air(), 40.0, 0.0));
  const StageReport physical = run_scenario(scenario(
      1550.0, 25.0, clear_air(), 40.0, 0.0, EvalPath::PhysicalModel));
  CHECK(physical.p_m_w == doctest::Approx(closed.p_m_w).epsilon(0.05));
}

TEST_CASE("scenario validation") {
  ScenarioConfig bad = scenario(810.0, 25.0, clear_air(), 40.0, 0.0);
  bad.panel = pv_1550();
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  ScenarioConfig neg = scenario(810.0, 25.0, clear_air(), 40.0, 0.0);
  neg.d_km = -1.0;
  CHECK_THROWS_AS(validate(neg), std::invalid_argument);
}

TEST_CASE("pm_vs_ps, frozen hand evaluations") {
  const ScenarioConfig at_zero = scenario(810.0, 25.0, clear_air(), 40.0, 0.0);
  CHECK(pm_vs_ps(at_zero, 40.0) ==
        doctest::Approx(8.993050000000002).epsilon(1e-9));
  // eta_lt = 0.5 via the matching distance
  const double alpha =
      attenuation_coefficient(clear_air(), wavelength_810());
  const ScenarioConfig at_half =
      scenario(810.0, 25.0, clear_air(), 40.0, std::log(2.0) / alpha);
  CHECK(pm_vs_ps(at_half, 40.0) ==
        doctest::Approx(4.381025000000001).epsilon(1e-9));
  // linearity: unit slope increment is a1*a2*eta_lt
  const double slope = pm_vs_ps(at_zero, 41.0) - pm_vs_ps(at_zero, 40.0);
  CHECK(slope == doctest::Approx(0.445 * 0.541).epsilon(1e-9));
}

TEST_CASE("eta_om") {
  const ScenarioConfig cfg810 = scenario(810.0, 25.0, clear_air(), 40.0, 0.0);
  const ScenarioConfig cfg1550 =
      scenario(1550.0, 25.0, clear_air(), 40.0, 0.0);
  CHECK(eta_om(cfg810, 40.0) == doctest::Approx(0.22482625).epsilon(1e-9));
  CHECK(eta_om(cfg1550, 40.0) == doctest::Approx(0.14815).epsilon(1e-9));
  // plateau a1*a2 at large supply power
  CHECK(eta_om(cfg810, 1e12) ==
        doctest::Approx(0.240745).epsilon(1e-9));
  // deep fog clamps to zero
  const ScenarioConfig foggy = scenario(810.0, 25.0, fog(), 40.0, 2.0);
  CHECK(eta_om(foggy, 40.0) == 0.0);
  CHECK_THROWS_AS(eta_om(cfg810, 0.0), std::domain_error);
}

TEST_CASE("closed-form identity: composed chain equals eta_om") {
  for (double wl : {810.0, 1550.0}) {
    for (double t : {0.0, 25.0, 50.0}) {
      for (double p_s = 10.0; p_s <= 100.0; p_s += 10.0) {
        for (double d = 0.0; d <= 4.5; d += 0.5) {
          const ScenarioConfig cfg = scenario(wl, t, clear_air(), p_s, d);
          const StageReport r = run_scenario(cfg);
          CHECK(std::abs(r.eta_o_raw - eta_om_raw(cfg, p_s)) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("crossover between wavelengths under clear air") {
  const ScenarioConfig cfg810 = scenario(810.0, 25.0, clear_air(), 40.0, 0.0);
  const ScenarioConfig cfg1550 =
      scenario(1550.0, 25.0, clear_air(), 40.0, 0.0);
  int sign_changes = 0;
  int prev_sign = 0;
  for (int i = 0; i <= 40000; ++i) {
    const double d = i * 1e-3;
    const double diff =
        eta_om_at_distance(cfg810, d) - eta_om_at_distance(cfg1550, d);
    const int sign = diff > 0.0 ? 1 : (diff < 0.0 ? -1 : 0);
    if (sign != 0) {
      if (prev_sign != 0 && sign != prev_sign) ++sign_changes;
      prev_sign = sign;
    }
  }
  CHECK(sign_changes == 1);
}

TEST_CASE("no crossover under fog") {
  const ScenarioConfig cfg810 = scenario(810.0, 25.0, fog(), 40.0, 0.0);
  const ScenarioConfig cfg1550 = scenario(1550.0, 25.0, fog(), 40.0, 0.0);
  for (int i = 0; i <= 1000; ++i) {
    const double d = i * 1e-3;
    CHECK(eta_om_at_distance(cfg810, d) >=
          eta_om_at_distance(cfg1550, d));
  }
}

TEST_CASE("coverage_radius") {
  const ScenarioConfig cfg = scenario(810.0, 25.0, clear_air(), 40.0, 0.0);
  SUBCASE("dense-scan oracle agreement") {
    const double d = coverage_radius(cfg, 0.15);
    // independent 1 m scan for the last grid point still above target
    double d_scan = 0.0;
    for (int i = 0; i <= 40000; ++i) {
      if (eta_om_at_distance(cfg, i * 1e-3) > 0.15) d_scan = i * 1e-3;
    }
    CHECK(std::abs(d - d_scan) <= 2e-3);
    CHECK(d == doctest::Approx(1.65526).epsilon(1e-4));
  }
  SUBCASE("boundary target lands at zero distance") {
    const double near = eta_om_at_distance(cfg, 0.0) * (1.0 - 1e-12);
    CHECK(coverage_radius(cfg, near) == doctest::Approx(0.0).scale(1.0).epsilon(1e-4));
  }
  SUBCASE("round trip through eta_om") {
    for (double d_star : {0.25, 0.8, 1.7, 3.0}) {
      const double target = eta_om_at_distance(cfg, d_star);
      CHECK(std::abs(coverage_radius(cfg, target) - d_star) <= 1e-5);
    }
  }
  SUBCASE("unreachable target carries eta_om(0)") {
    const ScenarioConfig cfg1550 =
        scenario(1550.0, 25.0, clear_air(), 40.0, 0.0);
    try {
      coverage_radius(cfg1550, 0.20);
      FAIL("expected UnreachableTargetError");
    } catch (const UnreachableTargetError& e) {
      CHECK(e.eta_at_zero == doctest::Approx(0.14815).epsilon(1e-9));
    }
  }
}

TEST_CASE("sweep") {
  const ScenarioConfig cfg = scenario(810.0, 25.0, clear_air(), 40.0, 0.0);

  SUBCASE("distance grid {0} has unit transmission") {
    const std::vector<double> grid = {0.0};
    const auto points = sweep(cfg, SweepAxis::Distance, grid);
    REQUIRE(points.size() == 1);
    CHECK(points[0].ok);
    CHECK(points[0].report.eta_lt == 1.0);
  }

  SUBCASE("eta_el monotone along a supply-power sweep") {
    std::vector<double> grid;
    for (int i = 0; i < 100; ++i) grid.push_back(5.0 + i * 1.0);
    const auto points = sweep(cfg, SweepAxis::SupplyPower, grid);
    for (std::size_t i = 1; i < points.size(); ++i) {
      REQUIRE(points[i].ok);
      CHECK(points[i].report.eta_el >= points[i - 1].report.eta_el);
    }
  }

  SUBCASE("eta_o linear along a transmission-efficiency sweep") {
    const std::vector<double> grid = {0.25, 0.5, 0.75, 1.0};
    const auto points = sweep(cfg, SweepAxis::TransmissionEfficiency, grid);
    REQUIRE(points.size() == 4);
    // equal eta_lt spacing gives equal eta_o spacing for a fixed p_s
    const double d1 = points[1].report.eta_o_raw - points[0].report.eta_o_raw;
    const double d2 = points[2].report.eta_o_raw - points[1].report.eta_o_raw;
    const double d3 = points[3].report.eta_o_raw - points[2].report.eta_o_raw;
    CHECK(d1 == doctest::Approx(d2).epsilon(1e-9));
    CHECK(d2 == doctest::Approx(d3).epsilon(1e-9));
  }

  SUBCASE("received-power sweep reproduces the requested p_r") {
    const std::vector<double> grid = {5.0, 10.0, 15.0};
    const auto points = sweep(cfg, SweepAxis::ReceivedPower, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      REQUIRE(points[i].ok);
      CHECK(points[i].report.p_r_w ==
            doctest::Approx(grid[i]).epsilon(1e-12));
    }
  }

  SUBCASE("voltage sweep yields operating points") {
    const std::vector<double> grid = {0.0, 40.0};
    const auto points = sweep(cfg, SweepAxis::Voltage, grid);
    REQUIRE(points.size() == 2);
    CHECK(points[0].op.has_value());
    CHECK(points[0].op->v_o_v == 0.0);
    CHECK(points[0].op->p_o_w == 0.0);
  }

  SUBCASE("per-point errors are collected, not fatal") {
    const std::vector<double> grid = {-5.0, 10.0};
    const auto points = sweep(cfg, SweepAxis::ReceivedPower, grid);
    CHECK_FALSE(points[0].ok);
    CHECK_FALSE(points[0].error.empty());
    CHECK(points[1].ok);
  }

  CHECK_THROWS_AS(sweep(cfg, SweepAxis::Distance, std::vector<double>{}),
                  std::invalid_argument);
}
