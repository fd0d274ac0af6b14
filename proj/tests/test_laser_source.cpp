#include "dlc/laser_source.hpp"

#include <cmath>

#include "doctest.h"

using namespace dlc;

TEST_CASE("presets carry the calibrated diode parameters") {
  const LaserDiodeParams p810 = laser_810();
  CHECK(p810.zeta == 1.5);
  CHECK(p810.i_th_a == 0.5);
  CHECK(p810.a1 == 0.445);
  CHECK(p810.b1_w == -0.75);
  const LaserDiodeParams p1550 = laser_1550();
  CHECK(p1550.zeta == 3.52);
  CHECK(p1550.i_th_a == 0.6);
  CHECK(p1550.a1 == 0.34);
  CHECK(p1550.b1_w == -1.1);
  CHECK_NOTHROW(validate(p810));
  CHECK_NOTHROW(validate(p1550));
}

TEST_CASE("supply_power") {
  CHECK(supply_power({1.5, 2.0}) == doctest::Approx(3.0));
  CHECK(supply_power({0.0, 5.0}) == 0.0);
  CHECK(supply_power({2.0, 1.9}) == doctest::Approx(3.8));
  CHECK_THROWS_AS(supply_power({-0.1, 2.0}), std::domain_error);
}

TEST_CASE("laser_power_from_current") {
  const LaserDiodeParams p810 = laser_810();
  const LaserDiodeParams p1550 = laser_1550();

  SUBCASE("zero at and below threshold") {
    CHECK(laser_power_from_current(p810, 0.5) == 0.0);
    CHECK(laser_power_from_current(p810, 0.2) == 0.0);
    CHECK(laser_power_from_current(p1550, 0.6) == 0.0);
  }
  SUBCASE("frozen hand-evaluated points") {
    CHECK(laser_power_from_current(p810, 1.5) ==
          doctest::Approx(2.3007162999758437).epsilon(1e-12));
    CHECK(laser_power_from_current(p1550, 1.6) ==
          doctest::Approx(2.8214466836017005).epsilon(1e-12));
  }
  SUBCASE("slope above threshold equals zeta*h*nu/q exactly") {
    const double slope = p810.zeta * 1.5338108666505625;
    const double p1 = laser_power_from_current(p810, 1.0);
    const double p2 = laser_power_from_current(p810, 2.0);
    CHECK(p2 - p1 == doctest::Approx(slope).epsilon(1e-12));
  }
  SUBCASE("continuous, nonnegative, nondecreasing") {
    double prev = 0.0;
    for (double i = 0.0; i <= 3.0; i += 0.01) {
      const double p = laser_power_from_current(p810, i);
      CHECK(p >= 0.0);
      CHECK(p >= prev - 1e-15);
      prev = p;
    }
  }
  CHECK_THROWS_AS(laser_power_from_current(p810, -1.0), std::domain_error);
}

TEST_CASE("laser_power_from_supply") {
  const LaserDiodeParams p810 = laser_810();
  const LaserDiodeParams p1550 = laser_1550();
  CHECK(laser_power_from_supply(p810, 40.0) == doctest::Approx(17.05));
  CHECK(laser_power_from_supply(p1550, 40.0) == doctest::Approx(12.5));
  // clamp boundary at -b1/a1
  CHECK(laser_power_from_supply(p810, 0.75 / 0.445) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(laser_power_from_supply(p810, 1.0) == 0.0);
  CHECK_THROWS_AS(laser_power_from_supply(p810, -1.0), std::domain_error);
}

TEST_CASE("eta_el") {
  const LaserDiodeParams p810 = laser_810();
  const LaserDiodeParams p1550 = laser_1550();
  CHECK(eta_el(p810, 40.0) == doctest::Approx(0.42625).epsilon(1e-12));
  CHECK(eta_el(p1550, 40.0) == doctest::Approx(0.3125).epsilon(1e-12));
  // plateau: approaches a1 from below
  CHECK(eta_el(p810, 1e12) == doctest::Approx(0.445).epsilon(1e-9));
  CHECK_THROWS_AS(eta_el(p810, 0.0), std::domain_error);
  CHECK_THROWS_AS(eta_el(p810, -5.0), std::domain_error);
}

TEST_CASE("eta_el equals laser_power_from_supply/p_s where unclamped") {
  const LaserDiodeParams p810 = laser_810();
  for (double p_s = 2.0; p_s <= 120.0; p_s += 0.7) {
    const double via_power = laser_power_from_supply(p810, p_s) / p_s;
    CHECK(eta_el(p810, p_s) ==
          doctest::Approx(via_power).epsilon(1e-12));
  }
}

TEST_CASE("eta_el strictly increasing and bounded by a1 for b1 < 0") {
  const LaserDiodeParams p1550 = laser_1550();
  double prev = eta_el(p1550, 4.0);
  for (double p_s = 4.5; p_s <= 200.0; p_s += 0.5) {
    const double e = eta_el(p1550, p_s);
    CHECK(e > prev);
    CHECK(e < p1550.a1);
    prev = e;
  }
}
