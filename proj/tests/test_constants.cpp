#include "dlc/constants.hpp"

#include "doctest.h"

using namespace dlc;

TEST_CASE("physical constants match the calibrated values exactly") {
  CHECK(constants::boltzmann_k == 1.38064852e-23);
  CHECK(constants::planck_h == 6.62606957e-34);
  CHECK(constants::electron_charge_q == 1.6e-19);
}

TEST_CASE("wavelength presets") {
  const Wavelength wl810 = wavelength_810();
  CHECK(wl810.lambda_nm == 810.0);
  CHECK(wl810.nu_hz == 3.7037e14);
  const Wavelength wl1550 = wavelength_1550();
  CHECK(wl1550.lambda_nm == 1550.0);
  CHECK(wl1550.nu_hz == 1.9355e14);
  CHECK_NOTHROW(validate(wl810));
  CHECK_THROWS_AS(validate(Wavelength{-1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(Wavelength{810.0, 0.0}), std::invalid_argument);
}

TEST_CASE("celsius_to_kelvin") {
  CHECK(celsius_to_kelvin(0.0) == doctest::Approx(273.15));
  CHECK(celsius_to_kelvin(25.0) == doctest::Approx(298.15));
  CHECK_THROWS_AS(celsius_to_kelvin(-273.15), std::domain_error);
  CHECK_THROWS_AS(celsius_to_kelvin(-300.0), std::domain_error);
}

TEST_CASE("celsius_to_kelvin is affine: differences are preserved") {
  const double values[] = {-200.0, -40.0, 0.0, 17.3, 25.0, 120.0, 900.0};
  for (double a : values) {
    for (double b : values) {
      CHECK(celsius_to_kelvin(a) - celsius_to_kelvin(b) ==
            doctest::Approx(a - b).epsilon(1e-12));
    }
  }
}
