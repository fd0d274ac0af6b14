#pragma once

#include <stdexcept>

namespace dlc {

// Physical constants at the precision used for calibration. Kept verbatim so
// golden outputs stay bit-stable; do not refresh from CODATA.
namespace constants {
inline constexpr double boltzmann_k = 1.38064852e-23;   // J/K
inline constexpr double planck_h = 6.62606957e-34;      // J*s
inline constexpr double electron_charge_q = 1.6e-19;    // C
inline constexpr double absolute_zero_c = -273.15;
}  // namespace constants

/// A laser line. Frequency is carried explicitly rather than derived from the
/// wavelength via c, so photon-energy terms match the calibrated data.
struct Wavelength {
  double lambda_nm;
  double nu_hz;
};

inline Wavelength wavelength_810() { return {810.0, 3.7037e14}; }
inline Wavelength wavelength_1550() { return {1550.0, 1.9355e14}; }

inline void validate(const Wavelength& wl) {
  if (!(wl.lambda_nm > 0.0) || !(wl.nu_hz > 0.0)) {
    throw std::invalid_argument("wavelength and frequency must be positive");
  }
}

inline double celsius_to_kelvin(double t_c) {
  if (!(t_c > constants::absolute_zero_c)) {
    throw std::domain_error("temperature at or below absolute zero");
  }
  return t_c + 273.15;
}

}  // namespace dlc
