#pragma once

#include "dlc/constants.hpp"

namespace dlc {

enum class AirRegime { ClearAir, Haze, Fog };

/// Visibility-driven extinction condition. The scattering exponent rho is
/// derived from the regime and visibility; sigma and chi are model constants.
struct AtmosphereCondition {
  AirRegime regime;
  double kappa_km;         // visibility
  double sigma = 3.92;     // dimensionless
  double chi_nm = 550.0;   // reference wavelength
};

AtmosphereCondition clear_air(double kappa_km = 10.0);
AtmosphereCondition haze(double kappa_km = 3.0);
AtmosphereCondition fog(double kappa_km = 0.4);

/// Picks the regime from visibility alone. Visibilities in the (0.5, 1) km
/// gap have no defined scattering branch and are rejected.
AtmosphereCondition condition_for_visibility(double kappa_km);

void validate(const AtmosphereCondition& cond);

/// Scattering particle size-distribution exponent: 1.3 for clear air,
/// 0.16*kappa + 0.34 for haze, 0 for fog.
double size_distribution_rho(const AtmosphereCondition& cond);

/// Extinction coefficient (sigma/kappa) * (lambda/chi)^(-rho), in km^-1.
double attenuation_coefficient(const AtmosphereCondition& cond,
                               const Wavelength& wl);

/// Beer-Lambert transmission efficiency e^(-alpha*d) over d kilometers.
double eta_lt(const AtmosphereCondition& cond, const Wavelength& wl,
              double d_km);

}  // namespace dlc
