#include "dlc/atmosphere.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dlc {

AtmosphereCondition clear_air(double kappa_km) {
  return {AirRegime::ClearAir, kappa_km};
}

AtmosphereCondition haze(double kappa_km) { return {AirRegime::Haze, kappa_km}; }

AtmosphereCondition fog(double kappa_km) { return {AirRegime::Fog, kappa_km}; }

AtmosphereCondition condition_for_visibility(double kappa_km) {
  if (kappa_km > 0.0 && kappa_km <= 0.5) return fog(kappa_km);
  if (kappa_km >= 1.0 && kappa_km <= 6.0) return haze(kappa_km);
  if (kappa_km >= 6.0 && kappa_km <= 50.0) return clear_air(kappa_km);
  if (kappa_km > 0.5 && kappa_km < 1.0) {
    throw std::domain_error(
        "visibility " + std::to_string(kappa_km) +
        " km falls in the (0.5, 1) km gap with no defined scattering branch");
  }
  throw std::domain_error("visibility outside the modeled (0, 50] km range");
}

void validate(const AtmosphereCondition& cond) {
  if (!(cond.sigma > 0.0) || !(cond.chi_nm > 0.0)) {
    throw std::invalid_argument("sigma and chi must be positive");
  }
  const double k = cond.kappa_km;
  if (k > 0.5 && k < 1.0) {
    throw std::domain_error(
        "visibility " + std::to_string(k) +
        " km falls in the (0.5, 1) km gap with no defined scattering branch");
  }
  switch (cond.regime) {
    case AirRegime::ClearAir:
      if (!(k >= 6.0 && k <= 50.0)) {
        throw std::domain_error("clear-air visibility must lie in [6, 50] km");
      }
      break;
    case AirRegime::Haze:
      if (!(k >= 1.0 && k <= 6.0)) {
        throw std::domain_error("haze visibility must lie in [1, 6] km");
      }
      break;
    case AirRegime::Fog:
      if (!(k > 0.0 && k <= 0.5)) {
        throw std::domain_error("fog visibility must lie in (0, 0.5] km");
      }
      break;
  }
}

double size_distribution_rho(const AtmosphereCondition& cond) {
  validate(cond);
  switch (cond.regime) {
    case AirRegime::ClearAir:
      return 1.3;
    case AirRegime::Haze:
      return 0.16 * cond.kappa_km + 0.34;
    case AirRegime::Fog:
      return 0.0;
  }
  throw std::logic_error("unknown air regime");
}

double attenuation_coefficient(const AtmosphereCondition& cond,
                               const Wavelength& wl) {
  validate(wl);
  const double rho = size_distribution_rho(cond);
  // sigma * (1/kappa) instead of sigma/kappa: for the fog preset this rounds
  // to exactly 9.8, matching the tabulated value bit for bit.
  return cond.sigma * (1.0 / cond.kappa_km) *
         std::pow(wl.lambda_nm / cond.chi_nm, -rho);
}

double eta_lt(const AtmosphereCondition& cond, const Wavelength& wl,
              double d_km) {
  if (d_km < 0.0) {
    throw std::domain_error("distance must be nonnegative");
  }
  return std::exp(-attenuation_coefficient(cond, wl) * d_km);
}

}  // namespace dlc
