#include "dlc/laser_source.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlc {

LaserDiodeParams laser_810() {
  return {wavelength_810(), 1.5, 0.5, 0.445, -0.75};
}

LaserDiodeParams laser_1550() {
  return {wavelength_1550(), 3.52, 0.6, 0.34, -1.1};
}

void validate(const LaserDiodeParams& params) {
  validate(params.wavelength);
  if (!(params.zeta > 0.0)) {
    throw std::invalid_argument("zeta must be positive");
  }
  if (!(params.i_th_a > 0.0)) {
    throw std::invalid_argument("threshold current must be positive");
  }
  if (!(params.a1 > 0.0 && params.a1 < 1.0)) {
    throw std::invalid_argument("a1 must lie in (0, 1)");
  }
}

double supply_power(const DrivePoint& drive) {
  if (drive.i_t_a < 0.0 || drive.v_t_v < 0.0) {
    throw std::domain_error("drive current and voltage must be nonnegative");
  }
  return drive.i_t_a * drive.v_t_v;
}

double laser_power_from_current(const LaserDiodeParams& params, double i_t_a) {
  if (i_t_a < 0.0) {
    throw std::domain_error("drive current must be nonnegative");
  }
  if (i_t_a <= params.i_th_a) {
    return 0.0;  // sub-threshold: no stimulated emission
  }
  const double photon_energy_v =
      constants::planck_h * params.wavelength.nu_hz / constants::electron_charge_q;
  return params.zeta * photon_energy_v * (i_t_a - params.i_th_a);
}

double laser_power_from_supply(const LaserDiodeParams& params, double p_s_w) {
  if (p_s_w < 0.0) {
    throw std::domain_error("supply power must be nonnegative");
  }
  return std::max(0.0, params.a1 * p_s_w + params.b1_w);
}

double eta_el(const LaserDiodeParams& params, double p_s_w) {
  if (!(p_s_w > 0.0)) {
    throw std::domain_error("supply power must be positive");
  }
  return std::clamp(params.a1 + params.b1_w / p_s_w, 0.0, 1.0);
}

}  // namespace dlc
