#pragma once

#include "dlc/constants.hpp"

namespace dlc {

/// Diode-level transmitter parameters: exact LI curve above threshold plus the
/// fitted linear supply-power approximation.
struct LaserDiodeParams {
  Wavelength wavelength;
  double zeta;    // modified slope coefficient, dimensionless
  double i_th_a;  // stimulation current threshold
  double a1;      // fitted laser-vs-supply slope, 0 < a1 < 1
  double b1_w;    // fitted intercept, typically negative
};

LaserDiodeParams laser_810();
LaserDiodeParams laser_1550();

struct DrivePoint {
  double i_t_a;
  double v_t_v;
};

void validate(const LaserDiodeParams& params);

/// Electrical power drawn from the supply, I_t * V_t.
double supply_power(const DrivePoint& drive);

/// Optical power from the LI curve. Zero at or below the current threshold;
/// slope zeta*h*nu/q above it.
double laser_power_from_current(const LaserDiodeParams& params, double i_t_a);

/// Fitted optical power a1*p_s + b1, clamped at zero below the supply
/// threshold -b1/a1.
double laser_power_from_supply(const LaserDiodeParams& params, double p_s_w);

/// Electricity-to-laser conversion efficiency a1 + b1/p_s, clamped to [0, 1].
double eta_el(const LaserDiodeParams& params, double p_s_w);

}  // namespace dlc
