#pragma once

#include <string>

#include "dlc/constants.hpp"

namespace dlc {

/// Single-diode receiver panel: N identical series cells, no series or shunt
/// resistance. Photocurrent scales linearly with received power relative to
/// (i_sc0_a, p_r_ref_w); p_r_ref_w is a calibrated scalar because the
/// measured irradiance cannot be tied to received watts without a cell area.
struct PvPanelParams {
  Wavelength wavelength;
  double i_sc0_a;               // short-circuit current at reference input
  double v_oc_cell_v;           // per-cell open-circuit voltage at reference input
  double irradiance_ref_w_cm2;  // measurement irradiance, documentation only
  double p_r_ref_w;             // received power producing i_sc0_a
  double n_ideality;
  int n_series;
  double t_ref_k;               // calibration temperature
  double band_gap_ev;           // drives the saturation-current temperature law
  std::string material;
};

PvPanelParams pv_810();
PvPanelParams pv_1550();

void validate(const PvPanelParams& params);

struct OperatingPoint {
  double v_o_v;  // panel voltage
  double i_o_a;
  double p_o_w;
};

/// Calibration result: saturation current and per-cell thermal voltage at the
/// calibration temperature.
struct DiodeState {
  double i_s_a;
  double v_m_v;
};

/// Fitted maximum-power line P_m ~ a2*P_r + b2 at one cell temperature.
struct FittedMppLine {
  double temperature_c;
  double a2;
  double b2_w;
};

/// Tabulated fit line for 810/1550 nm at the given cell temperature,
/// interpolated linearly between 0/25/50 C. Extrapolation is rejected.
FittedMppLine mpp_line_for(double wavelength_nm, double temperature_c);

/// Diode thermal voltage n*k*T/q.
double thermal_voltage(double n_ideality, double t_k);

/// Inverts the IV equation at open circuit under reference input: the unique
/// I_s giving i_o = 0 at v_oc_cell.
DiodeState calibrate_diode(const PvPanelParams& params);

/// Saturation current at an evaluation temperature, via the standard
/// band-gap law i_s(T) = i_s(Tref) * (T/Tref)^(3/n) * e^(Eg*q/(n*k)*(1/Tref-1/T)).
double saturation_current_at(const PvPanelParams& params,
                             const DiodeState& diode, double t_k);

/// Per-cell open-circuit voltage at the given input power and temperature.
double open_circuit_voltage_cell(const PvPanelParams& params, double p_r_w,
                                 double t_k);

/// One point of the panel IV curve. Currents past open circuit are reported
/// clamped at zero.
OperatingPoint iv_curve(const PvPanelParams& params, double p_r_w, double t_k,
                        double v_o_panel_v);

/// Maximum power point by golden-section search over the unimodal power
/// curve; voltage resolved to 1e-6 V.
OperatingPoint find_mpp(const PvPanelParams& params, double p_r_w, double t_k);

/// Fitted maximum power max(0, a2*p_r + b2).
double mpp_from_fit(const FittedMppLine& line, double p_r_w);

/// Laser-to-electricity conversion efficiency p_o / p_r.
double eta_le(double p_o_w, double p_r_w);

/// Maximum conversion efficiency a2 + b2/p_r, clamped to [0, 1].
double eta_lem(const FittedMppLine& line, double p_r_w);

}  // namespace dlc
