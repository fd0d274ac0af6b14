#include "dlc/pv_panel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace dlc {

namespace {

// Calibration data caps; a v_oc/v_m ratio beyond this signals inconsistent
// inputs rather than a plausible diode.
constexpr double kMaxExponent = 100.0;

// Received powers matching the measured short-circuit currents, calibrated so
// the physical model reproduces the reference maximum-power anchors
// (4.64 W at 10 W / 25 C for 1550 nm; the fitted 5.179 W for 810 nm).
constexpr double kPrRef810 = 23.3000370607;
constexpr double kPrRef1550 = 23.9188068963;

struct LineRow {
  double t_c, a2, b2;
};

constexpr std::array<LineRow, 3> kLines810 = {{
    {0.0, 0.546, -0.213},
    {25.0, 0.541, -0.231},
    {50.0, 0.537, -0.249},
}};

constexpr std::array<LineRow, 3> kLines1550 = {{
    {0.0, 0.543, -0.276},
    {25.0, 0.498, -0.299},
    {50.0, 0.453, -0.321},
}};

double mpp_voltage_upper_bound(const PvPanelParams& params, double p_r_w,
                               double t_k) {
  return params.n_series * open_circuit_voltage_cell(params, p_r_w, t_k);
}

}  // namespace

PvPanelParams pv_810() {
  return {wavelength_810(), 0.16732, 1.2,  36.5, kPrRef810, 1.5,
          72,               298.15,  1.11, "GaAs-based"};
}

PvPanelParams pv_1550() {
  return {wavelength_1550(), 0.305,  0.464, 2.7187, kPrRef1550, 1.1,
          72,                393.15, 1.11,  "GaSb-based"};
}

void validate(const PvPanelParams& params) {
  validate(params.wavelength);
  if (!(params.i_sc0_a > 0.0)) {
    throw std::invalid_argument("short-circuit current must be positive");
  }
  if (!(params.v_oc_cell_v > 0.0)) {
    throw std::invalid_argument("open-circuit voltage must be positive");
  }
  if (!(params.p_r_ref_w > 0.0)) {
    throw std::invalid_argument("reference received power must be positive");
  }
  if (!(params.n_ideality >= 1.0)) {
    throw std::invalid_argument("ideality factor must be >= 1");
  }
  if (params.n_series < 1) {
    throw std::invalid_argument("cell count must be >= 1");
  }
  if (!(params.t_ref_k > 0.0)) {
    throw std::invalid_argument("calibration temperature must be positive");
  }
}

FittedMppLine mpp_line_for(double wavelength_nm, double temperature_c) {
  const auto* rows = &kLines810;
  if (wavelength_nm == 1550.0) {
    rows = &kLines1550;
  } else if (wavelength_nm != 810.0) {
    throw std::invalid_argument("fitted lines exist only for 810 and 1550 nm");
  }
  const double t = temperature_c;
  if (t < rows->front().t_c || t > rows->back().t_c) {
    throw std::domain_error(
        "cell temperature outside the tabulated [0, 50] C range");
  }
  for (std::size_t i = 0; i + 1 < rows->size(); ++i) {
    const LineRow& lo = (*rows)[i];
    const LineRow& hi = (*rows)[i + 1];
    if (t <= hi.t_c) {
      const double w = (t - lo.t_c) / (hi.t_c - lo.t_c);
      return {t, lo.a2 + w * (hi.a2 - lo.a2), lo.b2 + w * (hi.b2 - lo.b2)};
    }
  }
  const LineRow& last = rows->back();
  return {last.t_c, last.a2, last.b2};
}

double thermal_voltage(double n_ideality, double t_k) {
  if (!(t_k > 0.0)) {
    throw std::domain_error("absolute temperature must be positive");
  }
  return n_ideality * constants::boltzmann_k * t_k /
         constants::electron_charge_q;
}

DiodeState calibrate_diode(const PvPanelParams& params) {
  validate(params);
  const double v_m = thermal_voltage(params.n_ideality, params.t_ref_k);
  const double exponent = params.v_oc_cell_v / v_m;
  if (exponent > kMaxExponent) {
    throw std::domain_error(
        "open-circuit voltage inconsistent with thermal voltage");
  }
  return {params.i_sc0_a / std::expm1(exponent), v_m};
}

double saturation_current_at(const PvPanelParams& params,
                             const DiodeState& diode, double t_k) {
  if (!(t_k > 0.0)) {
    throw std::domain_error("absolute temperature must be positive");
  }
  const double n = params.n_ideality;
  const double ratio = t_k / params.t_ref_k;
  const double gap_term = params.band_gap_ev * constants::electron_charge_q /
                          (n * constants::boltzmann_k) *
                          (1.0 / params.t_ref_k - 1.0 / t_k);
  return diode.i_s_a * std::pow(ratio, 3.0 / n) * std::exp(gap_term);
}

double open_circuit_voltage_cell(const PvPanelParams& params, double p_r_w,
                                 double t_k) {
  if (!(p_r_w > 0.0)) {
    throw std::domain_error("received power must be positive");
  }
  const DiodeState diode = calibrate_diode(params);
  const double i_s = saturation_current_at(params, diode, t_k);
  const double i_sc = params.i_sc0_a * p_r_w / params.p_r_ref_w;
  return thermal_voltage(params.n_ideality, t_k) * std::log1p(i_sc / i_s);
}

OperatingPoint iv_curve(const PvPanelParams& params, double p_r_w, double t_k,
                        double v_o_panel_v) {
  if (p_r_w < 0.0) {
    throw std::domain_error("received power must be nonnegative");
  }
  if (v_o_panel_v < 0.0) {
    throw std::domain_error("panel voltage must be nonnegative");
  }
  const DiodeState diode = calibrate_diode(params);
  const double i_s = saturation_current_at(params, diode, t_k);
  const double v_m = thermal_voltage(params.n_ideality, t_k);
  const double i_sc = params.i_sc0_a * p_r_w / params.p_r_ref_w;
  const double v_cell = v_o_panel_v / params.n_series;
  const double i_o = std::max(0.0, i_sc - i_s * std::expm1(v_cell / v_m));
  return {v_o_panel_v, i_o, i_o * v_o_panel_v};
}

OperatingPoint find_mpp(const PvPanelParams& params, double p_r_w,
                        double t_k) {
  if (!(p_r_w > 0.0)) {
    throw std::domain_error("received power must be positive");
  }
  double lo = 0.0;
  double hi = mpp_voltage_upper_bound(params, p_r_w, t_k);
  constexpr double kVoltTol = 1e-6;
  constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2

  auto p = [&](double v) { return iv_curve(params, p_r_w, t_k, v).p_o_w; };

  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = p(x1);
  double f2 = p(x2);
  while (hi - lo > kVoltTol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = p(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = p(x1);
    }
  }
  return iv_curve(params, p_r_w, t_k, 0.5 * (lo + hi));
}

double mpp_from_fit(const FittedMppLine& line, double p_r_w) {
  if (p_r_w < 0.0) {
    throw std::domain_error("received power must be nonnegative");
  }
  return std::max(0.0, line.a2 * p_r_w + line.b2_w);
}

double eta_le(double p_o_w, double p_r_w) {
  if (!(p_r_w > 0.0)) {
    throw std::domain_error("received power must be positive");
  }
  if (p_o_w < 0.0) {
    throw std::domain_error("output power must be nonnegative");
  }
  return p_o_w / p_r_w;
}

double eta_lem(const FittedMppLine& line, double p_r_w) {
  if (!(p_r_w > 0.0)) {
    throw std::domain_error("received power must be positive");
  }
  return std::clamp(line.a2 + line.b2_w / p_r_w, 0.0, 1.0);
}

}  // namespace dlc
