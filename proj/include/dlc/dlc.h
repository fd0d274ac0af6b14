/*
 * C API for the laser charging efficiency library.
 *
 * Scenarios are opaque handles built from a plain descriptor; every entry
 * point returns a status code and writes results through out-parameters.
 * dlc_last_error() returns a thread-local message for the last failure.
 */
#ifndef DLC_DLC_H
#define DLC_DLC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dlc_status {
  DLC_OK = 0,
  DLC_ERROR_INVALID = 1,     /* malformed descriptor or argument */
  DLC_ERROR_DOMAIN = 2,      /* input outside a model's domain */
  DLC_ERROR_UNREACHABLE = 3, /* coverage target above the d=0 efficiency */
  DLC_ERROR_INTERNAL = 4
} dlc_status;

typedef enum dlc_air {
  DLC_AIR_CLEAR = 0,
  DLC_AIR_HAZE = 1,
  DLC_AIR_FOG = 2
} dlc_air;

typedef enum dlc_path {
  DLC_PATH_CLOSED_FORM = 0,
  DLC_PATH_PHYSICAL = 1
} dlc_path;

typedef enum dlc_axis {
  DLC_AXIS_SUPPLY_POWER = 0,
  DLC_AXIS_DISTANCE = 1,
  DLC_AXIS_RECEIVED_POWER = 2,
  DLC_AXIS_VOLTAGE = 3,
  DLC_AXIS_TRANSMISSION = 4
} dlc_axis;

typedef struct dlc_scenario_desc {
  double wavelength_nm; /* 810 or 1550; selects the bundled parameter sets */
  dlc_air air;
  double visibility_km; /* <= 0 picks the regime default (10 / 3 / 0.4) */
  double supply_power_w;
  double distance_km;
  double cell_temperature_c; /* must lie in [0, 50] */
  dlc_path path;
  double p_r_ref_w; /* <= 0 keeps the calibrated default */
} dlc_scenario_desc;

typedef struct dlc_stage_report {
  double p_s_w;
  double p_l_w;
  double p_r_w;
  double p_m_w;
  double eta_el;
  double eta_lt;
  double eta_le;
  double eta_o;
  int below_threshold;
} dlc_stage_report;

typedef struct dlc_operating_point {
  double v_o_v;
  double i_o_a;
  double p_o_w;
} dlc_operating_point;

typedef struct dlc_scenario dlc_scenario;

dlc_status dlc_scenario_create(const dlc_scenario_desc* desc,
                               dlc_scenario** out);
void dlc_scenario_destroy(dlc_scenario* scenario);

dlc_status dlc_run_scenario(const dlc_scenario* scenario,
                            dlc_stage_report* out);

/* transmitter */
dlc_status dlc_eta_el(const dlc_scenario* scenario, double p_s_w, double* out);
dlc_status dlc_laser_power_from_supply(const dlc_scenario* scenario,
                                       double p_s_w, double* out);

/* atmosphere */
dlc_status dlc_size_distribution_rho(const dlc_scenario* scenario,
                                     double* out);
dlc_status dlc_attenuation_coefficient(const dlc_scenario* scenario,
                                       double* out_per_km);
dlc_status dlc_eta_lt(const dlc_scenario* scenario, double d_km, double* out);

/* receiver */
dlc_status dlc_iv_curve(const dlc_scenario* scenario, double p_r_w,
                        double v_o_v, dlc_operating_point* out);
dlc_status dlc_find_mpp(const dlc_scenario* scenario, double p_r_w,
                        dlc_operating_point* out);
dlc_status dlc_mpp_from_fit(const dlc_scenario* scenario, double p_r_w,
                            double* out);
/* Panel-level open-circuit voltage at the given received power and the
 * scenario cell temperature. */
dlc_status dlc_open_circuit_voltage(const dlc_scenario* scenario,
                                    double p_r_w, double* out_v);
dlc_status dlc_eta_lem(const dlc_scenario* scenario, double p_r_w,
                       double* out);

/* end-to-end */
dlc_status dlc_pm_vs_ps(const dlc_scenario* scenario, double p_s_w,
                        double* out);
dlc_status dlc_eta_om(const dlc_scenario* scenario, double p_s_w, double* out);
dlc_status dlc_eta_om_at_distance(const dlc_scenario* scenario, double d_km,
                                  double* out);
dlc_status dlc_eta_om_for_eta_lt(const dlc_scenario* scenario,
                                 double eta_lt_value, double* out);
/* On DLC_ERROR_UNREACHABLE, *eta_at_zero still receives eta_om(d=0). */
dlc_status dlc_coverage_radius(const dlc_scenario* scenario, double eta_target,
                               double* out_d_km, double* eta_at_zero);

/* Evaluates `n` grid values along one axis. reports must hold n entries;
 * ops may be NULL unless axis is DLC_AXIS_VOLTAGE. ok_flags (n entries)
 * records per-point success. */
dlc_status dlc_sweep(const dlc_scenario* scenario, dlc_axis axis,
                     const double* grid, size_t n, dlc_stage_report* reports,
                     dlc_operating_point* ops, int* ok_flags);

/* Ordinary least squares y ~ slope*x + intercept over n pairs. */
dlc_status dlc_fit_line(const double* xs, const double* ys, size_t n,
                        double* slope, double* intercept, double* r_squared);

const char* dlc_last_error(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DLC_DLC_H */
