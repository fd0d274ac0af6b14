#include "dlc/dlc.h"

#include <cstring>
#include <new>
#include <string>

#include "dlc/linefit.hpp"
#include "dlc/pipeline.hpp"

struct dlc_scenario {
  dlc::ScenarioConfig cfg;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
dlc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return DLC_OK;
  } catch (const dlc::UnreachableTargetError& e) {
    g_last_error = e.what();
    return DLC_ERROR_UNREACHABLE;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return DLC_ERROR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return DLC_ERROR_INVALID;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DLC_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DLC_ERROR_INTERNAL;
  }
}

dlc_status invalid(const char* message) {
  g_last_error = message;
  return DLC_ERROR_INVALID;
}

dlc::ScenarioConfig config_from_desc(const dlc_scenario_desc& desc) {
  dlc::ScenarioConfig cfg;
  if (desc.wavelength_nm == 810.0) {
    cfg.diode = dlc::laser_810();
    cfg.panel = dlc::pv_810();
  } else if (desc.wavelength_nm == 1550.0) {
    cfg.diode = dlc::laser_1550();
    cfg.panel = dlc::pv_1550();
  } else {
    throw std::invalid_argument("wavelength_nm must be 810 or 1550");
  }
  if (desc.p_r_ref_w > 0.0) {
    cfg.panel.p_r_ref_w = desc.p_r_ref_w;
  }
  switch (desc.air) {
    case DLC_AIR_CLEAR:
      cfg.condition = dlc::clear_air();
      break;
    case DLC_AIR_HAZE:
      cfg.condition = dlc::haze();
      break;
    case DLC_AIR_FOG:
      cfg.condition = dlc::fog();
      break;
    default:
      throw std::invalid_argument("unknown air regime");
  }
  if (desc.visibility_km > 0.0) {
    cfg.condition.kappa_km = desc.visibility_km;
  }
  cfg.mpp_line =
      dlc::mpp_line_for(desc.wavelength_nm, desc.cell_temperature_c);
  cfg.p_s_w = desc.supply_power_w;
  cfg.d_km = desc.distance_km;
  cfg.t_cell_c = desc.cell_temperature_c;
  cfg.path = desc.path == DLC_PATH_PHYSICAL ? dlc::EvalPath::PhysicalModel
                                            : dlc::EvalPath::ClosedForm;
  dlc::validate(cfg);
  return cfg;
}

dlc_stage_report to_c(const dlc::StageReport& r) {
  dlc_stage_report out;
  out.p_s_w = r.p_s_w;
  out.p_l_w = r.p_l_w;
  out.p_r_w = r.p_r_w;
  out.p_m_w = r.p_m_w;
  out.eta_el = r.eta_el;
  out.eta_lt = r.eta_lt;
  out.eta_le = r.eta_le;
  out.eta_o = r.eta_o;
  out.below_threshold = r.below_threshold ? 1 : 0;
  return out;
}

dlc_operating_point to_c(const dlc::OperatingPoint& p) {
  return {p.v_o_v, p.i_o_a, p.p_o_w};
}

}  // namespace

extern "C" {

dlc_status dlc_scenario_create(const dlc_scenario_desc* desc,
                               dlc_scenario** out) {
  if (desc == nullptr || out == nullptr) {
    return invalid("null descriptor or out pointer");
  }
  *out = nullptr;
  return guarded([&] {
    auto scenario = new dlc_scenario{config_from_desc(*desc)};
    *out = scenario;
  });
}

void dlc_scenario_destroy(dlc_scenario* scenario) { delete scenario; }

dlc_status dlc_run_scenario(const dlc_scenario* scenario,
                            dlc_stage_report* out) {
  if (scenario == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { *out = to_c(dlc::run_scenario(scenario->cfg)); });
}

dlc_status dlc_eta_el(const dlc_scenario* scenario, double p_s_w,
                      double* out) {
  if (scenario == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { *out = dlc::eta_el(scenario->cfg.diode, p_s_w); });
}

dlc_status dlc_laser_power_from_supply(const dlc_scenario* scenario,
                                       double p_s_w, double* out) {
  if (scenario == nullptr || out == nullptr) return invalid("null argument");
  return guarded(
      [&] { *out = dlc::laser_power_from_supply(scenario->cfg.diode, p_s_w); });
}

dlc_status dlc_size_distribution_rho(const dlc_scenario* scenario,
                                     double* out) {
  if (scenario == nullptr || out == nullptr) return invalid("null argument");
  return guarded(
      [&] { *out = dlc::size_distribution_rho(scenario->cfg.condition); });
}

dlc_status dlc_attenuation_coefficient(const dlc_scenario* scenario,
                                       double* out_per_km) {
  if (scenario == nullptr || out_per_km == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] {
    *out_per_km = dlc::attenuation_coefficient(scenario->cfg.condition,
                                               scenario->cfg.diode.wavelength);
  });
}

dlc_status dlc_eta_lt(const dlc_scenario* scenario, double d_km, double* out) {
  if (scenario == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = dlc::eta_lt(scenario->cfg.condition,
                       scenario->cfg.diode.wavelength, d_km);
  });
}

dlc_status dlc_iv_curve(const dlc_scenario* scenario, double p_r_w,
                        double v_o_v, dlc_operating_point* out) {
  if (scenario == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = to_c(dlc::iv_curve(scenario->cfg.panel, p_r_w,
                              dlc::celsius_to_kelvin(scenario->cfg.t_cell_c),
                              v_o_v));
  });
}

dlc_status dlc_find_mpp(const dlc_scenario* scenario, double p_r_w,
                        dlc_operating_point* out) {
  if (scenario == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = to_c(dlc::find_mpp(scenario->cfg.panel, p_r_w,
                              dlc::celsius_to_kelvin(scenario->cfg.t_cell_c)));
  });
}

dlc_status dlc_mpp_from_fit(const dlc_scenario* scenario, double p_r_w,
                            double* out) {
  if (scenario == nullptr || out == nullptr) return invalid("null argument");
  return guarded(
      [&] { *out = dlc::mpp_from_fit(scenario->cfg.mpp_line, p_r_w); });
}

dlc_status dlc_open_circuit_voltage(const dlc_scenario* scenario,
                                    double p_r_w, double* out_v) {
  if (scenario == nullptr || out_v == nullptr) return invalid("null argument");
  return guarded([&] {
    const dlc::PvPanelParams& panel = scenario->cfg.panel;
    *out_v = panel.n_series *
             dlc::open_circuit_voltage_cell(
                 panel, p_r_w, dlc::celsius_to_kelvin(scenario->cfg.t_cell_c));
  });
}

dlc_status dlc_eta_lem(const dlc_scenario* scenario, double p_r_w,
                       double* out) {
  if (scenario == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { *out = dlc::eta_lem(scenario->cfg.mpp_line, p_r_w); });
}

dlc_status dlc_pm_vs_ps(const dlc_scenario* scenario, double p_s_w,
                        double* out) {
  if (scenario == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { *out = dlc::pm_vs_ps(scenario->cfg, p_s_w); });
}

dlc_status dlc_eta_om(const dlc_scenario* scenario, double p_s_w,
                      double* out) {
  if (scenario == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { *out = dlc::eta_om(scenario->cfg, p_s_w); });
}

dlc_status dlc_eta_om_at_distance(const dlc_scenario* scenario, double d_km,
                                  double* out) {
  if (scenario == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { *out = dlc::eta_om_at_distance(scenario->cfg, d_km); });
}

dlc_status dlc_eta_om_for_eta_lt(const dlc_scenario* scenario,
                                 double eta_lt_value, double* out) {
  if (scenario == nullptr || out == nullptr) return invalid("null argument");
  return guarded(
      [&] { *out = dlc::eta_om_for_eta_lt(scenario->cfg, eta_lt_value); });
}

dlc_status dlc_coverage_radius(const dlc_scenario* scenario, double eta_target,
                               double* out_d_km, double* eta_at_zero) {
  if (scenario == nullptr || out_d_km == nullptr) {
    return invalid("null argument");
  }
  try {
    *out_d_km = dlc::coverage_radius(scenario->cfg, eta_target);
    if (eta_at_zero != nullptr) {
      *eta_at_zero = dlc::eta_om_at_distance(scenario->cfg, 0.0);
    }
    g_last_error.clear();
    return DLC_OK;
  } catch (const dlc::UnreachableTargetError& e) {
    g_last_error = e.what();
    if (eta_at_zero != nullptr) *eta_at_zero = e.eta_at_zero;
    return DLC_ERROR_UNREACHABLE;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return DLC_ERROR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DLC_ERROR_INTERNAL;
  }
}

dlc_status dlc_sweep(const dlc_scenario* scenario, dlc_axis axis,
                     const double* grid, size_t n, dlc_stage_report* reports,
                     dlc_operating_point* ops, int* ok_flags) {
  if (scenario == nullptr || grid == nullptr || reports == nullptr ||
      ok_flags == nullptr || n == 0) {
    return invalid("null argument or empty grid");
  }
  if (axis == DLC_AXIS_VOLTAGE && ops == nullptr) {
    return invalid("voltage sweep requires an operating-point buffer");
  }
  return guarded([&] {
    dlc::SweepAxis cxx_axis;
    switch (axis) {
      case DLC_AXIS_SUPPLY_POWER:
        cxx_axis = dlc::SweepAxis::SupplyPower;
        break;
      case DLC_AXIS_DISTANCE:
        cxx_axis = dlc::SweepAxis::Distance;
        break;
      case DLC_AXIS_RECEIVED_POWER:
        cxx_axis = dlc::SweepAxis::ReceivedPower;
        break;
      case DLC_AXIS_VOLTAGE:
        cxx_axis = dlc::SweepAxis::Voltage;
        break;
      case DLC_AXIS_TRANSMISSION:
        cxx_axis = dlc::SweepAxis::TransmissionEfficiency;
        break;
      default:
        throw std::invalid_argument("unknown sweep axis");
    }
    const auto points =
        dlc::sweep(scenario->cfg, cxx_axis, std::span(grid, n));
    for (size_t i = 0; i < n; ++i) {
      ok_flags[i] = points[i].ok ? 1 : 0;
      reports[i] = to_c(points[i].report);
      if (ops != nullptr) {
        ops[i] = points[i].op ? to_c(*points[i].op)
                              : dlc_operating_point{0.0, 0.0, 0.0};
      }
    }
  });
}

dlc_status dlc_fit_line(const double* xs, const double* ys, size_t n,
                        double* slope, double* intercept, double* r_squared) {
  if (xs == nullptr || ys == nullptr || slope == nullptr ||
      intercept == nullptr || r_squared == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] {
    std::vector<dlc::SamplePair> samples(n);
    for (size_t i = 0; i < n; ++i) samples[i] = {xs[i], ys[i]};
    const dlc::FitResult fit = dlc::fit_line(samples);
    *slope = fit.slope;
    *intercept = fit.intercept;
    *r_squared = fit.r_squared;
  });
}

const char* dlc_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
