#include "dlc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dlc {

namespace {

constexpr double kCoverageTolKm = 1e-6;

// Chain evaluation with the transmission stage pinned to an explicit
// efficiency; shared by run_scenario and the sweep axes.
StageReport compose(const ScenarioConfig& cfg, double p_s_w,
                    double eta_lt_value) {
  if (!(p_s_w > 0.0)) {
    throw std::domain_error("supply power must be positive");
  }
  StageReport r;
  r.p_s_w = p_s_w;
  r.eta_lt = eta_lt_value;

  const double eta_el_raw = cfg.diode.a1 + cfg.diode.b1_w / p_s_w;
  r.eta_el = std::clamp(eta_el_raw, 0.0, 1.0);
  r.p_l_w = laser_power_from_supply(cfg.diode, p_s_w);
  r.below_threshold = r.p_l_w == 0.0;
  r.p_r_w = eta_lt_value * r.p_l_w;

  double eta_le_raw = 0.0;
  if (r.below_threshold) {
    r.p_m_w = 0.0;
  } else if (cfg.path == EvalPath::ClosedForm) {
    const double p_m_raw = cfg.mpp_line.a2 * r.p_r_w + cfg.mpp_line.b2_w;
    eta_le_raw = p_m_raw / r.p_r_w;
    r.p_m_w = std::max(0.0, p_m_raw);
  } else {
    const OperatingPoint mpp =
        find_mpp(cfg.panel, r.p_r_w, celsius_to_kelvin(cfg.t_cell_c));
    r.p_m_w = mpp.p_o_w;
    eta_le_raw = mpp.p_o_w / r.p_r_w;
  }
  r.eta_le = std::clamp(eta_le_raw, 0.0, 1.0);
  r.eta_o = r.eta_el * r.eta_lt * r.eta_le;
  r.eta_o_raw = eta_el_raw * eta_lt_value * eta_le_raw;
  return r;
}

}  // namespace

void validate(const ScenarioConfig& cfg) {
  validate(cfg.diode);
  validate(cfg.condition);
  validate(cfg.panel);
  if (cfg.diode.wavelength.lambda_nm != cfg.panel.wavelength.lambda_nm) {
    throw std::invalid_argument(
        "diode and panel wavelengths must be consistent");
  }
  if (!(cfg.p_s_w > 0.0)) {
    throw std::invalid_argument("supply power must be positive");
  }
  if (cfg.d_km < 0.0) {
    throw std::invalid_argument("distance must be nonnegative");
  }
  celsius_to_kelvin(cfg.t_cell_c);
}

StageReport run_scenario(const ScenarioConfig& cfg) {
  validate(cfg);
  const double lt = eta_lt(cfg.condition, cfg.diode.wavelength, cfg.d_km);
  return compose(cfg, cfg.p_s_w, lt);
}

double pm_vs_ps(const ScenarioConfig& cfg, double p_s_w) {
  const double lt = eta_lt(cfg.condition, cfg.diode.wavelength, cfg.d_km);
  const double a1 = cfg.diode.a1, b1 = cfg.diode.b1_w;
  const double a2 = cfg.mpp_line.a2, b2 = cfg.mpp_line.b2_w;
  return std::max(0.0, a1 * a2 * lt * p_s_w + (a2 * b1 * lt + b2));
}

double eta_om_raw(const ScenarioConfig& cfg, double p_s_w) {
  if (!(p_s_w > 0.0)) {
    throw std::domain_error("supply power must be positive");
  }
  const double lt = eta_lt(cfg.condition, cfg.diode.wavelength, cfg.d_km);
  const double a1 = cfg.diode.a1, b1 = cfg.diode.b1_w;
  const double a2 = cfg.mpp_line.a2, b2 = cfg.mpp_line.b2_w;
  return a1 * a2 * lt + (a2 * b1 * lt + b2) / p_s_w;
}

double eta_om(const ScenarioConfig& cfg, double p_s_w) {
  return std::clamp(eta_om_raw(cfg, p_s_w), 0.0, 1.0);
}

double eta_om_at_distance(const ScenarioConfig& cfg, double d_km) {
  ScenarioConfig at = cfg;
  at.d_km = d_km;
  return eta_om(at, cfg.p_s_w);
}

double eta_om_for_eta_lt(const ScenarioConfig& cfg, double eta_lt_value) {
  if (!(eta_lt_value >= 0.0 && eta_lt_value <= 1.0)) {
    throw std::domain_error("transmission efficiency must lie in [0, 1]");
  }
  const double a1 = cfg.diode.a1, b1 = cfg.diode.b1_w;
  const double a2 = cfg.mpp_line.a2, b2 = cfg.mpp_line.b2_w;
  return std::clamp(
      a1 * a2 * eta_lt_value + (a2 * b1 * eta_lt_value + b2) / cfg.p_s_w, 0.0,
      1.0);
}

double coverage_radius(const ScenarioConfig& cfg, double eta_target) {
  if (!(eta_target > 0.0 && eta_target < 1.0)) {
    throw std::domain_error("target efficiency must lie in (0, 1)");
  }
  const double at_zero = eta_om_at_distance(cfg, 0.0);
  if (eta_target >= at_zero) {
    throw UnreachableTargetError(
        "target efficiency " + std::to_string(eta_target) +
            " is not reachable; eta_om at d=0 is " + std::to_string(at_zero),
        at_zero);
  }

  double hi = 1.0;
  while (eta_om_at_distance(cfg, hi) >= eta_target) {
    hi *= 2.0;
    if (hi > 1e7) {
      throw std::logic_error("coverage bracket expansion failed");
    }
  }
  double lo = 0.0;
  while (hi - lo > kCoverageTolKm) {
    const double mid = 0.5 * (lo + hi);
    if (eta_om_at_distance(cfg, mid) > eta_target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<SweepPoint> sweep(const ScenarioConfig& cfg, SweepAxis axis,
                              std::span<const double> grid) {
  if (grid.empty()) {
    throw std::invalid_argument("sweep grid must be nonempty");
  }
  validate(cfg);
  const double base_lt = eta_lt(cfg.condition, cfg.diode.wavelength, cfg.d_km);

  std::vector<SweepPoint> out;
  out.reserve(grid.size());
  for (double value : grid) {
    SweepPoint point;
    point.axis_value = value;
    try {
      switch (axis) {
        case SweepAxis::SupplyPower:
          point.report = compose(cfg, value, base_lt);
          break;
        case SweepAxis::Distance:
          point.report = compose(
              cfg, cfg.p_s_w,
              eta_lt(cfg.condition, cfg.diode.wavelength, value));
          break;
        case SweepAxis::TransmissionEfficiency:
          if (!(value >= 0.0 && value <= 1.0)) {
            throw std::domain_error(
                "transmission efficiency must lie in [0, 1]");
          }
          point.report = compose(cfg, cfg.p_s_w, value);
          break;
        case SweepAxis::ReceivedPower: {
          if (!(value > 0.0)) {
            throw std::domain_error("received power must be positive");
          }
          // Back out the supply power that lands the requested p_r.
          const double p_l = value / base_lt;
          const double p_s = (p_l - cfg.diode.b1_w) / cfg.diode.a1;
          point.report = compose(cfg, p_s, base_lt);
          break;
        }
        case SweepAxis::Voltage: {
          point.report = compose(cfg, cfg.p_s_w, base_lt);
          point.op = iv_curve(cfg.panel, point.report.p_r_w,
                              celsius_to_kelvin(cfg.t_cell_c), value);
          break;
        }
      }
      point.ok = true;
    } catch (const std::exception& e) {
      point.error = e.what();
    }
    out.push_back(std::move(point));
  }
  return out;
}

}  // namespace dlc
